"""Free resolutions, Ext presentations, and graded local duality.

The target computation: for a module M over a ring positively graded by
Z^d with full column lattice, the quasidegree sets of the local
cohomology modules H^i_m(M) supported at the graded maximal ideal. By
graded local duality,

    H^i_m(M)_beta  is dual to  Ext^(n-i)(M, R)_(-beta - eps),

where eps is the sum of the variable degrees, so the quasidegree set of
H^i_m(M) is obtained from that of Ext^(n-i)(M, R) by mapping each plane
base to -base - eps (spans are preserved: negating a linear span changes
nothing).

Ext is computed from a Schreyer resolution: repeated syzygy computations,
each level ordered by the lead terms of the previous level's generators.
The resolutions are not minimal, which is harmless here because Ext (and
everything derived from it) only depends on the module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .groebner import (
    ModKey,
    VecPoly,
    Vector,
    schreyer_key,
    top_key,
    vec_lead,
    vec_lift,
    vec_syzygies,
    vec_to_vector,
    vector_to_vec,
)
from .planes import AffinePlane, QuasidegreeSet, remove_redundancy
from .poly import GradedRing, Polynomial
from .qdeg import InhomogeneousError, quasidegrees_module, vector_degree

Shifts = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class GradedPresentation:
    """coker of a graded map into R^t(-shifts), given by its columns."""

    ring: GradedRing
    shifts: Shifts
    columns: tuple[Vector, ...]

    def __post_init__(self) -> None:
        shifts = tuple(tuple(int(x) for x in s) for s in self.shifts)
        d = self.ring.grading_rank
        if any(len(s) != d for s in shifts):
            raise ValueError("shift has the wrong grading rank")
        cols = tuple(tuple(c) for c in self.columns)
        for col in cols:
            if len(col) != len(shifts):
                raise ValueError("column length does not match the number of shifts")
            if vector_degree(col, shifts, self.ring) is None:
                raise InhomogeneousError()
        object.__setattr__(self, "shifts", shifts)
        object.__setattr__(self, "columns", cols)

    @classmethod
    def cyclic(cls, ring: GradedRing, gens: Sequence[Polynomial]) -> "GradedPresentation":
        """R/<gens> as a presentation of the rank-one free module."""
        zero = (0,) * ring.grading_rank
        return cls(ring, (zero,), tuple((g,) for g in gens if not g.is_zero()))


@dataclass(frozen=True)
class FreeResolution:
    """F_0 <- F_1 <- ... <- F_L with graded free modules.

    ``shifts[i]`` lists the generator degrees of F_i; ``differentials[i]``
    holds the columns of the map F_(i+1) -> F_i as vectors in F_i.
    """

    ring: GradedRing
    shifts: tuple[Shifts, ...]
    differentials: tuple[tuple[Vector, ...], ...]

    @property
    def length(self) -> int:
        return len(self.differentials)

    def rank(self, i: int) -> int:
        return len(self.shifts[i])


def _vec_degree_checked(w: VecPoly, shifts: Shifts, ring: GradedRing) -> tuple[int, ...]:
    deg = None
    for (pos, e), _ in w.items():
        total = tuple(a + b for a, b in zip(ring.multidegree(e), shifts[pos]))
        if deg is None:
            deg = total
        elif deg != total:
            raise InhomogeneousError()
    if deg is None:
        raise ValueError("zero column in a resolution differential")
    return deg


def free_resolution(P: GradedPresentation, max_length: int | None = None) -> FreeResolution:
    """Schreyer resolution of coker(P), of length at most ``max_length``.

    Stops early when a syzygy module vanishes, at which point the
    resolution is complete (exact with a final zero kernel). The default
    length cap is nvars + 1, enough for Ext in every valid cohomological
    degree even though the resolution is not minimal.
    """
    ring = P.ring
    n = ring.nvars
    if max_length is None:
        max_length = n + 1
    if max_length < 0:
        raise ValueError("negative resolution length")
    shift_levels: list[Shifts] = [P.shifts]
    diffs: list[tuple[Vector, ...]] = []
    key: ModKey = top_key(ring.order)
    cols = [vector_to_vec(c) for c in P.columns if any(f for f in c)]
    while cols and len(diffs) < max_length:
        level = len(diffs)
        degs = tuple(_vec_degree_checked(w, shift_levels[level], ring) for w in cols)
        diffs.append(tuple(vec_to_vector(w, len(shift_levels[level]), n) for w in cols))
        shift_levels.append(degs)
        if len(diffs) == max_length:
            break
        syz = vec_syzygies(cols, key, n)
        key = schreyer_key(key, [vec_lead(w, key) for w in cols])
        cols = syz
    return FreeResolution(ring, tuple(shift_levels), tuple(diffs))


def apply_matrix(columns: Sequence[Vector], v: Vector, nvars: int, t_out: int) -> Vector:
    """Image of v under the map whose j-th column is columns[j]."""
    acc = [Polynomial.zero(nvars) for _ in range(t_out)]
    for q, col in zip(v, columns):
        if q.is_zero():
            continue
        for k, entry in enumerate(col):
            acc[k] = acc[k] + q * entry
    return tuple(acc)


def _transpose_columns(columns: Sequence[Vector], t_source: int, nvars: int) -> list[Vector]:
    """Columns of the transposed matrix.

    ``columns`` are the s columns of a map R^s -> R^t; the transpose maps
    R^t -> R^s and its t columns are returned (the k-th collects entry k
    of every original column).
    """
    t = len(columns[0]) if columns else 0
    out = []
    for k in range(t):
        out.append(tuple(columns[m][k] for m in range(len(columns))))
    return out


def ext_presentation(P: GradedPresentation, j: int) -> GradedPresentation:
    """Presentation of Ext^j(coker P, R) with the duality grading.

    The resolution F_* of coker P is dualized; Ext^j is
    ker(phi_(j+1)^T) / im(phi_j^T) inside F_j^T, whose generator degrees
    are the negated shifts of F_j. Generators: kernel elements K of the
    transposed differential; relations: syzygies of K plus the columns of
    phi_j^T lifted through K.
    """
    ring = P.ring
    n = ring.nvars
    if j < 0 or j > n:
        raise ValueError("cohomological degree out of range")
    res = free_resolution(P, max_length=j + 1)
    L = res.length
    if j > L:
        return GradedPresentation(ring, (), ())
    t_j = res.rank(j)
    if t_j == 0:
        return GradedPresentation(ring, (), ())
    dual_shifts = tuple(tuple(-x for x in s) for s in res.shifts[j])
    mkey = top_key(ring.order)
    if j < L:
        phi_next = res.differentials[j]
        tcols = _transpose_columns(phi_next, t_j, n)
        tcols_vec = [vector_to_vec(c) for c in tcols]
        K = vec_syzygies(tcols_vec, top_key(ring.order), n)
    else:
        # the next differential is zero, so the kernel is everything
        K = [{(k, (0,) * n): Fraction(1)} for k in range(t_j)]
    if not K:
        return GradedPresentation(ring, (), ())
    gen_shifts = tuple(_vec_degree_checked(w, dual_shifts, ring) for w in K)
    relations: list[VecPoly] = list(vec_syzygies(K, mkey, n))
    if j >= 1:
        phi_j = res.differentials[j - 1]
        for target in _transpose_columns(phi_j, res.rank(j - 1), n):
            tv = vector_to_vec(target)
            if not tv:
                continue
            relations.append(vec_lift([tv], K, mkey)[0])
    cols = tuple(
        vec_to_vector(r, len(K), n) for r in relations if r
    )
    return GradedPresentation(ring, gen_shifts, cols)


def dual_shift_plane(plane: AffinePlane, eps: Sequence[int]) -> AffinePlane:
    """The graded-duality image of a plane: base -> -base - eps."""
    base = tuple(-b - e for b, e in zip(plane.base, eps))
    return AffinePlane(base, plane.span)


def qlc(P: GradedPresentation, i: int) -> QuasidegreeSet:
    """Quasidegree set of the i-th local cohomology of coker P.

    Computed as the duality image of qdeg(Ext^(n-i)(coker P, R)).
    """
    ring = P.ring
    n = ring.nvars
    if i < 0 or i > n:
        raise ValueError("cohomological degree out of range")
    E = ext_presentation(P, n - i)
    if not E.shifts:
        return QuasidegreeSet(())
    q = quasidegrees_module(E.columns, E.shifts, ring)
    eps = ring.degree_sum
    mapped = sorted(
        (dual_shift_plane(p, eps) for p in q.planes), key=AffinePlane.sort_key
    )
    return QuasidegreeSet(tuple(mapped))


def qlc_total(P: GradedPresentation) -> QuasidegreeSet:
    """Union of qlc(P, i) over 0 <= i < d, redundancy removed.

    For a module of dimension d this collects the quasidegrees of all
    local cohomology below the top one; a module with vanishing union
    (for example a Cohen-Macaulay quotient) yields the empty set.
    """
    planes: list[AffinePlane] = []
    for i in range(P.ring.grading_rank):
        planes.extend(qlc(P, i).planes)
    return remove_redundancy(planes)
