"""Quasidegree sets of finitely generated multigraded modules.

The quasidegree set of a module M is the Zariski closure in Q^d of
tdeg(M) = {beta : M_beta != 0}. For M presented by a monomial matrix
whose columns each hit a single row (so the image splits as a direct sum
of monomial ideals I_k, one per row), the closure is computed exactly:

    for each row k, with row shift alpha_k:
        for each standard pair (x^u, Z) of I_k:
            contribute the plane deg(x^u) + alpha_k + span{deg(x_i) : i in Z}

The standard pairs cover the standard monomials of I_k, the degrees of a
pair form a shifted copy of the semigroup generated by the face columns,
and the Zariski closure of that is the affine plane above, so the union
over rows and pairs is tdeg(M)'s closure on the nose.

For a general (non-monomial, non-split) presentation the module is first
replaced by one with the same graded Hilbert function: take a module
Groebner basis of the image and keep only the lead terms. The initial
submodule splits componentwise by construction, and passing to it leaves
every graded piece's dimension unchanged, hence the same quasidegrees.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .groebner import Vector, top_key, vec_groebner, vec_lead, vector_to_vec
from .planes import AffinePlane, QuasidegreeSet
from .poly import ANY_DEGREE, Exps, GradedRing, Polynomial

Term = tuple[Fraction, Exps]


class PresentationError(ValueError):
    """A presentation matrix violates a structural requirement."""


class NonMonomialEntryError(PresentationError):
    def __init__(self) -> None:
        super().__init__("matrix entry is not a monomial")


class NonSplittingError(PresentationError):
    def __init__(self) -> None:
        super().__init__(
            "presentation does not split into row ideals; use quasidegrees_module"
        )


class InhomogeneousError(ValueError):
    def __init__(self) -> None:
        super().__init__("inhomogeneous generator")


@dataclass(frozen=True)
class MonomialMatrix:
    """A t x s matrix of monomials presenting a module R^t(-shifts)/im.

    ``row_shifts[k]`` is the degree of the k-th target generator;
    ``entries[k][j]`` is the (coefficient, exponents) monomial in row k of
    column j, or None for a zero entry.
    """

    ring: GradedRing
    row_shifts: tuple[tuple[int, ...], ...]
    entries: tuple[tuple[Optional[Term], ...], ...]

    def __post_init__(self) -> None:
        shifts = tuple(tuple(int(x) for x in s) for s in self.row_shifts)
        d = self.ring.grading_rank
        if any(len(s) != d for s in shifts):
            raise ValueError("row shift has the wrong grading rank")
        rows = []
        width = None
        for row in self.entries:
            row = tuple(row)
            if width is None:
                width = len(row)
            elif len(row) != width:
                raise ValueError("ragged monomial matrix")
            cleaned = []
            for entry in row:
                if entry is None:
                    cleaned.append(None)
                    continue
                coeff, exps = entry
                coeff = Fraction(coeff)
                exps = tuple(int(e) for e in exps)
                if len(exps) != self.ring.nvars:
                    raise ValueError("exponent tuple has the wrong length")
                if not coeff:
                    cleaned.append(None)
                    continue
                cleaned.append((coeff, exps))
            rows.append(tuple(cleaned))
        if len(rows) != len(shifts):
            raise ValueError("one shift per row is required")
        object.__setattr__(self, "row_shifts", shifts)
        object.__setattr__(self, "entries", tuple(rows))

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def splits(self) -> bool:
        """At most one nonzero entry per column?"""
        for j in range(self.ncols):
            if sum(1 for k in range(self.nrows) if self.entries[k][j] is not None) > 1:
                return False
        return True

    def row_ideals(self) -> list[list[Exps]]:
        """Generator exponents of the row ideals; requires a split matrix."""
        if not self.splits():
            raise NonSplittingError()
        out: list[list[Exps]] = [[] for _ in range(self.nrows)]
        for j in range(self.ncols):
            for k in range(self.nrows):
                entry = self.entries[k][j]
                if entry is not None:
                    out[k].append(entry[1])
                    break
        return out


def monomial_matrix_from_vectors(
    columns: Sequence[Vector], row_shifts: Sequence[Sequence[int]], ring: GradedRing
) -> MonomialMatrix:
    """Build a MonomialMatrix from tuple-of-polynomial columns.

    Raises NonMonomialEntryError if any entry has more than one term.
    """
    t = len(row_shifts)
    entries: list[list[Optional[Term]]] = [[] for _ in range(t)]
    for col in columns:
        if len(col) != t:
            raise ValueError("column length does not match the number of shifts")
        for k, f in enumerate(col):
            if f.is_zero():
                entries[k].append(None)
            elif f.is_monomial():
                e, c = next(iter(f.terms.items()))
                entries[k].append((c, e))
            else:
                raise NonMonomialEntryError()
    return MonomialMatrix(ring, tuple(tuple(s) for s in row_shifts), tuple(tuple(r) for r in entries))


def _planes_for_row(
    ring: GradedRing, shift: Sequence[int], ideal_gens: list[Exps]
) -> list[AffinePlane]:
    from .stdpairs import standard_pairs

    planes = []
    for pair in standard_pairs(ideal_gens, ring.nvars):
        deg = ring.multidegree(pair.root)
        base = tuple(Fraction(a + b) for a, b in zip(deg, shift))
        span = tuple(
            tuple(Fraction(x) for x in ring.degree(i)) for i in sorted(pair.face)
        )
        planes.append(AffinePlane(base, span))
    return planes


def quasidegrees_monomial(phi: MonomialMatrix) -> QuasidegreeSet:
    """Quasidegree set of coker(phi) for a split monomial matrix.

    Planes are deduplicated by their raw (base, span) data only; use
    remove_redundancy to collapse set-equal planes.
    """
    ring = phi.ring
    planes: list[AffinePlane] = []
    for k, gens in enumerate(phi.row_ideals()):
        planes.extend(_planes_for_row(ring, phi.row_shifts[k], gens))
    planes.sort(key=AffinePlane.sort_key)
    out = []
    for p in planes:
        if not out or out[-1] != p:
            out.append(p)
    return QuasidegreeSet(tuple(out))


def vector_degree(vec: Vector, shifts: Sequence[Sequence[int]], ring: GradedRing):
    """Common degree of a homogeneous free-module element, with the k-th
    component shifted by shifts[k].

    Returns ANY_DEGREE for the zero vector and None when inhomogeneous.
    """
    from .poly import homogeneous_degree

    deg = None
    for k, f in enumerate(vec):
        dk = homogeneous_degree(f, ring)
        if dk is None:
            return None
        if dk is ANY_DEGREE:
            continue
        total = tuple(a + b for a, b in zip(dk, shifts[k]))
        if deg is None:
            deg = total
        elif deg != total:
            return None
    return ANY_DEGREE if deg is None else deg


def quasidegrees_module(
    columns: Sequence[Vector],
    row_shifts: Sequence[Sequence[int]],
    ring: GradedRing,
) -> QuasidegreeSet:
    """Quasidegree set of R^t(-shifts)/<columns> for homogeneous columns.

    Replaces the image submodule by its initial submodule (same graded
    Hilbert function, hence the same quasidegrees) and runs the split
    monomial-matrix algorithm on the result.
    """
    t = len(row_shifts)
    shifts = tuple(tuple(int(x) for x in s) for s in row_shifts)
    live: list[Vector] = []
    for col in columns:
        if len(col) != t:
            raise ValueError("column length does not match the number of shifts")
        if vector_degree(col, shifts, ring) is None:
            raise InhomogeneousError()
        if any(not f.is_zero() for f in col):
            live.append(col)
    lead_cols: list[list[Optional[Term]]] = []
    if live:
        mkey = top_key(ring.order)
        gb = vec_groebner([vector_to_vec(v) for v in live], mkey)
        for g in gb:
            pos, exps = vec_lead(g, mkey)
            col: list[Optional[Term]] = [None] * t
            col[pos] = (Fraction(1), exps)
            lead_cols.append(col)
    entries = tuple(
        tuple(lead_cols[j][k] for j in range(len(lead_cols))) for k in range(t)
    )
    phi = MonomialMatrix(ring, shifts, entries)
    return quasidegrees_monomial(phi)
