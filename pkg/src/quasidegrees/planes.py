"""Finite unions of rational affine planes in Q^d.

An AffinePlane is base + span{v_1..v_r}. The span is stored exactly as
constructed (for a quasidegree computation the vectors are the degree
columns of the face variables, which is what a reader wants to see); a
canonical form (reduced row echelon span basis plus a base point reduced
against the pivots) is computed on the side and drives set-equality,
containment, and sorting. Two planes that are equal as subsets of Q^d
always have the same canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import in_span, rref

RatVec = tuple[Fraction, ...]


def _as_ratvec(v: Iterable) -> RatVec:
    return tuple(Fraction(x) for x in v)


@dataclass(frozen=True)
class AffinePlane:
    """The set base + sum of Q-multiples of the span vectors."""

    base: RatVec
    span: tuple[RatVec, ...] = ()
    canonical_base: RatVec = field(init=False, compare=False, repr=False)
    canonical_span: tuple[RatVec, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        base = _as_ratvec(self.base)
        span = tuple(_as_ratvec(v) for v in self.span)
        if any(len(v) != len(base) for v in span):
            raise ValueError("span vectors must match the base dimension")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "span", span)
        if span:
            R, pivots, rank = rref(span)
            cspan = R[:rank]
            cbase = list(base)
            for row, p in zip(cspan, pivots):
                f = cbase[p]
                if f:
                    cbase = [b - f * r for b, r in zip(cbase, row)]
        else:
            cspan = ()
            cbase = list(base)
        object.__setattr__(self, "canonical_base", tuple(cbase))
        object.__setattr__(self, "canonical_span", tuple(cspan))

    @property
    def ambient_dim(self) -> int:
        return len(self.base)

    @property
    def dimension(self) -> int:
        return len(self.canonical_span)

    def same_set(self, other: "AffinePlane") -> bool:
        return (
            self.canonical_base == other.canonical_base
            and self.canonical_span == other.canonical_span
        )

    def contains_point(self, beta: Sequence) -> bool:
        beta = _as_ratvec(beta)
        if len(beta) != self.ambient_dim:
            raise ValueError("point has the wrong dimension")
        diff = tuple(b - c for b, c in zip(beta, self.base))
        return in_span(diff, self.canonical_span)

    def sort_key(self):
        return (self.canonical_base, self.canonical_span, self.base, self.span)


def plane_contains(outer: AffinePlane, inner: AffinePlane) -> bool:
    """Is inner a subset of outer?"""
    if outer.ambient_dim != inner.ambient_dim:
        raise ValueError("planes in different ambient spaces")
    if not outer.contains_point(inner.base):
        return False
    return all(in_span(v, outer.canonical_span) for v in inner.canonical_span)


@dataclass(frozen=True)
class QuasidegreeSet:
    """A finite union of affine planes (possibly empty)."""

    planes: tuple[AffinePlane, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "planes", tuple(self.planes))
        dims = {p.ambient_dim for p in self.planes}
        if len(dims) > 1:
            raise ValueError("planes in different ambient spaces")

    @property
    def is_empty(self) -> bool:
        return not self.planes

    def contains_point(self, beta: Sequence) -> bool:
        return any(p.contains_point(beta) for p in self.planes)

    def __iter__(self):
        return iter(self.planes)

    def __len__(self):
        return len(self.planes)


def point_in_qdeg(beta: Sequence, q: QuasidegreeSet) -> bool:
    return q.contains_point(beta)


def remove_redundancy(q: QuasidegreeSet | Sequence[AffinePlane]) -> QuasidegreeSet:
    """Drop every plane contained in another plane of the union.

    Planes are scanned in input order; a plane is dropped as soon as some
    other plane still in the running contains it (so among set-equal
    duplicates the last one survives). The result is sorted canonically
    and the union of planes is unchanged.
    """
    planes = list(q.planes) if isinstance(q, QuasidegreeSet) else list(q)
    kept = set(range(len(planes)))
    for i in range(len(planes)):
        for j in sorted(kept):
            if j != i and plane_contains(planes[j], planes[i]):
                kept.discard(i)
                break
    out = sorted((planes[j] for j in sorted(kept)), key=AffinePlane.sort_key)
    return QuasidegreeSet(tuple(out))
