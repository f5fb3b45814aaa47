"""Standard pairs of monomial ideals.

A standard pair of a monomial ideal I in Q[x_1..x_n] is a pair (x^u, Z)
of a monomial and a set of variables with

* supp(u) disjoint from Z,
* every monomial x^u * (monomials in the Z variables) outside I,
* maximality: no other pair with these two properties covers a strictly
  larger set of monomials.

The standard pairs partition-cover the standard monomials (the monomials
outside I), and the number of pairs with |Z| = dim R/I is the degree of
R/I. Everything here works on plain exponent tuples.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .poly import Exps, exps_divides, support


@dataclass(frozen=True)
class StandardPair:
    """The set of monomials x^root * x^v, supp(v) inside face."""

    root: Exps
    face: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "root", tuple(int(e) for e in self.root))
        object.__setattr__(self, "face", frozenset(int(i) for i in self.face))
        if any(e < 0 for e in self.root):
            raise ValueError("negative exponent in standard pair root")
        if any(i < 0 or i >= len(self.root) for i in self.face):
            raise ValueError("face index out of range")
        if set(support(self.root)) & self.face:
            raise ValueError("root support must be disjoint from the face")

    @property
    def dimension(self) -> int:
        return len(self.face)

    def sort_key(self):
        return (self.root, tuple(sorted(self.face)))

    def contains_exps(self, e: Exps) -> bool:
        """Is x^e of the form x^root * (monomial in face variables)?"""
        return all(
            (e[i] == self.root[i]) or (i in self.face and e[i] >= self.root[i])
            for i in range(len(self.root))
        )


def minimal_generators(gens: list[Exps]) -> list[Exps]:
    """Inclusion-minimal monomial generators, deduplicated and sorted."""
    uniq = sorted(set(tuple(g) for g in gens))
    out = []
    for g in uniq:
        if not any(h != g and exps_divides(h, g) for h in uniq):
            out.append(g)
    return out


def pair_contains(p: StandardPair, q: StandardPair) -> bool:
    """Is every monomial of p also a monomial of q?"""
    if len(p.root) != len(q.root):
        raise ValueError("pairs over different rings")
    if not p.face <= q.face:
        return False
    if not exps_divides(q.root, p.root):
        return False
    return all(i in q.face for i in support(tuple(a - b for a, b in zip(p.root, q.root))))


def standard_pairs(gens: list[Exps], nvars: int) -> list[StandardPair]:
    """All standard pairs of the monomial ideal generated by ``gens``.

    Enumerates candidate faces Z; for each, the monomials with support in
    Z kill a generator exactly when the generator's projection to the
    complement of Z lies in the projected ideal, so the candidate roots
    are the monomials supported off Z, bounded by the generator exponents,
    that avoid the projected ideal. A maximality filter finishes the job.
    """
    gens = [tuple(int(e) for e in g) for g in gens]
    if len(set(map(len, gens))) > 1 or (gens and len(gens[0]) != nvars):
        raise ValueError("generator exponent length mismatch")
    gens = minimal_generators(gens)
    if any(not any(g) for g in gens):
        return []  # the ideal is the whole ring
    maxexp = [max((g[i] for g in gens), default=0) for i in range(nvars)]
    candidates: list[StandardPair] = []
    for bits in range(1 << nvars):
        face = frozenset(i for i in range(nvars) if bits >> i & 1)
        comp = [i for i in range(nvars) if i not in face]
        projected = []
        whole_ring = False
        for g in gens:
            proj = tuple(g[i] if i in comp else 0 for i in range(nvars))
            if not any(proj):
                whole_ring = True
                break
            projected.append(proj)
        if whole_ring:
            continue
        ranges = [range(maxexp[i]) for i in comp]
        for combo in itertools.product(*ranges):
            root = [0] * nvars
            for i, v in zip(comp, combo):
                root[i] = v
            root_t = tuple(root)
            if not any(exps_divides(p, root_t) for p in projected):
                candidates.append(StandardPair(root_t, face))
    out = [
        p
        for p in candidates
        if not any(q is not p and pair_contains(p, q) for q in candidates)
    ]
    out.sort(key=StandardPair.sort_key)
    return out


def degree_via_pairs(gens: list[Exps], nvars: int) -> int:
    """Number of top-dimensional standard pairs (the degree of R/I).

    Zero for the unit ideal (R/I = 0 has no standard monomials).
    """
    pairs = standard_pairs(gens, nvars)
    if not pairs:
        return 0
    top = max(p.dimension for p in pairs)
    return sum(1 for p in pairs if p.dimension == top)
