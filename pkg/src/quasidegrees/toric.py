"""Toric ideals of integer matrices and their normalized volumes.

For a d x n integer matrix A whose columns span Z^d, the toric ideal is

    I_A = < x^u - x^v : u, v >= 0, A u = A v >,

prime and homogeneous for the grading by A. It is computed from a basis
of the saturated kernel lattice of A: the binomials of a lattice basis
generate I_A only up to saturation by the product of the variables, so
the basis ideal is saturated by each variable in turn.

The normalized volume of A (d! times the Euclidean volume of the convex
hull of the columns and the origin, for pointed cases) equals the degree
of R/I_A, which is read off as the number of top-dimensional standard
pairs of the initial ideal of I_A.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .groebner import buchberger, initial_ideal, saturate
from .linalg import IntMatrix, as_int_matrix
from .poly import GREVLEX, GradedRing, MonomialOrder, Polynomial, graded_ring
from .stdpairs import degree_via_pairs


def to_a_graded_ring(
    A: IntMatrix | Iterable[Iterable[int]],
    names: Sequence[str] | None = None,
    order: MonomialOrder = GREVLEX,
) -> GradedRing:
    """The polynomial ring with one variable per column of A, graded by A.

    Validates positivity (a heft vector is found or an error raised) and
    that the columns generate Z^d.
    """
    A = as_int_matrix(A)
    if names is None:
        names = tuple(f"x{j + 1}" for j in range(A.ncols))
    return graded_ring(names, A, order=order)


def lattice_basis_binomials(A: IntMatrix | Iterable[Iterable[int]]) -> list[Polynomial]:
    """Binomials x^(u+) - x^(u-) for a basis of the saturated kernel of A."""
    from .linalg import integer_kernel

    A = as_int_matrix(A)
    out = []
    for u in integer_kernel(A):
        plus = tuple(max(x, 0) for x in u)
        minus = tuple(max(-x, 0) for x in u)
        out.append(Polynomial(A.ncols, [(plus, 1), (minus, -1)]))
    return out


def toric_ideal(
    A: IntMatrix | Iterable[Iterable[int]], ring: GradedRing | None = None
) -> list[Polynomial]:
    """Reduced Groebner basis of the toric ideal I_A in the ring's order."""
    A = as_int_matrix(A)
    if ring is None:
        ring = to_a_graded_ring(A)
    if ring.nvars != A.ncols:
        raise ValueError("ring must have one variable per column of A")
    gens = lattice_basis_binomials(A)
    if not gens:
        return []
    for j in range(ring.nvars):
        gens = saturate(gens, ring.variable(j), ring.order)
        if not gens:
            return []
    return list(buchberger(gens, ring.order).generators)


def normalized_volume(A: IntMatrix | Iterable[Iterable[int]]) -> int:
    """Degree of R/I_A: the number of top-dimensional standard pairs of
    the initial ideal of the toric ideal."""
    A = as_int_matrix(A)
    ring = to_a_graded_ring(A)
    gb = toric_ideal(A, ring)
    lead = initial_ideal(gb, ring.order)
    return degree_via_pairs(lead, ring.nvars)
