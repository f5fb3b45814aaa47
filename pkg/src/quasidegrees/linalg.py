"""Exact integer and rational linear algebra.

Everything here is arbitrary precision: integer routines work on Python
ints, rational routines on fractions.Fraction. No floating point.

The integer routines revolve around unimodular row reduction (row swaps,
negations, and xgcd-based 2x2 transforms of determinant one). Because the
transforms are unimodular, the row space as a *lattice* is preserved, which
is what makes :func:`integer_kernel` return a basis of the saturated kernel
lattice ker(A) over Z rather than merely a rational kernel basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

IntVec = tuple[int, ...]
RatVec = tuple[Fraction, ...]


@dataclass(frozen=True)
class IntMatrix:
    """Rectangular integer matrix, row-major, immutable and hashable."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("matrix rows have unequal lengths")
        object.__setattr__(self, "entries", rows)

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def row(self, i: int) -> IntVec:
        return self.entries[i]

    def column(self, j: int) -> IntVec:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list[IntVec]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries))) if self.entries else IntMatrix(())

    def mul_vec(self, v: Sequence[int]) -> IntVec:
        if len(v) != self.ncols:
            raise ValueError("dimension mismatch")
        return tuple(sum(a * x for a, x in zip(row, v)) for row in self.entries)


def as_int_matrix(A: IntMatrix | Iterable[Iterable[int]]) -> IntMatrix:
    return A if isinstance(A, IntMatrix) else IntMatrix(tuple(tuple(r) for r in A))


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def integer_row_echelon(rows: Iterable[Sequence[int]], width: int | None = None) -> list[list[int]]:
    """Row echelon form over Z using only unimodular row operations.

    Pivoting happens on the first ``width`` columns (all by default); any
    extra columns are carried along, so the caller can keep track of the
    transformation by augmenting with an identity block. Pivot entries are
    made positive. The row lattice is unchanged.
    """
    M = [list(map(int, r)) for r in rows]
    if not M:
        return M
    ncols = len(M[0])
    if width is None:
        width = ncols
    r = 0
    for c in range(width):
        if r >= len(M):
            break
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        for i in range(r + 1, len(M)):
            if not M[i][c]:
                continue
            a, b = M[r][c], M[i][c]
            if b % a == 0:
                q = b // a
                M[i] = [x - q * y for x, y in zip(M[i], M[r])]
            else:
                g, x, y = _xgcd(a, b)
                ag, bg = a // g, b // g
                top, bot = M[r], M[i]
                M[r] = [x * p + y * q2 for p, q2 in zip(top, bot)]
                M[i] = [ag * q2 - bg * p for p, q2 in zip(top, bot)]
        if M[r][c] < 0:
            M[r] = [-x for x in M[r]]
        r += 1
    return M


def integer_kernel(A: IntMatrix | Iterable[Iterable[int]]) -> list[IntVec]:
    """Basis of the saturated integer kernel {u in Z^n : A u = 0}.

    Saturated means the basis spans ker(A) over Q as well: any integer
    vector in the rational kernel is an integer combination of the basis.
    Each basis vector is sign-normalized (first nonzero entry positive) and
    the list is sorted for determinism.
    """
    A = as_int_matrix(A)
    d, n = A.nrows, A.ncols
    aug = [list(A.column(j)) + [1 if k == j else 0 for k in range(n)] for j in range(n)]
    ech = integer_row_echelon(aug, width=d)
    basis = []
    for row in ech:
        if any(row[:d]):
            continue
        v = row[d:]
        if not any(v):
            continue
        lead = next(x for x in v if x)
        if lead < 0:
            v = [-x for x in v]
        basis.append(tuple(v))
    basis.sort()
    return basis


def lattice_member(v: Sequence[int], basis: Sequence[Sequence[int]]) -> bool:
    """Is v an integer combination of the given integer vectors?"""
    if not basis:
        return not any(v)
    ech = [r for r in integer_row_echelon(basis) if any(r)]
    w = list(map(int, v))
    for row in ech:
        c = next(i for i, x in enumerate(row) if x)
        if w[c]:
            if w[c] % row[c]:
                return False
            q = w[c] // row[c]
            w = [a - q * b for a, b in zip(w, row)]
    return not any(w)


def column_lattice_is_full(A: IntMatrix | Iterable[Iterable[int]]) -> bool:
    """Do the columns of A generate all of Z^d (d = number of rows)?"""
    A = as_int_matrix(A)
    cols = A.columns()
    return all(
        lattice_member(tuple(1 if i == k else 0 for i in range(A.nrows)), cols)
        for k in range(A.nrows)
    )


def rref(rows: Iterable[Sequence[Fraction | int]]) -> tuple[tuple[RatVec, ...], tuple[int, ...], int]:
    """Reduced row echelon form over Q.

    Returns (matrix, pivot columns, rank). Pivot entries are 1 and are the
    only nonzero entries in their columns. Zero rows sink to the bottom.
    """
    M = [[Fraction(x) for x in row] for row in rows]
    if not M:
        return (), (), 0
    ncols = len(M[0])
    if any(len(r) != ncols for r in M):
        raise ValueError("matrix rows have unequal lengths")
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r >= len(M):
            break
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = M[r][c]
        M[r] = [x / inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in M), tuple(pivots), r


def rational_rank(rows: Iterable[Sequence[Fraction | int]]) -> int:
    return rref(rows)[2]


def in_span(v: Sequence[Fraction | int], basis: Sequence[Sequence[Fraction | int]]) -> bool:
    """Is v in the Q-linear span of the given vectors?"""
    basis = [tuple(row) for row in basis]
    v = tuple(v)
    if any(len(row) != len(v) for row in basis):
        raise ValueError("dimension mismatch")
    if not basis:
        return not any(v)
    r = rational_rank(basis)
    return rational_rank(basis + [v]) == r


def solve_linear(
    rows: Sequence[Sequence[Fraction | int]], rhs: Sequence[Fraction | int]
) -> RatVec | None:
    """One particular rational solution x of (rows) x = rhs, or None.

    Free variables are set to zero.
    """
    rows = [tuple(r) for r in rows]
    if len(rows) != len(rhs):
        raise ValueError("dimension mismatch")
    if not rows:
        return ()
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    R, piv, _ = rref(aug)
    if any(p == ncols for p in piv):
        return None
    x = [Fraction(0)] * ncols
    for i, p in enumerate(piv):
        x[p] = R[i][-1]
    return tuple(x)
