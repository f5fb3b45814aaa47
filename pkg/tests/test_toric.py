import random

import pytest

from helpers import hilbert_quotient_dim, standard_monomial_count
from quasidegrees.groebner import buchberger, ideal_equal, initial_ideal, normal_form
from quasidegrees.linalg import IntMatrix, integer_kernel
from quasidegrees.parse import parse_polynomial
from quasidegrees.poly import (
    ColumnLatticeError,
    GradingNotPositiveError,
    homogeneous_degree,
)
from quasidegrees.stdpairs import degree_via_pairs
from quasidegrees.toric import (
    lattice_basis_binomials,
    normalized_volume,
    to_a_graded_ring,
    toric_ideal,
)

A35 = IntMatrix(((1, 1, 1, 1, 1), (0, 0, 1, 1, 0), (0, 1, 1, 0, -2)))


def test_to_a_graded_ring_defaults():
    R = to_a_graded_ring(A35)
    assert R.names == ("x1", "x2", "x3", "x4", "x5")
    assert R.heft == (1, 0, 0)


def test_to_a_graded_ring_errors():
    with pytest.raises(GradingNotPositiveError):
        to_a_graded_ring([[1, -1]])
    with pytest.raises(ColumnLatticeError):
        to_a_graded_ring([[2, 4]])


def test_lattice_basis_binomials_are_homogeneous():
    R = to_a_graded_ring(A35)
    for f in lattice_basis_binomials(A35):
        assert len(f.terms) == 2
        assert homogeneous_degree(f, R) is not None


def test_toric_ideal_twisted_cubic():
    # the twisted cubic, degree 3
    A = [[1, 1, 1, 1], [0, 1, 2, 3]]
    R = to_a_graded_ring(A, ("a", "b", "c", "d"))
    I = toric_ideal(A, R)
    expected = [
        parse_polynomial(s, R)
        for s in ("b^2 - a*c", "b*c - a*d", "c^2 - b*d")
    ]
    assert ideal_equal(I, expected, R.order)
    assert normalized_volume(A) == 3


def test_toric_ideal_segre():
    # A = [[1,1,0,0],[0,0,1,1],[1,0,1,0]]: 2x2 minors flavor, one binomial
    A = [[1, 1, 0, 0], [0, 0, 1, 1], [1, 0, 1, 0]]
    R = to_a_graded_ring(A)
    I = toric_ideal(A, R)
    x1, x2, x3, x4 = (parse_polynomial(n, R) for n in R.names)
    assert ideal_equal(I, [x1 * x4 - x2 * x3], R.order)
    assert normalized_volume(A) == 2


def test_toric_ideal_running_example_golden():
    R = to_a_graded_ring(A35)
    I = toric_ideal(A35, R)
    expected = [
        parse_polynomial(s, R)
        for s in (
            "x1*x3 - x2*x4",
            "x1*x4^2 - x3^2*x5",
            "x1^2*x4 - x2*x3*x5",
            "x1^3 - x2^2*x5",
        )
    ]
    assert ideal_equal(I, expected, R.order)
    # every element of the basis is homogeneous for the A grading
    for f in I:
        assert homogeneous_degree(f, R) is not None


def test_running_example_initial_ideal_and_volume():
    R = to_a_graded_ring(A35)
    I = toric_ideal(A35, R)
    lead = sorted(initial_ideal(I, R.order))
    assert lead == [
        (0, 1, 0, 3, 0),
        (1, 0, 0, 2, 0),
        (1, 0, 1, 0, 0),
        (2, 0, 0, 1, 0),
        (3, 0, 0, 0, 0),
    ]
    assert degree_via_pairs(lead, 5) == 4
    assert normalized_volume(A35) == 4


def test_volume_of_identity_is_one():
    assert normalized_volume([[1, 0], [0, 1]]) == 1
    assert toric_ideal([[1, 0], [0, 1]]) == []


def test_volume_of_segment():
    # A = [1 2]: vol = 2
    assert normalized_volume([[1, 2]]) == 2
    A = [[1, 3]]
    assert normalized_volume(A) == 3


def test_toric_membership_oracle():
    # x^u - x^v lies in I_A exactly when A u = A v; spot-check both ways
    R = to_a_graded_ring(A35)
    I = toric_ideal(A35, R)
    gb = buchberger(I, R.order)
    kernel_vec = (1, -1, 1, -1, 0)
    plus = tuple(max(x, 0) for x in kernel_vec)
    minus = tuple(max(-x, 0) for x in kernel_vec)
    from quasidegrees.poly import Polynomial

    f = Polynomial(5, [(plus, 1), (minus, -1)])
    assert normal_form(f, gb).is_zero()
    g = parse_polynomial("x1 - x2", R)
    assert not normal_form(g, gb).is_zero()


def test_toric_hilbert_function_matches_volume_ideal():
    # graded pieces of R/I_A are 1-dimensional exactly on the saturated
    # semigroup; sample degrees of monomials and compare with the initial
    # ideal count (Hilbert function invariance under taking lead terms)
    R = to_a_graded_ring(A35)
    I = toric_ideal(A35, R)
    lead = initial_ideal(I, R.order)
    rng = random.Random(61)
    for _ in range(12):
        e = tuple(rng.randint(0, 2) for _ in range(5))
        beta = R.multidegree(e)
        assert hilbert_quotient_dim(R, I, beta) == standard_monomial_count(R, lead, beta)


def test_random_kernel_binomials_vanish_in_toric_ideal():
    rng = random.Random(67)
    from quasidegrees.poly import Polynomial

    R = to_a_graded_ring(A35)
    I = toric_ideal(A35, R)
    gb = buchberger(I, R.order)
    basis = integer_kernel(A35)
    for _ in range(15):
        u = [0] * 5
        for v in basis:
            c = rng.randint(-2, 2)
            u = [a + c * b for a, b in zip(u, v)]
        plus = tuple(max(x, 0) for x in u)
        minus = tuple(max(-x, 0) for x in u)
        f = Polynomial(5, [(plus, 1), (minus, -1)])
        assert normal_form(f, gb).is_zero()
