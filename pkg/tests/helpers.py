"""Shared oracles and random generators for the test suite.

The Hilbert-function oracles here are deliberately independent of the
Groebner machinery: they enumerate monomials of a multidegree directly
(the ring does that by heft-bounded search) and use plain rational rank
computations, so they can referee the algebraic code.
"""

import random
from fractions import Fraction

from quasidegrees.linalg import rational_rank
from quasidegrees.poly import (
    ANY_DEGREE,
    GradedRing,
    Polynomial,
    exps_add,
    exps_divides,
    homogeneous_degree,
)


def hilbert_quotient_dim(ring: GradedRing, gens, beta) -> int:
    """dim_Q (R/I)_beta for homogeneous gens, by degreewise linear algebra."""
    beta = tuple(beta)
    mons = list(ring.monomials_of_degree(beta))
    if not mons:
        return 0
    index = {m: i for i, m in enumerate(mons)}
    rows = []
    for g in gens:
        if g.is_zero():
            continue
        dg = homogeneous_degree(g, ring)
        assert dg is not None and dg is not ANY_DEGREE, "oracle needs homogeneous gens"
        target = tuple(b - d for b, d in zip(beta, dg))
        for v in ring.monomials_of_degree(target):
            row = [Fraction(0)] * len(mons)
            for e, c in g.terms.items():
                row[index[exps_add(v, e)]] = c
            rows.append(row)
    rank = rational_rank(rows) if rows else 0
    return len(mons) - rank


def hilbert_coker_dim(ring: GradedRing, columns, shifts, beta) -> int:
    """dim_Q of the beta piece of R^t(-shifts)/<columns>, exactly.

    Basis of the free part in degree beta: pairs (component k, monomial of
    degree beta - shifts[k]). Relations: monomial multiples of the columns
    landing in that degree. The quotient dimension is basis size minus the
    rank of the relation rows.
    """
    from quasidegrees.qdeg import vector_degree

    beta = tuple(beta)
    basis = []
    for k, s in enumerate(shifts):
        target = tuple(b - x for b, x in zip(beta, s))
        for m in ring.monomials_of_degree(target):
            basis.append((k, m))
    if not basis:
        return 0
    index = {bm: i for i, bm in enumerate(basis)}
    rows = []
    for col in columns:
        dcol = vector_degree(col, shifts, ring)
        assert dcol is not None, "oracle needs homogeneous columns"
        if dcol is ANY_DEGREE:
            continue
        target = tuple(b - x for b, x in zip(beta, dcol))
        for v in ring.monomials_of_degree(target):
            row = [Fraction(0)] * len(basis)
            for k, f in enumerate(col):
                for e, c in f.terms.items():
                    row[index[(k, exps_add(v, e))]] = c
            rows.append(row)
    rank = rational_rank(rows) if rows else 0
    return len(basis) - rank


def standard_monomial_count(ring: GradedRing, lead_exps, beta) -> int:
    """dim_Q (R/in(I))_beta: monomials of the degree outside the lead terms."""
    return sum(
        1
        for m in ring.monomials_of_degree(tuple(beta))
        if not any(exps_divides(l, m) for l in lead_exps)
    )


def random_polynomial(rng: random.Random, nvars, max_terms=3, max_exp=3) -> Polynomial:
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        e = tuple(rng.randint(0, max_exp) for _ in range(nvars))
        c = rng.choice([x for x in range(-3, 4) if x])
        terms.append((e, Fraction(c)))
    return Polynomial(nvars, terms)


def random_ideal(rng: random.Random, nvars, max_gens=3, max_terms=3, max_exp=3):
    return [
        random_polynomial(rng, nvars, max_terms, max_exp)
        for _ in range(rng.randint(1, max_gens))
    ]


def random_homogeneous_binomial_ideal(rng: random.Random, nvars, max_gens=3, max_deg=4):
    """Binomials x^a - c*x^b with equal total degree (standard grading)."""

    def exps_of_degree(d):
        e = [0] * nvars
        for _ in range(d):
            e[rng.randrange(nvars)] += 1
        return tuple(e)

    gens = []
    for _ in range(rng.randint(1, max_gens)):
        d = rng.randint(1, max_deg)
        a, b = exps_of_degree(d), exps_of_degree(d)
        c = rng.choice([x for x in range(-3, 4) if x])
        gens.append(Polynomial(nvars, [(a, Fraction(1)), (b, Fraction(-c))]))
    return [g for g in gens if not g.is_zero()] or [Polynomial.zero(nvars)]


def random_monomial_ideal(rng: random.Random, nvars, max_gens=4, max_exp=4):
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        e = tuple(rng.randint(0, max_exp) for _ in range(nvars))
        if any(e):
            gens.append(e)
    return gens
