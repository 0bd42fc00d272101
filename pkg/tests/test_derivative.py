import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubecalc.derivative import (
    derivative_at_origin_oracle,
    has_multilinear_term,
    multilinear_coefficient,
    total_degree,
)
from cubecalc.errors import PreconditionError, ResourceLimitError
from cubecalc.integrate import ProdMulti
from cubecalc.poly import MultiPoly, monomial

from conftest import random_prodmulti, x

CROSSED_SQUARES = ProdMulti((x(0) * x(2) + x(1) * x(1), x(1) * x(3) + x(2) * x(2)), 2)
BINOMIAL = ProdMulti((x(0) + x(1), x(0) + x(1)), 1)
SINGLE = ProdMulti((x(0),), 1)


@pytest.mark.parametrize("p, expected", [(CROSSED_SQUARES, 1), (BINOMIAL, 2), (SINGLE, 1)])
def test_examples_pruned_and_oracle(p, expected):
    vs = list(range(p.num_vars))
    assert multilinear_coefficient(p, vs) == expected
    assert derivative_at_origin_oracle(p, vs) == expected


def test_zero_factor():
    p = ProdMulti((x(0), MultiPoly()), 1)
    assert multilinear_coefficient(p, [0]) == 0
    assert derivative_at_origin_oracle(p, [0]) == 0


def test_bad_vars():
    with pytest.raises(PreconditionError):
        multilinear_coefficient(BINOMIAL, [0, 0])
    with pytest.raises(PreconditionError):
        multilinear_coefficient(BINOMIAL, [0])
    with pytest.raises(PreconditionError):
        derivative_at_origin_oracle(BINOMIAL, [0, 1, 2])


def test_var_order_irrelevant():
    assert multilinear_coefficient(CROSSED_SQUARES, [3, 1, 0, 2]) == 1


def test_oracle_term_limit():
    p = ProdMulti(tuple(x(0) + x(1) + x(2) for _ in range(6)), 1)
    with pytest.raises(ResourceLimitError):
        derivative_at_origin_oracle(p, [0, 1, 2], max_terms=5)


def test_symmetric_padding_is_merged():
    """Twelve identical linear factors over twelve shared variables, each with
    its own marker variable: coefficient is 12!, reached without enumerating
    the 2**12 partial supports."""
    from math import factorial

    n = 12
    fs = tuple(MultiPoly.from_terms((monomial({i: 1, n + j: 1}), 1) for i in range(n)) for j in range(n))
    p = ProdMulti(fs, 2)
    assert multilinear_coefficient(p, range(2 * n), max_states=50) == factorial(n)


def test_random_three_factor_products():
    rng = random.Random(11)
    for _ in range(50):
        p = random_prodmulti(rng, max_k=3, max_n=4)
        vs = list(range(p.num_vars))
        assert multilinear_coefficient(p, vs) == derivative_at_origin_oracle(p, vs)


@given(st.randoms(use_true_random=False))
@settings(max_examples=100, deadline=None)
def test_pruned_equals_unpruned(rng):
    p = random_prodmulti(rng)
    vs = list(range(p.num_vars))
    assert multilinear_coefficient(p, vs) == derivative_at_origin_oracle(p, vs)


@given(st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_permutation_and_renaming_invariance(rng):
    p = random_prodmulti(rng)
    n = p.num_vars
    base = multilinear_coefficient(p, range(n))
    fs = list(p.factors)
    rng.shuffle(fs)
    perm = list(range(n))
    rng.shuffle(perm)
    renamed = tuple(
        MultiPoly.from_terms((monomial([(perm[v], e) for v, e in m]), c) for m, c in f.terms.items())
        for f in fs
    )
    assert multilinear_coefficient(ProdMulti(renamed, 2, n), [perm[v] for v in range(n)]) == base


@given(st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_degree_screen(rng):
    p = random_prodmulti(rng, max_k=3, max_n=6, max_deg=1)
    if total_degree(p) < p.num_vars:
        assert multilinear_coefficient(p, range(p.num_vars)) == 0


@given(st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_01_coefficient_products_nonnegative(rng):
    n = rng.randint(1, 6)
    fs = tuple(
        MultiPoly.from_terms((monomial({v: 1}), 1) for v in rng.sample(range(n), rng.randint(1, n)))
        for _ in range(n)
    )
    c = multilinear_coefficient(ProdMulti(fs, 1, n), range(n))
    assert c.denominator == 1 and c >= 0


# --- has_multilinear_term ----------------------------------------------------


def test_has_multilinear_crossed_squares():
    assert has_multilinear_term(CROSSED_SQUARES)


def test_has_multilinear_square_times_affine():
    p = ProdMulti((x(0) * x(0), x(0) + MultiPoly.const(1)), 2)
    # expansion is x0^3 + x0^2: nothing multilinear survives
    assert derivative_at_origin_oracle(p, [0]) == 0
    assert not has_multilinear_term(p)


def test_has_multilinear_constant():
    assert has_multilinear_term(ProdMulti((MultiPoly.const(5),), 0))


def test_has_multilinear_cancellation():
    p = ProdMulti((x(0) - x(0) * 1 + x(1) * x(1), x(2)), 2)
    assert not has_multilinear_term(p)


@given(st.randoms(use_true_random=False))
@settings(max_examples=50, deadline=None)
def test_has_multilinear_matches_expansion(rng):
    p = random_prodmulti(rng, max_k=4, max_n=4)
    from cubecalc.integrate import expand_product
    from cubecalc.poly import is_multilinear

    expected = any(is_multilinear(m) for m in expand_product(p.factors).terms)
    assert has_multilinear_term(p) == expected
