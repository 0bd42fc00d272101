from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubecalc.approx import ApproxCheck, approx_check, check_r_factor, check_rs_factor
from cubecalc.errors import PreconditionError
from cubecalc.integrate import ProdMulti, ProdSumUni, SumFactor, integrate_prodsum
from cubecalc.io import PolyDocument
from cubecalc.montecarlo import GENERATOR, mc_estimate, mc_samples
from cubecalc.poly import UniPoly

from conftest import sum_factor, x


def test_constant_is_exact():
    est = mc_estimate(ProdSumUni((SumFactor({}, 5),), 1), 1000, seed=3)
    assert est.mean == 5.0
    assert est.stderr == 0.0
    assert est.generator == GENERATOR


def test_two_x_converges_to_one():
    p = ProdSumUni((sum_factor((0, UniPoly.of(0, 2))),), 1)
    est = mc_estimate(p, 100_000, seed=1)
    assert est.within(1)
    assert 0 < est.stderr < 0.01


def test_example2_converges_to_zero(example2_poly):
    est = mc_estimate(example2_poly, 100_000, seed=2)
    assert est.within(0)


def test_example1_within_five_se(example1_poly):
    est = mc_estimate(PolyDocument.wrap(example1_poly), 100_000, seed=4)
    assert est.within(integrate_prodsum(example1_poly))


def test_prodmulti_evaluation():
    p = ProdMulti((x(0) * x(1) * 4,), 2)
    assert mc_estimate(p, 100_000, seed=5).within(1)


def test_factored_evaluation_matches_exact_values(example1_poly):
    vals = mc_samples(example1_poly, 10, seed=9)
    X = np.random.Generator(np.random.PCG64(9)).random((10, 2))
    for row, v in zip(X, vals):
        point = {i: Fraction(float(t)) for i, t in enumerate(row)}
        exact = 1
        for f in example1_poly.factors:
            exact *= f.evaluate(point)
        assert v == pytest.approx(float(exact), rel=1e-9, abs=1e-9)


def test_same_seed_bit_identical(example1_poly):
    a = mc_estimate(example1_poly, 70_000, seed=11)
    b = mc_estimate(example1_poly, 70_000, seed=11)
    assert a == b
    assert mc_estimate(example1_poly, 70_000, seed=12).mean != a.mean


def test_single_sample_has_zero_stderr():
    est = mc_estimate(ProdSumUni((sum_factor((0, UniPoly.of(0, 2))),), 1), 1, seed=0)
    assert est.samples == 1 and est.stderr == 0.0


def test_zero_samples_rejected():
    with pytest.raises(PreconditionError):
        mc_estimate(ProdSumUni((), 1), 0, seed=0)


# --- approximation contracts ------------------------------------------------


@pytest.mark.parametrize("a, ok", [(0, True), (Fraction(1, 10**9), False), (-1, False)])
def test_r_factor_zero_truth(a, ok):
    assert check_r_factor(approx_check(0, a, r=100)) is ok


def test_r_factor_examples():
    assert check_r_factor(approx_check(4, 5, r=2))
    assert not check_r_factor(approx_check(-4, -1, r=2))
    assert check_r_factor(approx_check(-4, -3, r=2))


def test_r_factor_ignores_s():
    assert not check_r_factor(approx_check(4, 9, r=2, s=5))
    assert check_rs_factor(approx_check(4, 9, r=2, s=5))


@pytest.mark.parametrize("a, ok", [(-3, True), (3, True), (Fraction(-31, 10), False), (4, False)])
def test_rs_factor_zero_truth(a, ok):
    assert check_rs_factor(approx_check(0, a, r=1, s=3)) is ok


def test_rs_factor_boundary():
    c = approx_check(12, 4, r=2, s=2)
    assert c.interval() == (4, 26)
    assert check_rs_factor(c)
    assert not check_rs_factor(approx_check(12, Fraction(39, 10), r=2, s=2))


def test_rs_factor_negative_truth():
    assert check_rs_factor(approx_check(-4, 0, r=2, s=2))
    assert not check_rs_factor(approx_check(-4, Fraction(1, 2), r=2, s=2))


def test_approx_check_validation():
    with pytest.raises(PreconditionError):
        ApproxCheck(1, 1, r=Fraction(1, 2))
    with pytest.raises(PreconditionError):
        ApproxCheck(1, 1, s=-1)


rats = st.fractions(-50, 50, max_denominator=9)


@given(rats, rats, st.fractions(1, 20, max_denominator=9))
def test_rs_with_zero_s_is_r_factor(F, A, r):
    c = approx_check(F, A, r=r)
    assert check_rs_factor(c) == check_r_factor(c)


@given(rats, rats, st.fractions(1, 20, max_denominator=9), st.fractions(0, 10, max_denominator=9))
def test_widening_is_monotone(F, A, r, s):
    if check_r_factor(approx_check(F, A, r=r)):
        assert check_rs_factor(approx_check(F, A, r=r, s=s))
