import math

import numpy as np
import pytest
from scipy import special

from cyclosc.specfun import (
    pochhammer,
    hyper0F,
    mittag_leffler,
    bessel_i,
    bessel_k,
)


def test_pochhammer_basics():
    assert pochhammer(3.0, 0) == 1.0
    assert pochhammer(3.0, 4) == 3 * 4 * 5 * 6
    assert pochhammer(0.5, 2) == 0.75


def test_hyper0F_zero_argument():
    res = hyper0F([0.7, 1.3], 0.0)
    assert res.value == 1.0
    assert res.tail_bound == 0.0


def test_hyper0F_frozen_value():
    # 0F1(; 1; 1) = I_0(2) = 2.2795853023360673
    res = hyper0F([1.0], 1.0)
    assert math.isclose(res.value, 2.2795853023360673, rel_tol=1e-13)


def test_hyper0F_rejects_bad_input():
    with pytest.raises(ValueError):
        hyper0F([0.0], 1.0)
    with pytest.raises(ValueError):
        hyper0F([-2.0], 0.5)
    with pytest.raises(ValueError):
        hyper0F([1.0], -0.5)


def test_hyper0F_tail_bound_is_honest():
    rng = np.random.default_rng(7)
    for _ in range(25):
        denoms = [float(d) for d in rng.uniform(0.2, 3.0, size=2)]
        x = float(rng.uniform(0.0, 40.0))
        rough = hyper0F(denoms, x, tol=1e-5)
        sharp = hyper0F(denoms, x, tol=1e-15)
        assert abs(rough.value - sharp.value) <= rough.tail_bound + 1e-14 * sharp.value
        assert rough.terms_used <= sharp.terms_used


def test_bessel_i_against_scipy():
    for nu in (0.0, 0.25, 0.5, 1.0, 1.75, 3.0):
        for x in (0.1, 1.0, 10.0):
            assert math.isclose(bessel_i(nu, x), float(special.iv(nu, x)), rel_tol=1e-12)


def test_bessel_i_zero_argument():
    assert bessel_i(0.0, 0.0) == 1.0
    assert bessel_i(1.5, 0.0) == 0.0


def test_bessel_k_against_scipy():
    for nu in (0.0, 0.3, 1.0, 2.5):
        for x in (0.2, 1.0, 5.0, 20.0):
            assert math.isclose(bessel_k(nu, x), float(special.kv(nu, x)), rel_tol=1e-10)


def test_bessel_wronskian():
    # I_nu(x) K_{nu+1}(x) + I_{nu+1}(x) K_nu(x) = 1/x
    for nu in (0.0, 0.4, 1.2):
        for x in (0.5, 2.0, 8.0):
            lhs = bessel_i(nu, x) * bessel_k(nu + 1, x) + bessel_i(nu + 1, x) * bessel_k(nu, x)
            assert math.isclose(lhs, 1.0 / x, rel_tol=1e-10)


def test_bessel_k_requires_positive_argument():
    with pytest.raises(ValueError):
        bessel_k(0.5, 0.0)
    with pytest.raises(ValueError):
        bessel_k(0.5, -1.0)


def test_mittag_leffler_classical_reductions():
    for x in (0.5, 5.0, 10.0):
        assert math.isclose(mittag_leffler(1.0, 1.0, x).value, math.exp(x), rel_tol=1e-12)
    # E_{2,1}(4) = cosh(2) = 3.7621956910836314
    assert math.isclose(mittag_leffler(2.0, 1.0, 4.0).value, 3.7621956910836314, rel_tol=1e-13)
    # E_{2,2}(x) = sinh(sqrt(x))/sqrt(x)
    assert math.isclose(mittag_leffler(2.0, 2.0, 9.0).value, math.sinh(3.0) / 3.0, rel_tol=1e-12)


def test_mittag_leffler_zero_argument():
    for beta in (1.0, 2.5):
        assert mittag_leffler(3.0, beta, 0.0).value == 1.0 / math.gamma(beta)


def test_mittag_leffler_negative_argument():
    assert math.isclose(mittag_leffler(1.0, 1.0, -3.0).value, math.exp(-3.0), rel_tol=1e-10)


def test_mittag_leffler_rejects_bad_parameters():
    with pytest.raises(ValueError):
        mittag_leffler(0.0, 1.0, 1.0)
    with pytest.raises(ValueError):
        mittag_leffler(1.0, -1.0, 1.0)
