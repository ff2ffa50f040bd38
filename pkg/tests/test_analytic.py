from fractions import Fraction
from math import comb, factorial

import pytest
from mpmath import mp

from zetaforms import analytic


def test_hp_real_round_trip():
    h = analytic.eval_J3((0,) * 7, prec=20)
    j = h.to_json()
    assert set(j) == {"value", "precision", "errBound"}
    assert j["precision"] == 20
    assert float(h) == pytest.approx(2.4041138063, abs=1e-9)


def test_zeta_constants_match_mpmath():
    zc = analytic.zeta_constants(30)
    with mp.workdps(40):
        assert abs(zc.zeta2 - mp.zeta(2)) < mp.mpf(10) ** -29
        assert abs(zc.zeta3 - mp.zeta(3)) < mp.mpf(10) ** -29
        assert abs(zc.zeta5 - mp.zeta(5)) < mp.mpf(10) ** -29


def test_depth_three_integral_at_zero():
    h = analytic.eval_J3((0,) * 7, prec=25)
    with mp.workdps(35):
        assert abs(h.value - 2 * mp.zeta(3)) < mp.mpf(10) ** -20


def test_full_integral_at_zero():
    h = analytic.eval_I((0,) * 8, prec=25)
    with mp.workdps(35):
        want = 2 * mp.zeta(5) + 4 * mp.zeta(3) * mp.zeta(2)
        assert abs(h.value - want) < mp.mpf(10) ** -20


def test_full_integral_at_symmetric_point():
    h = analytic.eval_I((1,) * 8, prec=30)
    with mp.workdps(40):
        want = mp.mpf("0.00619038932354075075859568469744")
        assert abs(h.value - want) < mp.mpf(10) ** -30


def test_density_moments_are_exact():
    """Moment identity for the collapsed pair density.

    Integrating v^k against the density must reproduce the product of two
    Beta values, since v stands for the product of the two original
    variables.  Everything on both sides is rational.
    """
    def beta(p, q):
        return Fraction(factorial(p) * factorial(q), factorial(p + q + 1))

    for (pl, ql, ph, qh) in [(0, 0, 0, 0), (1, 1, 1, 1), (2, 1, 0, 3),
                             (3, 2, 1, 1), (0, 4, 2, 0)]:
        kern = analytic._PairKernel(pl, ql, ph, qh, pow_exp=1, bits=80)
        for k in range(4):
            left = Fraction(0)
            for d, c in kern._acoef:
                left += c * Fraction(1, d + k + 1)
            for d, c in kern._bcoef:
                left += c * Fraction(1, (d + k + 1) ** 2)
            assert left == beta(pl + k, ql) * beta(ph + k, qh)


def test_reconstruction_identity_at_symmetric_point():
    # the integral against the frozen exact coefficients: high precision
    # quadrature on one side, mpmath zeta arithmetic on the other
    h = analytic.eval_I((1,) * 8, prec=40)
    with mp.workdps(55):
        rhs = (21 * (2 * mp.zeta(5) + 4 * mp.zeta(3) * mp.zeta(2))
               - 4 * mp.mpf(101) / 4 * mp.zeta(2)
               - 2 * mp.mpf(87) / 4)
        assert abs(h.value - rhs) < mp.mpf(10) ** -38


def test_decompose_symmetric_point():
    rep = analytic.decompose((1,) * 8, prec=40)
    assert rep.Q == 21
    assert rep.phat == Fraction(101, 4)
    assert rep.p == Fraction(87, 4)
    assert rep.den_bound == 4
    assert float(rep.residual) < 1e-30


def test_decompose_doubled_point():
    rep = analytic.decompose((2,) * 8, prec=40)
    assert rep.Q == 2989
    assert rep.phat == Fraction(344923, 96)
    assert rep.p == Fraction(1190161, 384)
    assert rep.den_bound == 768


def test_decompose_zero_vector():
    rep = analytic.decompose((0,) * 8, prec=30)
    assert rep.Q == 1
    assert rep.phat == 0
    assert rep.p == 0


def test_decompose_weight3_projection():
    rep = analytic.decompose((1,) * 8, prec=40)
    with mp.workdps(50):
        want = 21 * mp.zeta(3) - mp.mpf(101) / 4
        assert abs(rep.weight3 - want) < mp.mpf(10) ** -35


def test_decompose_rejects_inadmissible():
    with pytest.raises(ValueError):
        analytic.decompose((1, 0, 5, 0, 0, 0, 0, 0), prec=25)


def test_rationalize_recovers_fractions():
    with mp.workdps(45):
        x = mp.mpf(344923) / 96
        got = analytic.rationalize(x, den_bound=200, err_bound=mp.mpf(10) ** -35)
        assert got == Fraction(344923, 96)


def test_rationalize_needs_enough_precision():
    # error bound too coarse for the requested denominator range
    with mp.workdps(15):
        with pytest.raises(ValueError):
            analytic.rationalize(mp.mpf(1) / 3, den_bound=10 ** 6,
                                 err_bound=mp.mpf(10) ** -3)


def test_rationalize_flags_non_rational_input():
    with mp.workdps(30):
        x = mp.sqrt(2)
        with pytest.raises(analytic.AmbiguousReconstructionError):
            analytic.rationalize(x, den_bound=100, err_bound=mp.mpf(10) ** -20)


def test_dual_parameters():
    assert tuple(analytic.dual_params((1,) * 8)) == (3, 1, 1, 1, 1, 1, 1, 1)
    assert tuple(analytic.dual_params((0,) * 8)) == (0,) * 8
    b = analytic.dual_params((8, 16, 10, 15, 12, 16, 18, 13))
    assert min(b) >= 0
    assert all(b.b0 >= 2 * x for x in tuple(b)[1:])


def test_series_at_zero():
    f = analytic.eval_F7((0,) * 8, prec=25)
    with mp.workdps(35):
        assert abs(f.value - 2 * mp.zeta(5)) < mp.mpf(10) ** -20


def test_series_precision_agreement():
    # one point on the slowly decaying path, one on the fast direct path
    for b in ((3, 1, 1, 1, 1, 1, 1, 1), (6, 2, 2, 2, 2, 2, 2, 2)):
        lo = analytic.eval_F7(b, prec=18)
        hi = analytic.eval_F7(b, prec=32)
        with mp.workdps(40):
            assert abs(lo.value - hi.value) <= lo.err_bound + hi.err_bound
        assert float(lo) > 0


def test_integral_precision_agreement():
    lo = analytic.eval_I((1,) * 8, prec=22)
    hi = analytic.eval_I((1,) * 8, prec=36)
    with mp.workdps(45):
        assert abs(lo.value - hi.value) <= lo.err_bound + hi.err_bound
