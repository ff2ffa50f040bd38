from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp

from zetaforms import asympt, params

A11 = (8, 16, 10, 15, 12, 16, 18, 13)
A12 = (15, 20, 16, 14, 18, 17, 16, 20)


def _poly_degree(coeffs):
    d = len(coeffs) - 1
    while d >= 0 and coeffs[d] == 0:
        d -= 1
    return d


def test_bivariate_poly_arithmetic():
    p = asympt.BivariatePoly({(1, 0): 1, (0, 1): 1})   # x + y
    q = asympt.BivariatePoly({(1, 0): 1, (0, 1): -1})  # x - y
    prod = p * q
    assert prod.coeffs == {(2, 0): 1, (0, 2): -1}
    assert prod.degree_x() == 2 and prod.degree_y() == 2
    assert (p * q).coeffs == (q * p).coeffs
    assert (p + q).coeffs == {(1, 0): 2}
    assert (p - q).coeffs == {(0, 1): 2}
    # y-slices come out as univariate dicts in x
    assert prod.y_coefficient(0) == {2: 1}
    assert prod.y_coefficient(2) == {0: -1}


admissible = st.tuples(*[st.integers(min_value=1, max_value=5)] * 8).filter(
    lambda a: params.convergence_check(params.ParamVec8.from_seq(a))
)


@given(admissible)
@settings(max_examples=30, deadline=None)
def test_pencil_degrees(a):
    pq = params.a_to_pq(params.ParamVec8.from_seq(a))
    f1, f2 = asympt.build_F1F2(pq)
    assert f1.degree_y() == 1
    assert f2.degree_x() == 1
    # the balance identities kill the cubic term in y
    assert f2.degree_y() <= 2


@given(admissible)
@settings(max_examples=20, deadline=None)
def test_eliminant_degree_at_most_five_on_balanced_vectors(a):
    # generically exactly five; degenerate vectors can drop lower
    pq = params.a_to_pq(params.ParamVec8.from_seq(a))
    f1, f2 = asympt.build_F1F2(pq)
    assert _poly_degree(asympt.eliminate_y(f1, f2)) <= 5


def test_eliminant_degree_five_on_reference_vectors():
    for a in ((1,) * 8, A11, A12):
        pq = params.a_to_pq(params.ParamVec8.from_seq(a))
        f1, f2 = asympt.build_F1F2(pq)
        assert _poly_degree(asympt.eliminate_y(f1, f2)) == 5


def test_eliminant_degree_nine_off_the_balance_locus():
    pq = params.ParamVec12(2, 5, 1, 3, 1, 4, 4, 4, 6, 4, 2, 1)
    f1, f2 = asympt.build_F1F2(pq)
    assert _poly_degree(asympt.eliminate_y(f1, f2)) == 9


def test_cubic_at_the_symmetric_point():
    # after dividing out x(p3 - x): x^3 - 4x + 2, constant term first
    assert asympt.cubic_from_vector((1,) * 8) == [2, -4, 0, 1]


@given(admissible)
@settings(max_examples=20, deadline=None)
def test_cubic_or_clean_degeneracy(a):
    try:
        c = asympt.cubic_from_vector(a)
    except asympt.DegenerateGrowthError:
        return
    assert len(c) == 4
    assert all(isinstance(x, int) for x in c)
    assert c[3] != 0


def test_growth_rates_symmetric_point():
    g = asympt.lambda_values((1,) * 8, prec=30)
    assert not g.complex_pair
    expect = (0.005003781497, 0.08438431611, 592.0793805)
    for got, want in zip(g.moduli, expect):
        assert abs(float(got) - want) < 1e-8 * max(1.0, want)
    logs = (-5.297561353, -2.472373723, 6.383640715)
    for got, want in zip(g.logs, logs):
        assert abs(float(got) - want) < 1e-8


def test_growth_rates_are_consistent():
    g = asympt.lambda_values(A11, prec=30)
    with mp.workdps(40):
        for modulus, lg in zip(g.moduli, g.logs):
            assert abs(mp.log(modulus) - lg) < mp.mpf(10) ** -25


def test_growth_logs_large_example():
    g = asympt.lambda_values(A11, prec=30)
    want = (-66.05784568, -31.55296935, 85.08768883)
    for got, w in zip(g.logs, want):
        assert abs(float(got) - w) < 1e-6


def test_degenerate_vectors_raise():
    with pytest.raises(asympt.DegenerateGrowthError):
        asympt.lambda_values((1, 1, 1, 1, 1, 1, 2, 1), prec=25)
    with pytest.raises(asympt.DegenerateGrowthError):
        asympt.lambda_values((3, 0, 1, 2, 0, 1, 1, 0), prec=25)
    with pytest.raises(asympt.DegenerateGrowthError):
        asympt.worthiness((0, 1, 1, 1, 1, 2, 2, 2), prec=25)


def test_step_function_basics():
    st_fn = asympt.StepFunction(
        breakpoints=(Fraction(1, 3), Fraction(1, 2)), values=(2, 1))
    assert st_fn.value_at(Fraction(1, 4)) == 0
    assert st_fn.value_at(Fraction(1, 3)) == 2
    assert st_fn.value_at(Fraction(5, 12)) == 2
    assert st_fn.value_at(Fraction(1, 2)) == 1
    ivs = list(st_fn.intervals())
    assert ivs[0] == (Fraction(0), Fraction(1, 3), 0)
    assert ivs[-1][1] == Fraction(1)


def test_phi_step_flat_at_symmetric_point():
    st_fn = asympt.phi_step((1,) * 8)
    assert all(v == 0 for _, _, v in st_fn.intervals())


def test_phi_step_anchor_interval():
    st_fn = asympt.phi_step(A12)
    assert st_fn.value_at(Fraction(1, 19)) == 3
    assert st_fn.value_at(Fraction(2, 37)) == 3
    assert st_fn.value_at(Fraction(1, 18)) == 2


def test_phi_step_matches_per_prime_valuation():
    # large primes see only the fractional part of n/p
    from zetaforms import exact

    st_fn = asympt.phi_step(A11)
    for n, p in [(3, 211), (5, 101), (7, 503)]:
        assert p * p > 18 * n
        assert st_fn.value_at(Fraction(n % p, p)) == exact.nu_p(A11, n, p)


def test_phi_limit_anchor():
    lim = asympt.phi_limit(A11, prec=30)
    assert abs(float(lim.value) - 34.39425187) < 1e-6


def test_worthiness_anchors():
    w1 = asympt.worthiness((1,) * 8, prec=30)
    assert w1.healthy
    assert abs(float(w1.gamma) - 0.777959763435) < 1e-9

    w2 = asympt.worthiness(A11, prec=30)
    assert w2.healthy
    assert w2.m == (18, 17, 17, 16, 16)
    assert abs(float(w2.gamma) - 0.865971355) < 1e-8
    assert float(w2.C0) == pytest.approx(float(w2.rates.logs[1]))
    assert float(w2.C1) == pytest.approx(float(w2.rates.logs[2]))

    w3 = asympt.worthiness(A12, prec=30)
    assert abs(float(w3.gamma) - 0.851631393) < 1e-8


def test_worthiness_wants_admissible_input():
    with pytest.raises(ValueError):
        asympt.worthiness((1, 0, 5, 0, 0, 0, 0, 0), prec=25)


def test_refined_multiset_split():
    w = asympt.worthiness(A11, prec=25, refined_l=3)
    assert w.refined_l == 3
    assert len(w.m) == 5
    hv = params.hyperplane_values(params.ParamVec8.from_seq(A11))
    pair_sorted = sorted((hv.h[i - 1] for i in params.PAIR_FORM_INDICES),
                         reverse=True)
    diff_sorted = sorted((hv.h[i - 1] for i in params.DIFF_FORM_INDICES),
                         reverse=True)
    assert sorted(w.m, reverse=True) == sorted(
        pair_sorted[:3] + diff_sorted[:2], reverse=True)
