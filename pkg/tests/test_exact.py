import math
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetaforms import exact, params


def test_leading_coefficient_anchors():
    assert [exact.Q_totsym(n) for n in range(3)] == [1, 21, 2989]


def test_recursion_agrees_with_double_sum():
    seqs = exact.totsym_sequences(12)
    for n in range(13):
        pq = params.a_to_pq(params.ParamVec8.from_seq((n,) * 8))
        assert seqs[n].Q == exact.Q_from_sum(pq)
        assert seqs[n].Q == exact.Q_totsym(n)


def test_first_rational_terms():
    seqs = exact.totsym_sequences(2)
    assert seqs[0].Phat == 0 and seqs[0].P == 0
    assert seqs[1].Phat == Fraction(101, 4)
    assert seqs[1].P == Fraction(87, 4)
    assert seqs[2].Phat == Fraction(344923, 96)
    assert seqs[2].P == Fraction(1190161, 384)


@given(st.integers(min_value=0, max_value=9))
def test_companion_sum_against_brute_force(n):
    # the classical closed form: sum_j C(n,j)^2 C(n+j,j)^2
    brute = sum(comb(n, j) ** 2 * comb(n + j, j) ** 2 for j in range(n + 1))
    assert exact.A_sum(n, n, n, n, n, n, n) == brute


def test_companion_sum_precondition():
    with pytest.raises(ValueError):
        exact.A_sum(1, 1, 1, 2, 1, 1, 2)


def test_descent_identity_on_examples():
    for a in [(1,) * 8, (2,) * 8, (3,) * 8,
              (8, 16, 10, 15, 12, 16, 18, 13),
              (15, 20, 16, 14, 18, 17, 16, 20)]:
        v = params.ParamVec8.from_seq(a)
        assert exact.I3_leading(v) == exact.Q_from_sum(params.a_to_pq(v))


@given(st.integers(min_value=0, max_value=60))
def test_lcm_oracle(n):
    assert exact.lcm_d(n) == math.lcm(*range(1, n + 1)) if n else exact.lcm_d(0) == 1


def test_lcm_anchors():
    assert [exact.lcm_d(n) for n in (0, 1, 4, 10)] == [1, 1, 12, 2520]


def _legendre_oracle(m, p):
    total, q = 0, p
    while q <= m:
        total += m // q
        q *= p
    return total


def test_valuation_drop_small_cases():
    # recompute the drop from scratch: valuation of the convergence-subset
    # factorial product, minimised over every distinct orbit profile
    from zetaforms import group

    a = params.ParamVec8.from_seq((1, 2, 1, 1, 2, 1, 1, 1))
    _, profiles = group.fset_profiles(a)
    for n, p in [(1, 2), (2, 3), (3, 2), (4, 5), (5, 7)]:
        vals = [sum(_legendre_oracle(v * n, p) for v in prof) for prof in profiles]
        hv = params.hyperplane_values(a)
        base = sum(_legendre_oracle(hv.h[i - 1] * n, p) for i in params.FSET)
        assert exact.nu_p(a, n, p) == base - min(vals)


def test_valuation_drop_fractional_law():
    # for p*p > m1*n only the first Legendre term contributes and the drop
    # is a function of the fractional part of n/p alone
    a = params.ParamVec8.from_seq((8, 16, 10, 15, 12, 16, 18, 13))
    m1 = max(params.hyperplane_values(a).h)
    assert m1 == 18
    for n in (3, 7, 11):
        p = 1009  # p*p far above 18*11
        r = exact.valuation_report(a, n, p)
        assert r.single_term
        assert r.nu == exact.nu_p(a, n, p)
        assert r.fractional_part == Fraction(n % p, p)


def test_denominator_gain_multiplicativity_anchor():
    # Phi is a product over large primes; for the symmetric point the
    # profile is flat so every drop is zero and the gain collapses to 1.
    assert exact.Phi_n((1,) * 8, 1) == 1
    assert exact.Phi_n((1,) * 8, 5) == 1


def test_denominator_gain_prime_support():
    a = (8, 16, 10, 15, 12, 16, 18, 13)
    n = 4
    gain = exact.Phi_n(a, n)
    assert gain > 1
    # every prime factor must exceed sqrt(m1*n) and omit divisors of n
    m1 = 18
    x = gain
    for p in range(2, 2000):
        while x % p == 0:
            assert p * p > m1 * n
            assert n % p != 0
            x //= p
    assert x == 1 or min(q for q in range(2, x + 1) if x % q == 0) ** 2 > m1 * n


def test_q_from_sum_zero_vector():
    pq = params.a_to_pq(params.ParamVec8.from_seq((0,) * 8))
    assert exact.Q_from_sum(pq) == 1
