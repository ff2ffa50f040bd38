"""Exact integer and rational computations.

This module holds everything that must be computed without rounding: the
double-sum integer coefficient attached to a parameter vector, the totally
symmetric three-term data with its order-3 recursion, the single-sum
coefficients of the zeta(3) descent, lcm denominators, and the prime-power
denominator gain (nu_p and its product Phi_n).
"""

from __future__ import annotations

import functools
from bisect import bisect_right
from fractions import Fraction
from math import comb, isqrt, lcm
from typing import NamedTuple

from . import group
from .params import (
    FSET,
    ParamVec8,
    ParamVec12,
    a_to_pq,
    hyperplane_values,
    satisfies_balance,
    satisfies_tail_split,
)

__all__ = [
    "binom",
    "Q_from_sum",
    "Q_totsym",
    "A_sum",
    "I3_leading",
    "SequenceTriple",
    "totsym_sequences",
    "lcm_d",
    "nu_p",
    "Phi_n",
    "ValuationReport",
    "valuation_report",
]


def binom(t: int, b: int) -> int:
    """C(t, b) with the zero-outside-support convention.

    b < 0 or b > t gives 0.  A negative t that survives those checks means
    a structurally required factor went negative, which is a caller bug,
    so it raises instead of guessing a convention.
    """
    if b < 0 or (t >= 0 and b > t):
        return 0
    if t < 0:
        raise AssertionError("negative upper index in a required binomial")
    return comb(t, b)


def Q_from_sum(pq: ParamVec12) -> int:
    """Integer coefficient of the leading zeta part, by the exact double sum.

    Requires the two-sided balance and the tail-split relations; both hold
    automatically for vectors coming from a_to_pq.
    """
    v = ParamVec12.from_seq(pq)
    if not satisfies_balance(v):
        raise ValueError("double sum needs the two-sided balance relations")
    if not satisfies_tail_split(v):
        raise ValueError("double sum needs p3 = p1+q1 = p5+q5")
    for name in ("q1", "q2", "q3", "q4", "q5", "p0", "p6"):
        if getattr(v, name) < 0:
            raise ValueError("negative exponent %s in double sum" % name)
    sign = -1 if (v.p0 + v.p1 + v.p2 + v.p3 + v.p4 + v.p5 + v.p6) % 2 else 1
    bot = v.p3 + v.q3 - v.p0 - v.p6
    total = 0
    for k1 in range(max(v.p0, v.p1, v.p2), min(v.p1 + v.q1, v.p2 + v.q2) + 1):
        f1 = binom(k1, v.p0) * binom(v.q1, k1 - v.p1) * binom(v.q2, k1 - v.p2)
        if f1 == 0:
            continue
        for k2 in range(max(v.p6, v.p4, v.p5), min(v.p4 + v.q4, v.p5 + v.q5) + 1):
            f2 = binom(k2, v.p6) * binom(v.q4, k2 - v.p4) * binom(v.q5, k2 - v.p5)
            if f2 == 0:
                continue
            total += f1 * f2 * binom(k1 + k2 + v.q3 - v.p0 - v.p6, bot)
    return sign * total


def Q_totsym(n: int) -> int:
    """Closed double sum for the totally symmetric vector (n, ..., n)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    total = 0
    for k1 in range(n + 1):
        w1 = comb(n + k1, n) * comb(n, k1) ** 2
        inner = 0
        for k2 in range(n + 1):
            inner += comb(n + k2, n) * comb(n, k2) ** 2 * comb(n + k1 + k2, n)
        total += w1 * inner
    return total


def A_sum(p0: int, p1: int, p2: int, p3: int, q1: int, q2: int, q3: int) -> int:
    """Leading integer coefficient of the three-fold descent integral.

    Valid under p3 + q3 = q1 + q2.  With all arguments equal to n this
    produces the classical sequence 1, 5, 73, 1445, ...
    """
    if p3 + q3 != q1 + q2:
        raise ValueError("A_sum needs p3 + q3 = q1 + q2")
    sign = -1 if (p0 + p1 + p2 + p3) % 2 else 1
    total = 0
    for k in range(max(p0, p1, p2), min(p1 + q1, p2 + q2) + 1):
        total += (
            binom(k, p0)
            * binom(k + q3 - p0, p3 + q3 - p0)
            * binom(q1, k - p1)
            * binom(q2, k - p2)
        )
    return sign * total


def I3_leading(a) -> int:
    """Integer coefficient recovered through the zeta(3) descent.

    The alternating combination of A_sum values over the descent window
    must reproduce Q_from_sum(a_to_pq(a)) exactly; the tests assert that.
    """
    v = a_to_pq(ParamVec8.from_seq(a))
    if not satisfies_balance(v):
        raise ValueError("descent combination needs the balance relations")
    sign0 = -1 if (v.p4 + v.p5 + v.p6) % 2 else 1
    total = 0
    for k in range(max(v.p4, v.p5, v.p6), min(v.p4 + v.q4, v.p5 + v.q5) + 1):
        c = binom(k, v.p6) * binom(v.q4, k - v.p4) * binom(v.q5, k - v.p5)
        if c == 0:
            continue
        term = A_sum(v.p0, v.p1, v.p2, v.p3 - k, v.q1, v.q2, v.q3 - v.p6 + k)
        total += (-1 if k % 2 else 1) * c * term
    return sign0 * total


class SequenceTriple(NamedTuple):
    n: int
    Q: int
    Phat: Fraction
    P: Fraction

    def to_json(self) -> dict:
        def enc(x):
            f = Fraction(x)
            return "%d/%d" % (f.numerator, f.denominator) if f.denominator != 1 else str(f.numerator)

        return {"n": self.n, "Q": str(self.Q), "Phat": enc(self.Phat), "P": enc(self.P)}


_INITIAL_TRIPLES = (
    (1, Fraction(0), Fraction(0)),
    (21, Fraction(101, 4), Fraction(87, 4)),
    (2989, Fraction(344923, 96), Fraction(1190161, 384)),
)


def _rec_coeffs(n: int) -> tuple[int, int, int, int]:
    # Coefficients (of y_{n+1}, y_n, y_{n-1}, y_{n-2}) of the shared
    # third-order recursion, valid for n >= 2.
    c3 = 2 * (2 * n + 1) * (41218 * n**3 - 48459 * n**2 + 20010 * n - 2871) * (n + 1) ** 5
    c2 = -(
        97604224 * n**9
        + 178061760 * n**8
        + 72005308 * n**7
        - 48634688 * n**6
        - 39076836 * n**5
        + 2622730 * n**4
        + 7581006 * n**3
        + 920112 * n**2
        - 543402 * n
        - 120582
    )
    c1 = -2 * n * (
        3874492 * n**8
        - 2617900 * n**7
        - 3144314 * n**6
        + 2947148 * n**5
        + 647130 * n**4
        - 1182926 * n**3
        + 115771 * n**2
        + 170716 * n
        - 44541
    )
    c0 = n * (41218 * n**3 + 75195 * n**2 + 46746 * n + 9898) * (n - 1) ** 5
    return c3, c2, c1, c0


def totsym_sequences(N: int) -> list[SequenceTriple]:
    """The three totally symmetric sequences for n = 0..N, exactly.

    All three satisfy one third-order recursion; the integer sequence is
    seeded with 1, 21, 2989 and stays integral (checked every step).
    """
    if N < 0:
        raise ValueError("N must be non-negative")
    qs = [Fraction(t[0]) for t in _INITIAL_TRIPLES]
    phats = [t[1] for t in _INITIAL_TRIPLES]
    ps = [t[2] for t in _INITIAL_TRIPLES]
    for n in range(2, N):
        c3, c2, c1, c0 = _rec_coeffs(n)
        if c3 == 0:
            raise ArithmeticError("leading recursion coefficient vanished at n=%d" % n)
        for seq in (qs, phats, ps):
            seq.append(-(c2 * seq[n] + c1 * seq[n - 1] + c0 * seq[n - 2]) / Fraction(c3))
    out = []
    for n in range(min(N, len(qs) - 1) + 1):
        q = qs[n]
        if q.denominator != 1:
            raise ArithmeticError("integer sequence left the integers at n=%d" % n)
        out.append(SequenceTriple(n=n, Q=int(q), Phat=phats[n], P=ps[n]))
    return out


def lcm_d(n: int) -> int:
    """lcm(1, 2, ..., n), with the empty cases d_0 = d_1 = 1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return lcm(*range(1, n + 1)) if n >= 2 else 1


# Denominator gain.  Everything below works on the orbit profiles: the
# distinct sorted tuples of convergence-subset values.  Profiles are held
# as count vectors against the small set of distinct values, which makes
# the min-over-orbit loops cheap.

@functools.lru_cache(maxsize=32)
def _profile_counts(a: ParamVec8):
    base, profiles = group.fset_profiles(a)
    values = sorted({v for p in profiles for v in p} | set(base), reverse=True)
    vindex = {v: i for i, v in enumerate(values)}

    def counts(profile):
        c = [0] * len(values)
        for v in profile:
            c[vindex[v]] += 1
        return tuple(c)

    base_counts = counts(base)
    rows = sorted({counts(p) for p in profiles})
    return tuple(values), base_counts, tuple(rows)


def _legendre(m: int, p: int) -> int:
    # Valuation of m! at the prime p.
    total = 0
    while m:
        m //= p
        total += m
    return total


def nu_p(a, n: int, p: int) -> int:
    """Largest factorial-valuation drop at p across the orbit.

    max over the group of ord_p( prod h_i(a n)! / prod h_i(g a n)! ), the
    products running over the convergence subset.  Computed directly from
    Legendre's formula for every orbit profile; no step-function shortcut,
    so this can serve as an oracle for the fractional-part law.
    """
    if n < 1 or p < 2:
        raise ValueError("need n >= 1 and a prime p >= 2")
    a = ParamVec8.from_seq(a)
    values, base_counts, rows = _profile_counts(a)
    vals = [_legendre(v * n, p) for v in values]
    base_total = sum(c * lv for c, lv in zip(base_counts, vals))
    best = base_total
    for row in rows:
        t = 0
        for c, lv in zip(row, vals):
            if c:
                t += c * lv
                if t >= best:
                    break
        if t < best:
            best = t
    return base_total - best


@functools.lru_cache(maxsize=32)
def _phi_table(a: ParamVec8):
    # Right-continuous step data for the valuation drop as a function of
    # the fractional part: breakpoints in (0,1) and the value on each
    # interval [b_k, b_{k+1}).  Exact rational arithmetic throughout.
    values, base_counts, rows = _profile_counts(a)
    breaks = sorted({Fraction(j, v) for v in values if v > 0 for j in range(1, v)})
    vals = []
    for b in breaks:
        num, den = b.numerator, b.denominator
        floors = [v * num // den for v in values]
        base_total = sum(c * f for c, f in zip(base_counts, floors))
        best = min(sum(c * f for c, f in zip(row, floors)) for row in rows)
        vals.append(base_total - best)
    return tuple(breaks), tuple(vals)


def _phi_at(a: ParamVec8, frac: Fraction) -> int:
    if frac == 0:
        return 0
    breaks, vals = _phi_table(a)
    k = bisect_right(breaks, frac)
    return 0 if k == 0 else vals[k - 1]


def Phi_n(a, n: int) -> int:
    """Denominator gain: product of p^{nu_p} over primes with p*p > m1*n.

    For those primes only the first Legendre term survives, and the drop
    depends on n/p through its fractional part alone (an elementary floor
    identity, since the convergence-subset sum is orbit-invariant).  The
    gain is assembled from the cached fractional-part table; nu_p stays an
    independent per-prime computation on purpose.
    """
    if n < 1:
        raise ValueError("n must be positive")
    a = ParamVec8.from_seq(a)
    m1 = max(hyperplane_values(a).h)
    if m1 <= 0:
        return 1
    limit = m1 * n
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = b"\x00" * len(sieve[i * i :: i])
    result = 1
    for p in range(isqrt(limit) + 1, limit + 1):
        if not sieve[p] or p * p <= limit:
            continue
        r = n % p
        if r == 0:
            continue
        e = _phi_at(a, Fraction(r, p))
        if e:
            result *= p**e
    return result


class ValuationReport(NamedTuple):
    """nu_p broken down for one (a, n, p) triple, for diagnostics."""

    a: ParamVec8
    n: int
    p: int
    nu: int
    fractional_part: Fraction
    single_term: bool  # True when p*p > m1*n so only one Legendre term acts

    def to_json(self) -> dict:
        return {
            "a": list(self.a),
            "n": self.n,
            "p": self.p,
            "nu": self.nu,
            "fractionalPart": "%d/%d" % (self.fractional_part.numerator, self.fractional_part.denominator),
            "singleTerm": self.single_term,
        }


def valuation_report(a, n: int, p: int) -> ValuationReport:
    a = ParamVec8.from_seq(a)
    m1 = max(hyperplane_values(a).h)
    return ValuationReport(
        a=a,
        n=n,
        p=p,
        nu=nu_p(a, n, p),
        fractional_part=Fraction(n % p, p),
        single_term=p * p > m1 * n,
    )
