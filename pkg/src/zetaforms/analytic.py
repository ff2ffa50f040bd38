"""High-precision evaluation and exact reconstruction.

The period of the family labelled by a is a 5-fold integral over the unit
cube.  Two of the five variables enter only through their product, so each
pair collapses against an explicit piecewise-polynomial density and the
whole thing becomes a single outer integral of a product of two inner
one-dimensional integrals.  Everything is evaluated with tanh-sinh
quadrature on gmpy2 floats, which handles the endpoint singularities and
is a few times faster than mpmath at the same precision.

The same machinery evaluates the depth-3 companion integrals, and a
descent identity turns a signed binomial combination of those into the
weight-3 period.  Subtracting the right zeta multiples leaves tiny
rationals, which are recovered exactly by continued fractions under a
proven denominator bound.

A very-well-poised series gives an independent route to the same numbers;
it is summed directly when its polynomial decay is steep, and through
mpmath's acceleration otherwise.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import NamedTuple

import gmpy2
from gmpy2 import mpfr
from mpmath import mp

from .exact import Q_from_sum, lcm_d
from .params import ParamVec8, ParamVec12, a_to_pq, convergence_check, hyperplane_values

__all__ = [
    "HPReal",
    "QuadratureError",
    "AmbiguousReconstructionError",
    "DecompositionReport",
    "DualParams",
    "zeta_constants",
    "eval_I",
    "eval_J3",
    "eval_F7",
    "rationalize",
    "decompose",
    "dual_params",
]

log = logging.getLogger(__name__)


class QuadratureError(ArithmeticError):
    """An adaptive integral failed to settle within the level budget."""


class AmbiguousReconstructionError(ArithmeticError):
    """A numeric value could not be pinned to a unique small rational."""


@dataclass(frozen=True)
class HPReal:
    """A high-precision value together with its error budget."""

    value: object
    precision: int
    err_bound: object

    def __float__(self) -> float:
        return float(self.value)

    def to_json(self) -> dict:
        return {
            "value": mp.nstr(self.value, self.precision, strip_zeros=False),
            "precision": self.precision,
            "errBound": mp.nstr(self.err_bound, 3),
        }


class ZetaConstants(NamedTuple):
    zeta2: object
    zeta3: object
    zeta5: object


@lru_cache(maxsize=16)
def zeta_constants(prec: int = 40) -> ZetaConstants:
    """Zeta values at 2, 3 and 5, computed with 30 guard digits."""
    with mp.workdps(prec + 30):
        return ZetaConstants(+mp.zeta(2), +mp.zeta(3), +mp.zeta(5))


# ---------------------------------------------------------------------------
# tanh-sinh quadrature on [0, 1]
#
# Nodes at level m sit at t = k / 2^m; the level-0 list holds every integer
# k, later levels only odd k.  Each cached entry is (x, 1 - x, w) with the
# half-interval scaling already folded into w.  Both x and 1 - x are stored
# because integrands need the complement at full accuracy near the edges.

_NODES: dict[tuple[int, int], list] = {}


def _ts_nodes(bits: int, level: int, deep: bool = False) -> list:
    """Nodes for one level.  ``deep`` extends the tail far enough that an
    inner integrand scaled by any power of an outer complement (itself no
    smaller than the shallow cutoff) still truncates below roundoff."""
    key = (bits, level, deep)
    got = _NODES.get(key)
    if got is not None:
        return got
    out = []
    with gmpy2.context(precision=bits + 64):
        half_pi = gmpy2.const_pi() / 2
        if deep:
            u_max = mpfr(bits) * mpfr(math.log(2)) + 240
        else:
            u_max = mpfr(bits) * mpfr(math.log(2)) / 2 + 80
        h = mpfr(2) ** (-level)
        k = 0 if level == 0 else 1
        step = 1 if level == 0 else 2
        while True:
            kh = k * h
            u = half_pi * gmpy2.sinh(kh)
            if u > u_max:
                break
            e2u = gmpy2.exp(-2 * u)
            den = 1 + e2u
            x = e2u / den
            c = 1 / den
            w = gmpy2.const_pi() * gmpy2.cosh(kh) * x * c
            out.append((x, c, w))
            if k > 0:
                out.append((c, x, w))
            k += step
    _NODES[key] = out
    return out


class _PairKernel:
    """Inner integral of one collapsed variable pair.

    Holds the exact density coefficients for the pair with exponents
    (p_lo, q_lo, p_hi, q_hi) and evaluates, adaptively,

        G(y, c) = integral over v in [0,1] of rho(v) * (c + y v)^(-pow).

    The density is rho(v) = sum A_m v^m + (sum B_m v^m) log(1/v); its
    values at the quadrature nodes are cached per level, computed with
    extra bits because the polynomial part cancels heavily near v = 1.
    """

    __slots__ = ("pow", "bits", "key", "_acoef", "_bcoef", "_rw")

    def __init__(self, p_lo: int, q_lo: int, p_hi: int, q_hi: int,
                 pow_exp: int, bits: int):
        if min(p_lo, q_lo, p_hi, q_hi) < 0 or pow_exp < 1:
            raise ValueError("pair kernel needs non-negative exponents")
        self.pow = pow_exp
        self.bits = bits
        self.key = (p_lo, q_lo, p_hi, q_hi, pow_exp)
        A: dict[int, Fraction] = {}
        B: dict[int, Fraction] = {}
        for r in range(q_lo + 1):
            for s in range(q_hi + 1):
                coef = (-1) ** (r + s) * comb(q_lo, r) * comb(q_hi, s)
                e = p_lo + r - p_hi - s
                if e == 0:
                    B[p_hi + s] = B.get(p_hi + s, Fraction(0)) + coef
                else:
                    A[p_hi + s] = A.get(p_hi + s, Fraction(0)) + Fraction(coef, e)
                    A[p_lo + r] = A.get(p_lo + r, Fraction(0)) - Fraction(coef, e)
        self._acoef = tuple((d, c) for d, c in sorted(A.items()) if c)
        self._bcoef = tuple((d, c) for d, c in sorted(B.items()) if c)
        self._rw: list[list] = []

    def _rho_w(self, level: int) -> list:
        while len(self._rw) <= level:
            m = len(self._rw)
            nodes = _ts_nodes(self.bits, m, deep=True)
            with gmpy2.context(precision=self.bits + 96):
                acoef = [(d, mpfr(c.numerator) / mpfr(c.denominator))
                         for d, c in self._acoef]
                bcoef = [(d, mpfr(c.numerator) / mpfr(c.denominator))
                         for d, c in self._bcoef]
                row = []
                half = mpfr(1) / 2
                for x, c, w in nodes:
                    acc = mpfr(0)
                    for d, cf in acoef:
                        acc += cf * x**d
                    if bcoef:
                        # log(1/v): plain log is exact for small v, the
                        # complement form avoids cancellation near v = 1.
                        lg = -gmpy2.log(x) if x <= half else -gmpy2.log1p(-c)
                        bacc = mpfr(0)
                        for d, cf in bcoef:
                            bacc += cf * x**d
                        acc += bacc * lg
                    row.append(w * acc)
            self._rw.append(row)
        return self._rw[level]

    def value(self, y, c, reltol, max_level: int = 13):
        pw = -self.pow
        S = prev = None
        for m in range(max_level + 1):
            nodes = _ts_nodes(self.bits, m, deep=True)
            rw = self._rho_w(m)
            tot = mpfr(0)
            for (x, _, _), r in zip(nodes, rw):
                tot += r * gmpy2.fma(y, x, c) ** pw
            if m == 0:
                S = tot
            else:
                S = S / 2 + tot * mpfr(2) ** (-m)
            if m >= 3 and prev is not None and abs(S - prev) <= reltol * abs(S):
                return S
            prev = S
        raise QuadratureError("inner integral failed to settle")


class _OuterComponent(NamedTuple):
    xexp: int
    cexp: int
    pair: bool


def _outer_sum(components, k1, k2, bits, reltol, max_level: int = 12):
    """Simultaneous tanh-sinh integrals sharing the inner kernel values.

    Every component integrand is x^xexp (1-x)^cexp G1(x) [G2(x)]; the
    expensive G values are computed once per node and reused across all
    components.  Returns one value per component once every component is
    stable between consecutive levels.
    """
    inner_tol = reltol / 16
    with gmpy2.context(precision=bits):
        floor = mpfr(2) ** (-(2 * bits) // 3)
        n = len(components)
        S: list = [mpfr(0)] * n
        prev = None
        for m in range(max_level + 1):
            sums = [mpfr(0)] * n
            for x, c, w in _ts_nodes(bits, m):
                g1 = k1.value(x, c, inner_tol)
                g2 = g1 if k2 is None else k2.value(x, c, inner_tol)
                for i, comp in enumerate(components):
                    t = w * g1
                    if comp.pair:
                        t *= g2
                    if comp.xexp:
                        t *= x ** comp.xexp
                    if comp.cexp:
                        t *= c ** comp.cexp
                    sums[i] += t
            if m == 0:
                S = sums
            else:
                hm = mpfr(2) ** (-m)
                S = [s / 2 + t * hm for s, t in zip(S, sums)]
            if m >= 3 and prev is not None:
                if all(abs(S[i] - prev[i]) <= reltol * (abs(S[i]) + floor)
                       for i in range(n)):
                    return S
            prev = S
        raise QuadratureError("outer integral failed to settle")


def _bits_for(prec: int) -> int:
    return int((prec + 18) * 3.3219280948873626) + 16


def _reltol(bits: int):
    return mpfr(2) ** (30 - bits)


def _to_mp(x) -> object:
    """Exact conversion gmpy2.mpfr -> mpmath mpf (round at current dps)."""
    n, d = x.as_integer_ratio()
    return mp.mpf(int(n)) / mp.mpf(int(d))


def _kernels_for(pq: ParamVec12, bits: int):
    k1 = _PairKernel(pq.p1, pq.q1, pq.p2, pq.q2, pq.p0 + 1, bits)
    key2 = (pq.p4, pq.q4, pq.p5, pq.q5, pq.p6 + 1)
    if key2 == k1.key:
        return k1, None
    return k1, _PairKernel(pq.p4, pq.q4, pq.p5, pq.q5, pq.p6 + 1, bits)


def eval_I(a, prec: int = 40) -> HPReal:
    """The weight-5 period of the vector a, by collapsed quadrature."""
    pq = a_to_pq(ParamVec8.from_seq(a))
    bits = _bits_for(prec)
    rt = _reltol(bits)
    k1, k2 = _kernels_for(pq, bits)
    comp = [_OuterComponent(pq.p3 + 1, pq.q3, True)]
    val = _outer_sum(comp, k1, k2, bits, rt)[0]
    with mp.workdps(prec + 25):
        v = _to_mp(val)
        err = abs(v) * mp.mpf(2) ** (36 - bits)
    return HPReal(value=v, precision=prec, err_bound=err)


def eval_J3(params, prec: int = 40) -> HPReal:
    """A depth-3 companion integral.

    ``params`` is the 7-tuple (p0, p1, p2, p3, q1, q2, q3); the integrand
    pairs the single (p1, q1, p2, q2) block against outer exponents
    (p3, q3) with kernel power p0 + 1.
    """
    p0, p1, p2, p3, q1, q2, q3 = (int(t) for t in params)
    if min(p0, p1, p2, p3, q1, q2, q3) < 0:
        raise ValueError("companion integral needs non-negative parameters")
    bits = _bits_for(prec)
    rt = _reltol(bits)
    k1 = _PairKernel(p1, q1, p2, q2, p0 + 1, bits)
    val = _outer_sum([_OuterComponent(p3, q3, False)], k1, None, bits, rt)[0]
    with mp.workdps(prec + 25):
        v = _to_mp(val)
        err = abs(v) * mp.mpf(2) ** (36 - bits)
    return HPReal(value=v, precision=prec, err_bound=err)


def _descent_windows(pq: ParamVec12):
    """Signed binomial weights and shifted exponents for the depth drop."""
    lo = max(pq.p4, pq.p5, pq.p6)
    hi = min(pq.p4 + pq.q4, pq.p5 + pq.q5)
    sign = (-1) ** (pq.p4 + pq.p5 + pq.p6)
    out = []
    for k in range(lo, hi + 1):
        coef = sign * (-1) ** k * comb(k, pq.p6) * comb(pq.q4, k - pq.p4) \
            * comb(pq.q5, k - pq.p5)
        out.append((k, coef, pq.p3 - k, pq.q3 - pq.p6 + k))
    return out


def _fraction_str(f: Fraction) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    return "%d/%d" % (f.numerator, f.denominator)


@dataclass
class DecompositionReport:
    """Exact rational data extracted from one vector's periods."""

    a: ParamVec8
    Q: int
    phat: Fraction
    p: Fraction
    den_bound: int
    m: tuple
    integral: object
    weight3: object
    residual: object
    precision: int

    def to_json(self) -> dict:
        return {
            "a": list(self.a),
            "Q": str(self.Q),
            "phat": _fraction_str(self.phat),
            "p": _fraction_str(self.p),
            "denominatorBound": str(self.den_bound),
            "m": list(self.m),
            "I": mp.nstr(self.integral, self.precision, strip_zeros=False),
            "I3": mp.nstr(self.weight3, self.precision, strip_zeros=False),
            "residual": mp.nstr(self.residual, 3),
            "precision": self.precision,
        }


def _mp_to_fraction(x) -> Fraction:
    if not mp.isfinite(x):
        raise ValueError("cannot convert a non-finite value")
    sign, man, exp, _ = mp.mpf(x)._mpf_
    if man == 0:
        return Fraction(0)
    f = Fraction(int(man)) * (Fraction(2) ** int(exp))
    return -f if sign else f


def rationalize(value, den_bound: int, err_bound=None) -> Fraction:
    """Pin a high-precision value to its unique small rational.

    Requires err_bound * den_bound^2 < 1/4, which makes the continued
    fraction convergent unique.  The reconstruction is repeated from a
    copy rounded to half the working digits; any disagreement, or a
    residual above the error bound, is reported rather than guessed away.
    """
    if isinstance(value, HPReal):
        if err_bound is None:
            err_bound = value.err_bound
        value = value.value
    if err_bound is None:
        raise ValueError("rationalize needs an error bound")
    den_bound = int(den_bound)
    if den_bound < 1:
        raise ValueError("denominator bound must be positive")
    err = _mp_to_fraction(mp.mpf(err_bound))
    if err * den_bound * den_bound >= Fraction(1, 4):
        raise ValueError(
            "insufficient precision for this denominator bound; raise prec"
        )
    exact = _mp_to_fraction(value)
    full = exact.limit_denominator(den_bound)
    with mp.workdps(max(mp.dps // 2, 12)):
        half_val = +mp.mpf(value)
    half = _mp_to_fraction(half_val).limit_denominator(den_bound)
    if full != half:
        raise AmbiguousReconstructionError(
            "reconstruction differs between full and half precision"
        )
    if abs(exact - full) > err:
        raise AmbiguousReconstructionError(
            "no rational within the error bound at this denominator bound"
        )
    return full


def decompose(a, prec: int = 40) -> DecompositionReport:
    """Exact (Q, phat, p) for an admissible vector.

    Q comes from the closed double sum.  The weight-3 number is assembled
    from companion integrals through the descent identity, the weight-5
    period from the collapsed quadrature; all companion values share one
    vector quadrature pass, so the marginal cost of the descent is small.
    """
    a = ParamVec8.from_seq(a)
    if not convergence_check(a):
        raise ValueError("decompose needs an admissible vector")
    pq = a_to_pq(a)
    Q = Q_from_sum(pq)
    zc = zeta_constants(prec)
    bits = _bits_for(prec)
    rt = _reltol(bits)
    k1, k2 = _kernels_for(pq, bits)
    windows = _descent_windows(pq)
    comps = [_OuterComponent(pq.p3 + 1, pq.q3, True)]
    comps += [_OuterComponent(px, qx, False) for (_, _, px, qx) in windows]
    vals = _outer_sum(comps, k1, k2, bits, rt)
    with mp.workdps(prec + 25):
        slop = mp.mpf(2) ** (36 - bits)
        i_num = _to_mp(vals[0])
        i3_num = mp.mpf(0)
        i3_err = mp.mpf(0)
        for (_, coef, _, _), v in zip(windows, vals[1:]):
            jv = _to_mp(v)
            i3_num += coef * jv
            i3_err += abs(coef) * abs(jv) * slop
        i3_num /= 2
        i3_err /= 2
        i_err = abs(i_num) * slop
        phat_num = Q * zc.zeta3 - i3_num
        p_num = Q * zc.zeta5 - (i_num - 4 * i3_num * zc.zeta2) / 2
        phat_err = i3_err + abs(Q) * mp.mpf(10) ** (-(prec + 20))
        p_err = i_err / 2 + 2 * zc.zeta2 * i3_err \
            + abs(Q) * mp.mpf(10) ** (-(prec + 20))
        m = tuple(sorted(hyperplane_values(a).h, reverse=True)[:5])
        B = 2 * lcm_d(2 * m[0])
        for mi in m:
            B *= lcm_d(mi)
        phat = rationalize(phat_num, B, phat_err)
        p = rationalize(p_num, B, p_err)
        recon = Q * (2 * zc.zeta5 + 4 * zc.zeta3 * zc.zeta2) \
            - 4 * mp.mpf(phat.numerator) / phat.denominator * zc.zeta2 \
            - 2 * mp.mpf(p.numerator) / p.denominator
        residual = abs(i_num - recon)
        if residual > mp.mpf(10) ** (-(prec - 10)):
            raise AmbiguousReconstructionError(
                "reconstructed rationals do not reproduce the period"
            )
        i_num = +i_num
        i3_num = +i3_num
        residual = +residual
    return DecompositionReport(a=a, Q=Q, phat=phat, p=p, den_bound=B, m=m,
                               integral=i_num, weight3=i3_num,
                               residual=residual, precision=prec)


# ---------------------------------------------------------------------------
# the very-well-poised series


class DualParams(NamedTuple):
    b0: int
    b1: int
    b2: int
    b3: int
    b4: int
    b5: int
    b6: int
    b7: int

    def to_json(self) -> list:
        return list(self)


def dual_params(a) -> DualParams:
    """Series parameters dual to an admissible vector."""
    a = ParamVec8.from_seq(a)
    b = DualParams(
        b0=a.a2 + a.a3 + a.a4,
        b1=-a.a1 + a.a3 + a.a4,
        b2=a.a2,
        b3=a.a4,
        b4=a.a2 + a.a3 - a.a5,
        b5=a.a2 + a.a3 - a.a8,
        b6=a.a4 - a.a6 + a.a8,
        b7=a.a2 + a.a3 + a.a6 - a.a7 - a.a8,
    )
    if min(b) < 0:
        raise ValueError("dual parameters are not all non-negative")
    if any(b.b0 < 2 * bj for bj in b[1:]):
        raise ValueError("dual parameters violate the well-poised bound")
    return b


_F7_FACTOR_PAIRS = ((1, 6), (1, 7), (2, 7), (3, 5), (4, 5), (4, 6))


def eval_F7(b, prec: int = 40) -> HPReal:
    """Sum the very-well-poised series with parameters b = (b0, ..., b7).

    All terms are positive.  When the polynomial decay is steep the terms
    are summed directly with an exact running ratio; otherwise the tail
    falls off too slowly and the sum is delegated to mpmath's
    acceleration, cross-checked at two precisions.
    """
    b = tuple(int(t) for t in b)
    if len(b) != 8:
        raise ValueError("expected eight series parameters")
    if min(b) < 0:
        raise ValueError("series parameters must be non-negative")
    b0, rest = b[0], b[1:]
    for i, j in _F7_FACTOR_PAIRS:
        if b0 - b[i] - b[j] < 0:
            raise ValueError("series prefactor needs b0 >= b_i + b_j on six pairs")
    check = 6 * b0 - 2 * sum(rest) + 3
    if check <= 1:
        raise ValueError("series decay check failed; the sum diverges or is too slow")
    decay = check + 2
    pref = Fraction(1)
    for i, j in _F7_FACTOR_PAIRS:
        pref *= math.factorial(b0 - b[i] - b[j])
    pref /= math.factorial(b[2]) * math.factorial(b[3])
    with mp.workdps(prec + 25):
        if decay >= 12:
            t0 = Fraction((b0 + 2) * math.factorial(b0 + 1))
            for bj in rest:
                t0 *= math.factorial(bj)
            for bj in rest:
                t0 /= math.factorial(b0 - bj + 1)
            t = mp.mpf(t0.numerator) / mp.mpf(t0.denominator)
            total = t
            mu = 0
            floor = mp.mpf(10) ** (-(mp.dps + 5))
            while True:
                num = (b0 + 2 * mu + 4) * (b0 + mu + 2)
                den = (b0 + 2 * mu + 2) * (mu + 1)
                for bj in rest:
                    num *= bj + mu + 1
                    den *= b0 - bj + mu + 2
                t = t * num / den
                total += t
                mu += 1
                if num < den and t < total * floor:
                    tail = t * mp.mpf(num) / (den - num)
                    # three roundings per term plus the final tail guess
                    rounding = total * (3 * mu + 4) * mp.mpf(2) ** (2 - mp.prec)
                    err = tail + total * floor + rounding
                    break
                if mu > 10_000_000:
                    raise QuadratureError("series failed to settle")
            value = total
        else:
            def term(mu):
                lg = mp.loggamma(b0 + mu + 2) - mp.loggamma(mu + 1)
                for bj in rest:
                    lg += mp.loggamma(bj + mu + 1) - mp.loggamma(b0 - bj + mu + 2)
                return (b0 + 2 * mu + 2) * mp.exp(lg)

            value = mp.nsum(term, [0, mp.inf])
            with mp.workdps(prec + 40):
                check_val = mp.nsum(term, [0, mp.inf])
            err = abs(value - check_val) + abs(value) * mp.mpf(10) ** (-(prec + 5))
            value = check_val
        value = value * mp.mpf(pref.numerator) / mp.mpf(pref.denominator)
        err = err * mp.mpf(pref.numerator) / mp.mpf(pref.denominator)
        value = +value
        err = +err
    return HPReal(value=value, precision=prec, err_bound=err)
