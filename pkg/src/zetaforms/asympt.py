"""Growth rates, the valuation step function, and worthiness.

The n-th member of the family labelled by a grows geometrically; the three
growth rates are recovered from critical points of a pencil of two
bivariate quartics built out of the exponent 12-vector.  Eliminating one
variable leaves (after dividing out two forced linear factors) a cubic
whose roots feed a closed product formula for the rates.

The denominator side is a step function of a fractional part; its mean
against the logarithmic prime density is a finite digamma sum.  Combining
the two sides gives the worthiness score gamma.
"""

from __future__ import annotations

import logging
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, mpf, mpc

from . import group
from .analytic import HPReal
from .params import (
    DIFF_FORM_INDICES,
    PAIR_FORM_INDICES,
    ParamVec8,
    ParamVec12,
    a_to_pq,
    convergence_check,
    hyperplane_values,
)

__all__ = [
    "BivariatePoly",
    "StepFunction",
    "WorthinessReport",
    "DegenerateGrowthError",
    "build_F1F2",
    "eliminate_y",
    "cubic_from_vector",
    "lambda_values",
    "phi_step",
    "phi_limit",
    "worthiness",
]

log = logging.getLogger(__name__)


class DegenerateGrowthError(ArithmeticError):
    """The critical-point data does not determine three separated rates."""


class BivariatePoly:
    """Sparse integer polynomial in x and y: {(deg_x, deg_y): coeff}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        if coeffs:
            for k, c in dict(coeffs).items():
                if c:
                    self.coeffs[(int(k[0]), int(k[1]))] = int(c)

    @classmethod
    def build(cls, const=0, x=0, y=0):
        """Linear polynomial const + x*X + y*Y."""
        return cls({(0, 0): const, (1, 0): x, (0, 1): y})

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return BivariatePoly(out)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) - c
        return BivariatePoly(out)

    def __mul__(self, other):
        out = {}
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in other.coeffs.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return BivariatePoly(out)

    def degree_x(self) -> int:
        return max((i for i, _ in self.coeffs), default=-1)

    def degree_y(self) -> int:
        return max((j for _, j in self.coeffs), default=-1)

    def y_coefficient(self, j: int) -> dict[int, int]:
        """The coefficient of y^j, as a univariate {deg_x: coeff} map."""
        return {i: c for (i, jj), c in self.coeffs.items() if jj == j}

    def __eq__(self, other):
        return isinstance(other, BivariatePoly) and self.coeffs == other.coeffs

    def __repr__(self):
        return "BivariatePoly(%r)" % (self.coeffs,)


def _prod(factors):
    out = BivariatePoly({(0, 0): 1})
    for f in factors:
        out = out * f
    return out


def build_F1F2(pq: ParamVec12) -> tuple[BivariatePoly, BivariatePoly]:
    """The two critical-point polynomials of the exponent vector.

    The first is linear in y, the second linear in x; both are asserted.
    """
    v = ParamVec12.from_seq(pq)
    X = BivariatePoly.build(x=1)
    Y = BivariatePoly.build(y=1)
    lin = BivariatePoly.build

    f1 = _prod([
        X,
        lin(const=v.p1 + v.q1, x=-1),
        lin(const=v.p2 + v.q2, x=-1),
        lin(const=v.q3 - v.p0 - v.p6, x=1, y=1),
    ]) - _prod([
        lin(const=-v.p0, x=1),
        lin(const=-v.p1, x=1),
        lin(const=-v.p2, x=1),
        lin(const=-v.p3, x=1, y=1),
    ])
    f2 = _prod([
        lin(const=v.q3 - v.p0 - v.p6, x=1, y=1),
        lin(const=v.p4 + v.q4, y=-1),
        lin(const=v.p5 + v.q5, y=-1),
        Y,
    ]) - _prod([
        lin(const=-v.p3, x=1, y=1),
        lin(const=-v.p4, y=1),
        lin(const=-v.p5, y=1),
        lin(const=-v.p6, y=1),
    ])
    if f1.degree_y() != 1:
        raise DegenerateGrowthError("first polynomial is not linear in y")
    if f2.degree_x() != 1:
        raise DegenerateGrowthError("second polynomial is not linear in x")
    return f1, f2


def _uni_mul(p: dict[int, int], q: dict[int, int]) -> dict[int, int]:
    out = {}
    for i, a in p.items():
        for j, b in q.items():
            out[i + j] = out.get(i + j, 0) + a * b
    return {k: c for k, c in out.items() if c}


def _uni_add(p, q):
    out = dict(p)
    for k, c in q.items():
        out[k] = out.get(k, 0) + c
    return {k: c for k, c in out.items() if c}


def _uni_scale(p, s):
    return {k: c * s for k, c in p.items() if c * s}


def eliminate_y(F1: BivariatePoly, F2: BivariatePoly) -> list[int]:
    """Resultant in y of (F1, F2) with F1 linear in y, as x-coefficients.

    Substitutes y = -beta/alpha into F2 and clears denominators with the
    exact power alpha^{deg_y F2}, so no spurious factor is introduced; the
    result is returned dense, constant term first.
    """
    if F1.degree_y() != 1:
        raise DegenerateGrowthError("elimination needs a pencil linear in y")
    alpha = F1.y_coefficient(1)
    beta = F1.y_coefficient(0)
    if not alpha:
        raise DegenerateGrowthError("vanishing y-coefficient: degenerate pencil")
    d = F2.degree_y()
    neg_beta = _uni_scale(beta, -1)
    # Horner in y with y = -beta/alpha, multiplying through by alpha at each
    # stage, so coefficient c_j ends up against alpha^(d-j).
    acc = F2.y_coefficient(d)
    apow = {0: 1}
    for j in range(d - 1, -1, -1):
        apow = _uni_mul(apow, alpha)
        acc = _uni_add(_uni_mul(acc, neg_beta),
                       _uni_mul(F2.y_coefficient(j), apow))
    deg = max(acc, default=0)
    return [acc.get(i, 0) for i in range(deg + 1)]


def _divide_linear_factors(coeffs: list[int], p3: int) -> list[int]:
    # Exact division by x * (p3 - x); remainders must vanish.
    if coeffs and coeffs[0] != 0:
        raise DegenerateGrowthError("expected a root at x = 0")
    c = coeffs[1:]
    # divide by (p3 - x) = -(x - p3): synthetic division by (x - p3), negate.
    out = [0] * (len(c) - 1)
    rem = 0
    for i in range(len(c) - 1, -1, -1):
        cur = c[i] + rem
        if i == 0:
            if cur != 0:
                raise DegenerateGrowthError("expected a root at x = p3")
            break
        out[i - 1] = cur
        rem = cur * p3
    return [-v for v in out]


def cubic_from_vector(a) -> list[int]:
    """Integer coefficients (constant first) of the growth cubic of ``a``."""
    pq = a_to_pq(ParamVec8.from_seq(a))
    f1, f2 = build_F1F2(pq)
    elim = eliminate_y(f1, f2)
    cubic = _divide_linear_factors(elim, pq.p3)
    while cubic and cubic[-1] == 0:
        cubic.pop()
    if len(cubic) != 4:
        raise DegenerateGrowthError(
            "eliminant does not leave a cubic (degree %d)" % (len(cubic) - 1)
        )
    return cubic


def _poly_eval(coeffs, x):
    acc = mpf(0) if not isinstance(x, mpc) else mpc(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _log_abs_power(base, e: int):
    # e * log|base| with the 0^0 = 1 convention.
    if e == 0:
        return mpf(0)
    mag = abs(base)
    if mag == 0:
        raise DegenerateGrowthError("zero factor with non-zero exponent")
    return e * mp.log(mag)


def _growth_log(v: ParamVec12, x0, y0):
    total = mpf(0)
    for base, e in (
        (x0 - v.p0, v.p0),
        (x0 - v.p1, v.p1),
        (x0 - v.p2, v.p2),
        (x0 + y0 - v.p3, v.p3),
        (v.p1 + v.q1 - x0, -(v.p1 + v.q1)),
        (v.p2 + v.q2 - x0, -(v.p2 + v.q2)),
        (x0 + y0 + v.q3 - v.p0 - v.p6, -(v.p0 + v.p6 - v.q3)),
        (y0 - v.p4, v.p4),
        (y0 - v.p5, v.p5),
        (y0 - v.p6, v.p6),
        (v.p4 + v.q4 - y0, -(v.p4 + v.q4)),
        (v.p5 + v.q5 - y0, -(v.p5 + v.q5)),
    ):
        total += _log_abs_power(base, e)
    mid = v.p3 + v.q3 - v.p0 - v.p6
    if mid < 0:
        raise DegenerateGrowthError("product formula needs p3+q3 >= p0+p6")
    for base, e in (
        (v.q1, v.q1), (v.q2, v.q2), (v.q4, v.q4), (v.q5, v.q5),
        (v.p0, -v.p0), (mid, -mid), (v.p6, -v.p6),
    ):
        if base:
            total += e * mp.log(mpf(base))
    return total


@dataclass
class GrowthRates:
    """Moduli (ascending) and natural logs of the three growth rates."""

    moduli: tuple
    logs: tuple
    roots: tuple
    complex_pair: bool = False

    def to_json(self) -> dict:
        return {
            "moduli": [mp.nstr(x, 12) for x in self.moduli],
            "logs": [mp.nstr(x, 12) for x in self.logs],
            "complexPair": self.complex_pair,
        }


def lambda_values(a, prec: int = 40) -> GrowthRates:
    """The three growth rates of the family labelled by ``a``.

    Roots of the growth cubic are found at working precision and polished
    with Newton steps against the exact integer coefficients; each root is
    pushed through the closed product formula.  A modulus tie between the
    two largest rates is an error; a conjugate pair among the smaller ones
    is only a warning (their common modulus is still meaningful).
    """
    a = ParamVec8.from_seq(a)
    pq = a_to_pq(a)
    cubic = cubic_from_vector(a)
    f1, _ = build_F1F2(pq)
    alpha = f1.y_coefficient(1)
    beta = f1.y_coefficient(0)
    alpha_c = [alpha.get(i, 0) for i in range(max(alpha, default=0) + 1)]
    beta_c = [beta.get(i, 0) for i in range(max(beta, default=0) + 1)]
    deriv = [i * c for i, c in enumerate(cubic)][1:]
    with mp.workdps(prec + 20):
        coeffs = [mpf(c) for c in reversed(cubic)]
        try:
            roots = mp.polyroots(coeffs, maxsteps=200, extraprec=60)
        except mp.NoConvergence:
            try:
                roots = mp.polyroots(coeffs, maxsteps=1000, extraprec=200)
            except mp.NoConvergence:
                raise DegenerateGrowthError(
                    "growth cubic root finding did not converge") from None
        polished = []
        for r in roots:
            x0 = mpc(r) if isinstance(r, mpc) or abs(mp.im(r)) > 0 else mpf(mp.re(r))
            for _ in range(6):
                fv = _poly_eval(cubic, x0)
                dv = _poly_eval(deriv, x0)
                if dv == 0:
                    raise DegenerateGrowthError("multiple root in the growth cubic")
                x0 = x0 - fv / dv
            if isinstance(x0, mpc) and abs(mp.im(x0)) < mpf(10) ** (-(prec + 5)):
                x0 = mp.re(x0)
            polished.append(x0)
        rates = []
        complex_pair = False
        for x0 in polished:
            if isinstance(x0, mpc):
                complex_pair = True
            av = _poly_eval(alpha_c, x0)
            if av == 0:
                raise DegenerateGrowthError("critical point with vanishing pencil")
            y0 = -_poly_eval(beta_c, x0) / av
            lg = _growth_log(pq, x0, y0)
            rates.append((mp.e**lg, lg, x0))
        rates.sort(key=lambda t: t[1])
        moduli = tuple(r[0] for r in rates)
        logs = tuple(r[1] for r in rates)
        roots_out = tuple(r[2] for r in rates)
        if abs(logs[2] - logs[1]) < mpf(10) ** (-8):
            raise DegenerateGrowthError("modulus tie between the two largest rates")
        if complex_pair:
            log.warning("conjugate critical points: two rates share a modulus")
    return GrowthRates(moduli=moduli, logs=logs, roots=roots_out,
                       complex_pair=complex_pair)


@dataclass
class StepFunction:
    """Right-continuous integer step function on [0, 1), zero before the
    first breakpoint."""

    breakpoints: tuple
    values: tuple

    def value_at(self, y) -> int:
        y = Fraction(y)
        if not 0 <= y < 1:
            raise ValueError("argument must lie in [0, 1)")
        k = bisect_right(self.breakpoints, y)
        return 0 if k == 0 else self.values[k - 1]

    def intervals(self):
        """Yield (alpha, beta, value) over [0, 1), including the leading zero
        piece and the final piece ending at 1."""
        pts = (Fraction(0),) + tuple(self.breakpoints) + (Fraction(1),)
        vals = (0,) + tuple(self.values)
        for i, v in enumerate(vals):
            if pts[i] != pts[i + 1]:
                yield pts[i], pts[i + 1], v

    def to_json(self) -> dict:
        return {
            "breakpoints": ["%d/%d" % (b.numerator, b.denominator) for b in self.breakpoints],
            "values": list(self.values),
        }


def phi_step(a) -> StepFunction:
    """The valuation-drop step function of ``a``.

    At y the value is the largest, over the group, of the difference
    between sum(floor(h_i(a) y)) and sum(floor(h_i(g a) y)) over the
    convergence subset.  Evaluation is exact rational arithmetic; the
    orbit-invariance of the subset sum (which makes the function vanish
    near 0 and 1) is asserted upstream.
    """
    a = ParamVec8.from_seq(a)
    base, profiles = group.fset_profiles(a)
    values = sorted({v for p in profiles for v in p} | set(base))
    breaks = sorted({Fraction(j, v) for v in values if v > 0 for j in range(1, v)})
    base_sorted = tuple(base)
    out_vals = []
    for b in breaks:
        num, den = b.numerator, b.denominator
        floors = {v: v * num // den for v in values}
        base_total = sum(floors[v] for v in base_sorted)
        best = min(sum(floors[v] for v in p) for p in profiles)
        out_vals.append(base_total - best)
    sf = StepFunction(breakpoints=tuple(breaks), values=tuple(out_vals))
    if out_vals and out_vals[-1] != 0:
        raise AssertionError("step function must vanish as y -> 1")
    if any(v < 0 for v in out_vals):
        raise AssertionError("step function went negative")
    return sf


def phi_limit(a, prec: int = 40) -> HPReal:
    """Limit of log(gain)/n: the step function summed against digamma
    differences over its constancy intervals."""
    sf = phi_step(a)
    with mp.workdps(prec + 10):
        total = mpf(0)
        for alpha, beta, v in sf.intervals():
            if v == 0:
                continue
            total += v * (
                mp.digamma(mpf(beta.numerator) / beta.denominator)
                - mp.digamma(mpf(alpha.numerator) / alpha.denominator)
            )
        total = +total
    return HPReal(value=total, precision=prec, err_bound=mpf(10) ** (-prec))


@dataclass
class WorthinessReport:
    a: ParamVec8
    rates: GrowthRates
    m: tuple
    phi_lim: object
    C0: object
    C1: object
    C2: object
    gamma: object
    refined_l: int | None = None
    healthy: bool = True  # |lambda2| < 1 < |lambda3|

    def to_json(self) -> dict:
        return {
            "a": list(self.a),
            "m": list(self.m),
            "phiLimit": mp.nstr(self.phi_lim, 12),
            "C0": mp.nstr(self.C0, 12),
            "C1": mp.nstr(self.C1, 12),
            "C2": mp.nstr(self.C2, 12),
            "gamma": mp.nstr(self.gamma, 12),
            "logs": [mp.nstr(x, 12) for x in self.rates.logs],
            "refinedM": self.refined_l,
            "healthy": self.healthy,
        }


def _m_multiset(a: ParamVec8, refined_l: int | None) -> tuple[int, ...]:
    hv = hyperplane_values(a)
    if refined_l is None:
        return tuple(sorted(hv.h, reverse=True)[:5])
    if not 0 <= refined_l <= 5:
        raise ValueError("refined split must take between 0 and 5 values")
    pair = sorted((hv.h[i - 1] for i in PAIR_FORM_INDICES), reverse=True)
    diff = sorted((hv.h[i - 1] for i in DIFF_FORM_INDICES), reverse=True)
    return tuple(sorted(pair[:refined_l] + diff[: 5 - refined_l], reverse=True))


def worthiness(a, prec: int = 40, refined_l: int | None = None) -> WorthinessReport:
    """Score gamma = (C1 - C0) / (C1 + C2) for an admissible vector.

    C1 and C0 are the logs of the largest and middle growth rates, C2 is
    the denominator cost: the sum of the five largest hyperplane values
    minus the valuation-gain limit.  The useful range is gamma in (0, 1);
    larger is better.
    """
    a = ParamVec8.from_seq(a)
    if not convergence_check(a):
        raise ValueError("worthiness needs an admissible vector")
    rates = lambda_values(a, prec=prec)
    m = _m_multiset(a, refined_l)
    lim = phi_limit(a, prec=prec)
    with mp.workdps(prec + 10):
        c0 = +rates.logs[1]
        c1 = +rates.logs[2]
        c2 = mpf(sum(m)) - lim.value
        gamma = (c1 - c0) / (c1 + c2)
        healthy = bool(rates.logs[1] < 0 < rates.logs[2])
        if not healthy:
            log.warning("rate ordering is unhealthy: logs %s", rates.logs)
    return WorthinessReport(a=a, rates=rates, m=m, phi_lim=lim.value,
                            C0=c0, C1=c1, C2=c2, gamma=gamma,
                            refined_l=refined_l, healthy=healthy)
