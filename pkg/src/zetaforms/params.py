"""Parameter vectors, hyperplane forms, and coordinate changes.

The central objects are integer 8-vectors a = (a1, ..., a8) that label the
integrals this package studies.  Three coordinate systems are used:

* the 8-vector a itself;
* a 12-vector (p0..p6; q1..q5) of integrand exponents, related to a by an
  affine-free linear map (only 8 of the 12 are independent, the reduction
  relations are checked on the way back);
* a symmetric 8-tuple (s0, ..., s7) of half-integers in which the 28
  hyperplane forms become the pair sums s_i + s_j and differences s0 - s_i.

Everything here is exact integer arithmetic.  Half-integers are stored
doubled (field ``twoS``) so no Fractions are needed.
"""

from __future__ import annotations

from typing import NamedTuple

__all__ = [
    "ParamVec8",
    "ParamVec12",
    "HyperplaneValues",
    "SymParams",
    "FSET",
    "PAIR_FORM_INDICES",
    "DIFF_FORM_INDICES",
    "a_to_pq",
    "pq_to_a",
    "satisfies_reduction",
    "satisfies_balance",
    "satisfies_tail_split",
    "hyperplane_values",
    "form_coefficients",
    "form_name",
    "convergence_check",
    "first_violated_form",
    "to_symmetric",
    "from_symmetric",
    "h_matrix",
    "vertex_table",
]


class ParamVec8(NamedTuple):
    a1: int
    a2: int
    a3: int
    a4: int
    a5: int
    a6: int
    a7: int
    a8: int

    @classmethod
    def from_seq(cls, seq) -> "ParamVec8":
        vals = [int(x) for x in seq]
        if len(vals) != 8:
            raise ValueError("expected 8 integers, got %d" % len(vals))
        return cls(*vals)

    def to_json(self) -> list[int]:
        return list(self)


class ParamVec12(NamedTuple):
    p0: int
    p1: int
    p2: int
    p3: int
    p4: int
    p5: int
    p6: int
    q1: int
    q2: int
    q3: int
    q4: int
    q5: int

    @classmethod
    def from_seq(cls, seq) -> "ParamVec12":
        vals = [int(x) for x in seq]
        if len(vals) != 12:
            raise ValueError("expected 12 integers, got %d" % len(vals))
        return cls(*vals)

    def to_json(self) -> list[int]:
        return list(self)


# The 28 hyperplane forms as coefficient rows against (a1, ..., a8).
# Index i of this tuple holds the form numbered i+1 everywhere in the API;
# the classical ordering of the forms is kept as-is.
_FORMS: tuple[tuple[int, ...], ...] = (
    (1, 0, 0, 0, 0, 0, 0, 0),        # 1: a1
    (0, 1, 0, 0, 0, 0, 0, 0),        # 2: a2
    (0, 0, 1, 0, 0, 0, 0, 0),        # 3: a3
    (0, 0, 0, 1, 0, 0, 0, 0),        # 4: a4
    (0, 0, 0, 0, 1, 0, 0, 0),        # 5: a5
    (0, 0, 0, 0, 0, 1, 0, 0),        # 6: a6
    (0, 0, 0, 0, 0, 0, 1, 0),        # 7: a7
    (0, 0, 0, 0, 0, 0, 0, 1),        # 8: a8
    (1, 1, 0, -1, 0, 0, 0, 0),       # 9: a1+a2-a4
    (1, 0, -1, 0, 1, 0, 0, 0),       # 10: a1+a5-a3
    (1, 0, -1, 0, 0, 0, 0, 1),       # 11: a1+a8-a3
    (0, 1, 1, 0, -1, 0, 0, 0),       # 12: a2+a3-a5
    (0, 1, 1, 0, 0, 0, 0, -1),       # 13: a2+a3-a8
    (0, 0, 1, 0, 0, 1, 0, -1),       # 14: a3+a6-a8
    (-1, 0, 1, 1, 0, 0, 0, 0),       # 15: a3+a4-a1
    (0, -1, 0, 1, 1, 0, 0, 0),       # 16: a4+a5-a2
    (0, 0, 0, 1, 0, -1, 0, 1),       # 17: a4+a8-a6
    (0, -1, 0, 1, 0, 0, 0, 1),       # 18: a4+a8-a2
    (0, 0, 0, 0, 1, 1, 0, -1),       # 19: a5+a6-a8
    (0, 0, 0, 0, 0, -1, 1, 1),       # 20: a7+a8-a6
    (1, 1, 0, -1, 0, 1, 0, -1),      # 21: a1+a2+a6-a4-a8
    (1, 0, -1, 0, 0, -1, 1, 1),      # 22: a1+a7+a8-a3-a6
    (0, 1, 1, -1, 0, 1, 0, -1),      # 23: a2+a3+a6-a4-a8
    (0, 1, 1, 0, 0, 1, -1, -1),      # 24: a2+a3+a6-a7-a8
    (0, -1, -1, 1, 1, 0, 0, 1),      # 25: a4+a5+a8-a2-a3
    (0, -1, 0, 1, 0, -1, 1, 1),      # 26: a4+a7+a8-a2-a6
    (0, -1, -1, 1, 0, -1, 1, 2),     # 27: a4+a7+2a8-a2-a3-a6
    (0, -1, -1, 1, 1, -1, 1, 1),     # 28: a4+a5+a7+a8-a2-a3-a6
)

# The 29th (exceptional) form.  It never enters convergence conditions but
# is permuted together with the 28 above by the extended symmetry group.
EXCEPTIONAL_FORM: tuple[int, ...] = (1, -1, -1, 0, 1, 0, 1, 1)  # a1+a5+a7+a8-a2-a3

# Convergence-relevant subset (1-based form numbers).
FSET: frozenset[int] = frozenset(
    {1, 2, 3, 4, 5, 6, 7, 9, 10, 11, 14, 16, 18, 20, 23, 27, 28}
)

# Split of the 28 forms into 21 pair forms (s_i + s_j) and 7 difference
# forms (s0 - s_i) in symmetric coordinates.
PAIR_FORM_INDICES: tuple[int, ...] = (
    1, 3, 5, 6, 7, 8, 9, 10, 11, 14, 16, 18, 19, 20, 21, 22, 23, 25, 26, 27, 28,
)
DIFF_FORM_INDICES: tuple[int, ...] = (2, 4, 12, 13, 15, 17, 24)


class HyperplaneValues(NamedTuple):
    """Values of the 28 forms plus the exceptional one at some vector a."""

    h: tuple[int, ...]          # h[i] is the value of form i+1
    exceptional: int

    def value(self, index: int) -> int:
        """Value of form ``index`` (1-based, 1..28)."""
        return self.h[index - 1]

    def fset_values(self) -> tuple[int, ...]:
        return tuple(self.h[i - 1] for i in sorted(FSET))

    def to_json(self) -> dict:
        return {"h": list(self.h), "exceptional": self.exceptional}


class SymParams(NamedTuple):
    """Symmetric coordinates, stored doubled: twoS[i] == 2*s_i."""

    twoS: tuple[int, ...]


def _dot(row, a):
    return sum(c * x for c, x in zip(row, a))


def form_coefficients(index: int) -> tuple[int, ...]:
    """Coefficient row of form ``index`` (1-based; 29 gives the exceptional)."""
    if index == 29:
        return EXCEPTIONAL_FORM
    return _FORMS[index - 1]


def form_name(index: int) -> str:
    """Human-readable rendering such as 'a4+a7+2a8-a2-a3-a6'."""
    coeffs = form_coefficients(index)
    pos, neg = [], []
    for i, c in enumerate(coeffs, start=1):
        if c > 0:
            pos.append(("" if c == 1 else str(c)) + "a%d" % i)
        elif c < 0:
            neg.append(("" if c == -1 else str(-c)) + "a%d" % i)
    return "+".join(pos) + "".join("-" + t for t in neg)


def hyperplane_values(a: ParamVec8) -> HyperplaneValues:
    """Evaluate all 28 forms and the exceptional one at ``a``."""
    a = ParamVec8.from_seq(a)
    return HyperplaneValues(
        h=tuple(_dot(row, a) for row in _FORMS),
        exceptional=_dot(EXCEPTIONAL_FORM, a),
    )


def convergence_check(a: ParamVec8) -> bool:
    """True iff every convergence-relevant form is non-negative at ``a``."""
    hv = hyperplane_values(a)
    return all(hv.h[i - 1] >= 0 for i in FSET)


def first_violated_form(a: ParamVec8):
    """(index, name, value) of the first violated form, or None if admissible.

    Forms are scanned in increasing index order so the report is stable.
    """
    hv = hyperplane_values(a)
    for i in sorted(FSET):
        if hv.h[i - 1] < 0:
            return i, form_name(i), hv.h[i - 1]
    return None


def a_to_pq(a: ParamVec8) -> ParamVec12:
    """Exponent 12-vector of the integral labelled by ``a``."""
    a1, a2, a3, a4, a5, a6, a7, a8 = ParamVec8.from_seq(a)
    return ParamVec12(
        p0=a5 + a6 - a8,
        p1=a2 + a3 + a6 - a4 - a8,
        p2=a6,
        p3=a2 + a3 + a6 - a8,
        p4=a7,
        p5=a3 + a6 - a8,
        p6=a1 + a2 + a6 - a4 - a8,
        q1=a4,
        q2=a5,
        q3=a1 + a5 - a3,
        q4=a1,
        q5=a2,
    )


def satisfies_reduction(pq: ParamVec12) -> bool:
    """The four relations that cut the 12 exponents down to 8 parameters."""
    v = ParamVec12.from_seq(pq)
    return (
        v.p1 == v.p0 + v.q4 + v.q5 - v.q1 - v.q3
        and v.p3 == v.p0 + v.q4 + v.q5 - v.q3
        and v.p5 == v.p0 + v.q4 - v.q3
        and v.p6 == v.p0 + v.q4 + v.q5 - v.q1 - v.q2
    )


def satisfies_balance(pq: ParamVec12) -> bool:
    """Two-sided balance needed by the exact double-sum coefficient."""
    v = ParamVec12.from_seq(pq)
    return v.p3 + v.q3 == v.p0 + v.q4 + v.q5 and v.p3 + v.q3 == v.p6 + v.q1 + v.q2


def satisfies_tail_split(pq: ParamVec12) -> bool:
    """p3 = p1+q1 = p5+q5, used by the degree drop in the growth analysis."""
    v = ParamVec12.from_seq(pq)
    return v.p3 == v.p1 + v.q1 and v.p3 == v.p5 + v.q5


def pq_to_a(pq: ParamVec12) -> ParamVec8:
    """Inverse of :func:`a_to_pq`; raises if the reduction relations fail."""
    v = ParamVec12.from_seq(pq)
    if not satisfies_reduction(v):
        raise ValueError("exponent vector does not satisfy the reduction relations")
    return ParamVec8(
        a1=v.q4,
        a2=v.q5,
        a3=v.q2 + v.q4 - v.q3,
        a4=v.q1,
        a5=v.q2,
        a6=v.p2,
        a7=v.p4,
        a8=v.p2 + v.q2 - v.p0,
    )


# Symmetric coordinates.  to_symmetric always lands on eight doubled values
# of equal parity; from_symmetric demands that parity condition.

def to_symmetric(a: ParamVec8) -> SymParams:
    a1, a2, a3, a4, a5, a6, a7, a8 = ParamVec8.from_seq(a)
    t = (
        a2 + a3 + a4,
        2 * a1 + a2 - a3 - a4,
        -a2 + a3 + a4,
        a2 + a3 - a4,
        2 * a5 + a4 - a2 - a3,
        2 * a8 + a4 - a2 - a3,
        2 * a6 - 2 * a8 + a2 + a3 - a4,
        2 * a7 + 2 * a8 - 2 * a6 + a4 - a2 - a3,
    )
    return SymParams(twoS=t)


def from_symmetric(s: SymParams) -> ParamVec8:
    t = tuple(int(x) for x in (s.twoS if isinstance(s, SymParams) else s))
    if len(t) != 8:
        raise ValueError("expected 8 doubled symmetric values")
    parities = {x & 1 for x in t}
    if len(parities) != 1:
        raise ValueError("doubled symmetric values must share one parity")
    pairs = (
        (t[1] + t[2]),  # a1
        (t[0] - t[2]),  # a2
        (t[2] + t[3]),  # a3
        (t[0] - t[3]),  # a4
        (t[3] + t[4]),  # a5
        (t[5] + t[6]),  # a6
        (t[6] + t[7]),  # a7
        (t[3] + t[5]),  # a8
    )
    if any(x & 1 for x in pairs):
        raise ValueError("symmetric values do not give an integral vector")
    return ParamVec8(*(x // 2 for x in pairs))


def h_matrix(s: SymParams) -> tuple[tuple[int, ...], ...]:
    """7x7 symmetric matrix: diagonal s0-s_i, off-diagonal s_i+s_j (i,j >= 1).

    Entries are plain integers; they are exactly the 28 hyperplane values
    arranged by the vertex table, so integrality is automatic for any
    symmetric vector coming from an integer a.
    """
    t = s.twoS if isinstance(s, SymParams) else tuple(s)
    rows = []
    for i in range(1, 8):
        row = []
        for j in range(1, 8):
            num = (t[0] - t[i]) if i == j else (t[i] + t[j])
            if num & 1:
                raise ValueError("matrix entry is not an integer")
            row.append(num // 2)
        rows.append(tuple(row))
    return tuple(rows)


def vertex_table() -> dict[int, tuple[int, int]]:
    """Form number (1..28) -> 2-subset {i,j} of {0..7} it corresponds to.

    A pair containing 0 means the form equals s0 - s_i; any other pair
    means s_i + s_j.  The correspondence is verified symbolically by the
    graph module.
    """
    return dict(_VERTEX_TABLE)


_VERTEX_TABLE: tuple[tuple[int, tuple[int, int]], ...] = (
    (15, (0, 1)), (2, (0, 2)), (4, (0, 3)), (12, (0, 4)), (13, (0, 5)),
    (17, (0, 6)), (24, (0, 7)),
    (1, (1, 2)), (9, (1, 3)), (10, (1, 4)), (11, (1, 5)), (21, (1, 6)),
    (22, (1, 7)),
    (3, (2, 3)), (16, (2, 4)), (18, (2, 5)), (14, (2, 6)), (26, (2, 7)),
    (5, (3, 4)), (8, (3, 5)), (23, (3, 6)), (20, (3, 7)),
    (25, (4, 5)), (19, (4, 6)), (28, (4, 7)),
    (6, (5, 6)), (27, (5, 7)),
    (7, (6, 7)),
)


# The admissibility conditions are usually quoted as a bare list of 17
# linear forms.  We rely instead on the subset FSET of the 28 numbered
# forms; the two descriptions must coincide as sets, and that is cheap
# enough to assert at import time rather than assume.
_ADMISSIBILITY_FORMS: tuple[tuple[int, ...], ...] = (
    (1, 0, 0, 0, 0, 0, 0, 0),
    (0, 1, 0, 0, 0, 0, 0, 0),
    (0, 0, 1, 0, 0, 0, 0, 0),
    (0, 0, 0, 1, 0, 0, 0, 0),
    (0, 0, 0, 0, 1, 0, 0, 0),
    (0, 0, 0, 0, 0, 1, 0, 0),
    (0, 0, 0, 0, 0, 0, 1, 0),
    (1, 0, -1, 0, 1, 0, 0, 0),       # a1+a5-a3
    (0, 0, 1, 0, 0, 1, 0, -1),       # a3+a6-a8
    (0, -1, -1, 1, 1, -1, 1, 1),     # a4+a5+a7+a8-a2-a3-a6
    (0, 0, 0, 0, 0, -1, 1, 1),       # a7+a8-a6
    (0, -1, 0, 1, 0, 0, 0, 1),       # a4+a8-a2
    (0, 1, 1, -1, 0, 1, 0, -1),      # a2+a3+a6-a4-a8
    (1, 0, -1, 0, 0, 0, 0, 1),       # a1+a8-a3
    (1, 1, 0, -1, 0, 0, 0, 0),       # a1+a2-a4
    (0, -1, 0, 1, 1, 0, 0, 0),       # a4+a5-a2
    (0, -1, -1, 1, 0, -1, 1, 2),     # a4+a7+2a8-a2-a3-a6
)


def _startup_self_test():
    fset_rows = {_FORMS[i - 1] for i in FSET}
    listed = set(_ADMISSIBILITY_FORMS)
    if fset_rows != listed:
        raise AssertionError(
            "admissibility forms and the marked subset of the 28 forms disagree"
        )
    if len(FSET) != 17 or len(_FORMS) != 28:
        raise AssertionError("form bookkeeping is broken")
    pair = set(PAIR_FORM_INDICES)
    diff = set(DIFF_FORM_INDICES)
    if pair | diff != set(range(1, 29)) or pair & diff:
        raise AssertionError("pair/difference split must partition the 28 forms")
    if len(FSET & pair) != 15 or len(FSET & diff) != 2:
        raise AssertionError("unexpected split of the convergence subset")
    table = dict(_VERTEX_TABLE)
    if sorted(table) != list(range(1, 29)):
        raise AssertionError("vertex table must cover forms 1..28")
    subsets = set(table.values())
    if len(subsets) != 28 or any(i >= j for i, j in subsets):
        raise AssertionError("vertex table must hit 28 distinct ordered pairs")
    for idx, pair_ij in table.items():
        if (0 in pair_ij) != (idx in DIFF_FORM_INDICES):
            raise AssertionError("vertex table disagrees with the pair/diff split")


_startup_self_test()
