"""The finite symmetry group acting on parameter vectors.

Five involutions, given as 8x8 integer matrices acting on a, generate a
group of order 5040 that permutes the 28 hyperplane forms and preserves
the quantities attached to the integrals (after dividing by the factorial
product over the convergence subset).  Together with one extra
non-positive automorphism the action on the forms extends to a group of
order 40320.

Elements are canonicalized by their matrix.  The permutation picture
(the group is symmetric-group-on-7-letters in disguise) is recovered on
demand by conjugating into symmetric coordinates.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .params import (
    FSET,
    ParamVec8,
    form_coefficients,
    from_symmetric,
    hyperplane_values,
    to_symmetric,
)

__all__ = [
    "GroupElement",
    "Orbit",
    "generators",
    "extra_automorphism",
    "identity",
    "full_group",
    "group_order",
    "orbit",
    "factorial_ratio",
    "perm_rep",
    "form_permutation",
    "extended_group_order",
    "fset_profiles",
    "is_positive",
]


class GroupElement:
    """An 8x8 integer matrix acting on parameter vectors by a -> M a."""

    __slots__ = ("matrix", "_perm")

    def __init__(self, matrix):
        self.matrix = tuple(tuple(int(x) for x in row) for row in matrix)
        if len(self.matrix) != 8 or any(len(r) != 8 for r in self.matrix):
            raise ValueError("expected an 8x8 matrix")
        self._perm = None

    def apply(self, a) -> ParamVec8:
        a = ParamVec8.from_seq(a)
        return ParamVec8(*(sum(c * x for c, x in zip(row, a)) for row in self.matrix))

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        # (self * other) acts as first other, then self.
        m, n = self.matrix, other.matrix
        cols = tuple(zip(*n))
        return GroupElement(
            tuple(
                tuple(sum(x * y for x, y in zip(row, col)) for col in cols)
                for row in m
            )
        )

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return "GroupElement(%r)" % (self.matrix,)

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.matrix]


_ID_ROWS = tuple(tuple(1 if i == j else 0 for j in range(8)) for i in range(8))

# The five generating involutions, written as their action rows on
# (a1, ..., a8).  Each is verified to square to the identity in the tests.
_GEN_ROWS = (
    # reverses the exponent 12-vector end to end
    (
        (0, 0, 0, 0, 1, 0, 0, 0),
        (0, 0, 0, 1, 0, 0, 0, 0),
        (0, 0, 1, 0, 0, 0, 0, 0),
        (0, 1, 0, 0, 0, 0, 0, 0),
        (1, 0, 0, 0, 0, 0, 0, 0),
        (0, 0, 0, 0, 0, 0, 1, 0),
        (0, 0, 0, 0, 0, 1, 0, 0),
        (0, -1, 0, 1, 0, -1, 1, 1),
    ),
    # swaps the first denominator exponent with its neighbouring numerator pair
    (
        (1, 0, 0, 0, 0, 0, 0, 0),
        (0, 1, 0, 0, 0, 0, 0, 0),
        (0, -1, 0, 1, 1, 0, 0, 0),
        (0, 1, 1, 0, -1, 0, 0, 0),
        (0, 0, 0, 0, 1, 0, 0, 0),
        (0, 0, 0, 0, 0, 1, 0, 0),
        (0, 0, 0, 0, 0, 0, 1, 0),
        (0, -1, -1, 1, 1, 0, 0, 1),
    ),
    # swaps the two inner numerator exponents
    (
        (1, 0, 0, 0, 0, 0, 0, 0),
        (0, 1, 0, 0, 0, 0, 0, 0),
        (0, -1, 0, 1, 0, 0, 0, 1),
        (0, 1, 1, 0, 0, 0, 0, -1),
        (0, -1, -1, 1, 1, 0, 0, 1),
        (0, 1, 1, -1, 0, 1, 0, -1),
        (0, 0, 0, 0, 0, 0, 1, 0),
        (0, 0, 0, 0, 0, 0, 0, 1),
    ),
    # two-term hypergeometric-style transform
    (
        (1, 0, 0, 0, 0, 0, 0, 0),
        (0, 1, 0, 0, 0, 0, 0, 0),
        (0, 0, 1, 0, 0, 1, 0, -1),
        (0, 0, 0, 1, 0, -1, 0, 1),
        (0, 0, 0, 0, 1, 1, 0, -1),
        (0, 0, 0, 0, 0, 0, 0, 1),
        (0, 0, 0, 0, 0, -1, 1, 1),
        (0, 0, 0, 0, 0, 1, 0, 0),
    ),
    # companion transform fixing the first four coordinates
    (
        (1, 0, 0, 0, 0, 0, 0, 0),
        (0, 1, 0, 0, 0, 0, 0, 0),
        (0, 0, 1, 0, 0, 0, 0, 0),
        (0, 0, 0, 1, 0, 0, 0, 0),
        (0, 1, 1, -1, 0, 1, 0, -1),
        (0, -1, -1, 1, 1, 0, 0, 1),
        (0, -1, -1, 1, 1, -1, 1, 1),
        (0, 0, 0, 0, 0, 0, 0, 1),
    ),
)

# Extra automorphism of the form arrangement that is not positive and is
# not in the group: (a1, a2, a4) -> (-a2, -a1, a4-a1-a2), rest fixed.
_EXTRA_ROWS = (
    (0, -1, 0, 0, 0, 0, 0, 0),
    (-1, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 1, 0, 0, 0, 0, 0),
    (-1, -1, 0, 1, 0, 0, 0, 0),
    (0, 0, 0, 0, 1, 0, 0, 0),
    (0, 0, 0, 0, 0, 1, 0, 0),
    (0, 0, 0, 0, 0, 0, 1, 0),
    (0, 0, 0, 0, 0, 0, 0, 1),
)


def identity() -> GroupElement:
    return GroupElement(_ID_ROWS)


@functools.lru_cache(maxsize=1)
def generators() -> tuple[GroupElement, ...]:
    """The five generating involutions, in a fixed order."""
    return tuple(GroupElement(rows) for rows in _GEN_ROWS)


@functools.lru_cache(maxsize=1)
def extra_automorphism() -> GroupElement:
    return GroupElement(_EXTRA_ROWS)


@functools.lru_cache(maxsize=1)
def full_group() -> tuple[GroupElement, ...]:
    """All group elements, BFS order from the identity (deterministic)."""
    gens = generators()
    start = identity()
    seen = {start.matrix: start}
    queue = [start]
    while queue:
        nxt = []
        for elem in queue:
            for g in gens:
                prod = g * elem
                if prod.matrix not in seen:
                    seen[prod.matrix] = prod
                    nxt.append(prod)
        queue = nxt
    return tuple(seen.values())


def group_order() -> int:
    return len(full_group())


@dataclass
class Orbit:
    """Orbit of one parameter vector under the full group."""

    base: ParamVec8
    elements: frozenset = field(repr=False)
    by_element: dict = field(repr=False)
    n_admissible: int = 0

    @property
    def size(self) -> int:
        return len(self.elements)

    def to_json(self) -> dict:
        return {
            "base": list(self.base),
            "size": self.size,
            "admissible": self.n_admissible,
            "elements": sorted(list(v) for v in self.elements),
        }


def orbit(a) -> Orbit:
    """Full orbit of ``a``; also counts how many images stay admissible."""
    from .params import convergence_check

    a = ParamVec8.from_seq(a)
    by_element = {}
    elements = set()
    n_adm = 0
    for g in full_group():
        img = g.apply(a)
        by_element[g] = img
        if img not in elements:
            elements.add(img)
            if convergence_check(img):
                n_adm += 1
    return Orbit(base=a, elements=frozenset(elements),
                 by_element=by_element, n_admissible=n_adm)


def factorial_ratio(g: GroupElement, a) -> Fraction:
    """prod over the convergence subset of h_i(g a)! / h_i(a)!.

    Multiplying the exact double-sum coefficient of ``a`` by this ratio
    gives the coefficient of ``g a``.  Raises if either vector has a
    negative convergence-subset value (factorials undefined).
    """
    a = ParamVec8.from_seq(a)
    ha = hyperplane_values(a)
    hb = hyperplane_values(g.apply(a))
    num = den = 1
    for i in FSET:
        va, vb = ha.h[i - 1], hb.h[i - 1]
        if va < 0 or vb < 0:
            raise ValueError("factorial ratio needs non-negative form values")
        num *= factorial(vb)
        den *= factorial(va)
    return Fraction(num, den)


# Symmetric-coordinate basis trick: the doubled basis vector 2 e_j maps to
# an integer parameter vector, so conjugation needs no rational arithmetic.
_SYM_BASIS = tuple(
    from_symmetric(tuple(2 if i == j else 0 for i in range(8))) for j in range(8)
)


def perm_rep(g: GroupElement) -> tuple[int, ...]:
    """The permutation of the symmetric coordinates induced by ``g``.

    Returns p with p[i] = image of coordinate i; p[0] == 0 always.  Raises
    ValueError if ``g`` does not act as a coordinate permutation (the extra
    automorphism, for instance, flips signs).
    """
    if g._perm is not None:
        return g._perm
    perm = [None] * 8
    for j in range(8):
        t = to_symmetric(g.apply(_SYM_BASIS[j])).twoS
        nonzero = [i for i, v in enumerate(t) if v != 0]
        if len(nonzero) != 1 or t[nonzero[0]] != 2:
            raise ValueError("element has no permutation representation")
        perm[j] = nonzero[0]
    if perm[0] != 0 or sorted(perm) != list(range(8)):
        raise ValueError("inconsistent permutation representation")
    g._perm = tuple(perm)
    return g._perm


def form_permutation(g: GroupElement) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """How ``g`` permutes the 29 forms (28 numbered plus the exceptional).

    Returns (perm, signs) with perm[i] = j and signs[i] = +-1 meaning
    form_{i+1} composed with g equals signs[i] * form_{j+1} (index 28
    stands for the exceptional form).  Raises if some composite is not a
    signed form, i.e. if ``g`` does not preserve the arrangement.
    """
    rows = [form_coefficients(i) for i in range(1, 29)]
    rows.append(form_coefficients(29))
    index = {r: i for i, r in enumerate(rows)}
    cols = tuple(zip(*g.matrix))
    perm, signs = [], []
    for r in rows:
        w = tuple(sum(c * m for c, m in zip(r, col)) for col in cols)
        if w in index:
            perm.append(index[w])
            signs.append(1)
        else:
            wneg = tuple(-x for x in w)
            if wneg not in index:
                raise ValueError("matrix does not permute the hyperplane forms")
            perm.append(index[wneg])
            signs.append(-1)
    return tuple(perm), tuple(signs)


def is_positive(g: GroupElement) -> bool:
    """Positivity test: all 28 forms stay positive on the all-ones vector."""
    ones = ParamVec8(1, 1, 1, 1, 1, 1, 1, 1)
    hv = hyperplane_values(g.apply(ones))
    return all(v > 0 for v in hv.h)


@functools.lru_cache(maxsize=1)
def extended_group_order() -> int:
    """Order of the permutation group on the 29 forms generated by the five
    involutions together with the extra automorphism."""
    gens = [form_permutation(g)[0] for g in generators()]
    gens.append(form_permutation(extra_automorphism())[0])
    start = tuple(range(29))
    seen = {start}
    queue = [start]
    while queue:
        nxt = []
        for p in queue:
            for q in gens:
                comp = tuple(q[p[i]] for i in range(29))
                if comp not in seen:
                    seen.add(comp)
                    nxt.append(comp)
        queue = nxt
    return len(seen)


@functools.lru_cache(maxsize=64)
def fset_profiles(a) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """Distinct sorted convergence-subset value tuples over the orbit.

    Returns (base_profile, all_profiles).  All profiles share one sum;
    that invariance is asserted here because the step-function and
    denominator-gain machinery depend on it.
    """
    a = ParamVec8.from_seq(a)
    fidx = sorted(FSET)
    base = tuple(sorted(hyperplane_values(a).h[i - 1] for i in fidx))
    profiles = set()
    for g in full_group():
        hv = hyperplane_values(g.apply(a))
        profiles.add(tuple(sorted(hv.h[i - 1] for i in fidx)))
    total = sum(base)
    if any(sum(p) != total for p in profiles):
        raise AssertionError("convergence-subset sum is not orbit-invariant")
    return base, tuple(sorted(profiles))
