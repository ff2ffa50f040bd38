from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetaforms import params


coords = st.tuples(*[st.integers(min_value=0, max_value=40)] * 8)
signed_coords = st.tuples(*[st.integers(min_value=-15, max_value=40)] * 8)


@given(coords)
def test_pq_round_trip(a):
    v = params.ParamVec8.from_seq(a)
    pq = params.a_to_pq(v)
    assert params.pq_to_a(pq) == v


@given(coords)
def test_pq_relations_hold_on_image(a):
    # Every 12-vector produced from an 8-vector satisfies the reduction,
    # balance and tail-split identities by construction.
    pq = params.a_to_pq(params.ParamVec8.from_seq(a))
    assert params.satisfies_reduction(pq)
    assert params.satisfies_balance(pq)
    assert params.satisfies_tail_split(pq)
    assert pq.p3 == pq.p1 + pq.q1 == pq.p5 + pq.q5
    assert pq.p3 + pq.q3 == pq.p0 + pq.q4 + pq.q5 == pq.p6 + pq.q1 + pq.q2


@given(signed_coords)
def test_symmetric_round_trip(a):
    v = params.ParamVec8.from_seq(a)
    sym = params.to_symmetric(v)
    assert len(sym.twoS) == 8
    parities = {x & 1 for x in sym.twoS}
    assert len(parities) == 1
    assert params.from_symmetric(sym) == v


def test_from_symmetric_rejects_mixed_parity():
    with pytest.raises(ValueError):
        params.from_symmetric((2, 1, 0, 0, 0, 0, 0, 0))


def test_form_table_shape():
    assert len(params.PAIR_FORM_INDICES) == 21
    assert len(params.DIFF_FORM_INDICES) == 7
    together = set(params.PAIR_FORM_INDICES) | set(params.DIFF_FORM_INDICES)
    assert together == set(range(1, 29))
    assert set(params.PAIR_FORM_INDICES) & set(params.DIFF_FORM_INDICES) == set()
    assert params.FSET < together
    assert len(params.FSET) == 17


@given(signed_coords)
def test_hyperplane_values_match_coefficient_rows(a):
    v = params.ParamVec8.from_seq(a)
    hv = params.hyperplane_values(v)
    assert len(hv.h) == 28
    for i in range(1, 29):
        row = params.form_coefficients(i)
        assert hv.value(i) == sum(c * x for c, x in zip(row, v))
    exc = params.form_coefficients(29)
    assert hv.exceptional == sum(c * x for c, x in zip(exc, v))


@given(signed_coords)
def test_pair_diff_split_in_symmetric_coordinates(a):
    # The 28 form values are, as a multiset, the 21 pairwise half-sums of
    # the last seven symmetric coordinates together with the 7 half
    # differences against the first one.
    v = params.ParamVec8.from_seq(a)
    hv = params.hyperplane_values(v)
    t = params.to_symmetric(v).twoS
    pairs = sorted(Fraction(t[i] + t[j], 2)
                   for i in range(1, 8) for j in range(i + 1, 8))
    diffs = sorted(Fraction(t[0] - t[i], 2) for i in range(1, 8))
    assert sorted(hv.h[i - 1] for i in params.PAIR_FORM_INDICES) == pairs
    assert sorted(hv.h[i - 1] for i in params.DIFF_FORM_INDICES) == diffs


def test_gate_accepts_zero_and_ones():
    assert params.convergence_check(params.ParamVec8.from_seq((0,) * 8))
    assert params.convergence_check(params.ParamVec8.from_seq((1,) * 8))
    assert params.first_violated_form(params.ParamVec8.from_seq((1,) * 8)) is None


def test_gate_names_first_violated_form():
    v = params.ParamVec8.from_seq((1, 0, 5, 0, 0, 0, 0, 0))
    assert not params.convergence_check(v)
    index, name, value = params.first_violated_form(v)
    assert (index, name, value) == (10, "a1+a5-a3", -4)


@given(signed_coords)
def test_gate_matches_bare_definition(a):
    v = params.ParamVec8.from_seq(a)
    hv = params.hyperplane_values(v)
    expected = all(hv.value(i) >= 0 for i in params.FSET)
    assert params.convergence_check(v) == expected


def test_form_name_rendering():
    assert params.form_name(1) == "a1"
    assert params.form_name(2) == "a2"
    # sign split: positives first, then the subtracted block
    assert params.form_name(29) == "a1+a5+a7+a8-a2-a3"


def test_vertex_table_is_a_bijection():
    table = params.vertex_table()
    assert len(table) == 28
    assert set(table.keys()) == set(range(1, 29))
    seen = set(table.values())
    assert len(seen) == 28
    for pair in seen:
        assert len(pair) == 2
        assert all(0 <= x < 8 for x in pair)
