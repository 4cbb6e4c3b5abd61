"""Tests for exact magnification ratios: flow solver, oracle, and c_delta."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sumsetlab import (
    ORACLE_GUARD,
    apply_set,
    finite_set,
    full_set,
    mag_ratio,
    mag_ratio_delta,
    mag_ratio_oracle,
    make_group,
    measure_of,
    quotient_system,
    regular_system,
    state_subset,
)

from conftest import sets_in, system_instances

Z8 = make_group([8])


def check_witness(sys, A, B, result):
    """The invariants every result must satisfy, regardless of method."""
    W = result.witness
    assert W.mask, "witness must be non-empty"
    assert W.mask | B.mask == B.mask, "witness must be a subset of B"
    mu_w = measure_of(sys, W)
    assert mu_w > 0
    assert measure_of(sys, apply_set(sys, A, W)) == result.value * mu_w


# ---------------------------------------------------------------------------
# frozen examples


def test_interval_against_spread_pair():
    sysm = regular_system(Z8)
    A = finite_set(Z8, [0, 1])
    B = state_subset(sysm, [0, 4])
    oracle = mag_ratio_oracle(sysm, A, B)
    assert oracle.value == 2
    assert oracle.witness.indices() == (0,)
    assert oracle.method == "oracle"

    flow = mag_ratio(sysm, A, B)
    assert flow.value == 2
    assert flow.method == "flow"
    check_witness(sysm, A, B, flow)


def test_longer_interval_raises_the_ratio():
    sysm = regular_system(Z8)
    A = finite_set(Z8, [0, 1, 2])
    B = state_subset(sysm, [0, 4])
    assert mag_ratio(sysm, A, B).value == 3
    assert mag_ratio_oracle(sysm, A, B).value == 3


def test_identity_gives_ratio_one_with_full_witness():
    sysm = regular_system(Z8)
    B = state_subset(sysm, [1, 3, 6])
    res = mag_ratio(sysm, finite_set(Z8, [0]), B)
    assert res.value == 1
    # The identity magnifies nothing, so the whole of B attains the minimum.
    assert res.witness == B


def test_singleton_b_has_one_candidate():
    sysm = regular_system(Z8)
    A = finite_set(Z8, [0, 2, 5])
    B = state_subset(sysm, [3])
    for res in (mag_ratio(sysm, A, B), mag_ratio_oracle(sysm, A, B)):
        assert res.value == 3
        assert res.witness.indices() == (3,)


def test_full_acting_set_inverts_the_measure():
    sysm = regular_system(Z8)
    B = state_subset(sysm, [0, 2, 5])
    res = mag_ratio_oracle(sysm, full_set(Z8), B)
    assert res.value == Fraction(8, 3)
    assert res.witness == B
    assert mag_ratio(sysm, full_set(Z8), B).value == Fraction(8, 3)


def test_errors_on_degenerate_inputs():
    sysm = regular_system(Z8)
    B = state_subset(sysm, [0])
    with pytest.raises(ValueError, match="non-empty"):
        mag_ratio(sysm, finite_set(Z8, []), B)
    with pytest.raises(ValueError, match="different group"):
        mag_ratio(sysm, finite_set(make_group([4]), [0]), B)


def test_error_on_null_b():
    # Keep mass away from B so every candidate is filtered out.
    weights = [Fraction(1, 4)] * 4 + [Fraction(0)] * 4
    sysm = quotient_system(Z8, [8])
    sysm = type(sysm)(sysm.group, 8, sysm.generators, tuple(weights))
    with pytest.raises(ValueError, match="measure zero"):
        mag_ratio(sysm, finite_set(Z8, [0, 1]), state_subset(sysm, [5, 6]))


def test_oracle_guard_trips_at_25():
    g = make_group([25])
    sysm = regular_system(g)
    B = state_subset(sysm, range(25))
    with pytest.raises(ValueError, match="guard"):
        mag_ratio_oracle(sysm, finite_set(g, [0, 1]), B)
    with pytest.raises(ValueError, match="guard"):
        mag_ratio_delta(sysm, finite_set(g, [0, 1]), B, Fraction(1, 2))
    # The flow solver has no such guard.
    assert mag_ratio(sysm, finite_set(g, [0, 1]), B).value == 1


def test_delta_one_forces_the_whole_set():
    sysm = regular_system(Z8)
    A = finite_set(Z8, [0, 1])
    B = state_subset(sysm, [0, 4])
    res = mag_ratio_delta(sysm, A, B, Fraction(1))
    assert res.value == 2  # mu(AB)/mu(B) = (4/8)/(2/8)
    assert res.witness == B
    assert res.method == "enumeration"


def test_delta_half_on_quotient_reaches_inverse_measure():
    sysm = quotient_system(Z8, [4])
    A = finite_set(Z8, [0, 1, 2, 3])
    B = state_subset(sysm, [0, 1])
    res = mag_ratio_delta(sysm, A, B, Fraction(1, 2))
    assert res.value == 2
    assert res.value == 1 / measure_of(sysm, B)


def test_slack_delta_matches_unconstrained_ratio():
    sysm = regular_system(Z8)
    A = finite_set(Z8, [0, 1])
    B = state_subset(sysm, [0, 4])
    # delta at the smallest weight fraction keeps the singleton witness legal.
    res = mag_ratio_delta(sysm, A, B, Fraction(1, 2))
    assert res.value == mag_ratio(sysm, A, B).value == 2


def test_delta_out_of_range():
    sysm = regular_system(Z8)
    B = state_subset(sysm, [0])
    A = finite_set(Z8, [0])
    for bad in (Fraction(0), Fraction(-1, 2), Fraction(3, 2)):
        with pytest.raises(ValueError, match="delta"):
            mag_ratio_delta(sysm, A, B, bad)


def test_result_json_shape():
    sysm = regular_system(Z8)
    res = mag_ratio(sysm, finite_set(Z8, [0, 1]), state_subset(sysm, [0, 4]))
    data = res.to_json()
    assert data["value"] == "2/1"
    assert data["method"] == "flow"
    assert set(data) >= {"value", "witness", "method", "nodes", "edges", "iterations"}


# ---------------------------------------------------------------------------
# properties


@settings(max_examples=80, deadline=None)
@given(system_instances())
def test_flow_and_oracle_agree_on_the_value(inst):
    sysm, A, B = inst
    flow = mag_ratio(sysm, A, B)
    oracle = mag_ratio_oracle(sysm, A, B)
    assert flow.value == oracle.value
    check_witness(sysm, A, B, flow)
    check_witness(sysm, A, B, oracle)


@settings(max_examples=60, deadline=None)
@given(system_instances())
def test_ratio_at_least_one(inst):
    sysm, A, B = inst
    assert mag_ratio(sysm, A, B).value >= 1


@settings(max_examples=60, deadline=None)
@given(system_instances(max_b=8), st.fractions(min_value="1/100", max_value=1),
       st.fractions(min_value="1/100", max_value=1))
def test_delta_monotonicity(inst, d1, d2):
    sysm, A, B = inst
    lo, hi = sorted((d1, d2))
    v_lo = mag_ratio_delta(sysm, A, B, lo).value
    v_hi = mag_ratio_delta(sysm, A, B, hi).value
    assert v_lo <= v_hi
    assert mag_ratio(sysm, A, B).value <= v_lo


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_delta_monotone_in_the_acting_set(data):
    sysm, A, B = data.draw(system_instances(max_b=8))
    sub = data.draw(st.sets(st.sampled_from(sorted(A.indices())), min_size=1))
    A_sub = finite_set(sysm.group, sub)
    delta = data.draw(st.sampled_from([Fraction(1, 4), Fraction(1, 2), Fraction(1)]))
    assert (
        mag_ratio_delta(sysm, A_sub, B, delta).value
        <= mag_ratio_delta(sysm, A, B, delta).value
    )


@settings(max_examples=60, deadline=None)
@given(system_instances())
def test_dinkelbach_iteration_bound(inst):
    sysm, A, B = inst
    res = mag_ratio(sysm, A, B)
    candidates = sum(1 for x in B.indices() if sysm.weights[x] > 0)
    assert res.iterations <= candidates + 2


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_delta_result_respects_the_floor(data):
    sysm, A, B = data.draw(system_instances(max_b=8))
    delta = data.draw(st.sampled_from([Fraction(1, 3), Fraction(1, 2), Fraction(2, 3)]))
    res = mag_ratio_delta(sysm, A, B, delta)
    assert measure_of(sysm, res.witness) >= delta * measure_of(sysm, B)
    check_witness(sysm, A, B, res)
