"""Group arithmetic: frozen values plus algebraic properties."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sumsetlab import (
    bit_indices,
    finite_set,
    full_set,
    group_density,
    iterated_sumset,
    make_group,
    negate,
    sumset,
    translate,
)
from sumsetlab.groups import GroupSpec

from conftest import group_with_sets, groups, sets_in


def members(fs):
    return list(fs.indices())


def test_make_group_orders():
    assert make_group([8]).cardinality == 8
    assert make_group([2, 3]).cardinality == 6
    with pytest.raises(ValueError):
        make_group([0])
    with pytest.raises(ValueError):
        make_group([])


def test_mixed_radix_encoding_least_significant_first():
    g = make_group([2, 3])
    # index = d0 + 2*d1 with d0 in Z/2, d1 in Z/3
    assert g.digits(5) == (1, 2)
    assert g.index((1, 2)) == 5
    assert g.add(1, 2) == g.index((1, 1))  # (1,0)+(0,1) componentwise


def test_sumset_frozen_example():
    g = make_group([8])
    a = finite_set(g, [0, 1])
    b = finite_set(g, [0, 4])
    assert members(sumset(a, b)) == [0, 1, 4, 5]


def test_sumset_identity_and_full():
    g = make_group([8])
    b = finite_set(g, [2, 5, 7])
    assert sumset(finite_set(g, [0]), b) == b
    assert sumset(finite_set(g, [0, 1]), full_set(g)) == full_set(g)


def test_sumset_rejects_mismatch_and_empty():
    g, h = make_group([8]), make_group([6])
    with pytest.raises(ValueError):
        sumset(finite_set(g, [0]), finite_set(h, [0]))
    with pytest.raises(ValueError):
        finite_set(g, [9])
    with pytest.raises(ValueError):
        sumset(finite_set(g, [0]), finite_set(g, []))


def test_iterated_sumset_frozen_examples():
    g = make_group([8])
    assert members(iterated_sumset(finite_set(g, [0, 1]), 3)) == [0, 1, 2, 3]
    a = finite_set(g, [3, 5])
    assert iterated_sumset(a, 1) == a
    g4 = make_group([4])
    assert members(iterated_sumset(finite_set(g4, [0, 1, 2]), 2)) == [0, 1, 2, 3]
    with pytest.raises(ValueError):
        iterated_sumset(a, 0)


def test_negate_frozen_examples():
    g = make_group([8])
    assert members(negate(finite_set(g, [0, 1]))) == [0, 7]
    assert members(negate(finite_set(g, [0]))) == [0]
    sym = finite_set(g, [1, 7])
    assert negate(sym) == sym


def test_group_density_frozen_examples():
    g = make_group([8])
    assert group_density(finite_set(g, [0, 4])) == Fraction(1, 4)
    assert group_density(full_set(g)) == 1
    assert group_density(finite_set(g, [0, 2])) == group_density(finite_set(g, [1, 3]))


def test_translate_wraps_componentwise():
    g = make_group([2, 3])
    a = finite_set(g, [0, 5])
    t = translate(a, 1)  # add (1,0)
    assert members(t) == sorted(g.add(x, 1) for x in [0, 5])


def test_bit_indices_roundtrip():
    mask = (1 << 0) | (1 << 5) | (1 << 63)
    assert list(bit_indices(mask)) == [0, 5, 63]


def test_group_json_roundtrip():
    g = make_group([4, 3])
    assert GroupSpec.from_json(g.to_json()) == g


@given(group_with_sets(count=2))
def test_sumset_commutative(data):
    _, a, b = data
    assert sumset(a, b) == sumset(b, a)


@given(group_with_sets(count=3, max_order=12))
def test_sumset_associative(data):
    _, a, b, c = data
    assert sumset(sumset(a, b), c) == sumset(a, sumset(b, c))


@given(group_with_sets(count=2))
def test_sumset_at_least_max_size(data):
    _, a, b = data
    assert sumset(a, b).size >= max(a.size, b.size)


@given(group_with_sets(count=2))
def test_sumset_monotone(data):
    g, a, b = data
    bigger = finite_set(g, set(a.indices()) | {0})
    small = sumset(a, b)
    large = sumset(bigger, b)
    assert small.mask & ~large.mask == 0


@given(group_with_sets(count=1), st.integers(0, 200))
def test_density_translation_invariant(data, shift):
    g, a = data
    assert group_density(translate(a, shift % g.cardinality)) == group_density(a)


@given(group_with_sets(count=1))
def test_density_negation_invariant(data):
    _, a = data
    assert group_density(negate(a)) == group_density(a)


@given(group_with_sets(count=1, max_order=10), st.integers(1, 3), st.integers(1, 3))
def test_iterated_sumset_additive_law(data, j, k):
    _, a = data
    assert iterated_sumset(a, j + k) == sumset(iterated_sumset(a, j), iterated_sumset(a, k))


@given(groups(max_order=24))
def test_full_set_density_one(g):
    assert group_density(full_set(g)) == 1


@given(group_with_sets(count=2, max_order=12))
def test_sumset_matches_pairwise_enumeration(data):
    """Independent oracle: elementwise definition, no bitmask tricks."""
    g, a, b = data
    expected = sorted({g.add(x, y) for x in a.indices() for y in b.indices()})
    assert members(sumset(a, b)) == expected


def test_trivial_factor_generator_is_identity():
    g = make_group([1, 8])
    assert g.generator(0) == 0
    assert g.generator(1) == 1
    assert g.add(g.generator(0), 3) == 3
