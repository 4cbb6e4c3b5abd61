"""Tests for measure-preserving actions and ergodic-set certificates."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sumsetlab import (
    apply_set,
    disjoint_union,
    finite_set,
    full_set,
    full_states,
    is_ergodic,
    is_ergodic_basis,
    is_ergodic_set,
    make_group,
    make_system,
    measure_of,
    orbits,
    quotient_system,
    regular_system,
    state_subset,
    system_from_json,
    system_to_json,
)

from conftest import sets_in, system_instances, systems

Z8 = make_group([8])
Z4 = make_group([4])


def rotation_table(n: int) -> list[int]:
    return [(x + 1) % n for x in range(n)]


# ---------------------------------------------------------------------------
# construction and validation


def test_make_system_rejects_non_permutation():
    with pytest.raises(ValueError, match="not a permutation"):
        make_system(Z4, 4, [[0, 0, 1, 2]])


def test_make_system_rejects_wrong_order():
    # A 3-cycle on 4 states has order 3, which does not divide 4, so the
    # action table cannot extend to a homomorphism from Z/4.
    with pytest.raises(ValueError, match="order dividing"):
        make_system(Z4, 4, [[1, 2, 0, 3]])


def test_make_system_rejects_non_commuting_tables():
    g = make_group([2, 2])
    swap01 = [1, 0, 2]
    swap12 = [0, 2, 1]
    with pytest.raises(ValueError, match="do not commute"):
        make_system(g, 3, [swap01, swap12])


def test_make_system_rejects_wrong_table_count():
    with pytest.raises(ValueError, match="generator tables"):
        make_system(make_group([2, 2]), 2, [[1, 0]])


def test_make_system_rejects_bad_measures():
    table = [rotation_table(4)]
    with pytest.raises(ValueError, match="non-negative"):
        make_system(Z4, 4, table, [Fraction(2), Fraction(-1), 0, 0])
    with pytest.raises(ValueError, match="sum to"):
        make_system(Z4, 4, table, [Fraction(1, 4)] * 3 + [Fraction(1, 2)])
    with pytest.raises(ValueError, match="entries"):
        make_system(Z4, 4, table, [Fraction(1, 2), Fraction(1, 2)])


def test_make_system_rejects_non_invariant_measure():
    # Rotation moves the mass at state 0 to state 1, so a point mass at 0
    # is not invariant.
    with pytest.raises(ValueError, match="not invariant"):
        make_system(Z4, 4, [rotation_table(4)], [1, 0, 0, 0])


def test_make_system_rejects_empty_state_set():
    with pytest.raises(ValueError, match="at least one state"):
        make_system(Z4, 0, [[]])


def test_fixed_points_carry_any_invariant_measure():
    # The trivial action fixes every state, so any distribution is fine.
    sysm = make_system(Z4, 3, [[0, 1, 2]], [Fraction(1, 2), Fraction(1, 3), Fraction(1, 6)])
    assert measure_of(sysm, state_subset(sysm, [1])) == Fraction(1, 3)


# ---------------------------------------------------------------------------
# acting on subsets


def test_apply_set_translation_examples():
    sysm = regular_system(Z8)
    A = finite_set(Z8, [0, 1])
    B = state_subset(sysm, [0])
    assert apply_set(sysm, A, B).indices() == (0, 1)
    B2 = state_subset(sysm, [0, 4])
    assert apply_set(sysm, A, B2).indices() == (0, 1, 4, 5)


def test_apply_identity_fixes_subset():
    sysm = regular_system(Z8)
    B = state_subset(sysm, [2, 3, 7])
    assert apply_set(sysm, finite_set(Z8, [0]), B) == B


def test_apply_set_rejects_mismatches():
    sysm = regular_system(Z8)
    other = regular_system(Z4)
    B = state_subset(sysm, [0])
    with pytest.raises(ValueError, match="different group"):
        apply_set(sysm, finite_set(Z4, [0]), B)
    with pytest.raises(ValueError, match="non-empty"):
        apply_set(sysm, finite_set(Z8, []), B)
    with pytest.raises(ValueError, match="different system"):
        apply_set(other, finite_set(Z4, [0]), B)


def test_measure_of_uniform_regular_system():
    sysm = regular_system(Z8)
    assert measure_of(sysm, state_subset(sysm, [0, 1])) == Fraction(1, 4)
    assert measure_of(sysm, full_states(sysm)) == 1
    assert measure_of(sysm, state_subset(sysm, [])) == 0


# ---------------------------------------------------------------------------
# orbit structure and ergodicity


def test_regular_system_is_ergodic():
    sysm = regular_system(Z8)
    assert orbits(sysm) == [list(range(8))]
    assert is_ergodic(sysm)


def test_quotient_system_is_ergodic():
    assert is_ergodic(quotient_system(Z8, [4]))


def test_disjoint_union_is_not_ergodic():
    sysm = disjoint_union(regular_system(Z4), regular_system(Z4))
    assert orbits(sysm) == [[0, 1, 2, 3], [4, 5, 6, 7]]
    assert not is_ergodic(sysm)


def test_full_group_is_an_ergodic_set():
    sysm = regular_system(Z8)
    assert is_ergodic_set(sysm, full_set(Z8))


def test_small_interval_is_not_an_ergodic_set_for_translation():
    sysm = regular_system(Z8)
    assert not is_ergodic_set(sysm, finite_set(Z8, [0, 1]))


def test_quotient_shrinks_the_covering_requirement():
    # Acting on Z/4 through the reduction from Z/8, a set covering all
    # residues mod 4 moves any point onto the whole state space.
    sysm = quotient_system(Z8, [4])
    assert is_ergodic_set(sysm, finite_set(Z8, [0, 1, 2, 3]))
    assert not is_ergodic_set(sysm, finite_set(Z8, [0, 4]))


def test_ergodic_set_requires_ergodic_system():
    sysm = disjoint_union(regular_system(Z4), regular_system(Z4))
    with pytest.raises(ValueError, match="ergodic"):
        is_ergodic_set(sysm, full_set(Z4))


def test_ergodic_basis_examples():
    sysm = regular_system(Z4)
    A = finite_set(Z4, [0, 1, 2])
    # {0,1,2} + {0,1,2} covers all of Z/4 even though the set itself does not.
    assert not is_ergodic_set(sysm, A)
    assert is_ergodic_basis(sysm, A, 2)
    assert is_ergodic_basis(sysm, full_set(Z4), 1)

    sys8 = regular_system(Z8)
    assert not is_ergodic_basis(sys8, finite_set(Z8, [0, 1]), 2)
    with pytest.raises(ValueError, match="order"):
        is_ergodic_basis(sysm, A, 0)


# ---------------------------------------------------------------------------
# constructors


def test_quotient_system_validation():
    with pytest.raises(ValueError, match="does not divide"):
        quotient_system(Z8, [3])
    with pytest.raises(ValueError, match="per factor"):
        quotient_system(make_group([4, 2]), [2])


def test_disjoint_union_validation():
    a = regular_system(Z4)
    with pytest.raises(ValueError, match="strictly between"):
        disjoint_union(a, a, Fraction(1))
    with pytest.raises(ValueError, match="share the acting group"):
        disjoint_union(a, regular_system(Z8))


def test_disjoint_union_weights():
    sysm = disjoint_union(regular_system(Z4), quotient_system(Z4, [2]), Fraction(1, 3))
    assert sum(sysm.weights) == 1
    assert measure_of(sysm, state_subset(sysm, [0, 1, 2, 3])) == Fraction(1, 3)
    assert measure_of(sysm, state_subset(sysm, [4, 5])) == Fraction(2, 3)


def test_system_json_round_trip():
    sysm = disjoint_union(regular_system(Z4), quotient_system(Z4, [2]), Fraction(1, 3))
    data = system_to_json(sysm)
    back = system_from_json(data)
    assert back == sysm


def test_system_from_json_validation():
    with pytest.raises(ValueError, match="object"):
        system_from_json([1, 2])
    with pytest.raises(ValueError, match="missing"):
        system_from_json({"group": {"orders": [4]}, "states": 4})
    with pytest.raises(ValueError, match="bad measure"):
        system_from_json(
            {
                "group": {"orders": [2]},
                "states": 2,
                "action": [[1, 0]],
                "measure": ["1/0", "1"],
            }
        )


# ---------------------------------------------------------------------------
# properties


@settings(max_examples=60, deadline=None)
@given(system_instances())
def test_group_elements_preserve_measure(inst):
    sysm, A, B = inst
    for a in A:
        moved = apply_set(sysm, finite_set(sysm.group, [a]), B)
        assert measure_of(sysm, moved) == measure_of(sysm, B)


@settings(max_examples=60, deadline=None)
@given(system_instances())
def test_apply_set_dominates_single_translates(inst):
    sysm, A, B = inst
    AB = apply_set(sysm, A, B)
    for a in A:
        single = apply_set(sysm, finite_set(sysm.group, [a]), B)
        assert AB.mask | single.mask == AB.mask
    assert measure_of(sysm, AB) >= measure_of(sysm, B)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_ergodic_sets_are_closed_under_supersets(data):
    sysm = data.draw(systems(max_order=12, allow_union=False))
    A = data.draw(sets_in(sysm.group))
    if not is_ergodic_set(sysm, A):
        return
    extra = data.draw(sets_in(sysm.group))
    bigger = finite_set(sysm.group, set(A) | set(extra))
    assert is_ergodic_set(sysm, bigger)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_homomorphism_property_of_the_action(data):
    sysm = data.draw(systems(max_order=12))
    n = sysm.group.cardinality
    g = data.draw(st.integers(0, n - 1))
    h = data.draw(st.integers(0, n - 1))
    lhs = sysm.elem_perm(sysm.group.add(g, h))
    pg, ph = sysm.elem_perm(g), sysm.elem_perm(h)
    assert lhs == tuple(pg[ph[x]] for x in range(sysm.states))


@settings(max_examples=40, deadline=None)
@given(systems())
def test_system_json_round_trip_property(sysm):
    assert system_from_json(system_to_json(sysm)) == sysm
