"""Finite measure-preserving actions of finite abelian groups.

A system is a finite state set, one permutation per cyclic generator of the
acting group, and an exact rational invariant probability measure.  The
action of an arbitrary element is composed lazily from generator powers and
memoized.  Validation proves the action is well defined: each generator
permutation has the order of its factor and all generators commute, which
is exactly the presentation of the group, so the homomorphism property for
all pairs follows rather than being spot-checked.

Ergodicity on a finite system reduces to orbit structure: invariance forces
the measure to be constant on each orbit, so the system is ergodic exactly
when the support of the measure is a single orbit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .groups import FiniteSet, GroupSpec, bit_indices, iterated_sumset

__all__ = [
    "ActionSystem",
    "StateSubset",
    "make_system",
    "state_subset",
    "full_states",
    "measure_of",
    "apply_set",
    "orbits",
    "is_ergodic",
    "is_ergodic_set",
    "is_ergodic_basis",
    "regular_system",
    "quotient_system",
    "disjoint_union",
    "system_to_json",
    "system_from_json",
]


@dataclass(frozen=True)
class ActionSystem:
    group: GroupSpec
    states: int
    generators: tuple[tuple[int, ...], ...]
    weights: tuple[Fraction, ...]
    _powers: dict = field(default_factory=dict, compare=False, repr=False)
    _perms: dict = field(default_factory=dict, compare=False, repr=False)

    def _generator_power(self, j: int, d: int) -> tuple[int, ...]:
        key = (j, d)
        perm = self._powers.get(key)
        if perm is None:
            if d == 0:
                perm = tuple(range(self.states))
            else:
                prev = self._generator_power(j, d - 1)
                gen = self.generators[j]
                perm = tuple(gen[x] for x in prev)
            self._powers[key] = perm
        return perm

    def elem_perm(self, g: int) -> tuple[int, ...]:
        """The permutation of states induced by the group element g."""
        perm = self._perms.get(g)
        if perm is None:
            out = tuple(range(self.states))
            for j, d in enumerate(self.group.digits(g)):
                if d:
                    power = self._generator_power(j, d)
                    out = tuple(power[x] for x in out)
            self._perms[g] = perm = out
        return perm

    def apply(self, g: int, x: int) -> int:
        return self.elem_perm(g)[x]

    @property
    def support_mask(self) -> int:
        mask = 0
        for x, w in enumerate(self.weights):
            if w > 0:
                mask |= 1 << x
        return mask


@dataclass(frozen=True)
class StateSubset:
    system: ActionSystem
    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> self.system.states:
            raise ValueError("state bitmask does not fit the system")

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def indices(self) -> tuple[int, ...]:
        return tuple(bit_indices(self.mask))

    def __contains__(self, x: int) -> bool:
        return 0 <= x < self.system.states and bool(self.mask >> x & 1)

    def to_json(self) -> list[int]:
        return list(self.indices())


def make_system(
    group: GroupSpec,
    states: int,
    action: Iterable[Iterable[int]],
    measure: Iterable[Fraction] | None = None,
) -> ActionSystem:
    """Validate and build a measure-preserving system.

    ``action`` holds one permutation of range(states) per cyclic factor of
    the group.  ``measure`` defaults to the uniform distribution.  Rejected:
    non-permutations, tables that violate the factor-order or commutation
    relations, measures that are negative, do not sum to 1, or are not
    invariant.
    """
    if states < 1:
        raise ValueError(f"need at least one state, got {states}")
    tables = tuple(tuple(int(x) for x in row) for row in action)
    if len(tables) != len(group.orders):
        raise ValueError(
            f"expected {len(group.orders)} generator tables, got {len(tables)}"
        )
    ident = tuple(range(states))
    for j, row in enumerate(tables):
        if len(row) != states or sorted(row) != list(ident):
            raise ValueError(f"generator table {j} is not a permutation of the states")
    for j, row in enumerate(tables):
        power = ident
        for _ in range(group.orders[j]):
            power = tuple(row[x] for x in power)
        if power != ident:
            raise ValueError(
                f"generator table {j} does not have order dividing {group.orders[j]}; "
                "the action is not a homomorphism"
            )
    for i in range(len(tables)):
        for j in range(i + 1, len(tables)):
            a, b = tables[i], tables[j]
            if any(a[b[x]] != b[a[x]] for x in range(states)):
                raise ValueError(f"generator tables {i} and {j} do not commute")

    if measure is None:
        weights = tuple(Fraction(1, states) for _ in range(states))
    else:
        weights = tuple(Fraction(w) for w in measure)
    if len(weights) != states:
        raise ValueError(f"measure has {len(weights)} entries for {states} states")
    if any(w < 0 for w in weights):
        raise ValueError("measure weights must be non-negative")
    if sum(weights) != 1:
        raise ValueError(f"measure weights sum to {sum(weights)}, expected 1")
    for j, row in enumerate(tables):
        if any(weights[row[x]] != weights[x] for x in range(states)):
            raise ValueError(f"measure is not invariant under generator table {j}")
    return ActionSystem(group, states, tables, weights)


def state_subset(sys: ActionSystem, members: Iterable[int]) -> StateSubset:
    mask = 0
    for x in members:
        if not 0 <= x < sys.states:
            raise ValueError(f"state index {x} outside system with {sys.states} states")
        mask |= 1 << x
    return StateSubset(sys, mask)


def full_states(sys: ActionSystem) -> StateSubset:
    return StateSubset(sys, (1 << sys.states) - 1)


def measure_of(sys: ActionSystem, B: StateSubset) -> Fraction:
    if B.system is not sys and B.system != sys:
        raise ValueError("subset belongs to a different system")
    return sum((sys.weights[x] for x in bit_indices(B.mask)), Fraction(0))


def apply_set(sys: ActionSystem, A: FiniteSet, B: StateSubset) -> StateSubset:
    """The union of translates A.B = { a.x : a in A, x in B }."""
    if A.group != sys.group:
        raise ValueError("acting set lives in a different group")
    if A.mask == 0:
        raise ValueError("acting set must be non-empty")
    if B.system is not sys and B.system != sys:
        raise ValueError("subset belongs to a different system")
    out = 0
    for a in A:
        perm = sys.elem_perm(a)
        for x in bit_indices(B.mask):
            out |= 1 << perm[x]
    return StateSubset(sys, out)


def orbits(sys: ActionSystem) -> list[list[int]]:
    """Orbit decomposition of the state set under the full group."""
    seen = [False] * sys.states
    out: list[list[int]] = []
    for start in range(sys.states):
        if seen[start]:
            continue
        stack, orbit = [start], []
        seen[start] = True
        while stack:
            x = stack.pop()
            orbit.append(x)
            for row in sys.generators:
                y = row[x]
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        out.append(sorted(orbit))
    return out


def is_ergodic(sys: ActionSystem) -> bool:
    """True iff the support of the measure is a single orbit."""
    support = {x for x in range(sys.states) if sys.weights[x] > 0}
    for orbit in orbits(sys):
        if support & set(orbit):
            return support == set(orbit)
    return False


def is_ergodic_set(sys: ActionSystem, A: FiniteSet) -> bool:
    """True iff A.B has full measure for every positive-measure B.

    By monotonicity it is enough to check singletons: for every state x in
    the support, A.{x} must cover the support.
    """
    if not is_ergodic(sys):
        raise ValueError("ergodic-set certificates are defined over ergodic systems")
    if A.group != sys.group:
        raise ValueError("acting set lives in a different group")
    if A.mask == 0:
        raise ValueError("acting set must be non-empty")
    support = sys.support_mask
    for x in bit_indices(support):
        hit = 0
        for a in A:
            hit |= 1 << sys.elem_perm(a)[x]
        if support & ~hit:
            return False
    return True


def is_ergodic_basis(sys: ActionSystem, A: FiniteSet, k: int) -> bool:
    """True iff the k-fold sumset of A is an ergodic set for the system."""
    if k < 1:
        raise ValueError(f"basis order must be >= 1, got {k}")
    return is_ergodic_set(sys, iterated_sumset(A, k))


def regular_system(group: GroupSpec) -> ActionSystem:
    """The group acting on itself by translation, with uniform measure."""
    n = group.cardinality
    tables = []
    for j in range(len(group.orders)):
        e = group.generator(j)
        tables.append([group.add(x, e) for x in range(n)])
    return make_system(group, n, tables)


def quotient_system(group: GroupSpec, target_orders: Iterable[int]) -> ActionSystem:
    """The action on a quotient group obtained by reducing each factor.

    Each target order must divide the corresponding factor order, so the
    digit-wise reduction is a homomorphism.
    """
    target = GroupSpec(tuple(target_orders))
    if len(target.orders) != len(group.orders):
        raise ValueError("quotient needs one target order per factor")
    for n, m in zip(group.orders, target.orders):
        if n % m:
            raise ValueError(f"target order {m} does not divide factor order {n}")
    tables = []
    for j in range(len(group.orders)):
        if target.orders[j] == 1:
            tables.append(list(range(target.cardinality)))
        else:
            e = target.generator(j)
            tables.append([target.add(x, e) for x in range(target.cardinality)])
    return make_system(group, target.cardinality, tables)


def disjoint_union(
    a: ActionSystem, b: ActionSystem, first_weight: Fraction = Fraction(1, 2)
) -> ActionSystem:
    """Two systems side by side, with the measure split between them."""
    if a.group != b.group:
        raise ValueError("systems must share the acting group")
    if not 0 < first_weight < 1:
        raise ValueError("first_weight must lie strictly between 0 and 1")
    tables = []
    for ra, rb in zip(a.generators, b.generators):
        tables.append(list(ra) + [x + a.states for x in rb])
    weights = [w * first_weight for w in a.weights]
    weights += [w * (1 - first_weight) for w in b.weights]
    return make_system(a.group, a.states + b.states, tables, weights)


def system_to_json(sys: ActionSystem) -> dict:
    return {
        "group": sys.group.to_json(),
        "states": sys.states,
        "action": [list(row) for row in sys.generators],
        "measure": [f"{w.numerator}/{w.denominator}" for w in sys.weights],
    }


def system_from_json(data: dict) -> ActionSystem:
    if not isinstance(data, dict):
        raise ValueError("system JSON must be an object")
    for key in ("group", "states", "action"):
        if key not in data:
            raise ValueError(f"system JSON is missing '{key}'")
    group = GroupSpec.from_json(data["group"])
    measure = None
    if data.get("measure") is not None:
        try:
            measure = [Fraction(w) for w in data["measure"]]
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad measure entry: {exc}") from None
    return make_system(group, data["states"], data["action"], measure)
