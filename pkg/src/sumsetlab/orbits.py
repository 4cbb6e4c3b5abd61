"""Shift-orbit closures of eventually periodic integer sets.

The closure of the shift orbit of an eventually periodic point contains the
transient translates of the point itself plus finitely many periodic limit
configurations.  Every shift-invariant measure gives the transient part
mass zero, so only the periodic limit orbits are materialized; the base
point is kept as symbolic bookkeeping and queried through descriptor
shifts.  Each limit orbit is a finite cycle on which the integers act
through the quotient by the orbit period, so the finite action machinery
is reused unchanged, and the uniform measure on each cycle is the ergodic
measure of that orbit.

The distinguished observable is B = "the configuration contains 0".  With
the shift acting by g . x = x - g, a configuration at phase s of the orbit
of a periodic pattern lies in B exactly when s is in the pattern, and the
pushforward of B under a finite acting set A lands on the phases pattern +
A, which is what the verification routine compares against exact sumset
densities on the line.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .groups import finite_set, make_group
from .systems import ActionSystem, StateSubset, apply_set, make_system, measure_of, state_subset
from .zline import ZSetDesc, Tail, banach_lower, banach_upper, finite, shift, zcontains, zsumset

__all__ = [
    "LimitOrbit",
    "OrbitSystem",
    "Relation",
    "CorrespondenceReport",
    "orbit_closure",
    "verify_correspondence",
    "recovery_window_ok",
]


@dataclass(frozen=True)
class LimitOrbit:
    side: str  # "left", "right" or "both"
    period: int
    pattern: frozenset[int]
    system: ActionSystem
    b_set: StateSubset

    @property
    def b_measure(self) -> Fraction:
        return measure_of(self.system, self.b_set)

    def ab_measure(self, A: Iterable[int]) -> Fraction:
        """Measure of A.B on this orbit, computed through the action machinery."""
        reduced = finite_set(self.system.group, {a % self.period for a in A})
        return measure_of(self.system, apply_set(self.system, reduced, self.b_set))


@dataclass(frozen=True)
class OrbitSystem:
    source: ZSetDesc
    orbits: tuple[LimitOrbit, ...]
    degenerate: bool

    @property
    def states_total(self) -> int:
        return sum(o.period for o in self.orbits)

    def b_xo_contains(self, g: int) -> bool:
        """Whether the translate g . x_o lies in B, via the symbolic base point."""
        return zcontains(shift(self.source, -g), 0)


@dataclass(frozen=True)
class Relation:
    name: str
    op: str
    lhs: Fraction
    rhs: Fraction
    holds: bool


@dataclass(frozen=True)
class CorrespondenceReport:
    relations: tuple[Relation, ...]
    mu_side: str
    nu_side: str | None
    degenerate: bool

    @property
    def all_hold(self) -> bool:
        return all(r.holds for r in self.relations)

    def to_json(self) -> dict:
        return {
            "relations": [
                {
                    "name": r.name,
                    "op": r.op,
                    "lhs": f"{r.lhs.numerator}/{r.lhs.denominator}",
                    "rhs": f"{r.rhs.numerator}/{r.rhs.denominator}",
                    "holds": r.holds,
                }
                for r in self.relations
            ],
            "mu_side": self.mu_side,
            "nu_side": self.nu_side,
            "degenerate": self.degenerate,
        }


def _canonical_rotation(period: int, pattern: frozenset[int]) -> frozenset[int]:
    if not pattern:
        return pattern
    best = None
    for s in range(period):
        rotated = tuple(sorted((r + s) % period for r in pattern))
        if best is None or rotated < best:
            best = rotated
    return frozenset(best)


def _limit_orbit(side: str, tail: Tail | None) -> LimitOrbit:
    if tail is None:
        period, pattern = 1, frozenset()
    else:
        # Tails arrive minimal-period reduced from the descriptor normal form.
        period, pattern = tail.period, _canonical_rotation(tail.period, tail.pattern)
    group = make_group([period])
    if period == 1:
        table = [[0]]
    else:
        table = [[(x + 1) % period for x in range(period)]]
    system = make_system(group, period, table)
    return LimitOrbit(side, period, pattern, system, state_subset(system, pattern))


def orbit_closure(S: ZSetDesc) -> OrbitSystem:
    """Materialize the periodic limit orbits of the shift orbit closure of S.

    A set with both tails absent has only the empty configuration in its
    limit set; the result is flagged degenerate rather than rejected.
    """
    left = _limit_orbit("left", S.left)
    right = _limit_orbit("right", S.right)
    if (left.period, left.pattern) == (right.period, right.pattern):
        merged = LimitOrbit("both", left.period, left.pattern, left.system, left.b_set)
        orbits = (merged,)
    else:
        orbits = (left, right)
    degenerate = S.left is None and S.right is None
    return OrbitSystem(S, orbits, degenerate)


def recovery_window_ok(orb: OrbitSystem, lo: int, hi: int) -> bool:
    """Check that reading B along the base-point orbit recovers S on [lo, hi)."""
    return all(orb.b_xo_contains(g) == zcontains(orb.source, g) for g in range(lo, hi))


def verify_correspondence(S: ZSetDesc, A: Iterable[int]) -> CorrespondenceReport:
    """Check the four exact density relations between S and its orbit closure.

    With mu the listed ergodic measure maximizing mu(B):
      d_upper(S) = mu(B)           and   d_upper(A + S) >= mu(A.B);
    and some listed nu satisfies
      d_lower(S) <= nu(B)          and   d_lower(A + S) >= nu(A.B).
    """
    A = sorted({int(a) for a in A})
    if not A:
        raise ValueError("acting set must be a non-empty finite set of integers")
    orb = orbit_closure(S)
    T = zsumset(finite(A), S)
    du_s, dl_s = banach_upper(S), banach_lower(S)
    du_t, dl_t = banach_upper(T), banach_lower(T)

    mu = max(orb.orbits, key=lambda o: o.b_measure)
    relations = [
        Relation("upper density of S equals mu(B)", "==", du_s, mu.b_measure,
                 du_s == mu.b_measure),
        Relation("upper density of A+S dominates mu(A.B)", ">=", du_t,
                 mu.ab_measure(A), du_t >= mu.ab_measure(A)),
    ]

    nu = None
    for o in orb.orbits:
        if dl_s <= o.b_measure and dl_t >= o.ab_measure(A):
            nu = o
            break
    report_nu = nu if nu is not None else orb.orbits[-1]
    relations.insert(1, Relation(
        "lower density of S below nu(B)", "<=", dl_s, report_nu.b_measure,
        nu is not None and dl_s <= report_nu.b_measure))
    relations.append(Relation(
        "lower density of A+S dominates nu(A.B)", ">=", dl_t,
        report_nu.ab_measure(A), nu is not None and dl_t >= report_nu.ab_measure(A)))

    return CorrespondenceReport(
        relations=tuple(relations),
        mu_side=mu.side,
        nu_side=report_nu.side if nu is not None else None,
        degenerate=orb.degenerate,
    )
