"""Eventually periodic subsets of the integers with exact Banach densities.

A descriptor stores an explicit head window [lo, hi) plus optional periodic
tails that govern everything below lo and everything at or above hi.  This
class is closed under sumsets and shifts, and on it both Banach densities
have finite certificates.

Why the upper density is the larger tail density: an invariant mean is a
translation-invariant average, so a mean dragged along windows deep inside
the denser tail attains that tail's density; conversely every long window
[a, a + n) splits into a left-tail part, a bounded head part and a
right-tail part, so its counting density is a convex combination of the two
tail densities up to O(1/n), and no mean can exceed the larger one.  The
lower density argument is symmetric, with absent tails counting as density
zero.  Arbitrary subsets of Z are out of scope on purpose: without eventual
periodicity there is no finite certificate for the supremum, so this module
refuses to guess.  Plain finite window counts are available separately via
window_density and are estimates, not certificates.

Normal form: tails are reduced to their minimal period, empty tails are
stored as None, and the head window is shrunk until its endpoints disagree
with the adjacent tail, so equal descriptors compare equal as dataclasses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

__all__ = [
    "Tail",
    "ZSetDesc",
    "zdesc",
    "periodic",
    "finite",
    "integers",
    "zcontains",
    "shift",
    "banach_upper",
    "banach_lower",
    "window_density",
    "zsumset",
    "zsumset_iterated",
    "zset_to_json",
    "zset_from_json",
]


@dataclass(frozen=True)
class Tail:
    """One periodic tail: membership at n is (n mod period) in pattern."""

    period: int
    pattern: frozenset[int]

    def __post_init__(self) -> None:
        if self.period < 1:
            raise ValueError(f"tail period must be >= 1, got {self.period}")
        pat = frozenset(int(r) for r in self.pattern)
        if any(not 0 <= r < self.period for r in pat):
            raise ValueError("tail pattern must consist of residues in [0, period)")
        object.__setattr__(self, "pattern", pat)

    @property
    def density(self) -> Fraction:
        return Fraction(len(self.pattern), self.period)


def _reduce_tail(tail: Tail) -> Tail:
    """Rewrite a tail over its minimal period."""
    p, pat = tail.period, tail.pattern
    for d in range(1, p + 1):
        if p % d:
            continue
        if {(r + d) % p for r in pat} == set(pat):
            return Tail(d, frozenset(r % d for r in pat))
    return tail


@dataclass(frozen=True)
class ZSetDesc:
    """An eventually periodic subset of Z in normal form."""

    lo: int
    hi: int
    head: frozenset[int]
    left: Tail | None
    right: Tail | None

    def __contains__(self, n: int) -> bool:
        return zcontains(self, n)


def _tail_arg(value) -> Tail | None:
    if value is None:
        return None
    if isinstance(value, Tail):
        tail = value
    else:
        period, pattern = value
        tail = Tail(int(period), frozenset(pattern))
    if not tail.pattern:
        return None
    return _reduce_tail(tail)


def zdesc(
    head: Iterable[int] = (),
    lo: int | None = None,
    hi: int | None = None,
    left: Tail | tuple | None = None,
    right: Tail | tuple | None = None,
) -> ZSetDesc:
    """Build a descriptor and put it in normal form.

    ``head`` lists explicit members of the window [lo, hi); when lo or hi is
    omitted the window is the tight hull of the members.  ``left`` and
    ``right`` are (period, pattern) pairs, Tail objects, or None.
    """
    members = {int(x) for x in head}
    if lo is None:
        lo = min(members) if members else 0
    if hi is None:
        hi = max(members) + 1 if members else lo
    if hi < lo:
        raise ValueError(f"head window [{lo}, {hi}) is inverted")
    if any(not lo <= x < hi for x in members):
        raise ValueError("head members must lie inside the head window")
    lt, rt = _tail_arg(left), _tail_arg(right)

    def right_predicts(x: int) -> bool:
        return rt is not None and (x % rt.period) in rt.pattern

    def left_predicts(x: int) -> bool:
        return lt is not None and (x % lt.period) in lt.pattern

    # Shrink the window wherever the boundary membership matches the tail.
    while hi > lo and (hi - 1 in members) == right_predicts(hi - 1):
        members.discard(hi - 1)
        hi -= 1
    while lo < hi and (lo in members) == left_predicts(lo):
        members.discard(lo)
        lo += 1
    if lo == hi:
        # Empty head: only the tail boundary remains.  Equal tails make every
        # boundary equivalent, so pick 0; otherwise slide down to the first
        # point where the tails disagree (at most lcm of the periods away),
        # which is the least faithful boundary and hence canonical.
        if lt == rt:
            lo = hi = 0
        else:
            while left_predicts(lo - 1) == right_predicts(lo - 1):
                lo -= 1
            hi = lo
    return ZSetDesc(lo, hi, frozenset(members), lt, rt)


def periodic(period: int, pattern: Iterable[int]) -> ZSetDesc:
    """The two-sided periodic set {n : n mod period in pattern}."""
    tail = Tail(int(period), frozenset(pattern))
    return zdesc((), 0, 0, tail, tail)


def finite(members: Iterable[int]) -> ZSetDesc:
    return zdesc(members)


def integers() -> ZSetDesc:
    return periodic(1, (0,))


def zcontains(S: ZSetDesc, n: int) -> bool:
    if n < S.lo:
        return S.left is not None and (n % S.left.period) in S.left.pattern
    if n >= S.hi:
        return S.right is not None and (n % S.right.period) in S.right.pattern
    return n in S.head


def is_empty(S: ZSetDesc) -> bool:
    return not S.head and S.left is None and S.right is None


def shift(S: ZSetDesc, t: int) -> ZSetDesc:
    """The translate S + t."""

    def move(tail: Tail | None) -> Tail | None:
        if tail is None:
            return None
        return Tail(tail.period, frozenset((r + t) % tail.period for r in tail.pattern))

    return zdesc(
        (x + t for x in S.head), S.lo + t, S.hi + t, move(S.left), move(S.right)
    )


def banach_upper(S: ZSetDesc) -> Fraction:
    """Upper Banach density: the denser of the two tails; 0 if both are absent."""
    dens = [t.density for t in (S.left, S.right) if t is not None]
    return max(dens, default=Fraction(0))


def banach_lower(S: ZSetDesc) -> Fraction:
    """Lower Banach density: the sparser tail, with an absent tail counting 0."""
    left = S.left.density if S.left is not None else Fraction(0)
    right = S.right.density if S.right is not None else Fraction(0)
    return min(left, right)


def window_density(S: ZSetDesc, lo: int, hi: int) -> Fraction:
    """Counting density |S ∩ [lo, hi)| / (hi - lo).  A window estimate only."""
    if hi <= lo:
        raise ValueError(f"window [{lo}, {hi}) is empty")
    return Fraction(sum(1 for n in range(lo, hi) if zcontains(S, n)), hi - lo)


def _lift(tail: Tail | None, P: int) -> frozenset[int]:
    """Residues mod P whose reduction lies in the tail pattern."""
    if tail is None:
        return frozenset()
    return frozenset(r for r in range(P) if (r % tail.period) in tail.pattern)


def _residue_sum(U: frozenset[int], V: frozenset[int], P: int) -> frozenset[int]:
    return frozenset((u + v) % P for u in U for v in V)


def zsumset(A: ZSetDesc, B: ZSetDesc) -> ZSetDesc:
    """The exact sumset A + B of two eventually periodic sets.

    Tail periods of the result divide the lcm P of the input tail periods.
    The head window is [A.lo + B.lo - 2P, A.hi + B.hi + 2P): beyond it any
    witness pair (a, b) has both coordinates in tail regions, and sliding a
    witness by P preserves both memberships, so membership there is given by
    the residue patterns alone.  Inside the window, membership is decided by
    scanning the finitely many candidate witnesses after the same P-sliding
    normalization.
    """
    if is_empty(A) or is_empty(B):
        raise ValueError("zsumset operands must be non-empty")
    periods = [t.period for t in (A.left, A.right, B.left, B.right) if t is not None]
    P = math.lcm(*periods) if periods else 1

    ra, la = _lift(A.right, P), _lift(A.left, P)
    rb, lb = _lift(B.right, P), _lift(B.left, P)
    head_res_a = frozenset(h % P for h in A.head)
    head_res_b = frozenset(h % P for h in B.head)
    all_a = ra | la | head_res_a
    all_b = rb | lb | head_res_b

    right_pat = _residue_sum(ra, all_b, P) | _residue_sum(all_a, rb, P)
    left_pat = _residue_sum(la, all_b, P) | _residue_sum(all_a, lb, P)
    # Right tail of one operand against left tail of the other covers all of Z.
    two_sided = _residue_sum(ra, lb, P) | _residue_sum(la, rb, P)

    lo = A.lo + B.lo - 2 * P
    hi = A.hi + B.hi + 2 * P

    def member(x: int) -> bool:
        if x % P in two_sided:
            return True
        for a in A.head:
            if zcontains(B, x - a):
                return True
        for b in B.head:
            if zcontains(A, x - b):
                return True
        if A.right is not None and B.right is not None:
            pa, qa = A.right.period, A.right.pattern
            pb, qb = B.right.period, B.right.pattern
            top = min(A.hi + P, x - B.hi + 1)
            for a in range(A.hi, top):
                if a % pa in qa and (x - a) % pb in qb:
                    return True
        if A.left is not None and B.left is not None:
            pa, qa = A.left.period, A.left.pattern
            pb, qb = B.left.period, B.left.pattern
            bottom = max(A.lo - P, x - B.lo + 1)
            for a in range(bottom, A.lo):
                if a % pa in qa and (x - a) % pb in qb:
                    return True
        return False

    members = [x for x in range(lo, hi) if member(x)]
    return zdesc(members, lo, hi, (P, left_pat) if left_pat else None,
                 (P, right_pat) if right_pat else None)


def zsumset_iterated(A: ZSetDesc, k: int) -> ZSetDesc:
    """The k-fold sumset A + ... + A on the integer line."""
    if k < 1:
        raise ValueError(f"iterated sumset needs k >= 1, got {k}")
    out = A
    for _ in range(k - 1):
        out = zsumset(out, A)
    return out


def zset_to_json(S: ZSetDesc) -> dict:
    def tail(t: Tail | None):
        if t is None:
            return None
        return {"period": t.period, "pattern": sorted(t.pattern)}

    return {
        "head": {"lo": S.lo, "hi": S.hi, "members": sorted(S.head)},
        "left": tail(S.left),
        "right": tail(S.right),
    }


def zset_from_json(data: dict) -> ZSetDesc:
    if not isinstance(data, dict) or "head" not in data:
        raise ValueError("descriptor JSON must be an object with a 'head' block")
    head = data["head"]
    for key in ("lo", "hi", "members"):
        if key not in head:
            raise ValueError(f"descriptor head is missing '{key}'")

    def tail(block):
        if block is None:
            return None
        if not isinstance(block, dict) or "period" not in block or "pattern" not in block:
            raise ValueError("tail block needs 'period' and 'pattern'")
        return (block["period"], block["pattern"])

    return zdesc(head["members"], head["lo"], head["hi"],
                 tail(data.get("left")), tail(data.get("right")))
