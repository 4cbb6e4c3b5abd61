"""Exact arithmetic on finite abelian groups.

A group is a product of cyclic factors Z/n_1 x ... x Z/n_m.  Elements are
identified with indices in [0, n_1*...*n_m) through mixed-radix encoding,
the first factor being least significant.  The encoding is fixed so that
serialized index lists are identical across platforms and runs.

Subsets are dense bitmasks (arbitrary-size ints).  A sumset accumulates
translated masks with bitwise OR; translating along one cyclic factor is a
rotation of equally sized bit blocks, so A + B costs |A| * m big-int word
operations rather than |A| * |B| single-element updates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator

__all__ = [
    "GroupSpec",
    "FiniteSet",
    "bit_indices",
    "make_group",
    "finite_set",
    "full_set",
    "sumset",
    "iterated_sumset",
    "negate",
    "translate",
    "group_density",
]


def bit_indices(mask: int) -> Iterator[int]:
    """Yield positions of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class GroupSpec:
    """A finite abelian group given by its cyclic factor orders."""

    orders: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.orders:
            raise ValueError("group needs at least one cyclic factor")
        clean = tuple(int(n) for n in self.orders)
        if any(n < 1 for n in clean):
            raise ValueError(f"factor orders must be positive, got {list(clean)}")
        object.__setattr__(self, "orders", clean)

    @cached_property
    def cardinality(self) -> int:
        return math.prod(self.orders)

    @cached_property
    def strides(self) -> tuple[int, ...]:
        out, s = [], 1
        for n in self.orders:
            out.append(s)
            s *= n
        return tuple(out)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.cardinality) - 1

    @cached_property
    def _rotators(self) -> tuple[tuple[int, int], ...]:
        # Per factor: (bit-block width, repeater with one set bit per block).
        out = []
        for stride, n in zip(self.strides, self.orders):
            block = stride * n
            rep = 0
            for pos in range(0, self.cardinality, block):
                rep |= 1 << pos
            out.append((block, rep))
        return tuple(out)

    def digits(self, index: int) -> tuple[int, ...]:
        """Mixed-radix digits of an element index, least significant first."""
        if not 0 <= index < self.cardinality:
            raise ValueError(f"element index {index} outside group of order {self.cardinality}")
        out = []
        for n in self.orders:
            index, d = divmod(index, n)
            out.append(d)
        return tuple(out)

    def index(self, digits: Iterable[int]) -> int:
        digits = tuple(digits)
        if len(digits) != len(self.orders):
            raise ValueError(f"expected {len(self.orders)} digits, got {len(digits)}")
        out = 0
        for d, n, stride in zip(digits, self.orders, self.strides):
            out += (d % n) * stride
        return out

    def add(self, a: int, b: int) -> int:
        da, db = self.digits(a), self.digits(b)
        return self.index(x + y for x, y in zip(da, db))

    def neg(self, a: int) -> int:
        return self.index(-d for d in self.digits(a))

    def generator(self, j: int) -> int:
        """Index of the unit element of the j-th cyclic factor.

        A trivial factor has only the identity, so its unit is 0.
        """
        return self.strides[j] if self.orders[j] > 1 else 0

    def translate_mask(self, mask: int, g: int) -> int:
        """Translate a subset bitmask by the group element g."""
        for (block, rep), stride, d in zip(self._rotators, self.strides, self.digits(g)):
            if d == 0:
                continue
            s = d * stride
            low = ((1 << (block - s)) - 1) * rep
            high = (((1 << block) - 1) ^ ((1 << (block - s)) - 1)) * rep
            mask = ((mask & low) << s) | ((mask & high) >> (block - s))
        return mask

    def to_json(self) -> dict:
        return {"orders": list(self.orders)}

    @classmethod
    def from_json(cls, data: dict) -> "GroupSpec":
        if not isinstance(data, dict) or "orders" not in data:
            raise ValueError("group JSON must be an object with an 'orders' list")
        orders = data["orders"]
        if not isinstance(orders, list) or not all(isinstance(n, int) for n in orders):
            raise ValueError("group 'orders' must be a list of integers")
        return cls(tuple(orders))


@dataclass(frozen=True)
class FiniteSet:
    """A subset of a finite abelian group, stored as a dense bitmask."""

    group: GroupSpec
    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask > self.group.full_mask:
            raise ValueError("set bitmask does not fit the group")

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def indices(self) -> tuple[int, ...]:
        return tuple(bit_indices(self.mask))

    def __contains__(self, index: int) -> bool:
        return 0 <= index < self.group.cardinality and bool(self.mask >> index & 1)

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[int]:
        return bit_indices(self.mask)

    def to_json(self) -> list[int]:
        return list(self.indices())


def make_group(orders: Iterable[int]) -> GroupSpec:
    """Build a group from cyclic factor orders; rejects empty or non-positive input."""
    return GroupSpec(tuple(orders))


def finite_set(group: GroupSpec, members: Iterable[int]) -> FiniteSet:
    mask = 0
    for x in members:
        if not 0 <= x < group.cardinality:
            raise ValueError(f"element index {x} outside group of order {group.cardinality}")
        mask |= 1 << x
    return FiniteSet(group, mask)


def full_set(group: GroupSpec) -> FiniteSet:
    return FiniteSet(group, group.full_mask)


def _require_nonempty(A: FiniteSet, name: str) -> None:
    if A.mask == 0:
        raise ValueError(f"{name} must be non-empty")


def sumset(A: FiniteSet, B: FiniteSet) -> FiniteSet:
    """All pairwise sums a + b.  Both operands must be non-empty subsets of one group."""
    if A.group != B.group:
        raise ValueError("sumset operands live in different groups")
    _require_nonempty(A, "A")
    _require_nonempty(B, "B")
    small, large = (A, B) if A.size <= B.size else (B, A)
    g = A.group
    out = 0
    for a in small:
        out |= g.translate_mask(large.mask, a)
    return FiniteSet(g, out)


def iterated_sumset(A: FiniteSet, k: int) -> FiniteSet:
    """The k-fold sumset A + ... + A, computed by doubling."""
    if k < 1:
        raise ValueError(f"iterated sumset needs k >= 1, got {k}")
    _require_nonempty(A, "A")
    acc: FiniteSet | None = None
    base = A
    while k:
        if k & 1:
            acc = base if acc is None else sumset(acc, base)
        k >>= 1
        if k:
            base = sumset(base, base)
    assert acc is not None
    return acc


def negate(A: FiniteSet) -> FiniteSet:
    """The set of inverses -a."""
    g = A.group
    out = 0
    for a in A:
        out |= 1 << g.neg(a)
    return FiniteSet(g, out)


def translate(A: FiniteSet, g: int) -> FiniteSet:
    if not 0 <= g < A.group.cardinality:
        raise ValueError(f"element index {g} outside group of order {A.group.cardinality}")
    return FiniteSet(A.group, A.group.translate_mask(A.mask, g))


def group_density(A: FiniteSet) -> Fraction:
    """|A| / |G| as an exact rational (the Banach density on a finite group)."""
    return Fraction(A.size, A.group.cardinality)
