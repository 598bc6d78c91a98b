"""Subgroups as validated subsets, the complete lattice on them, and
prime-order element/subgroup extraction."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

import numpy as np

from .core import FiniteGroup, closure_indices, from_table
from .errors import (
    MismatchedParentError,
    NoSuchElementError,
    NotPrimeError,
    NotSubgroupError,
    OnlyOneSubgroupError,
)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Subgroup:
    """A subset of a parent group's elements, closed under its operation."""

    parent: FiniteGroup
    members: tuple[int, ...]
    _member_set: frozenset[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_member_set", frozenset(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self._member_set

    def is_trivial(self) -> bool:
        return len(self.members) == 1

    def is_full(self) -> bool:
        return len(self.members) == self.parent.order


def subgroup_from_members(parent: FiniteGroup, members: Iterable[int]) -> Subgroup:
    """Validate a member set (identity, closure, inverses, Lagrange)."""
    mset = {int(x) for x in members} | {0}
    for x in mset:
        if not 0 <= x < parent.order:
            raise NotSubgroupError(f"index {x} out of range")
        if parent.inv(x) not in mset:
            raise NotSubgroupError(f"inverse of {x} missing")
        for y in mset:
            if parent.mul(x, y) not in mset:
                raise NotSubgroupError(f"product {x}*{y} escapes the member set")
    if parent.order % len(mset) != 0:
        # Unreachable for genuinely closed sets; kept as a hard invariant check.
        raise NotSubgroupError("member count does not divide the group order")
    return Subgroup(parent, tuple(sorted(mset)))


def closure(parent: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing the generators."""
    members = closure_indices(parent.table, [int(g) for g in gens])
    return Subgroup(parent, members)


def bot(parent: FiniteGroup) -> Subgroup:
    return Subgroup(parent, (0,))


def top(parent: FiniteGroup) -> Subgroup:
    return Subgroup(parent, tuple(range(parent.order)))


def _check_same_parent(a: Subgroup, b: Subgroup) -> None:
    if a.parent is not b.parent and a.parent != b.parent:
        raise MismatchedParentError("subgroups have different parent groups")


def meet(a: Subgroup, b: Subgroup) -> Subgroup:
    """Intersection (always a subgroup)."""
    _check_same_parent(a, b)
    return Subgroup(a.parent, tuple(sorted(set(a.members) & set(b.members))))


def join(a: Subgroup, b: Subgroup) -> Subgroup:
    """Subgroup generated by the union."""
    _check_same_parent(a, b)
    return closure(a.parent, a.members + b.members)


def is_normal(h: Subgroup) -> bool:
    g = h.parent
    for x in range(g.order):
        for m in h.members:
            if g.conj(m, x) not in h:
                return False
    return True


def conjugate_subgroup(h: Subgroup, g: int) -> Subgroup:
    """The subgroup g H g^-1."""
    return Subgroup(h.parent, tuple(sorted(h.parent.conj(m, g) for m in h.members)))


def element_of_order(group: FiniteGroup, p: int) -> int:
    """Smallest-index element of order exactly p (p a prime dividing |G|)."""
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if group.order % p != 0:
        raise NoSuchElementError(f"{p} does not divide the group order {group.order}")
    for x, m in enumerate(group.element_orders()):
        if m == p:
            return x
    # Cauchy's theorem guarantees the scan above succeeds.
    raise NoSuchElementError(f"no element of order {p} found")


def subgroup_of_order(group: FiniteGroup, p: int) -> Subgroup:
    """The cyclic subgroup generated by the smallest element of order p."""
    return closure(group, [element_of_order(group, p)])


def distinct_subgroups_of_order(group: FiniteGroup, p: int) -> tuple[Subgroup, Subgroup]:
    """Two distinct order-p subgroups of a noncyclic group of order p^2."""
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    first: Subgroup | None = None
    for x, m in enumerate(group.element_orders()):
        if m != p:
            continue
        candidate = closure(group, [x])
        if first is None:
            first = candidate
        elif candidate.members != first.members:
            return first, candidate
    raise OnlyOneSubgroupError(f"only one subgroup of order {p} exists")


class AsGroup(NamedTuple):
    """A subgroup re-indexed as a standalone group.

    embed maps subgroup indices to parent indices; section is the inverse map.
    """

    group: FiniteGroup
    embed: tuple[int, ...]
    section: dict[int, int]


def as_group(h: Subgroup) -> AsGroup:
    """Promote a subgroup to a FiniteGroup of its own (identity stays at 0)."""
    members = h.members
    section = {m: i for i, m in enumerate(members)}
    k = len(members)
    table = np.empty((k, k), dtype=np.int32)
    parent = h.parent
    for i, a in enumerate(members):
        for j, b in enumerate(members):
            table[i, j] = section[parent.mul(a, b)]
    return AsGroup(from_table(k, table), members, section)
