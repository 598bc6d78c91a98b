"""Concrete finite groups as validated Cayley tables.

A group of order n is a dense n x n table of element indices with the
identity pinned at index 0. Validation checks all four structural
invariants (identity, Latin property, associativity, inverses); any
group object in circulation has passed them.
"""

from __future__ import annotations

import math
from itertools import permutations
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    NoIdentityError,
    NoInverseError,
    NotAssociativeError,
    NotClosedError,
    NotLatinError,
    SizeCapError,
)

MAX_ORDER = 4096

# Above this order the full O(n^3) associativity scan is replaced by a
# generator-based check (equivalent, but O(n^2 * generators)).
_FULL_ASSOC_LIMIT = 256


def closure_indices(table: np.ndarray, gens: Iterable[int]) -> tuple[int, ...]:
    """Smallest subset containing 0 and the generators, closed under the table."""
    members = {0}
    frontier = [0]
    for g in gens:
        if g not in members:
            members.add(int(g))
            frontier.append(int(g))
    while frontier:
        new: list[int] = []
        snapshot = list(members)
        for a in snapshot:
            row = table[a]
            for b in frontier:
                for c in (int(row[b]), int(table[b][a])):
                    if c not in members:
                        members.add(c)
                        new.append(c)
        frontier = new
    return tuple(sorted(members))


def _generating_set(table: np.ndarray) -> list[int]:
    """Greedy generating set: repeatedly adjoin the smallest missing index."""
    n = table.shape[0]
    gens: list[int] = []
    closed: tuple[int, ...] = (0,)
    while len(closed) < n:
        missing = next(i for i in range(n) if i not in set(closed))
        gens.append(missing)
        closed = closure_indices(table, gens)
    return gens


def _associativity_witness(table: np.ndarray) -> tuple[int, int, int] | None:
    """Return a triple violating associativity, or None if there is none."""
    n = table.shape[0]
    if n <= _FULL_ASSOC_LIMIT:
        for i in range(n):
            lhs = table[table[i], :]
            rhs = table[i, table]
            if not np.array_equal(lhs, rhs):
                j, k = map(int, np.argwhere(lhs != rhs)[0])
                return (i, j, k)
        return None
    # Generator-based check: for a quasigroup with identity, associativity
    # on triples (x, g, y) with g running over a generating set implies full
    # associativity (Light's criterion).
    for g in _generating_set(table):
        lhs = table[table[:, g], :]
        rhs = table[:, table[g, :]]
        if not np.array_equal(lhs, rhs):
            x, y = map(int, np.argwhere(lhs != rhs)[0])
            return (x, int(g), y)
    return None


class FiniteGroup:
    """A finite group on elements 0..order-1, identity at 0, immutable."""

    __slots__ = ("order", "table", "inverse", "_hash", "_orders", "_rows", "_memo")

    def __init__(self, order: int, table: np.ndarray, inverse: np.ndarray):
        # Internal constructor: callers go through from_table().
        self.order = order
        self.table = table
        self.inverse = inverse
        self._hash: int | None = None
        self._orders: tuple[int, ...] | None = None
        self._rows: list[list[int]] | None = None
        self._memo: dict = {}  # derived-invariant cache (values immutable)

    # Arithmetic.

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def inv(self, i: int) -> int:
        return int(self.inverse[i])

    def conj(self, x: int, g: int) -> int:
        """g * x * g^-1."""
        return int(self.table[self.table[g, x], self.inverse[g]])

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inv(x), -k
        acc = 0
        base = x
        while k:
            if k & 1:
                acc = int(self.table[acc, base])
            base = int(self.table[base, base])
            k >>= 1
        return acc

    def element_order(self, x: int) -> int:
        if not 0 <= x < self.order:
            raise IndexError(f"element {x} out of range for order {self.order}")
        rows = self.rows()
        m = 1
        y = x
        while y != 0:
            y = rows[y][x]
            m += 1
        return m

    def element_orders(self) -> tuple[int, ...]:
        """Order of every element, indexed by element."""
        if self._orders is None:
            self._orders = tuple(self.element_order(x) for x in range(self.order))
        return self._orders

    # Structure predicates.

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def cyclic_generator(self) -> int | None:
        """Smallest-index element of full order, or None if not cyclic."""
        for x, m in enumerate(self.element_orders()):
            if m == self.order:
                return x
        return None

    def is_cyclic(self) -> bool:
        return self.cyclic_generator() is not None

    def center_size(self) -> int:
        t = self.table
        return sum(1 for x in range(self.order) if np.array_equal(t[x], t[:, x]))

    def conjugacy_class_sizes(self) -> tuple[int, ...]:
        """Sizes of the conjugacy classes, sorted ascending.

        The class of x has size order / |centralizer(x)|, and each class of
        size s contributes s elements with that centralizer index."""
        commute_counts = (self.table == self.table.T).sum(axis=0)
        sizes = self.order // commute_counts
        out: list[int] = []
        for s in sorted(set(sizes.tolist())):
            count = int((sizes == s).sum())
            out.extend([int(s)] * (count // s))
        return tuple(out)

    def validate(self) -> None:
        """Re-run the full construction-time validation pass."""
        _validate(self.order, self.table)

    # Value semantics.

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.order == other.order and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.order, self.table.tobytes()))
        return self._hash

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"

    def rows(self) -> list[list[int]]:
        """Table as plain nested lists (cached; callers must not mutate)."""
        if self._rows is None:
            self._rows = self.table.tolist()
        return self._rows


def _validate(n: int, table: np.ndarray) -> np.ndarray:
    """Check all group axioms on an n x n index table; return the inverse array."""
    if n < 1:
        raise SizeCapError("order must be at least 1")
    if n > MAX_ORDER:
        raise SizeCapError(f"order {n} exceeds the cap of {MAX_ORDER}")
    if table.shape != (n, n):
        raise NotClosedError(f"table shape {table.shape} does not match order {n}")
    if table.min(initial=0) < 0 or table.max(initial=0) >= n:
        bad = np.argwhere((table < 0) | (table >= n))[0]
        raise NotClosedError(f"entry at row {bad[0]}, column {bad[1]} out of range")
    idx = np.arange(n)
    if not (np.array_equal(table[0], idx) and np.array_equal(table[:, 0], idx)):
        raise NoIdentityError("index 0 is not a two-sided identity")
    if not np.array_equal(np.sort(table, axis=1), np.broadcast_to(idx, (n, n))):
        row = next(i for i in range(n) if len(set(table[i].tolist())) != n)
        raise NotLatinError(f"row {row} repeats an entry")
    if not np.array_equal(np.sort(table, axis=0), np.broadcast_to(idx[:, None], (n, n))):
        col = next(j for j in range(n) if len(set(table[:, j].tolist())) != n)
        raise NotLatinError(f"column {col} repeats an entry")
    triple = _associativity_witness(table)
    if triple is not None:
        raise NotAssociativeError(triple)
    rows_idx, cols_idx = np.nonzero(table == 0)
    inverse = np.empty(n, dtype=table.dtype)
    inverse[rows_idx] = cols_idx
    if not np.array_equal(table[inverse, idx], np.zeros(n, dtype=table.dtype)):
        raise NoInverseError("an element lacks a two-sided inverse")
    return inverse


def from_table(order: int, table: Sequence[Sequence[int]] | np.ndarray) -> FiniteGroup:
    """Validate an index table and wrap it as a FiniteGroup."""
    arr = np.array(table, dtype=np.int32)
    if arr.ndim != 2:
        raise NotClosedError(f"table must be two-dimensional, got shape {arr.shape}")
    inverse = _validate(order, arr)
    arr.setflags(write=False)
    inverse.setflags(write=False)
    return FiniteGroup(order, arr, inverse)


def cyclic_group(n: int) -> FiniteGroup:
    """The cyclic group of order n; element i is the generator to the power i."""
    if n < 1:
        raise SizeCapError("cyclic group order must be at least 1")
    idx = np.arange(n, dtype=np.int32)
    table = (idx[:, None] + idx[None, :]) % n
    return from_table(n, table)


def symmetric_group(k: int) -> FiniteGroup:
    """The symmetric group on {0..k-1}; elements are permutations in
    lexicographic one-line order (the identity permutation is index 0)."""
    if k < 1:
        raise SizeCapError("symmetric group degree must be at least 1")
    n = math.factorial(k)
    if n > MAX_ORDER:
        raise SizeCapError(f"degree {k} gives order {n}, beyond the cap of {MAX_ORDER}")
    perms = list(permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    table = np.empty((n, n), dtype=np.int32)
    for i, sigma in enumerate(perms):
        for j, tau in enumerate(perms):
            table[i, j] = index[tuple(sigma[t] for t in tau)]
    return from_table(n, table)
