"""Homomorphisms, isomorphisms, automorphism groups, and the
group-isomorphism decision procedure.

Isomorphisms are found by generator-image backtracking: a greedy minimal
generating sequence of the source (highest element order first) is mapped
onto order-matching candidates in the target, with consistency propagated
through closure. Fingerprints give sound rejection only; equality of
fingerprints never concludes isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import FiniteGroup, from_table
from .errors import (
    BudgetExceededError,
    IdentityNotPreservedError,
    MismatchedParentError,
    NotCyclicSourceError,
    NotMultiplicativeError,
    NotNormalError,
)
from .subgroups import AsGroup, Subgroup, as_group, is_normal

# Caps for automorphism search: number of automorphisms that may be
# materialized as a carrier table, and backtracking nodes per search.
AUT_CARRIER_LIMIT = 2048
SEARCH_NODE_LIMIT = 2_000_000


@dataclass(frozen=True)
class Hom:
    """A total multiplicative map between two finite groups."""

    source: FiniteGroup
    target: FiniteGroup
    map: tuple[int, ...]

    def apply(self, x: int) -> int:
        return self.map[x]

    def then(self, other: Hom) -> Hom:
        """Composite source -> other.target (self first)."""
        return make_hom(self.source, other.target, [other.map[v] for v in self.map])

    def is_trivial(self) -> bool:
        return all(v == 0 for v in self.map)

    def image_size(self) -> int:
        return len(set(self.map))


def make_hom(source: FiniteGroup, target: FiniteGroup, mapping) -> Hom:
    """Validate a candidate map as a homomorphism."""
    m = np.asarray(mapping, dtype=np.int32)
    if m.shape != (source.order,):
        raise ValueError(f"map length {m.shape} does not match source order {source.order}")
    if m.min(initial=0) < 0 or m.max(initial=0) >= target.order:
        raise ValueError("map has out-of-range values")
    if m[0] != 0:
        raise IdentityNotPreservedError("identity is not sent to identity")
    lhs = m[source.table]
    rhs = target.table[m[:, None], m[None, :]]
    if not np.array_equal(lhs, rhs):
        x, y = map(int, np.argwhere(lhs != rhs)[0])
        raise NotMultiplicativeError((x, y))
    return Hom(source, target, tuple(int(v) for v in m))


def trivial_hom(source: FiniteGroup, target: FiniteGroup) -> Hom:
    """Everything to the identity."""
    return Hom(source, target, (0,) * source.order)


def restrict(f: Hom, h: Subgroup, promoted: AsGroup | None = None) -> Hom:
    """Restriction of f to a subgroup of its source, re-indexed via as_group."""
    if h.parent != f.source:
        raise MismatchedParentError("subgroup does not live in the hom's source")
    if promoted is None:
        promoted = as_group(h)
    return make_hom(promoted.group, f.target, [f.map[x] for x in promoted.embed])


@dataclass(frozen=True)
class Iso:
    """A homomorphism with a verified two-sided inverse."""

    forward: Hom
    backward: Hom

    @property
    def source(self) -> FiniteGroup:
        return self.forward.source

    @property
    def target(self) -> FiniteGroup:
        return self.forward.target

    def apply(self, x: int) -> int:
        return self.forward.map[x]

    def inverse(self) -> Iso:
        return Iso(self.backward, self.forward)

    def then(self, other: Iso) -> Iso:
        return Iso(self.forward.then(other.forward), other.backward.then(self.backward))

    def validate(self) -> None:
        """Re-check both compositions against the identity."""
        n = self.source.order
        fwd, bwd = self.forward.map, self.backward.map
        if [bwd[v] for v in fwd] != list(range(n)):
            raise NotMultiplicativeError((0, 0))
        if [fwd[v] for v in bwd] != list(range(self.target.order)):
            raise NotMultiplicativeError((0, 0))


def iso_from_forward(f: Hom) -> Iso:
    """Build an Iso from a bijective Hom, deriving and validating the inverse."""
    n = f.source.order
    if f.target.order != n or len(set(f.map)) != n:
        raise NotMultiplicativeError((0, 0))
    backward = [0] * n
    for x, y in enumerate(f.map):
        backward[y] = x
    iso = Iso(f, make_hom(f.target, f.source, backward))
    iso.validate()
    return iso


def identity_iso(g1: FiniteGroup, g2: FiniteGroup | None = None) -> Iso:
    """The index-identity isomorphism (tables must agree)."""
    if g2 is None:
        g2 = g1
    return iso_from_forward(make_hom(g1, g2, range(g1.order)))


# Fingerprints.


def fingerprint(g: FiniteGroup) -> tuple:
    """Isomorphism-invariant tuple: order, abelian flag, element-order
    multiset, center size, conjugacy-class-size multiset."""
    cached = g._memo.get("fingerprint")
    if cached is None:
        cached = (
            g.order,
            g.is_abelian(),
            tuple(sorted(g.element_orders())),
            g.center_size(),
            g.conjugacy_class_sizes(),
        )
        g._memo["fingerprint"] = cached
    return cached


FINGERPRINT_FIELDS = (
    "orders",
    "abelian flags",
    "element-order multisets",
    "center sizes",
    "conjugacy-class sizes",
)

# Reporting order: the element-order multiset is the most informative
# reason, so it is checked before the coarser abelian flag.
_REPORT_ORDER = (0, 2, 1, 3, 4)


def fingerprint_mismatch(g1: FiniteGroup, g2: FiniteGroup) -> str | None:
    """Name of the first differing fingerprint component, if any."""
    f1, f2 = fingerprint(g1), fingerprint(g2)
    for i in _REPORT_ORDER:
        if f1[i] != f2[i]:
            return FINGERPRINT_FIELDS[i]
    return None


# Generator-image backtracking.


def _element_stats(g: FiniteGroup) -> list[tuple[int, int, int]]:
    """Per-element invariant (order, conjugacy class size, order of the
    square): candidate images in the search must match exactly."""
    cached = g._memo.get("element_stats")
    if cached is None:
        orders = g.element_orders()
        commute_counts = (g.table == g.table.T).sum(axis=0)
        rows = g.rows()
        cached = [
            (orders[x], g.order // int(commute_counts[x]), orders[rows[x][x]])
            for x in range(g.order)
        ]
        g._memo["element_stats"] = cached
    return cached


def generating_sequence(g: FiniteGroup) -> list[int]:
    """Greedy minimal generating sequence, highest element order first."""
    from .core import closure_indices

    orders = g.element_orders()
    seq: list[int] = []
    closed: frozenset[int] = frozenset([0])
    while len(closed) < g.order:
        best = max(
            (x for x in range(g.order) if x not in closed),
            key=lambda x: (orders[x], -x),
        )
        seq.append(best)
        closed = frozenset(closure_indices(g.table, seq))
    return seq


def _spread(g1: FiniteGroup, g2: FiniteGroup, gens: list[int], images: list[int]):
    """Propagate generator images through closure.

    Returns the partial map (length-n list, -1 outside the closure of the
    assigned generators) or None on conflict.
    """
    n = g1.order
    m = [-1] * n
    used = [False] * n
    m[0] = 0
    used[0] = True
    for g, img in zip(gens, images):
        if m[g] == -1:
            if used[img]:
                return None
            m[g] = img
            used[img] = True
        elif m[g] != img:
            return None
    t1, t2 = g1.rows(), g2.rows()
    frontier = [0]
    queued = [False] * n
    queued[0] = True
    pos = 0
    while pos < len(frontier):
        x = frontier[pos]
        pos += 1
        fx = m[x]
        for g, img in zip(gens, images):
            y = t1[x][g]
            w = t2[fx][img]
            if m[y] == -1:
                if used[w]:
                    return None
                m[y] = w
                used[w] = True
            elif m[y] != w:
                return None
            if not queued[y]:
                queued[y] = True
                frontier.append(y)
    return m


def _image_search(
    g1: FiniteGroup,
    g2: FiniteGroup,
    *,
    find_all: bool,
    limit: int | None = None,
) -> list[tuple[int, ...]]:
    """All (or the first) generator-image assignments extending to isomorphisms."""
    n = g1.order
    gens = generating_sequence(g1)
    stats1 = _element_stats(g1)
    stats2 = _element_stats(g2) if g2 is not g1 else stats1
    if sorted(stats1) != sorted(stats2):
        return []
    candidates = [
        [y for y in range(n) if stats2[y] == stats1[g]] for g in gens
    ]
    found: list[tuple[int, ...]] = []
    nodes = 0

    def rec(depth: int, images: list[int]) -> bool:
        nonlocal nodes
        for img in candidates[depth]:
            nodes += 1
            if nodes > SEARCH_NODE_LIMIT:
                raise BudgetExceededError("isomorphism search node budget exceeded")
            m = _spread(g1, g2, gens[: depth + 1], images + [img])
            if m is None:
                continue
            if depth + 1 == len(gens):
                found.append(tuple(m))
                if not find_all:
                    return True
                if limit is not None and len(found) > limit:
                    raise BudgetExceededError(
                        f"more than {limit} automorphisms; raise the carrier limit"
                    )
            elif rec(depth + 1, images + [img]):
                return True
        return False

    if n == 1:
        return [(0,)]
    rec(0, [])
    return found


def find_isomorphism(g1: FiniteGroup, g2: FiniteGroup) -> Iso | None:
    """An explicit isomorphism g1 -> g2, or None if the groups are not
    isomorphic. Fingerprint mismatch rejects fast; otherwise the
    backtracking search is complete."""
    if g1.order != g2.order:
        return None
    if np.array_equal(g1.table, g2.table):
        return identity_iso(g1, g2)
    if fingerprint(g1) != fingerprint(g2):
        return None
    maps = _image_search(g1, g2, find_all=False)
    if not maps:
        return None
    return iso_from_forward(make_hom(g1, g2, maps[0]))


# Automorphism groups.


@dataclass(frozen=True)
class AutGroup:
    """The automorphism group of a group, materialized as a FiniteGroup.

    Element i of the carrier is the automorphism autos[i]; index 0 is the
    identity automorphism and the carrier operation is composition.
    """

    base: FiniteGroup
    carrier: FiniteGroup
    autos: tuple[Iso, ...]
    perms: tuple[tuple[int, ...], ...]
    _index: dict[tuple[int, ...], int] = field(repr=False, compare=False, default=None)

    def auto_index(self, perm: tuple[int, ...]) -> int:
        """Carrier index of an automorphism given as a permutation of base."""
        return self._index[perm]

    def act(self, auto_idx: int, x: int) -> int:
        """Apply automorphism auto_idx to base element x."""
        return self.perms[auto_idx][x]


def automorphism_group(g: FiniteGroup, carrier_limit: int = AUT_CARRIER_LIMIT) -> AutGroup:
    """All automorphisms of g, found by generator-image backtracking."""
    maps = _image_search(g, g, find_all=True, limit=carrier_limit)
    ident = tuple(range(g.order))
    perms = tuple([ident] + sorted(m for m in maps if m != ident))
    if len(perms) > carrier_limit:
        raise BudgetExceededError(
            f"{len(perms)} automorphisms exceed the carrier limit {carrier_limit}"
        )
    index = {p: i for i, p in enumerate(perms)}
    k = len(perms)
    arrs = [np.array(p, dtype=np.int32) for p in perms]
    table = np.empty((k, k), dtype=np.int32)
    for i in range(k):
        for j in range(k):
            table[i, j] = index[tuple(int(v) for v in arrs[i][arrs[j]])]
    carrier = from_table(k, table)
    autos = tuple(iso_from_forward(make_hom(g, g, p)) for p in perms)
    return AutGroup(g, carrier, autos, perms, index)


def conjugation_perm(g: FiniteGroup, promoted: AsGroup, x: int) -> tuple[int, ...]:
    """The permutation n -> x n x^-1 of a promoted normal subgroup."""
    return tuple(promoted.section[g.conj(m, x)] for m in promoted.embed)


def conj_normal(
    g: FiniteGroup,
    n: Subgroup,
    promoted: AsGroup | None = None,
    aut: AutGroup | None = None,
) -> Hom:
    """The conjugation homomorphism g -> Aut(N) for a normal subgroup N,
    landing in the automorphism group's carrier."""
    if not is_normal(n):
        raise NotNormalError("N")
    if promoted is None:
        promoted = as_group(n)
    if aut is None:
        aut = automorphism_group(promoted.group)
    mapping = [aut.auto_index(conjugation_perm(g, promoted, x)) for x in range(g.order)]
    return make_hom(g, aut.carrier, mapping)


def homs_to_aut(p: FiniteGroup, a: AutGroup) -> list[Hom]:
    """All homomorphisms from a cyclic group into an automorphism group's
    carrier, enumerated by the image of the generator. The trivial
    homomorphism comes first."""
    gen = p.cyclic_generator()
    if gen is None:
        raise NotCyclicSourceError("hom enumeration needs a cyclic source")
    n = p.order
    powers = [p.power(gen, j) for j in range(n)]
    carrier = a.carrier
    homs: list[Hom] = []
    for img in range(carrier.order):
        if n % carrier.element_order(img) != 0:
            continue
        mapping = [0] * n
        for j in range(n):
            mapping[powers[j]] = carrier.power(img, j)
        homs.append(make_hom(p, carrier, mapping))
    return homs
