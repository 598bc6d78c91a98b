"""External direct and semidirect products with canonical embeddings.

Pairs (n, h) are packed as index n * |H| + h, so the identity lands at 0
and product tables are reproducible. The action of a semidirect product is
supplied as a homomorphism into the automorphism group's carrier; the
indexed automorphism family recovers the actual permutations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import MAX_ORDER, FiniteGroup, from_table
from .errors import IncompatibleActionError, InvalidActionError, SizeCapError
from .morphisms import (
    AutGroup,
    Hom,
    Iso,
    automorphism_group,
    identity_iso,
    iso_from_forward,
    make_hom,
    trivial_hom,
)
from .subgroups import Subgroup, subgroup_from_members


@dataclass(frozen=True)
class ProductGroup:
    """A direct or semidirect product, with the pairing made explicit."""

    group: FiniteGroup
    n_factor: FiniteGroup
    h_factor: FiniteGroup
    phi: Hom | None
    aut: AutGroup | None
    embed_n: Hom
    embed_h: Hom
    canonical_n: Subgroup
    canonical_h: Subgroup

    def pair_index(self, n: int, h: int) -> int:
        return n * self.h_factor.order + h

    def unpair(self, x: int) -> tuple[int, int]:
        return divmod(x, self.h_factor.order)

    def action(self, h: int, n: int) -> int:
        """Apply the twisting automorphism of h to n (identity for direct)."""
        if self.phi is None or self.aut is None:
            return n
        return self.aut.perms[self.phi.map[h]][n]


def _assemble(
    n_grp: FiniteGroup,
    h_grp: FiniteGroup,
    action_perms: list[np.ndarray],
    phi: Hom | None,
    aut: AutGroup | None,
) -> ProductGroup:
    nn, nh = n_grp.order, h_grp.order
    size = nn * nh
    if size > MAX_ORDER:
        raise SizeCapError(f"product order {size} exceeds the cap of {MAX_ORDER}")
    tn, th = n_grp.table, h_grp.table
    table = np.empty((size, size), dtype=np.int32)
    for n1 in range(nn):
        for h1 in range(nh):
            acted = tn[n1, action_perms[h1]]
            table[n1 * nh + h1] = (acted[:, None] * nh + th[h1][None, :]).reshape(-1)
    group = from_table(size, table)
    embed_n = make_hom(n_grp, group, [n * nh for n in range(nn)])
    embed_h = make_hom(h_grp, group, list(range(nh)))
    canonical_n = subgroup_from_members(group, embed_n.map)
    canonical_h = subgroup_from_members(group, embed_h.map)
    return ProductGroup(
        group, n_grp, h_grp, phi, aut, embed_n, embed_h, canonical_n, canonical_h
    )


def direct_product(n_grp: FiniteGroup, h_grp: FiniteGroup) -> ProductGroup:
    """Componentwise multiplication on pairs; both factors embed normally."""
    ident = np.arange(n_grp.order, dtype=np.int32)
    return _assemble(n_grp, h_grp, [ident] * h_grp.order, None, None)


def semidirect_product(
    n_grp: FiniteGroup,
    h_grp: FiniteGroup,
    phi: Hom,
    aut: AutGroup | None = None,
) -> ProductGroup:
    """Multiplication (n1, h1)(n2, h2) = (n1 * phi(h1)(n2), h1 h2)."""
    if aut is None:
        aut = automorphism_group(n_grp)
    if aut.base != n_grp:
        raise InvalidActionError("automorphism group does not act on the normal factor")
    if phi.source != h_grp:
        raise InvalidActionError("action homomorphism source is not the H factor")
    if phi.target != aut.carrier:
        raise InvalidActionError("action homomorphism does not land in Aut(N)")
    perms = [np.array(aut.perms[phi.map[h]], dtype=np.int32) for h in range(h_grp.order)]
    return _assemble(n_grp, h_grp, perms, phi, aut)


def sdp_trivial_iso_direct(
    n_grp: FiniteGroup,
    h_grp: FiniteGroup,
    aut: AutGroup | None = None,
) -> Iso:
    """The pair-preserving isomorphism N x_1 H -> N x H (trivial action)."""
    if aut is None:
        aut = automorphism_group(n_grp)
    sdp = semidirect_product(n_grp, h_grp, trivial_hom(h_grp, aut.carrier), aut)
    dp = direct_product(n_grp, h_grp)
    return identity_iso(sdp.group, dp.group)


def product_pair_iso(f1: Iso, f2: Iso, source: ProductGroup, target: ProductGroup) -> Iso:
    """The map (n, h) -> (f1 n, f2 h) between two products, validated."""
    mapping = [0] * source.group.order
    for n in range(source.n_factor.order):
        for h in range(source.h_factor.order):
            mapping[source.pair_index(n, h)] = target.pair_index(f1.apply(n), f2.apply(h))
    return iso_from_forward(make_hom(source.group, target.group, mapping))


def sdp_congr(
    f1: Iso,
    f2: Iso,
    phi1: Hom,
    phi2: Hom,
    source: ProductGroup | None = None,
    target: ProductGroup | None = None,
) -> Iso:
    """Isomorphism N1 x_phi1 H1 -> N2 x_phi2 H2 induced by factor
    isomorphisms f1: N1 -> N2 and f2: H1 -> H2, provided the actions are
    compatible: phi2(f2 h)(f1 n) = f1(phi1(h) n) for all n, h. Raises
    IncompatibleActionError with a witnessing pair otherwise."""
    if source is None:
        source = semidirect_product(f1.source, f2.source, phi1)
    if target is None:
        target = semidirect_product(f1.target, f2.target, phi2)
    for n1 in range(f1.source.order):
        for h1 in range(f2.source.order):
            lhs = target.action(f2.apply(h1), f1.apply(n1))
            rhs = f1.apply(source.action(h1, n1))
            if lhs != rhs:
                raise IncompatibleActionError((n1, h1))
    return product_pair_iso(f1, f2, source, target)
