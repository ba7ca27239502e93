"""SK1 of the integral group ring of a finite abelian p-group, p odd.

The target is the product of the nontrivial cyclic quotients attached to
the genetic basis, one column per subgroup.  Relation rows come in two
flavours: diagonal seeds recording the column orders, and rows
recording, for a reference element h, the classes of the distinguished
generators in every quotient whose subgroup contains h.  The cokernel of
the combined rows is the computed decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .abelian import AbelianPGroup, Element, enumerate_elements
from .errors import TooLarge
from .genetic import GeneticSubgroupA, genetic_basis_abelian, quotient_dlog
from .snf import CyclicDecomposition, cokernel_decomposition

REPRESENTATIVES = "representatives"
EXHAUSTIVE = "exhaustive"
STRATEGIES = (REPRESENTATIVES, EXHAUSTIVE)

DEFAULT_MAX_ORDER = 3**6


@dataclass(frozen=True)
class TargetProduct:
    """Columns of the relation lattice: one cyclic quotient per basis
    member with nontrivial quotient."""

    columns: tuple[tuple[GeneticSubgroupA, int], ...]

    @property
    def subgroups(self) -> tuple[GeneticSubgroupA, ...]:
        return tuple(S for S, _ in self.columns)

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(o for _, o in self.columns)


@dataclass(frozen=True, eq=False)
class RelationSet:
    """Relation rows over a target product: seeds first, duplicates removed."""

    target: TargetProduct
    rows: np.ndarray


def target_product(G: AbelianPGroup, basis=None) -> TargetProduct:
    if basis is None:
        basis = genetic_basis_abelian(G)
    return TargetProduct(tuple((S, S.index) for S in basis if S.index > 1))


def relation_row(G: AbelianPGroup, basis, h: Element, gen: Element) -> list[int]:
    """Entry per nontrivial column: class of gen in G/S when h lies in S, else 0."""
    row = []
    for S in basis:
        if S.index == 1:
            continue
        row.append(quotient_dlog(S, gen) if S.contains(h) else 0)
    return row


def relation_matrix(
    G: AbelianPGroup,
    basis=None,
    strategy: str = REPRESENTATIVES,
    max_order: int = DEFAULT_MAX_ORDER,
) -> RelationSet:
    """Seed rows plus one relation row per (reference element, generator) pair.

    ``representatives`` uses one reference element per basis member, the
    element whose coordinates equal the member's defining tuple (the
    identity for the zero tuple).  ``exhaustive`` runs every group
    element through, guarded by ``max_order``.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    if basis is None:
        basis = genetic_basis_abelian(G)
    target = target_product(G, basis)
    cols = target.subgroups
    eg = G.exponent
    k = len(G.orders)
    if strategy == EXHAUSTIVE:
        if G.order > max_order:
            raise TooLarge(
                f"|G| = {G.order} exceeds the exhaustive-strategy guard {max_order}"
            )
        refs = np.array(enumerate_elements(G), dtype=np.int64)
    else:
        refs = np.array([S.hom.coeffs for S in basis], dtype=np.int64)
    weights = np.array([S.hom.weights for S in cols], dtype=np.int64)
    steps = np.array([S.step for S in cols], dtype=np.int64)
    member = (refs @ weights.T) % eg == 0
    # Class of generator e_i in column c is weights[c, i] // steps[c].
    gen_dlog = weights.T // steps
    seeds = np.diag(np.array(target.orders, dtype=np.int64))
    chunks = [seeds]
    seen = {bytes(r.tobytes()) for r in seeds}
    for mask in member:
        for g in range(k):
            v = np.where(mask, gen_dlog[g], 0)
            key = v.tobytes()
            if key not in seen:
                seen.add(key)
                chunks.append(v[None, :])
    return RelationSet(target, np.concatenate(chunks, axis=0))


_SK1_CACHE: dict = {}


def sk1(
    G: AbelianPGroup,
    strategy: str = REPRESENTATIVES,
    max_order: int = DEFAULT_MAX_ORDER,
) -> CyclicDecomposition:
    """Cyclic decomposition of the torsion part of the Whitehead group of G.

    Results are cached per (group, strategy); the computation is pure, so
    repeated calls are free.
    """
    key = (G, strategy)
    hit = _SK1_CACHE.get(key)
    if hit is not None:
        return hit
    rel = relation_matrix(G, strategy=strategy, max_order=max_order)
    dec = cokernel_decomposition(rel.rows)
    _SK1_CACHE[key] = dec
    return dec
