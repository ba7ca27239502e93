"""Genetic bases of abelian p-groups.

A subgroup of an abelian p-group has cyclic quotient exactly when it is
the kernel of a homomorphism into Z/eg, where eg is the group exponent.
Kernels are enumerated from a restricted family of coefficient tuples
(first coordinate ranges over powers of p modulo eg, the rest are free),
deduplicated by their member sets, and returned sorted by
(quotient order, defining tuple).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product

import numpy as np

from .abelian import (
    ENUMERATION_LIMIT,
    AbelianPGroup,
    Element,
    _is_odd_prime,
    _p_power_exponent,
)
from .errors import BadParams, TooLarge


@dataclass(frozen=True)
class CyclicHom:
    """Homomorphism G -> Z/eg sending generator i to (eg/o_i)*coeffs[i]."""

    group: AbelianPGroup
    coeffs: tuple[int, ...]

    @cached_property
    def weights(self) -> tuple[int, ...]:
        eg = self.group.exponent
        return tuple((eg // o) * s % eg for o, s in zip(self.group.orders, self.coeffs))

    def __call__(self, x: Element) -> int:
        return sum(w * c for w, c in zip(self.weights, x)) % self.group.exponent


@dataclass(frozen=True)
class GeneticSubgroupA:
    """Kernel of ``hom``: a subgroup whose quotient is cyclic of order ``index``.

    ``step`` generates the image of ``hom`` inside Z/eg, so
    ``index * step == eg`` and every value of ``hom`` is a multiple of
    ``step``.
    """

    hom: CyclicHom
    index: int
    step: int

    def contains(self, x: Element) -> bool:
        return self.hom(x) == 0


def enumerate_cyclic_homs(G: AbelianPGroup) -> list[CyclicHom]:
    """Coefficient tuples in odometer order.

    The first coordinate runs over {p**x mod eg : 0 <= x <= log_p eg};
    unit rescaling of a tuple never changes the kernel, so this
    restriction loses no subgroups while trimming the search space.
    """
    eg = G.exponent
    e = _p_power_exponent(eg, G.prime) or 0
    first = [pow(G.prime, x, eg) for x in range(e + 1)]
    rest = [range(o) for o in G.orders[1:]]
    return [CyclicHom(G, t) for t in product(first, *rest)]


def _coordinate_matrix(G: AbelianPGroup) -> np.ndarray:
    """|G| x k matrix of element coordinates, rows in lexicographic order."""
    if G.order > ENUMERATION_LIMIT:
        raise TooLarge(
            f"|G| = {G.order} exceeds the enumeration guard {ENUMERATION_LIMIT}"
        )
    k = len(G.orders)
    return np.indices(G.orders, dtype=np.int64).reshape(k, -1).T


@lru_cache(maxsize=None)
def genetic_basis_abelian(G: AbelianPGroup) -> tuple[GeneticSubgroupA, ...]:
    """One subgroup per distinct kernel, sorted by (index, defining tuple).

    Deduplication compares explicit member sets: two homomorphisms count
    as the same basis member exactly when their kernels agree elementwise.
    The first tuple in enumeration order wins.
    """
    coords = _coordinate_matrix(G)
    eg = G.exponent
    chosen: dict[bytes, CyclicHom] = {}
    for hom in enumerate_cyclic_homs(G):
        w = np.asarray(hom.weights, dtype=np.int64)
        kernel_mask = (coords @ w) % eg == 0
        key = np.packbits(kernel_mask).tobytes()
        if key not in chosen:
            chosen[key] = hom
    subs = []
    for hom in chosen.values():
        step = math.gcd(eg, *hom.weights)
        subs.append(GeneticSubgroupA(hom, index=eg // step, step=step))
    subs.sort(key=lambda S: (S.index, S.hom.coeffs))
    return tuple(subs)


def quotient_dlog(S: GeneticSubgroupA, x: Element) -> int:
    """Position of x's class in the cyclic quotient, relative to the
    generator that maps to ``step``."""
    return S.hom(x) // S.step


def cyclic_quotient_count(p: int, n: int, m: int) -> int:
    """Number of cyclic-quotient subgroups of C_{p^n} x C_{p^m} for n <= m."""
    if not _is_odd_prime(p) or not 1 <= n <= m:
        raise BadParams(f"need an odd prime and 1 <= n <= m, got p={p}, n={n}, m={m}")
    return p**n * (m - n + 1) + 2 * (p**n - 1) // (p - 1)
