"""Exact arithmetic for finite abelian p-groups with p odd.

A group is a direct product of cyclic factors of p-power order, stored
as a descending tuple of factor orders.  Elements are exponent tuples,
one coordinate per factor, reduced modulo the factor order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from .errors import DimensionMismatch, NonOddPrime, NotPPower, TooLarge

# Hard ceiling on brute-force element enumeration: fail fast instead of
# thrashing on groups sized beyond desk scale.
ENUMERATION_LIMIT = 10**7

Element = tuple[int, ...]


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _p_power_exponent(value: int, p: int) -> int | None:
    """Return e >= 1 with value == p**e, or None if value is not such a power."""
    if value < p:
        return None
    e = 0
    while value % p == 0:
        value //= p
        e += 1
    return e if value == 1 else None


@dataclass(frozen=True)
class AbelianPGroup:
    prime: int
    orders: tuple[int, ...]

    @property
    def exponent(self) -> int:
        return self.orders[0]

    @property
    def order(self) -> int:
        return math.prod(self.orders)

    def identity(self) -> Element:
        return (0,) * len(self.orders)

    def generators(self) -> list[Element]:
        k = len(self.orders)
        return [tuple(int(i == j) for j in range(k)) for i in range(k)]

    def __str__(self) -> str:
        return "x".join(f"C{o}" for o in self.orders)


def make_group(p: int, orders) -> AbelianPGroup:
    """Build the product of cyclic groups of the given p-power orders.

    Orders are normalized to descending order, so the first factor always
    realizes the group exponent.
    """
    if not _is_odd_prime(p):
        raise NonOddPrime(f"p must be an odd prime, got {p}")
    orders = [int(o) for o in orders]
    if not orders:
        raise ValueError("at least one cyclic factor is required")
    for o in orders:
        if _p_power_exponent(o, p) is None:
            raise NotPPower(f"{o} is not a positive power of {p}")
    return AbelianPGroup(p, tuple(sorted(orders, reverse=True)))


def mul(G: AbelianPGroup, x: Element, y: Element) -> Element:
    """Componentwise sum modulo the factor orders."""
    if len(x) != len(G.orders) or len(y) != len(G.orders):
        raise DimensionMismatch(
            f"elements of {G} need {len(G.orders)} coordinates, got {len(x)} and {len(y)}"
        )
    return tuple((a + b) % o for a, b, o in zip(x, y, G.orders))


def element_order(G: AbelianPGroup, x: Element) -> int:
    """Least t >= 1 with t*x = 0, via the factor orders."""
    return math.lcm(*(o // math.gcd(c % o, o) for c, o in zip(x, G.orders)))


def enumerate_elements(G: AbelianPGroup) -> list[Element]:
    """All elements in lexicographic coordinate order."""
    if G.order > ENUMERATION_LIMIT:
        raise TooLarge(
            f"|G| = {G.order} exceeds the enumeration guard {ENUMERATION_LIMIT}"
        )
    return list(product(*(range(o) for o in G.orders)))
