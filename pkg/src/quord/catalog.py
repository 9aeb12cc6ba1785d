"""Small named structures used across tests, suites and docs."""

from __future__ import annotations

from .relations import (
    GroundSet,
    LinearOrder,
    PartialOrder,
    Relation,
    chain_order,
    transitive_closure,
)


def chain(n: int, labels: tuple[str, ...] | None = None) -> LinearOrder:
    return chain_order(GroundSet(n, labels))


def antichain(n: int) -> PartialOrder:
    return PartialOrder.identity(n)


def diamond(labeled: bool = False) -> PartialOrder:
    """The four-element lattice bot < {a, b} < top with a, b incomparable."""
    ground = GroundSet(4, ("bot", "a", "b", "top") if labeled else None)
    cover = [(0, 1), (0, 2), (1, 3), (2, 3)]
    closed = transitive_closure(Relation.from_pairs(ground, cover, reflexive_implicit=True))
    return PartialOrder(ground, closed.rows)


def standard_example(k: int) -> PartialOrder:
    """The classical 2k-element poset: minimal a_i, maximal b_j, a_i < b_j iff i != j."""
    pairs = [(i, k + j) for i in range(k) for j in range(k) if i != j]
    return PartialOrder.from_pairs(2 * k, pairs, reflexive_implicit=True)


def separation_instance() -> tuple[PartialOrder, PartialOrder]:
    """Two disjoint partial orders on 4 elements that no complementary pair separates."""
    p1 = PartialOrder.from_pairs(4, [(0, 1), (2, 3)], reflexive_implicit=True)
    p2 = PartialOrder.from_pairs(4, [(0, 3), (2, 1)], reflexive_implicit=True)
    return p1, p2
