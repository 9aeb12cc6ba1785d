"""Shared hypothesis strategies for relation-valued tests."""

from __future__ import annotations

from hypothesis import strategies as st

from quord import (
    BoxDecomposition,
    GroundSet,
    LinearOrder,
    PartialOrder,
    Quasiorder,
    Relation,
    chain_order,
    induced_order,
    reconstruct_from_boxes,
    transitive_closure,
)


@st.composite
def relations(draw, max_n: int = 5) -> Relation:
    n = draw(st.integers(0, max_n))
    if n == 0:
        return Relation(GroundSet(0), ())
    pairs = draw(
        st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=n * n)
    )
    return Relation.from_pairs(n, pairs)


@st.composite
def quasiorders(draw, max_n: int = 5, min_n: int = 0) -> Quasiorder:
    n = draw(st.integers(min_n, max_n))
    if n == 0:
        return Quasiorder(GroundSet(0), ())
    pairs = draw(
        st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=n * n)
    )
    base = Relation.from_pairs(n, pairs, reflexive_implicit=True)
    return Quasiorder(base.ground, transitive_closure(base).rows)


@st.composite
def posets(draw, max_n: int = 5, min_n: int = 0) -> PartialOrder:
    q = draw(quasiorders(max_n=max_n, min_n=min_n))
    return induced_order(q).induced


@st.composite
def linear_orders(draw, n: int) -> LinearOrder:
    perm = draw(st.permutations(range(n)))
    return chain_order(GroundSet(n), tuple(perm))


@st.composite
def halfspaces(draw, max_n: int = 5, antisymmetric: bool = False):
    n = draw(st.integers(0, max_n))
    perm = draw(st.permutations(range(n)))
    boxes = []
    flags = []
    i = 0
    while i < n:
        size = draw(st.integers(1, n - i))
        box = tuple(sorted(perm[i : i + size]))
        boxes.append(box)
        if len(box) == 1 or antisymmetric:
            flags.append(False)
        else:
            flags.append(draw(st.booleans()))
        i += size
    return reconstruct_from_boxes(BoxDecomposition(GroundSet(n), tuple(boxes), tuple(flags)))
