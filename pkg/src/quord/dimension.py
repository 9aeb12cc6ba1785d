"""Exact half-space dimension and order dimension, plus realizer transforms.

Both dimensions are found by increasing-cardinality search over an
explicitly enumerated candidate pool (half-spaces containing the target,
respectively linear extensions).  Searches are sequential and return the
lexicographically first minimal witness under the documented enumeration
order, so results are reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Iterator, Sequence

from .errors import InputError, PreconditionError, ResourceCapError, ValidationError
from .extensions import linearize_halfspace, szpilrajn_extension, tighten_halfspace
from .halfspaces import (
    BoxDecomposition,
    HalfSpace,
    box_decomposition,
    is_halfspace,
)
from .relations import (
    Equivalence,
    GroundSet,
    LinearOrder,
    PartialOrder,
    Quasiorder,
    QuotientMap,
    Relation,
    _iter_bits,
    chain_order,
    induced_order,
)

HS_ENUM_MAX = 7
HS_DIM_MAX = 7
ORDER_DIM_MAX = 8


# -- enumeration -----------------------------------------------------------


def _ascending_submasks(mask: int) -> list[int]:
    subs = []
    sub = mask
    while sub:
        subs.append(sub)
        sub = (sub - 1) & mask
    subs.reverse()
    return subs


def _iter_box_specs(n: int) -> Iterator[tuple[tuple[tuple[int, ...], ...], tuple[bool, ...]]]:
    """All ordered box stacks on n elements, lowest box first.

    Order: the lowest box ranges over nonempty subsets of the remaining
    elements in ascending bitmask order, empty flag before full, then
    recursively.  Singleton boxes are always empty.
    """
    boxes: list[tuple[int, ...]] = []
    flags: list[bool] = []

    def rec(remaining: int):
        if not remaining:
            yield tuple(boxes), tuple(flags)
            return
        for sub in _ascending_submasks(remaining):
            box = tuple(_iter_bits(sub))
            options = (False,) if len(box) == 1 else (False, True)
            boxes.append(box)
            for flag in options:
                flags.append(flag)
                yield from rec(remaining ^ sub)
                flags.pop()
            boxes.pop()

    yield from rec((1 << n) - 1)


def enumerate_halfspaces(n: int) -> Iterator[HalfSpace]:
    """Every half-space on n elements exactly once, generated from box stacks."""
    if n > HS_ENUM_MAX:
        raise ResourceCapError(f"half-space enumeration capped at n <= {HS_ENUM_MAX}")
    if n < 0:
        raise InputError("n must be nonnegative")
    ground = GroundSet(n)
    from .halfspaces import _rows_from_boxes

    for boxes, flags in _iter_box_specs(n):
        yield HalfSpace(ground, _rows_from_boxes(n, boxes, flags))


@lru_cache(maxsize=None)
def all_halfspaces(n: int) -> tuple[HalfSpace, ...]:
    return tuple(enumerate_halfspaces(n))


def enumerate_halfspaces_above(g: Quasiorder) -> Iterator[HalfSpace]:
    """Exactly the half-spaces containing g, in enumeration order."""
    relabel = g.ground != GroundSet(g.ground.size)
    for h in all_halfspaces(g.ground.size):
        if all(a & ~b == 0 for a, b in zip(g.rows, h.rows)):
            yield HalfSpace(g.ground, h.rows) if relabel else h


def linear_extensions(p: PartialOrder) -> Iterator[LinearOrder]:
    """All linear extensions of p, ascending lexicographically by element sequence."""
    n = p.ground.size
    preds = [0] * n
    for i in range(n):
        for j in _iter_bits(p.rows[i]):
            if j != i:
                preds[j] |= 1 << i
    seq: list[int] = []

    def rec(remaining: int):
        if not remaining:
            yield chain_order(p.ground, tuple(seq))
            return
        for x in _iter_bits(remaining):
            if preds[x] & remaining:
                continue
            seq.append(x)
            yield from rec(remaining ^ (1 << x))
            seq.pop()

    yield from rec((1 << n) - 1)


# -- minimal covering search ------------------------------------------------


def _first_cover(masks: Sequence[int], need: int, k: int) -> tuple[int, ...] | None:
    """Lexicographically first k-subset of masks whose union is exactly need."""
    m = len(masks)
    if k > m:
        return None
    suffix = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        suffix[i] = suffix[i + 1] | masks[i]
    chosen: list[int] = []
    failed: set[tuple[int, int, int]] = set()

    def rec(start: int, acc: int, depth: int) -> bool:
        if depth == k - 1:
            # last pick: first index completing the cover
            for i in range(start, m):
                if acc | masks[i] == need:
                    chosen.append(i)
                    return True
                if acc | suffix[i] != need:
                    return False
            return False
        key = (start, depth, acc)
        if key in failed:
            return False
        for i in range(start, m - (k - depth) + 1):
            if acc | suffix[i] != need:
                break
            chosen.append(i)
            if rec(i + 1, acc | masks[i], depth + 1):
                return True
            chosen.pop()
        failed.add(key)
        return False

    if k == 0:
        return () if need == 0 else None
    return tuple(chosen) if rec(0, 0, 0) else None


# -- dimensions -------------------------------------------------------------


@dataclass(frozen=True)
class Realizer:
    """A family of half-spaces whose intersection is the target."""

    target: Quasiorder
    parts: tuple[HalfSpace, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise ValidationError("nonempty-realizer", ())
        for part in self.parts:
            if part.ground != self.target.ground:
                raise InputError("realizer parts live on a different ground set")
        meet = reduce(Relation.intersection, self.parts)
        if meet != Relation(self.target.ground, self.target.rows):
            diff = meet.union(self.target).difference(meet.intersection(self.target))
            raise ValidationError("realizer-intersection", tuple(diff.pair_list()[:1]))


@dataclass(frozen=True)
class DimensionReport:
    """Exact dimensions with re-verifiable witnesses.

    order_dim and dim_witness refer to the quotient poset (equal to the
    input itself whenever the input is a partial order).
    """

    hs_dim: int
    order_dim: int
    hs_witness: Realizer
    dim_witness: tuple[LinearOrder, ...]


def hs_dimension(g: Quasiorder) -> tuple[int, Realizer]:
    """Smallest half-space realizer of g, by increasing-cardinality search."""
    n = g.ground.size
    if n > HS_DIM_MAX:
        raise ResourceCapError(f"half-space dimension search capped at n <= {HS_DIM_MAX}")
    candidates = list(enumerate_halfspaces_above(g))
    full = (1 << (n * n)) - 1 if n else 0
    need = full ^ g.packed()
    masks = [full ^ h.packed() for h in candidates]
    for k in range(1, len(candidates) + 1):
        hit = _first_cover(masks, need, k)
        if hit is not None:
            return k, Realizer(g, tuple(candidates[i] for i in hit))
    raise AssertionError("every quasiorder has a half-space realizer")


def order_dimension(p: PartialOrder) -> tuple[int, tuple[LinearOrder, ...]]:
    """Smallest family of linear extensions intersecting to p."""
    n = p.ground.size
    if n > ORDER_DIM_MAX:
        raise ResourceCapError(f"order dimension search capped at n <= {ORDER_DIM_MAX}")
    candidates = list(linear_extensions(p))
    full = (1 << (n * n)) - 1 if n else 0
    need = full ^ p.packed()
    masks = [full ^ ext.packed() for ext in candidates]
    for k in range(1, len(candidates) + 1):
        hit = _first_cover(masks, need, k)
        if hit is not None:
            return k, tuple(candidates[i] for i in hit)
    raise AssertionError("the set of all linear extensions realizes p")


def dimension_report(g: Quasiorder) -> DimensionReport:
    hs, hs_wit = hs_dimension(g)
    qm = induced_order(g)
    dim, dim_wit = order_dimension(qm.induced)
    return DimensionReport(hs, dim, hs_wit, dim_wit)


# -- realizer -> linear realizer transforms ---------------------------------


@dataclass(frozen=True)
class TransformSeeds:
    """Tie-break orders for the transform pipeline (None means identity chain).

    tighten_seed drives the shared linear extension used to tighten each
    part; forward_seed and starred_seed drive the two final extensions.
    All live on the quotient of the target.
    """

    tighten_seed: LinearOrder | None = None
    forward_seed: LinearOrder | None = None
    starred_seed: LinearOrder | None = None


def _pipeline_quotient_halfspaces(
    r: Realizer, tighten_seed: LinearOrder | None
) -> tuple[QuotientMap, tuple[HalfSpace, ...]]:
    """Tighten every part of r and project to the common quotient."""
    gamma = r.target
    qm = induced_order(gamma)
    ext = szpilrajn_extension(qm.induced, tighten_seed)
    projected = []
    for part in r.parts:
        tight = tighten_halfspace(gamma, part, ext)
        tqm = induced_order(tight)
        assert tqm.classes == qm.classes, "tightening must preserve the quotient"
        projected.append(HalfSpace(tqm.induced.ground, tqm.induced.rows))
    return qm, tuple(projected)


def _incomparability(pi: HalfSpace) -> Relation:
    """Diagonal plus the pairs incomparable in pi (the mutual part of its complement)."""
    comparable = pi.union(pi.inverse())
    return comparable.complement().union(Relation.identity(pi.ground))


def _common_incomparability(parts: Sequence[HalfSpace]) -> Equivalence:
    theta = Relation.full(parts[0].ground)
    for pi in parts:
        theta = theta.intersection(_incomparability(pi))
    return Equivalence(theta.ground, theta.rows)


def _check_transform_output(
    qm: QuotientMap, outputs: Sequence[LinearOrder]
) -> tuple[LinearOrder, ...]:
    base = Relation(qm.induced.ground, qm.induced.rows)
    for ext in outputs:
        assert base.issubset(ext), "each output must extend the induced order"
    meet = reduce(Relation.intersection, outputs)
    assert meet == base, "outputs must intersect to the induced order"
    return tuple(outputs)


def realizer_to_linear_extensions(
    r: Realizer,
    mu: LinearOrder | None = None,
    i_star: int = 0,
    seeds: TransformSeeds | None = None,
) -> tuple[LinearOrder, ...]:
    """Turn a half-space realizer into a linear realizer of the induced order.

    Pipeline: tighten each part over a shared extension of the induced
    order; project the tightened parts to quotient half-spaces; build the
    reversal order (pairs comparable only upstream), and the common
    incomparability equivalence; extend reversal-plus-mu and
    reversal-plus-mu-reversed to linear orders; fill each projected part
    from the first extension, except part i_star which uses the second.
    Every intermediate claim is asserted.
    """
    if len(r.parts) < 2:
        raise PreconditionError("realizer must have at least two parts")
    if not 0 <= i_star < len(r.parts):
        raise InputError(f"i_star {i_star} out of range")
    seeds = seeds or TransformSeeds()
    qm, projected = _pipeline_quotient_halfspaces(r, seeds.tighten_seed)
    ground = qm.induced.ground
    if mu is None:
        mu = chain_order(ground)
    if mu.ground.size != ground.size:
        raise InputError("mu does not live on the quotient")

    union_pi = reduce(Relation.union, projected)
    rho_rows = union_pi.inverse().difference(union_pi).union(Relation.identity(ground))
    rho = PartialOrder(ground, rho_rows.rows)
    theta = _common_incomparability(projected)

    ident = Relation.identity(ground)
    assert rho.intersection(theta) == ident, "reversal order meets the equivalence in the diagonal"
    # the composition claims concern distinct elements: compose the strict parts
    strict_rho = rho.difference(ident)
    strict_theta = theta.difference(ident)
    assert strict_theta.compose(strict_rho).issubset(rho), (
        "equivalence then reversal stays in reversal"
    )
    assert strict_rho.compose(strict_theta).issubset(rho), (
        "reversal then equivalence stays in reversal"
    )

    base = PartialOrder(ground, rho.union(mu.intersection(theta)).rows)
    base_star = PartialOrder(ground, rho.union(mu.inverse().intersection(theta)).rows)
    lam = szpilrajn_extension(base, seeds.forward_seed)
    lam_star = szpilrajn_extension(base_star, seeds.starred_seed)

    outputs = [
        linearize_halfspace(pi, lam_star if i == i_star else lam)
        for i, pi in enumerate(projected)
    ]
    return _check_transform_output(qm, outputs)


def realizer_to_linear_extensions_alt(
    r: Realizer,
    mu: LinearOrder | None = None,
    i_star: int = 0,
    tighten_seed: LinearOrder | None = None,
) -> tuple[LinearOrder, ...]:
    """Index-priority variant of the realizer transform.

    Instead of one global extension, each pair of quotient classes is
    oriented against the first projected part that compares it; pairs no
    part compares follow mu (mu reversed for part i_star).
    """
    if len(r.parts) < 2:
        raise PreconditionError("realizer must have at least two parts")
    if not 0 <= i_star < len(r.parts):
        raise InputError(f"i_star {i_star} out of range")
    qm, projected = _pipeline_quotient_halfspaces(r, tighten_seed)
    ground = qm.induced.ground
    if mu is None:
        mu = chain_order(ground)
    if mu.ground.size != ground.size:
        raise InputError("mu does not live on the quotient")
    theta = _common_incomparability(projected)

    m = ground.size
    lam_rows = [0] * m
    for x in range(m):
        for y in range(m):
            if x == y:
                continue
            for pi in projected:
                if pi.has(x, y):
                    break
                if pi.has(y, x):
                    lam_rows[x] |= 1 << y
                    break
    lam = Relation(ground, tuple(lam_rows))

    outputs = []
    for i, pi in enumerate(projected):
        tie = mu.inverse() if i == i_star else mu
        rows = (
            Relation(ground, pi.rows)
            .union(_incomparability(pi).intersection(lam))
            .union(theta.intersection(tie))
        )
        outputs.append(LinearOrder(ground, rows.rows))
    return _check_transform_output(qm, outputs)


# -- the dimension laws ------------------------------------------------------


@dataclass(frozen=True)
class DimensionLawCheck:
    """Dimensions of a quasiorder plus the asserted relationships between them."""

    report: DimensionReport
    halfspace: bool
    boxes: BoxDecomposition | None
    has_multielement_empty_box: bool | None
    input_antisymmetric: bool
    input_linear: bool


def dimension_relation_check(g: Quasiorder) -> DimensionLawCheck:
    """Compute both dimensions and assert the laws tying them together.

    hs_dim 1 forces g to be a half-space whose quotient dimension is 1 or
    2 according to whether some empty box has more than one element;
    hs_dim >= 2 forces quotient dimension equal to hs_dim.  For partial
    orders the same dichotomy reads off linearity of g itself.
    """
    report = dimension_report(g)
    halfspace = is_halfspace(g)
    assert (report.hs_dim == 1) == halfspace, "hs-dim 1 must coincide with the predicate"
    boxes = None
    big_empty = None
    if halfspace:
        boxes = box_decomposition(HalfSpace(g.ground, g.rows))
        big_empty = any(
            not full and len(box) > 1 for box, full in zip(boxes.boxes, boxes.full)
        )
        assert report.order_dim == (2 if big_empty else 1), (
            "quotient dimension must follow the empty-box dichotomy"
        )
    else:
        assert report.order_dim == report.hs_dim, (
            "quotient dimension must equal hs-dim when hs-dim >= 2"
        )
    antisym = g.is_antisymmetric
    linear = g.is_total and antisym
    if antisym:
        # the quotient is a relabelling of g itself
        assert len(induced_order(g).classes) == g.ground.size
        if report.hs_dim == 1:
            assert report.order_dim == (1 if linear else 2)
        else:
            assert report.order_dim == report.hs_dim
    return DimensionLawCheck(
        report=report,
        halfspace=halfspace,
        boxes=boxes,
        has_multielement_empty_box=big_empty,
        input_antisymmetric=antisym,
        input_linear=linear,
    )
