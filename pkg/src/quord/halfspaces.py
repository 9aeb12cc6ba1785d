"""Half-space quasiorders: predicate, complements, box normal form, constructions.

A quasiorder is a half-space when the diagonal united with its set
complement is again a quasiorder; the two then form a complementary pair
meeting in the identity and covering everything.  Every half-space is a
linearly ordered stack of "boxes", each box carrying either the full or
the identity relation; that normal form is computed by box_decomposition
and inverted by reconstruct_from_boxes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InputError, PreconditionError, ValidationError
from .relations import (
    GroundSet,
    LinearOrder,
    Quasiorder,
    Relation,
    _iter_bits,
    induced_order,
    symmetric_part,
)


def halfspace_witness(q: Quasiorder) -> tuple[int, int, int] | None:
    """First triple (x, y, z) violating the half-space production rule.

    The rule: x, y incomparable and (x, z) present with z != x force
    (y, z) present.  None means q is a half-space.  Scan order is x
    ascending, then y ascending, then the lowest offending z.
    """
    rows = q.rows
    n = q.ground.size
    for x in range(n):
        rx = rows[x]
        for y in range(n):
            if y == x or rx >> y & 1 or rows[y] >> x & 1:
                continue
            missing = (rx & ~(1 << x)) & ~rows[y]
            if missing:
                z = (missing & -missing).bit_length() - 1
                return (x, y, z)
    return None


def violates_halfspace_rule(q: Quasiorder, x: int, y: int, z: int) -> bool:
    """Does the concrete triple refute the half-space property of q?"""
    return (
        x != z
        and not q.has(x, y)
        and not q.has(y, x)
        and q.has(x, z)
        and not q.has(y, z)
    )


def is_halfspace(q: Quasiorder) -> bool:
    return halfspace_witness(q) is None


class HalfSpace(Quasiorder):
    """Quasiorder whose diagonal-plus-complement is transitive."""

    def __post_init__(self):
        super().__post_init__()
        witness = halfspace_witness(self)
        if witness is not None:
            raise ValidationError("halfspace", witness)


# -- the three oracle cross-checks of the predicate (not production paths) --


def halfspace_by_complement(q: Quasiorder) -> bool:
    """Complement criterion: diagonal united with the set complement is transitive."""
    comp = q.complement().union(Relation.identity(q.ground))
    return comp.transitivity_gap() is None


def halfspace_by_restrictions(q: Quasiorder) -> bool:
    """Every 3-element restriction passes the complement criterion."""
    n = q.ground.size
    return all(
        halfspace_by_complement(q.restrict_to(triple))
        for triple in combinations(range(n), 3)
    )


def halfspace_by_reverse_rule(q: Quasiorder) -> bool:
    """Mirror rule on predecessors: z, y incomparable and (x, z) present, x != z force (x, y)."""
    cols = q.inverse().rows
    n = q.ground.size
    for z in range(n):
        for y in range(n):
            if y == z or q.has(z, y) or q.has(y, z):
                continue
            if (cols[z] & ~(1 << z)) & ~cols[y]:
                return False
    return True


def complement_halfspace(h: HalfSpace) -> HalfSpace:
    """The unique complementary half-space: diagonal plus all absent pairs."""
    mask = (1 << h.ground.size) - 1
    rows = tuple((mask & ~row) | (1 << i) for i, row in enumerate(h.rows))
    return HalfSpace(h.ground, rows)


def check_complementary_pair(a: Quasiorder, b: Quasiorder) -> bool:
    """Do a and b meet in the identity and cover the full relation?"""
    a._require_same_ground(b)
    ident = Relation.identity(a.ground)
    return a.intersection(b) == ident and a.union(b) == Relation.full(a.ground)


# -- box normal form -------------------------------------------------------


@dataclass(frozen=True)
class BoxDecomposition:
    """Ordered stack of boxes covering the ground set, each full or empty.

    boxes[0] is the lowest box; full[i] says box i carries the full
    relation (only possible for boxes with more than one element).
    """

    ground: GroundSet
    boxes: tuple[tuple[int, ...], ...]
    full: tuple[bool, ...]

    def __post_init__(self):
        object.__setattr__(self, "boxes", tuple(tuple(sorted(b)) for b in self.boxes))
        object.__setattr__(self, "full", tuple(bool(f) for f in self.full))
        if len(self.boxes) != len(self.full):
            raise InputError("one flag per box required")
        seen = 0
        for box, flag in zip(self.boxes, self.full):
            if not box:
                raise ValidationError("nonempty-box", ())
            mask = 0
            for e in box:
                if not 0 <= e < self.ground.size:
                    raise InputError(f"box element {e} out of range")
                mask |= 1 << e
            if mask & seen:
                raise ValidationError("disjoint-boxes", tuple(box))
            seen |= mask
            if flag and len(box) == 1:
                raise ValidationError("singleton-box-empty", tuple(box))
        if seen != (1 << self.ground.size) - 1:
            raise ValidationError("boxes-cover-ground", ())


def _rows_from_boxes(n: int, boxes: Sequence[tuple[int, ...]], full: Sequence[bool]) -> tuple[int, ...]:
    masks = []
    for box in boxes:
        m = 0
        for e in box:
            m |= 1 << e
        masks.append(m)
    above = [0] * len(boxes)
    acc = 0
    for i in range(len(boxes) - 1, -1, -1):
        above[i] = acc
        acc |= masks[i]
    rows = [0] * n
    for i, box in enumerate(boxes):
        base = (masks[i] if full[i] else 0) | above[i]
        for e in box:
            rows[e] = base | (1 << e)
    return tuple(rows)


def reconstruct_from_boxes(d: BoxDecomposition) -> HalfSpace:
    return HalfSpace(d.ground, _rows_from_boxes(d.ground.size, d.boxes, d.full))


def box_decomposition(h: HalfSpace) -> BoxDecomposition:
    """Normal form of a half-space: its boxes in ascending order with flags."""
    beta = complement_halfspace(h)
    eps = symmetric_part(h).union(symmetric_part(beta))
    eps_rows = eps.rows
    n = h.ground.size
    masks: list[int] = []
    seen = 0
    for i in range(n):
        if not seen >> i & 1:
            masks.append(eps_rows[i])
            seen |= eps_rows[i]

    reps = [(mask & -mask).bit_length() - 1 for mask in masks]
    # the boxes are linearly ordered by h; rank = number of boxes below
    ranks = [
        sum(1 for j in range(len(masks)) if j != i and h.has(reps[j], reps[i]))
        for i in range(len(masks))
    ]
    order = sorted(range(len(masks)), key=ranks.__getitem__)
    boxes = []
    flags = []
    for i in order:
        box = tuple(_iter_bits(masks[i]))
        is_full = len(box) > 1 and h.rows[reps[i]] & masks[i] == masks[i]
        boxes.append(box)
        flags.append(is_full)
    return BoxDecomposition(h.ground, tuple(boxes), tuple(flags))


def is_box(h: HalfSpace, elements: Iterable[int]) -> bool:
    """Is the given set a box of h?  Checked two independent ways.

    A box is a set with no one-way related pair inside it, maximal with
    that property; the verdict is cross-asserted against the normal form.
    """
    elems = sorted(set(elements))
    if not elems:
        raise InputError("a box must be nonempty")
    n = h.ground.size
    for e in elems:
        if not 0 <= e < n:
            raise InputError(f"box element {e} out of range")

    def one_way_free(group: Sequence[int]) -> bool:
        return not any(
            h.has(a, b) and not h.has(b, a) for a in group for b in group if a != b
        )

    verdict = one_way_free(elems) and all(
        not one_way_free(elems + [e]) for e in range(n) if e not in elems
    )
    boxes = box_decomposition(h).boxes
    assert verdict == (tuple(elems) in boxes), "box test disagrees with the normal form"
    return verdict


# -- the kernel-plus-pullback construction ---------------------------------


@dataclass(frozen=True)
class KernelPresentation:
    """Data (f, marked fibers, codomain order) presenting a half-space.

    assignment maps each ground element to a codomain index; `marked`
    fibers contribute their full kernel block, and the codomain order
    pulls back to the strict part between fibers.
    """

    ground: GroundSet
    assignment: tuple[int, ...]
    codomain_size: int
    marked: frozenset[int]
    order: LinearOrder

    def __post_init__(self):
        object.__setattr__(self, "assignment", tuple(self.assignment))
        object.__setattr__(self, "marked", frozenset(self.marked))
        if len(self.assignment) != self.ground.size:
            raise InputError("assignment must be total on the ground set")
        for value in self.assignment:
            if not 0 <= value < self.codomain_size:
                raise InputError(f"assignment value {value} outside the codomain")
        if any(not 0 <= x < self.codomain_size for x in self.marked):
            raise InputError("marked subset must lie inside the codomain")
        if self.order.ground.size != self.codomain_size:
            raise InputError("codomain order size mismatch")


def standard_construction(
    k: KernelPresentation, gamma: Quasiorder | None = None
) -> HalfSpace:
    """Half-space from a presentation: marked kernel blocks plus the pulled-back order.

    When gamma is supplied it must be contained in the result (the
    quasiorder the presentation was built to extend).
    """
    n = k.ground.size
    fiber = [0] * k.codomain_size
    for e, value in enumerate(k.assignment):
        fiber[value] |= 1 << e
    strictly_above = [0] * k.codomain_size
    for x in range(k.codomain_size):
        acc = 0
        for y in _iter_bits(k.order.rows[x] & ~(1 << x)):
            acc |= fiber[y]
        strictly_above[x] = acc
    rows = []
    for e in range(n):
        x = k.assignment[e]
        row = 1 << e
        if x in k.marked:
            row |= fiber[x]
        row |= strictly_above[x]
        rows.append(row)
    result = HalfSpace(k.ground, tuple(rows))
    kernel_rows = tuple(
        (fiber[k.assignment[e]] if k.assignment[e] in k.marked else 0) | (1 << e)
        for e in range(n)
    )
    assert symmetric_part(result).rows == kernel_rows, (
        "symmetric part must equal the marked kernel"
    )
    if gamma is not None:
        if gamma.ground != k.ground:
            raise InputError("gamma lives on a different ground set")
        if not gamma.issubset(result):
            extra = gamma.difference(result).pair_list()
            raise PreconditionError(
                "constructed half-space does not extend gamma", extra[0]
            )
    return result


def halfspace_realizer_from_linear_realizer(
    q: Quasiorder, linexts: Sequence[LinearOrder]
) -> tuple[HalfSpace, ...]:
    """Lift a linear realizer of the induced order to a half-space realizer of q.

    Each part is the symmetric part of q united with the pullback of one
    linear extension along the quotient map; the parts intersect to q.
    """
    if not linexts:
        raise PreconditionError("at least one linear extension required")
    qm = induced_order(q)
    k = len(qm.classes)
    sym = symmetric_part(q)
    meet_rows = [(1 << k) - 1] * k
    for ext in linexts:
        if ext.ground.size != k:
            raise InputError("extension does not live on the quotient")
        if not qm.induced.issubset(ext):
            gap = qm.induced.difference(ext).pair_list()
            raise PreconditionError("not an extension of the induced order", gap[0])
        meet_rows = [m & r for m, r in zip(meet_rows, ext.rows)]
    if tuple(meet_rows) != qm.induced.rows:
        for ci in range(k):
            extra = meet_rows[ci] & ~qm.induced.rows[ci]
            if extra:
                cj = (extra & -extra).bit_length() - 1
                raise PreconditionError(
                    "extensions do not intersect to the induced order", (ci, cj)
                )
    class_masks = [qm.class_mask(i) for i in range(k)]
    parts = []
    for ext in linexts:
        rows = []
        for e in range(q.ground.size):
            ci = qm.class_of[e]
            row = sym.rows[e]
            for cj in _iter_bits(ext.rows[ci] & ~(1 << ci)):
                row |= class_masks[cj]
            rows.append(row)
        parts.append(HalfSpace(q.ground, tuple(rows)))
    meet = parts[0]
    for part in parts[1:]:
        meet = meet.intersection(part)
    assert meet.rows == q.rows, "half-space parts must intersect to q"
    return tuple(parts)
