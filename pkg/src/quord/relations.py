"""Finite binary relations as bit-matrix rows, plus validated order types.

A relation on {0, ..., n-1} is stored as a tuple of n integer bitmasks:
bit j of rows[i] is set iff the pair (i, j) is in the relation.  Every
value is immutable and hashable, every operation is a pure function of
its inputs, so values can be shared between threads freely.

The validated refinements (Quasiorder, PartialOrder, LinearOrder,
Equivalence) check their axioms on construction and raise a
ValidationError naming the first violated axiom together with a witness.
Check order: reflexive, transitive, then the subtype axiom.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator, Sequence

from .errors import InputError, ResourceCapError, ValidationError

DEFAULT_MAX_GROUND = 64


def max_ground_size() -> int:
    """Ground-set size cap; override with the QUORD_MAX_N environment variable."""
    raw = os.environ.get("QUORD_MAX_N")
    if raw is None:
        return DEFAULT_MAX_GROUND
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"QUORD_MAX_N must be an integer, got {raw!r}") from None
    if value < 0:
        raise InputError("QUORD_MAX_N must be nonnegative")
    return value


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class GroundSet:
    """A finite carrier set; elements are ids 0..size-1, optionally labelled."""

    size: int
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
        if self.size < 0:
            raise InputError("ground-set size must be nonnegative")
        cap = max_ground_size()
        if self.size > cap:
            raise ResourceCapError(
                f"ground-set size {self.size} exceeds cap {cap} (set QUORD_MAX_N to raise it)"
            )
        if self.labels is not None:
            if len(self.labels) != self.size:
                raise InputError(f"expected {self.size} labels, got {len(self.labels)}")
            if len(set(self.labels)) != self.size:
                raise InputError("labels must be pairwise distinct")
            for name in self.labels:
                if not name or any(c.isspace() for c in name) or ":" in name or "#" in name:
                    raise InputError(f"invalid element label {name!r}")

    def name(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)


@dataclass(frozen=True, eq=False)
class Relation:
    """A binary relation over a GroundSet, as one bitmask row per element."""

    ground: GroundSet
    rows: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        n = self.ground.size
        if len(self.rows) != n:
            raise InputError(f"expected {n} rows, got {len(self.rows)}")
        mask = (1 << n) - 1
        for i, row in enumerate(self.rows):
            if row < 0 or row & ~mask:
                raise InputError(f"row {i} mentions elements outside 0..{n - 1}")

    # -- construction --------------------------------------------------

    @staticmethod
    def _as_ground(ground: GroundSet | int) -> GroundSet:
        return ground if isinstance(ground, GroundSet) else GroundSet(ground)

    @classmethod
    def from_pairs(
        cls,
        ground: GroundSet | int,
        pairs: Iterable[tuple[int, int]] = (),
        reflexive_implicit: bool = False,
    ):
        g = cls._as_ground(ground)
        rows = [1 << i for i in range(g.size)] if reflexive_implicit else [0] * g.size
        for i, j in pairs:
            if not (0 <= i < g.size and 0 <= j < g.size):
                raise InputError(f"pair ({i}, {j}) out of range for ground size {g.size}")
            rows[i] |= 1 << j
        return cls(g, tuple(rows))

    @classmethod
    def identity(cls, ground: GroundSet | int):
        g = cls._as_ground(ground)
        return cls(g, tuple(1 << i for i in range(g.size)))

    @classmethod
    def full(cls, ground: GroundSet | int):
        g = cls._as_ground(ground)
        mask = (1 << g.size) - 1
        return cls(g, tuple(mask for _ in range(g.size)))

    # -- identity ------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Relation):
            return NotImplemented
        return self.ground == other.ground and self.rows == other.rows

    def __hash__(self):
        return hash((self.ground, self.rows))

    def __repr__(self):
        pairs = ",".join(f"({i},{j})" for i, j in self.pair_list() if i != j)
        refl = "refl" if self.is_reflexive else "irr"
        return f"{type(self).__name__}(n={self.ground.size},{refl},[{pairs}])"

    # -- queries ---------------------------------------------------------

    def has(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def pair_list(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.ground.size) for j in _iter_bits(self.rows[i])]

    def pairs(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.pair_list())

    def packed(self) -> int:
        """The whole matrix as one integer, row i at bit offset i*n."""
        n = self.ground.size
        out = 0
        for i, row in enumerate(self.rows):
            out |= row << (i * n)
        return out

    # -- axioms, with first-violation witnesses -------------------------

    def missing_reflexive(self) -> int | None:
        for i in range(self.ground.size):
            if not self.rows[i] >> i & 1:
                return i
        return None

    def transitivity_gap(self) -> tuple[int, int, int] | None:
        rows = self.rows
        for x in range(self.ground.size):
            for y in _iter_bits(rows[x]):
                extra = rows[y] & ~rows[x]
                if extra:
                    z = (extra & -extra).bit_length() - 1
                    return (x, y, z)
        return None

    def antisymmetry_violation(self) -> tuple[int, int] | None:
        rows = self.rows
        for x in range(self.ground.size):
            for y in _iter_bits(rows[x]):
                if y > x and rows[y] >> x & 1:
                    return (x, y)
        return None

    def symmetry_violation(self) -> tuple[int, int] | None:
        rows = self.rows
        for x in range(self.ground.size):
            for y in _iter_bits(rows[x]):
                if not rows[y] >> x & 1:
                    return (x, y)
        return None

    def totality_gap(self) -> tuple[int, int] | None:
        rows = self.rows
        for x in range(self.ground.size):
            for y in range(x + 1, self.ground.size):
                if not (rows[x] >> y & 1 or rows[y] >> x & 1):
                    return (x, y)
        return None

    @property
    def is_reflexive(self) -> bool:
        return self.missing_reflexive() is None

    @property
    def is_transitive(self) -> bool:
        return self.transitivity_gap() is None

    @property
    def is_antisymmetric(self) -> bool:
        return self.antisymmetry_violation() is None

    @property
    def is_symmetric(self) -> bool:
        return self.symmetry_violation() is None

    @property
    def is_total(self) -> bool:
        return self.totality_gap() is None

    # -- algebra (results are plain Relations) ---------------------------

    def _require_same_ground(self, other: "Relation"):
        if self.ground != other.ground:
            raise InputError("relations live on different ground sets")

    def intersection(self, other: "Relation") -> "Relation":
        self._require_same_ground(other)
        return Relation(self.ground, tuple(a & b for a, b in zip(self.rows, other.rows)))

    def union(self, other: "Relation") -> "Relation":
        self._require_same_ground(other)
        return Relation(self.ground, tuple(a | b for a, b in zip(self.rows, other.rows)))

    def difference(self, other: "Relation") -> "Relation":
        self._require_same_ground(other)
        return Relation(self.ground, tuple(a & ~b for a, b in zip(self.rows, other.rows)))

    def complement(self) -> "Relation":
        mask = (1 << self.ground.size) - 1
        return Relation(self.ground, tuple(mask & ~row for row in self.rows))

    def compose(self, other: "Relation") -> "Relation":
        """Pairs (x, z) with (x, y) in self and (y, z) in other for some y."""
        self._require_same_ground(other)
        rows = []
        for row in self.rows:
            out = 0
            for y in _iter_bits(row):
                out |= other.rows[y]
            rows.append(out)
        return Relation(self.ground, tuple(rows))

    def issubset(self, other: "Relation") -> bool:
        self._require_same_ground(other)
        return all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    __and__ = intersection
    __or__ = union
    __sub__ = difference
    __le__ = issubset

    # -- structure-preserving transforms (keep the subtype) ---------------

    def inverse(self):
        """Swap every pair; preserves the validated subtype."""
        n = self.ground.size
        inv = [0] * n
        for i, row in enumerate(self.rows):
            bit = 1 << i
            for j in _iter_bits(row):
                inv[j] |= bit
        return type(self)(self.ground, tuple(inv))

    def restrict_to(self, elements: Iterable[int]):
        """Re-indexed restriction to a subset; preserves the validated subtype."""
        elems = sorted(set(elements))
        n = self.ground.size
        for e in elems:
            if not 0 <= e < n:
                raise InputError(f"restriction element {e} out of range")
        labels = None
        if self.ground.labels is not None:
            labels = tuple(self.ground.labels[e] for e in elems)
        sub = GroundSet(len(elems), labels)
        rows = []
        for e in elems:
            row = 0
            for q, f in enumerate(elems):
                if self.rows[e] >> f & 1:
                    row |= 1 << q
            rows.append(row)
        return type(self)(sub, tuple(rows))


class Quasiorder(Relation):
    """Reflexive transitive relation."""

    def __post_init__(self):
        super().__post_init__()
        i = self.missing_reflexive()
        if i is not None:
            raise ValidationError("reflexive", (i, i))
        gap = self.transitivity_gap()
        if gap is not None:
            raise ValidationError("transitive", gap)


class Equivalence(Quasiorder):
    """Reflexive symmetric transitive relation."""

    def __post_init__(self):
        super().__post_init__()
        bad = self.symmetry_violation()
        if bad is not None:
            raise ValidationError("symmetric", bad)


class PartialOrder(Quasiorder):
    """Antisymmetric quasiorder."""

    def __post_init__(self):
        super().__post_init__()
        bad = self.antisymmetry_violation()
        if bad is not None:
            raise ValidationError("antisymmetric", bad)


class LinearOrder(PartialOrder):
    """Total partial order."""

    def __post_init__(self):
        super().__post_init__()
        gap = self.totality_gap()
        if gap is not None:
            raise ValidationError("total", gap)

    def sequence(self) -> tuple[int, ...]:
        """Elements from least to greatest."""
        return tuple(sorted(range(self.ground.size), key=lambda i: -bin(self.rows[i]).count("1")))


def chain_order(ground: GroundSet | int, sequence: Sequence[int] | None = None) -> LinearOrder:
    """The linear order placing sequence[0] lowest; default is 0 < 1 < ... < n-1."""
    g = Relation._as_ground(ground)
    seq = tuple(sequence) if sequence is not None else tuple(range(g.size))
    if sorted(seq) != list(range(g.size)):
        raise InputError(f"sequence {seq} is not a permutation of 0..{g.size - 1}")
    rows = [0] * g.size
    above = 0
    for e in reversed(seq):
        above |= 1 << e
        rows[e] = above
    return LinearOrder(g, tuple(rows))


# -- free operations -----------------------------------------------------


def make_relation(
    n: int, pairs: Iterable[tuple[int, int]] = (), reflexive_implicit: bool = False
) -> Relation:
    return Relation.from_pairs(n, pairs, reflexive_implicit)


def transitive_closure(r: Relation) -> Relation:
    """Smallest transitive relation containing r."""
    n = r.ground.size
    rows = list(r.rows)
    for k in range(n):
        bit = 1 << k
        rk = rows[k]
        for i in range(n):
            if rows[i] & bit:
                rows[i] |= rk
    return Relation(r.ground, tuple(rows))


@dataclass(frozen=True)
class RelationProperties:
    reflexive: bool
    transitive: bool
    antisymmetric: bool
    symmetric: bool
    total: bool


def classify(r: Relation) -> RelationProperties:
    return RelationProperties(
        reflexive=r.is_reflexive,
        transitive=r.is_transitive,
        antisymmetric=r.is_antisymmetric,
        symmetric=r.is_symmetric,
        total=r.is_total,
    )


def quord_meet(a: Quasiorder, b: Quasiorder) -> Quasiorder:
    a._require_same_ground(b)
    return Quasiorder(a.ground, tuple(x & y for x, y in zip(a.rows, b.rows)))


def quord_join(a: Quasiorder, b: Quasiorder) -> Quasiorder:
    a._require_same_ground(b)
    closed = transitive_closure(a.union(b))
    return Quasiorder(a.ground, closed.rows)


def inverse(r: Relation):
    return r.inverse()


@dataclass(frozen=True)
class Restriction:
    """A re-indexed restriction plus the index map new id -> original id."""

    relation: Quasiorder
    elements: tuple[int, ...]


def restrict(q: Quasiorder, elements: Iterable[int]) -> Restriction:
    elems = tuple(sorted(set(elements)))
    return Restriction(q.restrict_to(elems), elems)


def symmetric_part(q: Quasiorder) -> Equivalence:
    inv = q.inverse()
    return Equivalence(q.ground, tuple(a & b for a, b in zip(q.rows, inv.rows)))


@dataclass(frozen=True)
class QuotientMap:
    """Partition by mutual comparability plus the induced order on the classes.

    Classes are listed by ascending minimum element; `induced` lives on an
    unlabelled ground set of len(classes) elements in that class order.
    """

    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]
    induced: PartialOrder

    def class_mask(self, idx: int) -> int:
        return reduce(lambda m, e: m | (1 << e), self.classes[idx], 0)


def induced_order(q: Quasiorder) -> QuotientMap:
    """Quotient by the symmetric part, with the induced order on classes.

    The one-pair and all-pairs characterizations of the induced order are
    asserted to agree on every class pair.
    """
    sym = symmetric_part(q)
    n = q.ground.size
    masks: list[int] = []
    seen = 0
    for i in range(n):
        if not seen >> i & 1:
            masks.append(sym.rows[i])
            seen |= sym.rows[i]
    k = len(masks)
    class_of = [0] * n
    reps = []
    for ci, m in enumerate(masks):
        reps.append((m & -m).bit_length() - 1)
        for e in _iter_bits(m):
            class_of[e] = ci
    rows = []
    for ci in range(k):
        row = 0
        for cj in range(k):
            if q.rows[reps[ci]] >> reps[cj] & 1:
                row |= 1 << cj
        rows.append(row)
    # one-pair and all-pairs characterizations must agree on every class pair
    for ci in range(k):
        for cj in range(k):
            related = bool(rows[ci] >> cj & 1)
            for x in _iter_bits(masks[ci]):
                got = q.rows[x] & masks[cj]
                assert (got == masks[cj]) == related and (got != 0) == related, (
                    f"induced-order characterizations disagree on classes ({ci}, {cj})"
                )
    induced = PartialOrder(GroundSet(k), tuple(rows))
    return QuotientMap(
        classes=tuple(tuple(_iter_bits(m)) for m in masks),
        class_of=tuple(class_of),
        induced=induced,
    )
