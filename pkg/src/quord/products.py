"""Direct products of quasiordered sets and the half-space classification.

Product elements are encoded in mixed radix with factor 0 most
significant, so witnesses are reproducible.  The structural predicate
decides whether a product is a half-space without materializing it and
is verified to agree with the direct check on every desk-size instance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce

from .errors import InputError, PreconditionError, ResourceCapError
from .halfspaces import (
    HalfSpace,
    box_decomposition,
    halfspace_witness,
    is_halfspace,
    violates_halfspace_rule,
)
from .relations import (
    GroundSet,
    Quasiorder,
    induced_order,
    max_ground_size,
    symmetric_part,
)


@dataclass(frozen=True)
class ProductEncoding:
    """Mixed-radix bijection between coordinate tuples and 0..(prod sizes)-1."""

    sizes: tuple[int, ...]
    strides: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(self.sizes))
        if not self.sizes:
            raise InputError("at least one factor required")
        if any(s < 0 for s in self.sizes):
            raise InputError("factor sizes must be nonnegative")
        strides = [1] * len(self.sizes)
        for i in range(len(self.sizes) - 2, -1, -1):
            strides[i] = strides[i + 1] * self.sizes[i + 1]
        object.__setattr__(self, "strides", tuple(strides))

    @property
    def total(self) -> int:
        return reduce(lambda a, b: a * b, self.sizes, 1)

    def index(self, coords: tuple[int, ...]) -> int:
        if len(coords) != len(self.sizes):
            raise InputError("coordinate arity mismatch")
        out = 0
        for c, size, stride in zip(coords, self.sizes, self.strides):
            if not 0 <= c < size:
                raise InputError(f"coordinate {c} outside factor of size {size}")
            out += c * stride
        return out

    def coords(self, index: int) -> tuple[int, ...]:
        if not 0 <= index < self.total:
            raise InputError(f"index {index} out of range")
        out = []
        for size, stride in zip(self.sizes, self.strides):
            out.append(index // stride % size)
        return tuple(out)


def _product_rows(factors: list[Quasiorder], enc: ProductEncoding) -> tuple[int, ...]:
    total = enc.total
    coords = [enc.coords(t) for t in range(total)]
    rows = []
    for x in range(total):
        cx = coords[x]
        row = 0
        for y in range(total):
            cy = coords[y]
            if all(f.rows[a] >> b & 1 for f, a, b in zip(factors, cx, cy)):
                row |= 1 << y
        rows.append(row)
    return tuple(rows)


def _product_ground(factors: list[Quasiorder], enc: ProductEncoding) -> GroundSet:
    labels = None
    if all(f.ground.labels is not None for f in factors):
        labels = tuple(
            "*".join(f.ground.name(c) for f, c in zip(factors, enc.coords(t)))
            for t in range(enc.total)
        )
    return GroundSet(enc.total, labels)


def _assert_product_identities(
    factors: list[Quasiorder], enc: ProductEncoding, product: Quasiorder
) -> None:
    # the symmetric part distributes over the product
    sym_factors = [symmetric_part(f) for f in factors]
    assert symmetric_part(product).rows == _product_rows(sym_factors, enc), (
        "symmetric part must distribute over the product"
    )
    # the induced order of the product is the product of the induced orders
    qm = induced_order(product)
    factor_qms = [induced_order(f) for f in factors]
    class_enc = ProductEncoding(tuple(len(fq.classes) for fq in factor_qms))
    expected = _product_rows([fq.induced for fq in factor_qms], class_enc)
    total_classes = len(qm.classes)
    assert total_classes == class_enc.total, "quotient sizes must multiply"
    image = []
    for ci in range(total_classes):
        rep = qm.classes[ci][0]
        coords = enc.coords(rep)
        image.append(class_enc.index(tuple(fq.class_of[c] for fq, c in zip(factor_qms, coords))))
    assert sorted(image) == list(range(total_classes)), "class map must be a bijection"
    for ci in range(total_classes):
        for cj in range(total_classes):
            got = qm.induced.has(ci, cj)
            want = bool(expected[image[ci]] >> image[cj] & 1)
            assert got == want, "induced order must distribute over the product"


def direct_product(factors: list[Quasiorder]) -> tuple[Quasiorder, ProductEncoding]:
    """Componentwise product quasiorder plus the index encoding."""
    if not factors:
        raise InputError("at least one factor required")
    enc = ProductEncoding(tuple(f.ground.size for f in factors))
    if enc.total > max_ground_size():
        raise ResourceCapError(
            f"product size {enc.total} exceeds cap {max_ground_size()}"
        )
    ground = _product_ground(factors, enc)
    product = Quasiorder(ground, _product_rows(factors, enc))
    _assert_product_identities(factors, enc, product)
    return product, enc


# -- structural classification ----------------------------------------------


def _is_identity(q: Quasiorder) -> bool:
    return q.rows == tuple(1 << i for i in range(q.ground.size))


def _is_full(q: Quasiorder) -> bool:
    mask = (1 << q.ground.size) - 1
    return all(row == mask for row in q.rows)


def _is_two_chain(q: Quasiorder) -> bool:
    return q.ground.size == 2 and q.rows in ((0b01 | 0b10, 0b10), (0b01, 0b01 | 0b10))


def _chain_of_clusters(q: Quasiorder) -> bool:
    """Half-space whose boxes of size > 1 are all full (quotient is a chain)."""
    if not is_halfspace(q):
        return False
    d = box_decomposition(HalfSpace(q.ground, q.rows))
    return all(full or len(box) == 1 for box, full in zip(d.boxes, d.full))


def product_halfspace_predicate(
    factors: list[Quasiorder], treat_trivial: bool = False
) -> tuple[bool, str]:
    """Structural verdict: is the product of the factors a half-space?

    Decided without materializing the product; agrees with the direct
    check on the materialized product wherever that fits the size cap.
    Without treat_trivial every factor must be non-trivial (neither the
    identity nor the full relation); with it, trivial factors are
    classified structurally like everything else.
    """
    if not factors:
        raise InputError("at least one factor required")
    trivial = [i for i, f in enumerate(factors) if _is_identity(f) or _is_full(f)]
    if trivial and not treat_trivial:
        raise PreconditionError(
            f"factor {trivial[0]} is trivial; pass treat_trivial to allow it"
        )
    if any(f.ground.size == 0 for f in factors):
        return True, "a factor has an empty ground set, so the product is empty"
    live = [f for f in factors if f.ground.size > 1]
    if not live:
        return True, "all factors are single points"
    idents = [f for f in live if _is_identity(f)]
    fulls = [f for f in live if _is_full(f)]
    proper = [f for f in live if not (_is_identity(f) or _is_full(f))]
    if not proper:
        if not idents:
            return True, "all factors are full, so the product is full"
        if not fulls:
            return True, "all factors are identities, so the product is the identity"
        return False, (
            "identity and full factors mix into disjoint clusters, which is not the identity"
        )
    if idents:
        return False, (
            "an identity factor with more than one element disconnects a non-identity product"
        )
    if len(proper) == 1:
        factor = proper[0]
        if not fulls:
            ok = is_halfspace(factor)
            reason = "the single non-trivial factor is {}a half-space".format(
                "" if ok else "not "
            )
            return ok, reason
        ok = _chain_of_clusters(factor)
        if ok:
            return True, (
                "full factors inflate a half-space whose boxes stack into a chain"
            )
        return False, (
            "full factors inflate a factor with incomparable quotient classes"
        )
    if len(proper) == 2 and not fulls:
        if all(_is_two_chain(f) for f in proper):
            return True, "exactly two factors, both two-element chains"
        return False, "two non-trivial factors that are not both two-element chains"
    if len(proper) == 2:
        return False, "two non-trivial factors combined with full factors"
    return False, "three or more non-trivial factors"


# -- diagnostics mirroring the classification lemmas -------------------------


@dataclass(frozen=True)
class FactorShape:
    """One factor's shape under the pattern dichotomy.

    kind is "pattern" when elements a != c exist with (a, c) related and
    (a, b) unrelated for some b (the triple is recorded); otherwise the
    factor is the identity, the full relation, or a full-or-singleton
    lower box under an empty upper box.
    """

    kind: str
    pattern: tuple[int, int, int] | None = None
    lower: tuple[int, ...] | None = None
    upper: tuple[int, ...] | None = None


@dataclass(frozen=True)
class ProductDiagnostics:
    """Witness data explaining a product verdict.

    refuting_triple, when present, is a triple of product indices
    violating the half-space production rule, built from a pattern in
    factor refuting_indices[0] and a missing pair in refuting_indices[1].
    pair_pattern_triple materializes the pattern inside a two-factor
    product of lower/upper factors.
    """

    shapes: tuple[FactorShape, ...]
    refuting_indices: tuple[int, int] | None
    refuting_triple: tuple[int, int, int] | None
    pair_pattern_triple: tuple[int, int, int] | None


def _factor_shape(q: Quasiorder) -> FactorShape:
    n = q.ground.size
    for a in range(n):
        row = q.rows[a]
        missing = ((1 << n) - 1) & ~row
        if not missing:
            continue
        strict = row & ~(1 << a)
        if strict:
            b = (missing & -missing).bit_length() - 1
            c = (strict & -strict).bit_length() - 1
            return FactorShape("pattern", pattern=(a, b, c))
    if _is_identity(q):
        return FactorShape("identity")
    if _is_full(q):
        return FactorShape("full")
    mask = (1 << n) - 1
    lower = tuple(i for i in range(n) if q.rows[i] == mask)
    upper = tuple(i for i in range(n) if q.rows[i] == 1 << i)
    assert len(lower) + len(upper) == n, "pattern-free factors split into two boxes"
    return FactorShape("lower_upper", lower=lower, upper=upper)


def _missing_pair(q: Quasiorder) -> tuple[int, int] | None:
    n = q.ground.size
    for x in range(n):
        gap = ((1 << n) - 1) & ~q.rows[x]
        if gap:
            return x, (gap & -gap).bit_length() - 1
    return None


def lemma_witnesses(factors: list[Quasiorder]) -> ProductDiagnostics:
    """Shape every factor and materialize the classification witnesses.

    Returns not-applicable (None) fields when the respective hypotheses
    are absent; the refuting triple is re-verified against the direct
    witness machinery whenever the product fits the size cap.
    """
    if not factors:
        raise InputError("at least one factor required")
    shapes = tuple(_factor_shape(f) for f in factors)
    enc = ProductEncoding(tuple(f.ground.size for f in factors))

    refuting_indices = None
    refuting_triple = None
    pattern_js = [i for i, s in enumerate(shapes) if s.kind == "pattern"]
    for j in pattern_js:
        partners = [
            k
            for k in range(len(factors))
            if k != j and not _is_full(factors[k]) and factors[k].ground.size > 1
        ]
        if partners:
            k = partners[0]
            a_j, b_j, c_j = shapes[j].pattern
            x_k, y_k = _missing_pair(factors[k])
            base = [0] * len(factors)
            ca, cb, cc = list(base), list(base), list(base)
            ca[j], ca[k] = a_j, y_k
            cb[j], cb[k] = b_j, x_k
            cc[j], cc[k] = c_j, y_k
            refuting_indices = (j, k)
            refuting_triple = (enc.index(tuple(ca)), enc.index(tuple(cb)), enc.index(tuple(cc)))
            if enc.total <= max_ground_size():
                product, _ = direct_product(factors)
                x, y, z = refuting_triple
                assert violates_halfspace_rule(product, x, y, z), (
                    "constructed triple must refute the half-space rule"
                )
                assert halfspace_witness(product) is not None
            else:
                x, y, z = refuting_triple
                cx, cy, cz = enc.coords(x), enc.coords(y), enc.coords(z)

                def related(u, v):
                    return all(f.has(a, b) for f, a, b in zip(factors, u, v))

                assert (
                    x != z
                    and not related(cx, cy)
                    and not related(cy, cx)
                    and related(cx, cz)
                    and not related(cy, cz)
                )
            break

    pair_pattern_triple = None
    if len(factors) == 2 and all(s.kind == "lower_upper" for s in shapes):
        (l1, u1), (l2, u2) = (
            (shapes[0].lower, shapes[0].upper),
            (shapes[1].lower, shapes[1].upper),
        )
        if l1 and u1 and l2 and u2:
            a_bar = enc.index((u1[0], l2[0]))
            b_bar = enc.index((l1[0], l2[0]))
            c_bar = enc.index((u1[0], u2[0]))

            def related2(x, y):
                cx, cy = enc.coords(x), enc.coords(y)
                return all(f.has(a, b) for f, a, b in zip(factors, cx, cy))

            assert a_bar != c_bar and related2(a_bar, c_bar) and not related2(a_bar, b_bar)
            pair_pattern_triple = (a_bar, b_bar, c_bar)

    return ProductDiagnostics(
        shapes=shapes,
        refuting_indices=refuting_indices,
        refuting_triple=refuting_triple,
        pair_pattern_triple=pair_pattern_triple,
    )
