"""Brute-force enumeration oracles and exhaustive/sampled theorem replays.

Everything here is an independent verification path: quasiorders are
enumerated two structurally different ways, half-spaces are both
generated and filtered, and each replayed statement is checked against
enumerated or seeded-random instances.  Sampled suites use a fixed
default seed recorded in the report.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import combinations
from typing import Callable, Iterator, Sequence

from .catalog import diamond, separation_instance, standard_example
from .dimension import (
    Realizer,
    _iter_box_specs,
    all_halfspaces,
    dimension_relation_check,
    enumerate_halfspaces_above,
    hs_dimension,
    linear_extensions,
    order_dimension,
    realizer_to_linear_extensions,
    realizer_to_linear_extensions_alt,
)
from .errors import InputError, ResourceCapError
from .extensions import (
    linearize_halfspace,
    szpilrajn_extension,
    tighten_halfspace,
    two_linear_representation,
)
from .halfspaces import (
    BoxDecomposition,
    HalfSpace,
    box_decomposition,
    check_complementary_pair,
    complement_halfspace,
    halfspace_by_complement,
    halfspace_by_restrictions,
    halfspace_by_reverse_rule,
    halfspace_realizer_from_linear_realizer,
    is_halfspace,
    reconstruct_from_boxes,
)
from .products import direct_product, lemma_witnesses, product_halfspace_predicate
from .relations import (
    GroundSet,
    PartialOrder,
    Quasiorder,
    Relation,
    _iter_bits,
    chain_order,
    induced_order,
    quord_join,
    quord_meet,
    transitive_closure,
)

QUASIORDER_ENUM_MAX = 5
DEFAULT_SEED = 24301


# -- enumeration -------------------------------------------------------------


def enumerate_quasiorders(n: int) -> Iterator[Quasiorder]:
    """Every quasiorder on n elements exactly once, ascending by row masks.

    Ordered by the tuple (row_0, ..., row_{n-1}) of integer row masks,
    bit j of row i encoding the pair (i, j).  Rows are chosen one at a
    time and partial transitivity prunes the candidate space.
    """
    if n < 0:
        raise InputError("n must be nonnegative")
    if n > QUASIORDER_ENUM_MAX:
        raise ResourceCapError(f"quasiorder enumeration capped at n <= {QUASIORDER_ENUM_MAX}")
    ground = GroundSet(n)
    if n == 0:
        yield Quasiorder(ground, ())
        return
    rows: list[int] = []

    def rec(k: int):
        if k == n:
            yield Quasiorder(ground, tuple(rows))
            return
        bit = 1 << k
        below = bit - 1
        for row in range(1 << n):
            if not row & bit:
                continue
            ok = True
            jm = row & below
            while jm:
                low = jm & -jm
                if rows[low.bit_length() - 1] & ~row:
                    ok = False
                    break
                jm ^= low
            if ok:
                for i in range(k):
                    if rows[i] & bit and row & ~rows[i]:
                        ok = False
                        break
            if ok:
                rows.append(row)
                yield from rec(k + 1)
                rows.pop()

    yield from rec(0)


@lru_cache(maxsize=None)
def all_quasiorders(n: int) -> tuple[Quasiorder, ...]:
    return tuple(enumerate_quasiorders(n))


@lru_cache(maxsize=None)
def all_posets(n: int) -> tuple[PartialOrder, ...]:
    return tuple(
        PartialOrder(q.ground, q.rows) for q in all_quasiorders(n) if q.is_antisymmetric
    )


def set_partitions(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All set partitions of 0..n-1, blocks listed by ascending minimum."""
    if n == 0:
        yield ()
        return
    assignment = [0] * n

    def rec(i: int, used: int):
        if i == n:
            blocks: list[list[int]] = [[] for _ in range(used)]
            for e, b in enumerate(assignment):
                blocks[b].append(e)
            yield tuple(tuple(b) for b in blocks)
            return
        for value in range(used + 1):
            assignment[i] = value
            yield from rec(i + 1, max(used, value + 1))

    yield from rec(1, 1)


def enumerate_quasiorders_composed(n: int) -> Iterator[Quasiorder]:
    """Second generation order: a partition lifted along a poset on its blocks."""
    if n > QUASIORDER_ENUM_MAX:
        raise ResourceCapError(f"quasiorder enumeration capped at n <= {QUASIORDER_ENUM_MAX}")
    ground = GroundSet(n)
    for partition in set_partitions(n):
        k = len(partition)
        masks = [reduce(lambda m, e: m | (1 << e), block, 0) for block in partition]
        for poset in all_posets(k):
            rows = [0] * n
            for ci, block in enumerate(partition):
                row = 0
                for cj in _iter_bits(poset.rows[ci]):
                    row |= masks[cj]
                for e in block:
                    rows[e] = row
            yield Quasiorder(ground, tuple(rows))


def random_quasiorder(n: int, rng: random.Random) -> Quasiorder:
    ground = GroundSet(n)
    count = rng.randrange(0, n * n // 2 + 1) if n else 0
    pairs = [(rng.randrange(n), rng.randrange(n)) for _ in range(count)]
    base = Relation.from_pairs(ground, pairs, reflexive_implicit=True)
    return Quasiorder(ground, transitive_closure(base).rows)


# -- separation --------------------------------------------------------------


def find_separating_pair(
    p1: Quasiorder, p2: Quasiorder
) -> tuple[HalfSpace, HalfSpace] | None:
    """A complementary half-space pair with p1 in the first and p2 in the second."""
    p1._require_same_ground(p2)
    n = p1.ground.size
    for h in all_halfspaces(n):
        if not all(a & ~b == 0 for a, b in zip(p1.rows, h.rows)):
            continue
        alpha = HalfSpace(p1.ground, h.rows)
        beta = complement_halfspace(alpha)
        if p2.issubset(beta):
            return alpha, beta
    return None


def verify_separation_counterexample(
    p1: Quasiorder | None = None, p2: Quasiorder | None = None
) -> bool:
    """True iff NO complementary half-space pair separates the two orders.

    Defaults to the 4-element instance of two disjoint partial orders
    that cannot be separated; iterates every half-space on the ground set.
    """
    if p1 is None or p2 is None:
        d1, d2 = separation_instance()
        p1 = p1 or d1
        p2 = p2 or d2
    return find_separating_pair(p1, p2) is None


# -- parameterized theorem checks -------------------------------------------

CheckResult = tuple[int, list[str]]


def check_halfspace_criteria_agree(sizes: Sequence[int]) -> CheckResult:
    """The four half-space criteria give one verdict on every quasiorder."""
    instances, failures = 0, []
    for n in sizes:
        for q in all_quasiorders(n):
            verdicts = (
                halfspace_by_complement(q),
                halfspace_by_restrictions(q),
                is_halfspace(q),
                halfspace_by_reverse_rule(q),
            )
            instances += 1
            if len(set(verdicts)) != 1:
                failures.append(f"criteria disagree on {q!r}: {verdicts}")
    return instances, failures


def check_box_roundtrip(max_n: int) -> CheckResult:
    """decompose then reconstruct is the identity, and vice versa."""
    instances, failures = 0, []
    for n in range(max_n + 1):
        ground = GroundSet(n)
        for h in all_halfspaces(n):
            instances += 1
            if reconstruct_from_boxes(box_decomposition(h)) != h:
                failures.append(f"halfspace roundtrip failed on {h!r}")
        for boxes, flags in _iter_box_specs(n):
            instances += 1
            d = BoxDecomposition(ground, boxes, flags)
            if box_decomposition(reconstruct_from_boxes(d)) != d:
                failures.append(f"decomposition roundtrip failed on {d}")
    return instances, failures


def check_halfspace_closure(max_n: int) -> CheckResult:
    """Half-spaces are closed under inverse, restriction and quotient.

    Also checks the complementary pair laws and that complementation
    reverses the box order while flipping the flags of non-singletons.
    """
    instances, failures = 0, []
    for n in range(max_n + 1):
        for h in all_halfspaces(n):
            instances += 1
            try:
                h.inverse()
                for size in range(n + 1):
                    for sub in combinations(range(n), size):
                        h.restrict_to(sub)
                qm = induced_order(h)
                HalfSpace(qm.induced.ground, qm.induced.rows)
                beta = complement_halfspace(h)
                if not check_complementary_pair(h, beta):
                    failures.append(f"complement is not complementary for {h!r}")
                    continue
                d, db = box_decomposition(h), box_decomposition(beta)
                if db.boxes != tuple(reversed(d.boxes)):
                    failures.append(f"complement does not reverse boxes of {h!r}")
                    continue
                for box, flag in zip(d.boxes, d.full):
                    mirrored = db.full[db.boxes.index(box)]
                    if len(box) > 1 and mirrored == flag:
                        failures.append(f"complement does not flip flag of box {box}")
                    if len(box) == 1 and mirrored:
                        failures.append(f"singleton box {box} flagged full by complement")
            except Exception as exc:  # closure failure manifests as a validation error
                failures.append(f"closure property failed on {h!r}: {exc}")
    return instances, failures


def check_complementary_distributivity(n: int = 3) -> CheckResult:
    """Complementary pairs distribute over meets, and conversely."""
    instances, failures = 0, []
    quords = all_quasiorders(n)
    ident = Relation.identity(GroundSet(n))
    full = Relation.full(GroundSet(n))
    for h in all_halfspaces(n):
        beta = complement_halfspace(h)
        for g in quords:
            instances += 1
            lhs = quord_join(
                Quasiorder(g.ground, h.intersection(g).rows),
                Quasiorder(g.ground, beta.intersection(g).rows),
            )
            if lhs != Relation(g.ground, g.rows):
                failures.append(f"distributive identity failed for {h!r}, {g!r}")
    for a in quords:
        for b in quords:
            if a.intersection(b) != ident:
                continue
            holds = all(
                quord_join(
                    Quasiorder(g.ground, a.intersection(g).rows),
                    Quasiorder(g.ground, b.intersection(g).rows),
                )
                == Relation(g.ground, g.rows)
                for g in quords
            )
            instances += 1
            if holds and a.union(b) != full:
                failures.append(f"distributivity without covering: {a!r}, {b!r}")
    return instances, failures


def check_intersection_representation(max_n: int) -> CheckResult:
    """Every quasiorder is the intersection of the half-spaces its quotient realizer lifts to."""
    instances, failures = 0, []
    for n in range(max_n + 1):
        for q in all_quasiorders(n):
            instances += 1
            exts = tuple(linear_extensions(induced_order(q).induced))
            try:
                halfspace_realizer_from_linear_realizer(q, exts)
            except Exception as exc:
                failures.append(f"lifted realizer failed on {q!r}: {exc}")
    return instances, failures


def check_flagship_dimensions() -> CheckResult:
    """The two anchor structures: the diamond and the 6-element standard example."""
    instances, failures = 0, []
    cases = [
        (diamond(), 1, 2),
        (standard_example(3), 3, 3),
    ]
    for poset, want_hs, want_dim in cases:
        hs, _ = hs_dimension(poset)
        dim, _ = order_dimension(poset)
        instances += 2
        if hs != want_hs:
            failures.append(f"hs-dim {hs} != {want_hs} on {poset!r}")
        if dim != want_dim:
            failures.append(f"dim {dim} != {want_dim} on {poset!r}")
    return instances, failures


def check_dimension_laws(sizes: Sequence[int], posets_only: bool) -> CheckResult:
    """Replay the dimension relationship laws over enumerated structures."""
    instances, failures = 0, []
    for n in sizes:
        pool = all_posets(n) if posets_only else all_quasiorders(n)
        for g in pool:
            instances += 1
            try:
                dimension_relation_check(g)
            except Exception as exc:
                failures.append(f"dimension law failed on {g!r}: {exc}")
    return instances, failures


def check_hsdim_bound_and_monotonicity(max_n: int) -> CheckResult:
    """hs-dim is bounded by the quotient dimension and monotone under restriction."""
    instances, failures = 0, []
    for n in range(max_n + 1):
        for g in all_quasiorders(n):
            instances += 1
            hs, _ = hs_dimension(g)
            dim, _ = order_dimension(induced_order(g).induced)
            if hs > dim:
                failures.append(f"hs-dim {hs} exceeds quotient dim {dim} on {g!r}")
            if (hs == 1) != is_halfspace(g):
                failures.append(f"hs-dim 1 mismatch with the predicate on {g!r}")
            for size in range(n + 1):
                for sub in combinations(range(n), size):
                    sub_hs, _ = hs_dimension(g.restrict_to(sub))
                    instances += 1
                    if sub_hs > hs:
                        failures.append(
                            f"restriction {sub} raises hs-dim on {g!r}: {sub_hs} > {hs}"
                        )
    return instances, failures


def _realizer_indices(
    masks: list[int], need: int, cap: int, triple_budget: int
) -> Iterator[tuple[int, ...]]:
    """Index combinations of size 2 then 3 covering `need`, first-found order."""
    found = 0
    m = len(masks)
    for i, j in combinations(range(m), 2):
        if masks[i] | masks[j] == need:
            yield (i, j)
            found += 1
            if found >= cap:
                return
    scanned = 0
    for combo in combinations(range(m), 3):
        scanned += 1
        if scanned > triple_budget:
            return
        if masks[combo[0]] | masks[combo[1]] | masks[combo[2]] == need:
            yield combo
            found += 1
            if found >= cap:
                return


def check_transform_constructions(
    max_n: int, per_target_cap: int = 500, triple_budget: int = 100_000
) -> CheckResult:
    """Both realizer transforms succeed on size 2-3 realizers over small posets."""
    instances, failures = 0, []
    for n in range(max_n + 1):
        for p in all_posets(n):
            candidates = list(enumerate_halfspaces_above(p))
            full = (1 << (n * n)) - 1 if n else 0
            need = full ^ p.packed()
            masks = [full ^ h.packed() for h in candidates]
            for combo in _realizer_indices(masks, need, per_target_cap, triple_budget):
                r = Realizer(p, tuple(candidates[i] for i in combo))
                for transform in (
                    realizer_to_linear_extensions,
                    realizer_to_linear_extensions_alt,
                ):
                    instances += 1
                    try:
                        transform(r)
                    except Exception as exc:
                        failures.append(f"{transform.__name__} failed on {r}: {exc}")
    return instances, failures


def check_transform_random(n: int, count: int, seed: int = DEFAULT_SEED) -> CheckResult:
    """Both transforms on seeded-random quasiorders with random realizers."""
    rng = random.Random(seed)
    instances, failures = 0, []
    pool = all_halfspaces(n)
    full_index = next(i for i, h in enumerate(pool) if h == Relation.full(h.ground))
    for _ in range(count):
        g = random_quasiorder(n, rng)
        above = [h for h in pool if all(a & ~b == 0 for a, b in zip(g.rows, h.rows))]
        fullmask = (1 << (n * n)) - 1
        need = fullmask ^ g.packed()
        order = list(range(len(above)))
        rng.shuffle(order)
        chosen: list[int] = []
        acc = 0
        for idx in order:
            miss = fullmask ^ above[idx].packed()
            if miss & ~acc & need:
                chosen.append(idx)
                acc |= miss
                if acc & need == need:
                    break
        parts = [above[i] for i in chosen]
        if len(parts) < 2:
            parts.append(HalfSpace(g.ground, pool[full_index].rows))
        if len(parts) < 2:
            parts.append(parts[0])
        r = Realizer(g, tuple(parts))
        mu = chain_order(
            GroundSet(len(induced_order(g).classes)),
            rng.sample(range(len(induced_order(g).classes)), len(induced_order(g).classes)),
        )
        i_star = rng.randrange(len(parts))
        for transform in (realizer_to_linear_extensions, realizer_to_linear_extensions_alt):
            instances += 1
            try:
                transform(r, mu=mu, i_star=i_star)
            except Exception as exc:
                failures.append(f"{transform.__name__} failed (seed {seed}): {exc}")
    return instances, failures


def _random_halfspace(n: int, rng: random.Random, antisymmetric: bool = False) -> HalfSpace:
    elems = rng.sample(range(n), n)
    boxes: list[tuple[int, ...]] = []
    flags: list[bool] = []
    i = 0
    while i < n:
        size = rng.randrange(1, n - i + 1)
        box = tuple(sorted(elems[i : i + size]))
        boxes.append(box)
        flags.append(False if (len(box) == 1 or antisymmetric) else rng.random() < 0.5)
        i += size
    return reconstruct_from_boxes(BoxDecomposition(GroundSet(n), tuple(boxes), tuple(flags)))


def check_extension_postconditions(
    exhaustive_max_n: int = 3,
    sampled_sizes: Sequence[int] = (4, 5),
    samples_per_op: int = 2000,
    seed: int = DEFAULT_SEED,
) -> CheckResult:
    """Tightening, linearization and the two-order representation keep their contracts."""
    instances, failures = 0, []

    def run(label: str, thunk: Callable[[], None]):
        nonlocal instances
        instances += 1
        try:
            thunk()
        except Exception as exc:
            failures.append(f"{label}: {exc}")

    for n in range(exhaustive_max_n + 1):
        orders = tuple(linear_extensions(PartialOrder.identity(n)))
        for q in all_quasiorders(n):
            exts = tuple(linear_extensions(induced_order(q).induced))
            for a in enumerate_halfspaces_above(q):
                for ext in exts:
                    run("tighten", lambda q=q, a=a, ext=ext: tighten_halfspace(q, a, ext))
        for h in all_halfspaces(n):
            qm = induced_order(h)
            for seed_order in linear_extensions(PartialOrder.identity(len(qm.classes))):
                run("two-linear", lambda h=h, s=seed_order: two_linear_representation(h, s))
            if not h.is_antisymmetric:
                continue
            for lam in orders:
                def identity_check(h=h, lam=lam):
                    first = linearize_halfspace(h, lam)
                    second = linearize_halfspace(h, lam.inverse())
                    assert first.intersection(second) == Relation(h.ground, h.rows)

                run("linearize", identity_check)

    rng = random.Random(seed)
    for n in sampled_sizes:
        pool = all_halfspaces(n)
        for _ in range(samples_per_op):
            q = random_quasiorder(n, rng)
            above = [h for h in pool if all(a & ~b == 0 for a, b in zip(q.rows, h.rows))]
            a = above[rng.randrange(len(above))]
            qm = induced_order(q)
            ext = szpilrajn_extension(
                qm.induced,
                chain_order(qm.induced.ground, rng.sample(range(len(qm.classes)), len(qm.classes))),
            )
            run("tighten", lambda q=q, a=a, ext=ext: tighten_halfspace(q, a, ext))
        for _ in range(samples_per_op):
            h = _random_halfspace(n, rng, antisymmetric=True)
            lam = chain_order(h.ground, rng.sample(range(n), n))

            def identity_check(h=h, lam=lam):
                first = linearize_halfspace(h, lam)
                second = linearize_halfspace(h, lam.inverse())
                assert first.intersection(second) == Relation(h.ground, h.rows)

            run("linearize", identity_check)
        for _ in range(samples_per_op):
            h = _random_halfspace(n, rng)
            k = len(induced_order(h).classes)
            seed_order = chain_order(GroundSet(k), rng.sample(range(k), k))
            run("two-linear", lambda h=h, s=seed_order: two_linear_representation(h, s))
    return instances, failures


def _factor_pool() -> list[Quasiorder]:
    return [q for n in (1, 2, 3) for q in all_quasiorders(n)]


def check_product_classification(max_product: int = 12, max_len: int = 3) -> CheckResult:
    """The structural product predicate agrees with the direct check everywhere."""
    instances, failures = 0, []
    pool = _factor_pool()

    def sweep(prefix: list[Quasiorder], size: int):
        nonlocal instances
        if prefix:
            verdict, _ = product_halfspace_predicate(prefix, treat_trivial=True)
            product, _ = direct_product(prefix)
            direct = is_halfspace(product)
            instances += 1
            if verdict != direct:
                failures.append(
                    f"structural verdict {verdict} != direct {direct} on {prefix!r}"
                )
            try:
                lemma_witnesses(prefix)
            except Exception as exc:
                failures.append(f"diagnostics failed on {prefix!r}: {exc}")
        if len(prefix) == max_len:
            return
        for factor in pool:
            total = size * factor.ground.size
            if total <= max_product:
                prefix.append(factor)
                sweep(prefix, total)
                prefix.pop()

    sweep([], 1)
    return instances, failures


def check_separation() -> CheckResult:
    """The canonical non-separable instance, plus two separable controls."""
    instances, failures = 0, []
    p1, p2 = separation_instance()
    cases = [
        (p1, p2, True),
        (p1, PartialOrder.from_pairs(4, [(2, 1)], reflexive_implicit=True), False),
        (PartialOrder.identity(4), PartialOrder.identity(4), False),
    ]
    for a, b, want in cases:
        instances += 1
        got = verify_separation_counterexample(a, b)
        if got != want:
            failures.append(f"separation verdict {got} != {want} for {a!r} vs {b!r}")
    return instances, failures


def check_enumeration_counts(
    quasiorder_sizes: Sequence[int] = (0, 1, 2, 3, 4),
    halfspace_sizes: Sequence[int] = (0, 1, 2, 3, 4),
) -> CheckResult:
    """Filter and generative enumerations agree with each other and the known counts."""
    known_quasiorders = {0: 1, 1: 1, 2: 4, 3: 29, 4: 355}
    known_halfspaces = {0: 1, 1: 1, 2: 4, 3: 20}
    instances, failures = 0, []
    for n in quasiorder_sizes:
        filtered = all_quasiorders(n)
        composed = set(q.rows for q in enumerate_quasiorders_composed(n))
        instances += 1
        if len(filtered) != len(set(filtered)):
            failures.append(f"duplicate quasiorders at n={n}")
        if composed != set(q.rows for q in filtered):
            sym = composed.symmetric_difference(set(q.rows for q in filtered))
            failures.append(f"generation orders disagree at n={n}: first diff {sorted(sym)[0]}")
        if n in known_quasiorders and len(filtered) != known_quasiorders[n]:
            failures.append(
                f"quasiorder count {len(filtered)} != {known_quasiorders[n]} at n={n}"
            )
    for n in halfspace_sizes:
        generated = all_halfspaces(n)
        filtered = [q for q in all_quasiorders(n) if halfspace_by_complement(q)]
        instances += 1
        if len(generated) != len(set(generated)):
            failures.append(f"duplicate half-spaces at n={n}")
        if set(h.rows for h in generated) != set(q.rows for q in filtered):
            failures.append(f"half-space filter and generator disagree at n={n}")
        if n in known_halfspaces and len(generated) != known_halfspaces[n]:
            failures.append(
                f"half-space count {len(generated)} != {known_halfspaces[n]} at n={n}"
            )
    return instances, failures


def check_join_is_least(n: int = 3) -> CheckResult:
    """The join is the least quasiorder containing the union."""
    instances, failures = 0, []
    quords = all_quasiorders(n)
    for a in quords:
        for b in quords:
            instances += 1
            join = quord_join(a, b)
            union = a.union(b)
            if not union.issubset(join):
                failures.append(f"join misses the union for {a!r}, {b!r}")
                continue
            if quord_meet(a, join) != Relation(a.ground, a.rows):
                failures.append(f"join does not contain a for {a!r}, {b!r}")
            for c in quords:
                if union.issubset(c) and not join.issubset(c):
                    failures.append(f"join is not least for {a!r}, {b!r}")
                    break
    return instances, failures


# -- suite registry -----------------------------------------------------------


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    instances: int
    failures: tuple[str, ...]
    seed: int | None
    elapsed: float

    @property
    def passed(self) -> bool:
        return not self.failures


_SUITES: dict[str, tuple[Callable[[], CheckResult], int | None]] = {
    "prop2.1-complementary-n3": (lambda: check_complementary_distributivity(3), None),
    "prop2.2-equivalence-n3": (lambda: check_halfspace_criteria_agree((3,)), None),
    "prop2.2-equivalence-n4": (lambda: check_halfspace_criteria_agree((4,)), None),
    "prop2.3-closure-n4": (lambda: check_halfspace_closure(4), None),
    "prop2.4-prop2.5-cor2.6-n3": (
        lambda: check_extension_postconditions(3, (), 0),
        None,
    ),
    "prop2.4-prop2.5-cor2.6-sampled": (
        lambda: check_extension_postconditions(3, (4, 5), 2000, DEFAULT_SEED),
        DEFAULT_SEED,
    ),
    "thm2.9-intersect-n4": (lambda: check_intersection_representation(4), None),
    "thm2.11-roundtrip-n4": (lambda: check_box_roundtrip(4), None),
    "thm2.11-roundtrip-n5": (lambda: check_box_roundtrip(5), None),
    "thm2.13-transform-n3": (lambda: check_transform_constructions(3, 200), None),
    "thm2.13-transform-n4": (lambda: check_transform_constructions(4, 500), None),
    "thm2.13-random-n5": (
        lambda: check_transform_random(5, 1000, DEFAULT_SEED),
        DEFAULT_SEED,
    ),
    "thm2.15-thm2.16-n4": (lambda: check_dimension_laws((0, 1, 2, 3, 4), False), None),
    "thm2.16-posets-n5": (lambda: check_dimension_laws((5,), True), None),
    "cor2.10-monotonicity-n4": (lambda: check_hsdim_bound_and_monotonicity(4), None),
    "thm3.4-products": (lambda: check_product_classification(12), None),
    "separation-counterexample": (check_separation, None),
    "enumeration-counts": (lambda: check_enumeration_counts(), None),
    "join-least-n3": (lambda: check_join_is_least(3), None),
    "flagship-dimensions": (check_flagship_dimensions, None),
}


def suite_ids() -> tuple[str, ...]:
    return tuple(sorted(_SUITES))


def theorem_replay(suite_id: str) -> SuiteReport:
    """Run one registered replay suite and report instances, failures and time."""
    if suite_id not in _SUITES:
        raise InputError(
            f"unknown suite {suite_id!r}; available: {', '.join(suite_ids())}"
        )
    runner, seed = _SUITES[suite_id]
    start = time.perf_counter()
    instances, failures = runner()
    elapsed = time.perf_counter() - start
    return SuiteReport(
        suite=suite_id,
        instances=instances,
        failures=tuple(failures),
        seed=seed,
        elapsed=elapsed,
    )
