"""Command-line front end.

Exit codes: 0 success (or predicate true), 1 predicate false (check-style
commands), 2 invalid input, 3 resource cap exceeded.  Reports are
byte-deterministic for identical inputs and flags; wall times go to
stderr.  Single-relation outputs are valid relation files that re-parse
to the same relation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .dimension import Realizer, dimension_report, realizer_to_linear_extensions, \
    realizer_to_linear_extensions_alt, enumerate_halfspaces
from .errors import InputError, QuordError, ResourceCapError
from .extensions import linearize_halfspace, szpilrajn_extension, tighten_halfspace
from .fileio import format_relation, parse_relation
from .halfspaces import (
    HalfSpace,
    box_decomposition,
    complement_halfspace,
    halfspace_witness,
)
from .oracles import enumerate_quasiorders, theorem_replay
from .products import direct_product, product_halfspace_predicate
from .relations import (
    GroundSet,
    LinearOrder,
    PartialOrder,
    Quasiorder,
    QuotientMap,
    Relation,
    chain_order,
    classify,
    induced_order,
)


def _load(path: str) -> Relation:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    return parse_relation(text)


def _load_quasiorder(path: str) -> Quasiorder:
    rel = _load(path)
    return Quasiorder(rel.ground, rel.rows)


def _load_halfspace(path: str) -> HalfSpace:
    rel = _load(path)
    return HalfSpace(rel.ground, rel.rows)


def _element_header(ground: GroundSet) -> str:
    if ground.labels is not None:
        return "# elements: " + " ".join(f"{name}={i}" for i, name in enumerate(ground.labels))
    return f"# n: {ground.size}"


def _triple(ground: GroundSet, triple: tuple[int, ...]) -> str:
    names = ", ".join(ground.name(i) for i in triple)
    ids = ", ".join(str(i) for i in triple)
    return f"({names})" if ground.labels is None else f"({names})  # ids ({ids})"


def _boxes_line(ground: GroundSet, boxes, flags) -> str:
    chunks = []
    for box, full in zip(boxes, flags):
        names = ",".join(ground.name(e) for e in box)
        mark = "" if len(box) == 1 else ("■" if full else "∅")
        chunks.append("{" + names + "}" + mark)
    return "[" + " < ".join(chunks) + "]"


def _chain_line(order: LinearOrder) -> str:
    return " < ".join(order.ground.name(e) for e in order.sequence())


def _class_chain_line(qm: QuotientMap, ground: GroundSet, order: LinearOrder) -> str:
    chunks = []
    for c in order.sequence():
        names = ",".join(ground.name(e) for e in qm.classes[c])
        chunks.append("{" + names + "}")
    return " < ".join(chunks)


def _parse_perm(ground: GroundSet, text: str) -> tuple[int, ...]:
    if ground.labels is not None:
        index = {name: i for i, name in enumerate(ground.labels)}
    else:
        index = {str(i): i for i in range(ground.size)}
    seq = []
    for name in text.split(","):
        name = name.strip()
        if name not in index:
            raise InputError(f"unknown element {name!r} in permutation")
        seq.append(index[name])
    if sorted(seq) != list(range(ground.size)):
        raise InputError("permutation must list every element exactly once")
    return tuple(seq)


def _quotient_perm_order(qm: QuotientMap, ground: GroundSet, text: str | None) -> LinearOrder | None:
    """Quotient linear order from an element permutation: classes by first appearance."""
    if text is None:
        return None
    seq = _parse_perm(ground, text)
    class_seq: list[int] = []
    seen: set[int] = set()
    for e in seq:
        c = qm.class_of[e]
        if c not in seen:
            seen.add(c)
            class_seq.append(c)
    return chain_order(qm.induced.ground, tuple(class_seq))


# -- handlers ----------------------------------------------------------------


def _cmd_classify(args) -> int:
    rel = _load(args.file)
    record = classify(rel)
    print(_element_header(rel.ground))
    for field in ("reflexive", "transitive", "antisymmetric", "symmetric", "total"):
        print(f"{field}: {'true' if getattr(record, field) else 'false'}")
    return 0


def _cmd_check(args) -> int:
    q = _load_quasiorder(args.file)
    witness = halfspace_witness(q)
    if witness is None:
        print("halfspace: true")
        return 0
    print("halfspace: false")
    print(f"witness: {_triple(q.ground, witness)}")
    return 1


def _cmd_decompose(args) -> int:
    h = _load_halfspace(args.file)
    d = box_decomposition(h)
    print(_element_header(h.ground))
    print(_boxes_line(h.ground, d.boxes, d.full))
    return 0


def _cmd_complement(args) -> int:
    h = _load_halfspace(args.file)
    sys.stdout.write(format_relation(complement_halfspace(h)))
    return 0


def _cmd_extend(args) -> int:
    rel = _load(args.file)
    p = PartialOrder(rel.ground, rel.rows)
    seed = None
    if args.seed is not None:
        seed = chain_order(p.ground, _parse_perm(p.ground, args.seed))
    result = szpilrajn_extension(p, seed)
    print(f"# order: {_chain_line(result)}")
    sys.stdout.write(format_relation(result))
    return 0


def _cmd_tighten(args) -> int:
    g = _load_quasiorder(args.gamma)
    a = _load_halfspace(args.alpha)
    qm = induced_order(g)
    r = None
    seed = _quotient_perm_order(qm, g.ground, args.r)
    if seed is not None:
        r = szpilrajn_extension(qm.induced, seed)
    result = tighten_halfspace(g, a, r)
    sys.stdout.write(format_relation(result))
    return 0


def _cmd_linearize(args) -> int:
    a = _load_halfspace(args.alpha)
    lam_rel = _load(args.lam)
    lam = LinearOrder(lam_rel.ground, lam_rel.rows)
    first = linearize_halfspace(a, lam)
    if not args.both:
        print(f"# order: {_chain_line(first)}")
        sys.stdout.write(format_relation(first))
        return 0
    second = linearize_halfspace(a, lam.inverse())
    print(f"R1: {_chain_line(first)}")
    print(f"R2: {_chain_line(second)}")
    return 0


def _cmd_dim(args) -> int:
    g = _load_quasiorder(args.file)
    report = dimension_report(g)
    qm = induced_order(g)
    print(report.order_dim)
    if len(qm.classes) != g.ground.size:
        print(f"# note: dimension of the induced order on {len(qm.classes)} classes")
    chains = " ; ".join(_class_chain_line(qm, g.ground, ext) for ext in report.dim_witness)
    print(f"# realizer: {chains}")
    return 0


def _cmd_hsdim(args) -> int:
    g = _load_quasiorder(args.file)
    report = dimension_report(g)
    print(report.hs_dim)
    forms = []
    for part in report.hs_witness.parts:
        d = box_decomposition(part)
        forms.append(_boxes_line(g.ground, d.boxes, d.full))
    print(f"# realizer: {' ; '.join(forms)}")
    return 0


def _cmd_transform(args) -> int:
    g = _load_quasiorder(args.gamma)
    parts = [_load_halfspace(path) for path in args.realizer]
    padded = False
    if len(parts) == 1:
        parts.append(HalfSpace.full(g.ground))
        padded = True
    realizer = Realizer(g, tuple(parts))
    qm = induced_order(g)
    mu = _quotient_perm_order(qm, g.ground, args.mu)
    if not 1 <= args.istar <= len(parts):
        raise InputError(f"--istar must be between 1 and {len(parts)}")
    transform = realizer_to_linear_extensions_alt if args.alt else realizer_to_linear_extensions
    outputs = transform(realizer, mu=mu, i_star=args.istar - 1)
    if padded:
        print("# padded: realizer extended with the full relation")
    for i, ext in enumerate(outputs, start=1):
        print(f"R{i}: {_class_chain_line(qm, g.ground, ext)}")
    return 0


def _cmd_product(args) -> int:
    factors = [_load_quasiorder(path) for path in args.files]
    if args.structural_only:
        verdict, reason = product_halfspace_predicate(factors, treat_trivial=args.treat_trivial)
        print(f"halfspace: {'true' if verdict else 'false'}")
        print(f"reason: {reason}")
        return 0 if verdict else 1
    product, _ = direct_product(factors)
    verdict, _ = product_halfspace_predicate(factors, treat_trivial=True)
    print(f"# halfspace: {'true' if verdict else 'false'}")
    sys.stdout.write(format_relation(product))
    return 0


def _cmd_enumerate(args) -> int:
    if args.kind == "quasiorders":
        count = 0
        for idx, q in enumerate(enumerate_quasiorders(args.n)):
            pairs = " ".join(f"({i},{j})" for i, j in sorted(q.pair_list()) if i != j)
            print(f"{idx}\t{pairs or '-'}")
            count += 1
        print(f"# count: {count}")
        return 0
    count = 0
    for idx, h in enumerate(enumerate_halfspaces(args.n)):
        d = box_decomposition(h)
        print(f"{idx}\t{_boxes_line(h.ground, d.boxes, d.full)}")
        count += 1
    print(f"# count: {count}")
    return 0


def _cmd_oracle(args) -> int:
    report = theorem_replay(args.suite)
    print(f"suite: {report.suite}")
    if report.seed is not None:
        print(f"seed: {report.seed}")
    print(f"{report.instances} instances, {len(report.failures)} failures")
    for failure in report.failures[:20]:
        print(f"failure: {failure}")
    print(f"wall time: {report.elapsed:.3f}s", file=sys.stderr)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quord",
        description="Exact algebra of finite quasiorders: half-spaces, boxes, dimension.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="report the basic properties of a relation file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("check", help="check a predicate of a relation file")
    p.add_argument("what", choices=["halfspace"])
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("decompose", help="box decomposition of a half-space")
    p.add_argument("file")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("complement", help="complementary half-space")
    p.add_argument("file")
    p.set_defaults(func=_cmd_complement)

    p = sub.add_parser("extend", help="deterministic linear extension of a partial order")
    p.add_argument("file")
    p.add_argument("--seed", help="comma-separated element names (tie-break order)")
    p.set_defaults(func=_cmd_extend)

    p = sub.add_parser("tighten", help="shrink a half-space above gamma to gamma's symmetric part")
    p.add_argument("--gamma", required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--r", help="comma-separated element names seeding the quotient extension")
    p.set_defaults(func=_cmd_tighten)

    p = sub.add_parser("linearize", help="fill an antisymmetric half-space from a linear order")
    p.add_argument("--alpha", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--both", action="store_true", help="also linearize against the reversed order")
    p.set_defaults(func=_cmd_linearize)

    p = sub.add_parser("dim", help="order dimension (of the induced order on classes)")
    p.add_argument("file")
    p.set_defaults(func=_cmd_dim)

    p = sub.add_parser("hsdim", help="half-space dimension")
    p.add_argument("file")
    p.set_defaults(func=_cmd_hsdim)

    p = sub.add_parser("transform", help="turn a half-space realizer into a linear realizer")
    p.add_argument("--gamma", required=True)
    p.add_argument("--realizer", nargs="+", required=True)
    p.add_argument("--mu", help="comma-separated element names ordering the classes")
    p.add_argument("--istar", type=int, default=1, help="1-based index of the reversed part")
    p.add_argument("--alt", action="store_true", help="use the index-priority construction")
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("product", help="direct product of quasiorders")
    p.add_argument("files", nargs="+")
    p.add_argument("--structural-only", action="store_true", help="verdict only, no product")
    p.add_argument("--treat-trivial", action="store_true", help="allow identity/full factors")
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("enumerate", help="stream all quasiorders or half-spaces on n elements")
    p.add_argument("kind", choices=["quasiorders", "halfspaces"])
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("oracle", help="run a registered theorem-replay suite")
    p.add_argument("suite", metavar="SUITE_ID")
    p.set_defaults(func=_cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except QuordError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
