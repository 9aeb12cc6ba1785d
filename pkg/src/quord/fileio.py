"""Relation file format: parse and emit.

Text format (canonical for output):

    # comment
    elements: bot a b top        (or: n: 4)
    strict: true                 (optional; reflexive pairs implicit otherwise)
    bot a
    a top

Header lines have a first token ending in ':' and must precede pair
lines; with an `n:` header, pair tokens are integer ids.  A JSON object
{"elements": [...] | "n": K, "pairs": [[x, y], ...],
"reflexive_implicit": bool} is accepted interchangeably.  Emitted files
re-parse to the identical relation.
"""

from __future__ import annotations

import json

from .errors import InputError
from .relations import GroundSet, Relation


def _strip_comment(line: str) -> str:
    hash_pos = line.find("#")
    return line if hash_pos < 0 else line[:hash_pos]


def _parse_json(text: str) -> Relation:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON relation: {exc}") from None
    if not isinstance(obj, dict):
        raise InputError("JSON relation must be an object")
    unknown = set(obj) - {"elements", "n", "pairs", "reflexive_implicit"}
    if unknown:
        raise InputError(f"unknown JSON fields: {sorted(unknown)}")
    if ("elements" in obj) == ("n" in obj):
        raise InputError("exactly one of 'elements' and 'n' is required")
    if "elements" in obj:
        labels = tuple(str(x) for x in obj["elements"])
        ground = GroundSet(len(labels), labels)
        index = {name: i for i, name in enumerate(labels)}

        def resolve(token) -> int:
            if str(token) not in index:
                raise InputError(f"unknown element {token!r}")
            return index[str(token)]

    else:
        if not isinstance(obj["n"], int):
            raise InputError("'n' must be an integer")
        ground = GroundSet(obj["n"])

        def resolve(token) -> int:
            if not isinstance(token, int):
                raise InputError(f"element ids must be integers, got {token!r}")
            return token

    pairs = []
    for entry in obj.get("pairs", []):
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise InputError(f"each pair must have two entries, got {entry!r}")
        pairs.append((resolve(entry[0]), resolve(entry[1])))
    implicit = obj.get("reflexive_implicit", True)
    if not isinstance(implicit, bool):
        raise InputError("'reflexive_implicit' must be a boolean")
    return Relation.from_pairs(ground, pairs, reflexive_implicit=implicit)


def parse_relation(text: str) -> Relation:
    """Parse the text or JSON relation format."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _parse_json(text)
    ground: GroundSet | None = None
    index: dict[str, int] = {}
    numeric = False
    strict = False
    pairs: list[tuple[int, int]] = []
    in_header = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0].endswith(":"):
            if not in_header:
                raise InputError(f"line {lineno}: header after pair lines")
            key = tokens[0][:-1]
            if key == "elements":
                if ground is not None:
                    raise InputError(f"line {lineno}: duplicate ground declaration")
                if len(tokens) == 1:
                    raise InputError(f"line {lineno}: 'elements:' needs at least one name")
                labels = tuple(tokens[1:])
                ground = GroundSet(len(labels), labels)
                index = {name: i for i, name in enumerate(labels)}
            elif key == "n":
                if ground is not None:
                    raise InputError(f"line {lineno}: duplicate ground declaration")
                if len(tokens) != 2 or not tokens[1].isdigit():
                    raise InputError(f"line {lineno}: 'n:' needs one nonnegative integer")
                ground = GroundSet(int(tokens[1]))
                numeric = True
            elif key == "strict":
                if len(tokens) != 2 or tokens[1] not in ("true", "false"):
                    raise InputError(f"line {lineno}: 'strict:' must be true or false")
                strict = tokens[1] == "true"
            else:
                raise InputError(f"line {lineno}: unknown header {key!r}")
            continue
        in_header = False
        if ground is None:
            raise InputError(f"line {lineno}: pair before ground declaration")
        if len(tokens) != 2:
            raise InputError(f"line {lineno}: expected two tokens, got {len(tokens)}")
        coords = []
        for token in tokens:
            if numeric:
                if not token.isdigit():
                    raise InputError(f"line {lineno}: element id {token!r} is not an integer")
                coords.append(int(token))
            else:
                if token not in index:
                    raise InputError(f"line {lineno}: unknown element {token!r}")
                coords.append(index[token])
        pairs.append((coords[0], coords[1]))
    if ground is None:
        raise InputError("missing 'elements:' or 'n:' header")
    return Relation.from_pairs(ground, pairs, reflexive_implicit=not strict)


def format_relation(rel: Relation) -> str:
    """Canonical text form; reflexive relations use the implicit-diagonal style."""
    lines = []
    if rel.ground.labels is not None:
        lines.append("elements: " + " ".join(rel.ground.labels))
    else:
        lines.append(f"n: {rel.ground.size}")
    implicit = rel.is_reflexive
    if not implicit:
        lines.append("strict: true")
    for i, j in sorted(rel.pair_list()):
        if implicit and i == j:
            continue
        lines.append(f"{rel.ground.name(i)} {rel.ground.name(j)}")
    return "\n".join(lines) + "\n"
