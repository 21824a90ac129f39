"""JSON interchange for partitions, colored partitions and subset pairs.

A partition document lists every block, negatives and zero block included::

    {"n": 1, "blocks": [[1, -1]]}

Colored documents add ``"white": [[i, label], ...]`` for white singleton
pairs.  Output is normalized (blocks in linear order) so that
``dumps(parse(dumps(p))) == dumps(p)``.
"""
from __future__ import annotations

import json

from .enumeration import ColoredPartition
from .errors import ParseError, PartitionError
from .partition import TypeBPartition, validate
from .reiner import SubsetPair


def partition_doc(p: TypeBPartition) -> dict:
    return {"n": p.n, "blocks": [list(b) for b in p.blocks]}


def colored_doc(cp: ColoredPartition) -> dict:
    doc = partition_doc(cp.base)
    doc["white"] = [[i, lab] for i, lab in cp.white]
    return doc


def pair_doc(pair: SubsetPair) -> dict:
    return {"n": pair.n, "left": sorted(pair.left), "right": sorted(pair.right)}


def dumps(doc: dict) -> str:
    return json.dumps(doc, separators=(", ", ": "))


def _load(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object", "top level")
    return doc


def _int(value, where):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"expected an integer, got {value!r}", where)
    return value


def partition_from_doc(doc: dict) -> TypeBPartition:
    if "n" not in doc or "blocks" not in doc:
        raise ParseError("missing 'n' or 'blocks'", "top level")
    n = _int(doc["n"], "n")
    blocks = doc["blocks"]
    if not isinstance(blocks, list):
        raise ParseError("'blocks' must be a list", "blocks")
    parsed = []
    for i, b in enumerate(blocks):
        if not isinstance(b, list):
            raise ParseError("block must be a list", f"blocks[{i}]")
        parsed.append([_int(e, f"blocks[{i}][{j}]") for j, e in enumerate(b)])
    return validate(parsed, n)


def parse_partition(text: str) -> TypeBPartition:
    return partition_from_doc(_load(text))


def parse_colored(text: str) -> ColoredPartition:
    doc = _load(text)
    base = partition_from_doc(doc)
    white = {}
    for idx, item in enumerate(doc.get("white", [])):
        where = f"white[{idx}]"
        if not (isinstance(item, list) and len(item) == 2 and isinstance(item[1], str)):
            raise ParseError("expected [element, label]", where)
        white[abs(_int(item[0], where))] = item[1]
    try:
        return ColoredPartition.of(base, white)
    except PartitionError as exc:
        raise ParseError(str(exc), "white") from None


def parse_pair(text: str) -> SubsetPair:
    doc = _load(text)
    try:
        return SubsetPair.of(_int(doc["n"], "n"), doc["left"], doc["right"])
    except KeyError as exc:
        raise ParseError(f"missing {exc}", "top level") from None
