"""JSON shapes for digraphs, relations, transit functions and quasimetrics."""
from __future__ import annotations

import json
from typing import Any

from .core import (
    INF,
    BinaryRelation,
    Digraph,
    InputError,
    Quasimetric,
    TransitFunction,
    Universe,
)


def dumps(obj: Any) -> str:
    """Canonical single-document rendering used for every report."""
    return json.dumps(obj, ensure_ascii=False, indent=2) + "\n"


def _universe(doc: dict) -> Universe:
    verts = doc.get("vertices")
    if not isinstance(verts, list) or not all(isinstance(v, str) for v in verts):
        raise InputError('"vertices" must be a list of strings')
    return Universe(tuple(verts))


def _pairs(doc: dict, key: str) -> list:
    pairs = doc.get(key, [])
    if not isinstance(pairs, list):
        raise InputError(f'"{key}" must be a list of pairs')
    return pairs


def digraph_to_json(G: Digraph) -> dict:
    return {
        "type": "digraph",
        "vertices": list(G.universe.labels),
        "edges": [list(e) for e in G.labelled_edges()],
    }


def relation_to_json(rel: BinaryRelation) -> dict:
    return {
        "type": "relation",
        "vertices": list(rel.universe.labels),
        "pairs": [list(p) for p in rel.labelled_pairs()],
    }


def transit_to_json(R: TransitFunction) -> dict:
    """All n^2 entries, row-major in vertex order; members in vertex order."""
    uni = R.universe
    labs = uni.labels
    n = R.n
    entries = [
        {"from": labs[i], "to": labs[j], "set": uni.names(R.table[i * n + j])}
        for i in range(n)
        for j in range(n)
    ]
    return {"type": "transit", "vertices": list(labs), "entries": entries}


def quasimetric_to_json(q: Quasimetric) -> dict:
    return {
        "type": "quasimetric",
        "vertices": list(q.universe.labels),
        "d": [["inf" if x is INF else x for x in row] for row in q.d],
    }


def from_json(doc: Any, strict: bool = False):
    """Decode any of the four shapes, dispatching on ``"type"``."""
    if not isinstance(doc, dict) or "type" not in doc:
        raise InputError('expected a JSON object with a "type" field')
    kind = doc["type"]
    if kind == "digraph":
        return Digraph.of(_universe(doc), _pairs(doc, "edges"))
    if kind == "relation":
        return BinaryRelation.of(_universe(doc), _pairs(doc, "pairs"))
    if kind == "transit":
        uni = _universe(doc)
        entries = {}
        for e in doc.get("entries", []):
            try:
                key = (e["from"], e["to"])
                members = e["set"]
            except (KeyError, TypeError):
                raise InputError(f"malformed transit entry {e!r}") from None
            if key in entries:
                raise InputError(f"duplicate transit entry for {key}", witness=key)
            entries[key] = members
        return TransitFunction.from_dict(uni, entries, strict=strict)
    if kind == "quasimetric":
        uni = _universe(doc)
        rows = doc.get("d")
        if not isinstance(rows, list):
            raise InputError('"d" must be a matrix')
        return Quasimetric(uni, tuple(tuple(r) for r in rows))
    raise InputError(f"unknown type {kind!r}")


def to_json(obj) -> dict:
    if isinstance(obj, Digraph):
        return digraph_to_json(obj)
    if isinstance(obj, BinaryRelation):
        return relation_to_json(obj)
    if isinstance(obj, TransitFunction):
        return transit_to_json(obj)
    if isinstance(obj, Quasimetric):
        return quasimetric_to_json(obj)
    if hasattr(obj, "to_json"):
        return obj.to_json()
    raise TypeError(type(obj).__name__)


def loads(text: str, strict: bool = False):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return from_json(doc, strict=strict)


def load(path: str, strict: bool = False):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text, strict=strict)
