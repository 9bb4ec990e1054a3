"""JSON file formats for graphs and relative graphs.

Graph::

    {"vertices": ["u", "v"],
     "edges": [{"name": "e", "src": "v", "rng": "u", "card": "1"}]}

A relative graph adds ``"A": [vertex names]``.  Parsing is strict: unknown
keys, wrong types and invalid graphs are rejected with :class:`InputError`.
"""

from __future__ import annotations

import json
from pathlib import Path as FilePath
from typing import Any

from .errors import InputError
from .graph import CARDINALITIES, EdgeDecl, Graph, validate_graph
from .relative import RelativeGraph, validate_relative

GRAPH_KEYS = {"vertices", "edges"}
EDGE_KEYS = {"name", "src", "rng", "card"}


def _names(value: Any, what: str) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise InputError(f"{what} must be a list of strings")
    return value


def graph_from_dict(data: Any, *, allow: frozenset[str] = frozenset()) -> Graph:
    if not isinstance(data, dict):
        raise InputError("graph must be a JSON object")
    unknown = set(data) - GRAPH_KEYS - allow
    if unknown:
        raise InputError(f"unknown fields: {sorted(unknown)}")
    missing = GRAPH_KEYS - set(data)
    if missing:
        raise InputError(f"missing fields: {sorted(missing)}")
    vertices = _names(data["vertices"], "vertices")
    if not isinstance(data["edges"], list):
        raise InputError("edges must be a list")
    edges = []
    for item in data["edges"]:
        if not isinstance(item, dict):
            raise InputError("each edge must be an object")
        unknown = set(item) - EDGE_KEYS
        if unknown:
            raise InputError(f"unknown edge fields: {sorted(unknown)}")
        if {"name", "src", "rng"} - set(item):
            raise InputError(f"edge needs name, src and rng: {item}")
        card = item.get("card", "1")
        if card not in CARDINALITIES:
            raise InputError(f"edge {item['name']!r}: card must be one of {CARDINALITIES}")
        fields = [item["name"], item["src"], item["rng"]]
        if not all(isinstance(x, str) for x in fields):
            raise InputError(f"edge fields must be strings: {item}")
        edges.append(EdgeDecl(*fields, card))
    g = Graph(tuple(vertices), tuple(edges))
    problems = validate_graph(g)
    if problems:
        raise InputError(f"invalid graph: {problems[0]}")
    return g


def graph_to_dict(g: Graph) -> dict:
    return {
        "vertices": list(g.vertices),
        "edges": [{"name": d.name, "src": d.src, "rng": d.rng, "card": d.card} for d in g.edges],
    }


def relative_from_dict(data: Any) -> RelativeGraph:
    """Parse a relative graph; a missing ``"A"`` means the empty set."""
    g = graph_from_dict(data, allow=frozenset({"A"}))
    A = _names(data.get("A", []), "A")
    rg = RelativeGraph(g, frozenset(A))
    problems = validate_relative(rg)
    if problems:
        raise InputError(f"invalid relative graph: {problems[0]}")
    return rg


def relative_to_dict(rg: RelativeGraph) -> dict:
    out = graph_to_dict(rg.graph)
    out["A"] = sorted(rg.A)
    return out


def dumps(data: dict) -> str:
    return json.dumps(data, indent=2) + "\n"


def _read(path) -> Any:
    try:
        return json.loads(FilePath(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: not valid JSON ({exc.msg} at line {exc.lineno})") from None


def load_graph(path) -> Graph:
    return graph_from_dict(_read(path))


def load_relative(path) -> RelativeGraph:
    return relative_from_dict(_read(path))


def save_graph(g: Graph, path) -> None:
    FilePath(path).write_text(dumps(graph_to_dict(g)))


def save_relative(rg: RelativeGraph, path) -> None:
    FilePath(path).write_text(dumps(relative_to_dict(rg)))
