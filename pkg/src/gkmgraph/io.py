"""JSON interchange documents and Graphviz export.

A document stores one labeled graph: the weight-vector length, the vertices,
one record per undirected edge (the forward dart's weight; the reverse dart
``X~`` implicitly carries the negated weight), and optional connection and
ordering sections.  Parsing is purely structural; the axioms are checked by
:func:`gkmgraph.axial.validate_axial` once a graph is assembled.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping

from .axial import AxialFunction, Connection, GkmGraph, infer_connection
from .errors import GkmError
from .graph import REVERSE_SUFFIX, build_graph, reverse_name


class ParseError(GkmError):
    """The input is not well-formed JSON."""


class SchemaError(GkmError):
    """The JSON is well-formed but does not match the document schema."""


@dataclass(frozen=True)
class EdgeRecord:
    id: str
    source: str
    target: str
    weight: tuple[int, ...]


@dataclass(frozen=True)
class ConnectionEntry:
    dart: str
    images: tuple[tuple[str, str], ...]


@dataclass(frozen=True)
class GkmDocument:
    torus_rank: int
    vertices: tuple[str, ...]
    edges: tuple[EdgeRecord, ...]
    connection: tuple[ConnectionEntry, ...] | None = None
    orderings: Mapping[str, tuple[str, ...]] | None = None


def _expect(cond: bool, path: str, message: str) -> None:
    if not cond:
        raise SchemaError(f"{path}: {message}")


def _string_list(obj, path: str) -> tuple[str, ...]:
    _expect(isinstance(obj, list) and all(isinstance(x, str) for x in obj), path, "expected a list of strings")
    return tuple(obj)


def parse_gkm(text: str) -> GkmDocument:
    """Parse a document, raising :class:`ParseError` or :class:`SchemaError`."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    _expect(isinstance(obj, dict), "$", "expected a JSON object")
    unknown = set(obj) - {"torus_rank", "vertices", "edges", "connection", "orderings"}
    _expect(not unknown, "$", f"unknown fields: {sorted(unknown)}")

    rank = obj.get("torus_rank")
    _expect(isinstance(rank, int) and rank >= 1, "torus_rank", "expected a positive integer")
    vertices = _string_list(obj.get("vertices"), "vertices")
    _expect(len(set(vertices)) == len(vertices), "vertices", "duplicate vertex ids")

    raw_edges = obj.get("edges")
    _expect(isinstance(raw_edges, list), "edges", "expected a list")
    edges = []
    seen_edges = set()
    for k, e in enumerate(raw_edges):
        path = f"edges[{k}]"
        _expect(isinstance(e, dict), path, "expected an object")
        _expect(set(e) == {"id", "endpoints", "weight"}, path, "expected fields id, endpoints, weight")
        eid = e["id"]
        _expect(isinstance(eid, str) and eid, f"{path}.id", "expected a nonempty string")
        _expect(REVERSE_SUFFIX not in eid, f"{path}.id", f"edge ids must not contain {REVERSE_SUFFIX!r}")
        _expect(eid not in seen_edges, f"{path}.id", "duplicate edge id")
        seen_edges.add(eid)
        ends = e["endpoints"]
        _expect(
            isinstance(ends, list) and len(ends) == 2 and all(isinstance(x, str) for x in ends),
            f"{path}.endpoints", "expected a pair of vertex ids",
        )
        _expect(ends[0] in vertices and ends[1] in vertices, f"{path}.endpoints", "unknown vertex")
        weight = e["weight"]
        _expect(
            isinstance(weight, list) and all(isinstance(x, int) for x in weight),
            f"{path}.weight", "expected a list of integers",
        )
        _expect(len(weight) == rank, f"{path}.weight", f"expected {rank} integers, got {len(weight)}")
        edges.append(EdgeRecord(eid, ends[0], ends[1], tuple(weight)))

    connection = None
    if obj.get("connection") is not None:
        raw_conn = obj["connection"]
        _expect(isinstance(raw_conn, list), "connection", "expected a list")
        entries = []
        seen_darts = set()
        for k, c in enumerate(raw_conn):
            path = f"connection[{k}]"
            _expect(isinstance(c, dict) and set(c) == {"dart", "maps"}, path, "expected fields dart, maps")
            dart = c["dart"]
            _expect(isinstance(dart, str), f"{path}.dart", "expected a string")
            _expect(dart not in seen_darts, f"{path}.dart", "duplicate dart")
            seen_darts.add(dart)
            maps = c["maps"]
            _expect(isinstance(maps, list), f"{path}.maps", "expected a list of pairs")
            images = []
            for kk, pair in enumerate(maps):
                _expect(
                    isinstance(pair, list) and len(pair) == 2 and all(isinstance(x, str) for x in pair),
                    f"{path}.maps[{kk}]", "expected a pair of dart ids",
                )
                images.append((pair[0], pair[1]))
            entries.append(ConnectionEntry(dart, tuple(images)))
        connection = tuple(entries)

    orderings = None
    if obj.get("orderings") is not None:
        raw_ord = obj["orderings"]
        _expect(isinstance(raw_ord, dict), "orderings", "expected an object")
        orderings = {}
        for v, lst in raw_ord.items():
            _expect(v in vertices, f"orderings.{v}", "unknown vertex")
            orderings[v] = _string_list(lst, f"orderings.{v}")

    return GkmDocument(rank, vertices, tuple(edges), connection, orderings)


def emit_gkm(doc: GkmDocument) -> str:
    """Serialize a document; ``parse_gkm(emit_gkm(doc)) == doc``."""
    obj: dict = {
        "torus_rank": doc.torus_rank,
        "vertices": list(doc.vertices),
        "edges": [
            {"id": e.id, "endpoints": [e.source, e.target], "weight": list(e.weight)}
            for e in doc.edges
        ],
    }
    if doc.connection is not None:
        obj["connection"] = [
            {"dart": c.dart, "maps": [[a, b] for a, b in c.images]}
            for c in doc.connection
        ]
    if doc.orderings is not None:
        obj["orderings"] = {v: list(order) for v, order in doc.orderings.items()}
    return json.dumps(obj, indent=2) + "\n"


def document_from_gkm(gkm: GkmGraph) -> GkmDocument:
    """Snapshot a labeled graph, pinning its connection and orderings."""
    g = gkm.graph
    edges = []
    for e in g.edge_representatives():
        if g.reverse(e) != reverse_name(e):
            raise GkmError(
                f"dart pair {e}/{g.reverse(e)} does not follow the {REVERSE_SUFFIX!r} naming convention"
            )
        edges.append(EdgeRecord(e, g.source(e), g.target(e), gkm.weight(e)))
    entries = []
    for d in g.darts:
        nabla = gkm.connection.maps[d]
        images = tuple((e2, nabla[e2]) for e2 in g.out_darts(g.source(d)))
        entries.append(ConnectionEntry(d, images))
    return GkmDocument(
        torus_rank=gkm.axial.torus_rank,
        vertices=g.vertices,
        edges=tuple(edges),
        connection=tuple(entries),
        orderings={v: g.out_darts(v) for v in g.vertices},
    )


def gkm_from_document(doc: GkmDocument) -> GkmGraph:
    """Assemble a labeled graph; the connection is inferred when absent."""
    graph = build_graph(
        doc.vertices,
        [(e.id, e.source, e.target) for e in doc.edges],
        orderings=doc.orderings,
    )
    weights: dict[str, tuple[int, ...]] = {}
    for e in doc.edges:
        weights[e.id] = e.weight
        weights[reverse_name(e.id)] = tuple(-x for x in e.weight)
    axial = AxialFunction(doc.torus_rank, weights)
    if doc.connection is None:
        return GkmGraph(graph, axial, infer_connection(graph, axial))
    maps: dict[str, dict[str, str]] = {}
    for entry in doc.connection:
        if entry.dart not in graph.sources:
            raise SchemaError(f"connection: unknown dart {entry.dart}")
        maps[entry.dart] = dict(entry.images)
    for d in graph.darts:
        if d in maps:
            continue
        back = maps.get(graph.reverse(d))
        if back is None:
            raise SchemaError(f"connection: no map for dart {d} or its reverse")
        maps[d] = {img: src for src, img in back.items()}
    return GkmGraph(graph, axial, Connection(maps))


def load_gkm(text: str) -> GkmGraph:
    return gkm_from_document(parse_gkm(text))


def _fmt_vec(v: tuple[int, ...]) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def emit_dot(gkm: GkmGraph, annotate: str = "none") -> str:
    """Graphviz text with one undirected edge per dart pair.

    ``annotate`` is ``"none"``, ``"weights"`` (forward-dart weight) or
    ``"congruence"`` (the coefficient vectors of both darts).  Output order is
    fixed, so equal graphs produce identical text.
    """
    if annotate not in ("none", "weights", "congruence"):
        raise ValueError(f"unknown annotation mode {annotate!r}")
    g = gkm.graph
    lines = ["graph gkm {"]
    for v in g.vertices:
        lines.append(f'  "{v}";')
    if annotate == "congruence":
        from .congruence import congruence_vector

        vectors = {d: congruence_vector(gkm, d) for d in g.darts}
    for e in g.edge_representatives():
        ends = f'"{g.source(e)}" -- "{g.target(e)}"'
        if annotate == "weights":
            lines.append(f'  {ends} [label="{e}: {_fmt_vec(gkm.weight(e))}"];')
        elif annotate == "congruence":
            label = f"{_fmt_vec(vectors[e])} / {_fmt_vec(vectors[g.reverse(e)])}"
            lines.append(f'  {ends} [label="{label}"];')
        else:
            lines.append(f"  {ends};")
    lines.append("}")
    return "\n".join(lines) + "\n"
