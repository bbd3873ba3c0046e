"""Connected m-valent multigraphs carried by darts (oriented half-edges).

Darts, not vertex pairs, are the primitive: parallel edges are allowed, so a
pair of endpoints does not determine an edge.  Every dart ``e`` has a reversal
``ē`` under a fixed-point-free involution swapping its endpoints, and every
vertex fixes an order on its outgoing darts (lexicographic by dart id unless
pinned explicitly).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import GkmError


class GraphError(GkmError):
    """Malformed graph description."""


class LoopEdgeError(GraphError):
    """An edge starts and ends at the same vertex."""


class DisconnectedError(GraphError):
    """The underlying graph is not connected."""


class NonRegularError(GraphError):
    """Some vertex does not have the common out-valence."""


class BadInvolutionError(GraphError):
    """The reversal map is not a fixed-point-free involution swapping endpoints."""


REVERSE_SUFFIX = "~"


def reverse_name(dart_id: str) -> str:
    """Reverse-dart name under the edge-id convention (``X`` pairs with ``X~``)."""
    if dart_id.endswith(REVERSE_SUFFIX):
        return dart_id[: -len(REVERSE_SUFFIX)]
    return dart_id + REVERSE_SUFFIX


@dataclass(frozen=True)
class OrientedGraph:
    """An m-valent connected multigraph with oriented darts.

    Instances are immutable; build them with :func:`build_graph` or
    :func:`build_graph_from_darts`, which verify all structural invariants.
    """

    vertices: tuple[str, ...]
    sources: Mapping[str, str]
    targets: Mapping[str, str]
    reversal: Mapping[str, str]
    orderings: Mapping[str, tuple[str, ...]]
    valence: int

    @cached_property
    def darts(self) -> tuple[str, ...]:
        return tuple(sorted(self.sources))

    @cached_property
    def _positions(self) -> dict[str, int]:
        pos: dict[str, int] = {}
        for order in self.orderings.values():
            for i, d in enumerate(order):
                pos[d] = i
        return pos

    def source(self, dart: str) -> str:
        return self.sources[dart]

    def target(self, dart: str) -> str:
        return self.targets[dart]

    def reverse(self, dart: str) -> str:
        return self.reversal[dart]

    def out_darts(self, vertex: str) -> tuple[str, ...]:
        return self.orderings[vertex]

    def dart_index(self, dart: str) -> int:
        """Position of the dart in the ordering at its source vertex."""
        return self._positions[dart]

    def edge_representatives(self) -> tuple[str, ...]:
        """One dart per undirected edge: the lexicographically smaller of the pair."""
        return tuple(sorted(d for d in self.sources if d < self.reversal[d]))

    def with_orderings(self, orderings: Mapping[str, Sequence[str]]) -> "OrientedGraph":
        """Same graph with the out-dart orderings replaced (and re-validated)."""
        new = dict(self.orderings)
        for v, order in orderings.items():
            new[v] = tuple(order)
        return build_graph_from_darts(
            self.vertices, dict(self.sources), dict(self.targets),
            dict(self.reversal), orderings=new,
        )


def build_graph_from_darts(
    vertices: Iterable[str],
    sources: Mapping[str, str],
    targets: Mapping[str, str],
    reversal: Mapping[str, str],
    orderings: Mapping[str, Sequence[str]] | None = None,
) -> OrientedGraph:
    """Build and fully validate an :class:`OrientedGraph` from explicit darts."""
    verts = tuple(sorted(vertices))
    if not verts:
        raise GraphError("a graph needs at least one vertex")
    if len(set(verts)) != len(verts):
        raise GraphError("duplicate vertex ids")
    vset = set(verts)
    if set(sources) != set(targets):
        raise GraphError("sources and targets list different darts")
    for d, s in sources.items():
        t = targets[d]
        if s not in vset or t not in vset:
            raise GraphError(f"dart {d} references an unknown vertex")
        if s == t:
            raise LoopEdgeError(f"dart {d} is a loop at vertex {s}")
    if set(reversal) != set(sources):
        raise BadInvolutionError("reversal must be defined on exactly the darts")
    for d, r in reversal.items():
        if r == d:
            raise BadInvolutionError(f"reversal fixes dart {d}")
        if r not in sources:
            raise BadInvolutionError(f"reversal of {d} is the unknown dart {r}")
        if reversal[r] != d:
            raise BadInvolutionError(f"reversal is not an involution at dart {d}")
        if sources[r] != targets[d] or targets[r] != sources[d]:
            raise BadInvolutionError(f"reversal of {d} does not swap its endpoints")

    out: dict[str, list[str]] = {v: [] for v in verts}
    for d, s in sources.items():
        out[s].append(d)
    valences = {len(ds) for ds in out.values()}
    if len(valences) != 1:
        counts = {v: len(ds) for v, ds in out.items()}
        bad = min(v for v in counts if counts[v] != max(valences))
        raise NonRegularError(
            f"vertex {bad} has out-valence {counts[bad]}, expected a regular graph"
        )
    valence = valences.pop()
    if valence == 0:
        raise NonRegularError("vertices have no outgoing darts")

    seen = {verts[0]}
    queue = deque([verts[0]])
    while queue:
        p = queue.popleft()
        for d in out[p]:
            q = targets[d]
            if q not in seen:
                seen.add(q)
                queue.append(q)
    if len(seen) != len(verts):
        missing = sorted(vset - seen)[0]
        raise DisconnectedError(f"vertex {missing} is not reachable from {verts[0]}")

    fixed: dict[str, tuple[str, ...]] = {}
    for v in verts:
        default = tuple(sorted(out[v]))
        if orderings is None or v not in orderings:
            fixed[v] = default
        else:
            pinned = tuple(orderings[v])
            if sorted(pinned) != sorted(default):
                raise GraphError(f"ordering at vertex {v} is not a permutation of its out-darts")
            fixed[v] = pinned

    return OrientedGraph(
        vertices=verts,
        sources=dict(sources),
        targets=dict(targets),
        reversal=dict(reversal),
        orderings=fixed,
        valence=valence,
    )


def build_graph(
    vertices: Iterable[str],
    edges: Iterable[tuple[str, str, str]],
    orderings: Mapping[str, Sequence[str]] | None = None,
) -> OrientedGraph:
    """Build a graph from undirected edges ``(edge_id, source, target)``.

    Each edge expands to the dart pair ``edge_id`` (forward) and
    ``edge_id~`` (reverse).
    """
    sources: dict[str, str] = {}
    targets: dict[str, str] = {}
    reversal: dict[str, str] = {}
    for eid, s, t in edges:
        if REVERSE_SUFFIX in eid:
            raise GraphError(f"edge id {eid!r} must not contain {REVERSE_SUFFIX!r}")
        if eid in sources:
            raise GraphError(f"duplicate edge id {eid!r}")
        rid = reverse_name(eid)
        sources[eid], targets[eid] = s, t
        sources[rid], targets[rid] = t, s
        reversal[eid], reversal[rid] = rid, eid
    return build_graph_from_darts(vertices, sources, targets, reversal, orderings)
