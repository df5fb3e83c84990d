"""Immutable graphs, edge-list IO and shortest-path queries."""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Iterable

INF = math.inf


class GraphError(ValueError):
    """Malformed edge-list input or an invalid graph query."""


@dataclass(frozen=True)
class Graph:
    """Simple weighted/unweighted graph over dense 0-based node ids.

    Immutable after construction; all queries are pure and safe to call
    from any number of workers.
    """

    node_count: int
    directed: bool
    weighted: bool
    edges: tuple[tuple[int, int, float], ...]
    _out: tuple[tuple[tuple[int, float], ...], ...]
    _in: tuple[tuple[tuple[int, float], ...], ...]

    @staticmethod
    def build(
        node_count: int,
        edges: Iterable[tuple[int, int, float]],
        *,
        directed: bool = False,
        weighted: bool = False,
    ) -> "Graph":
        if node_count < 0:
            raise GraphError(f"negative node count: {node_count}")
        edge_list: list[tuple[int, int, float]] = []
        seen: set[tuple[int, int]] = set()
        out: list[list[tuple[int, float]]] = [[] for _ in range(node_count)]
        inc: list[list[tuple[int, float]]] = [[] for _ in range(node_count)]
        for u, v, w in edges:
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise GraphError(f"node id out of range in edge ({u}, {v})")
            if u == v:
                raise GraphError(f"self-loop at node {u}")
            if not w > 0:
                raise GraphError(f"non-positive weight {w} on edge ({u}, {v})")
            key = (u, v) if directed else (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"duplicate edge ({u}, {v})")
            seen.add(key)
            w = float(w)
            edge_list.append((u, v, w))
            out[u].append((v, w))
            inc[v].append((u, w))
            if not directed:
                out[v].append((u, w))
                inc[u].append((v, w))
        return Graph(
            node_count=node_count,
            directed=directed,
            weighted=weighted,
            edges=tuple(edge_list),
            _out=tuple(tuple(a) for a in out),
            _in=tuple(tuple(a) for a in inc),
        )

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def _check_node(self, v: int) -> None:
        if not (0 <= v < self.node_count):
            raise GraphError(f"invalid node id {v} (graph has {self.node_count} nodes)")

    def out_neighbors(self, v: int) -> tuple[tuple[int, float], ...]:
        self._check_node(v)
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple[tuple[int, float], ...]:
        self._check_node(v)
        return self._in[v]

    def neighbors(self, v: int) -> tuple[tuple[int, float], ...]:
        """Adjacency of an undirected graph (same as out_neighbors)."""
        if self.directed:
            raise GraphError("neighbors() requires an undirected graph; use out/in")
        return self.out_neighbors(v)

    def degree(self, v: int, mode: str = "undirected") -> int:
        self._check_node(v)
        if mode == "undirected":
            if self.directed:
                raise GraphError("mode='undirected' requires an undirected graph")
            return len(self._out[v])
        if mode == "out":
            return len(self._out[v])
        if mode == "in":
            return len(self._in[v])
        raise GraphError(f"unknown degree mode {mode!r}")

    def edge_weight(self, u: int, v: int) -> float:
        """Weight of edge u->v, or 0.0 if absent."""
        for nb, w in self.out_neighbors(u):
            if nb == v:
                return w
        return 0.0


@dataclass(frozen=True)
class DistanceRow:
    """Single-source shortest-path distances, sorted ascending.

    Entries cover every node except the source; unreachable nodes carry
    +infinity. Ties break on ascending node id.
    """

    source: int
    entries: tuple[tuple[int, float], ...]

    def as_dict(self) -> dict[int, float]:
        return {node: dist for node, dist in self.entries}


def load_edge_list(stream, directed: bool = False, weighted: bool = False) -> Graph:
    """Parse an edge-list text stream into a Graph.

    Lines are "u v" (unweighted) or "u v w" (weighted); '#' starts a
    comment line; an optional "nodes N" header declares trailing isolated
    nodes. Node ids must be dense: every id in [0, max] must occur.
    """
    if isinstance(stream, str):
        lines = stream.splitlines()
    else:
        lines = stream
    declared_nodes: int | None = None
    edges: list[tuple[int, int, float]] = []
    ids_seen: set[int] = set()
    pair_seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "nodes":
            if len(parts) != 2:
                raise GraphError(f"line {lineno}: malformed header {line!r}")
            try:
                declared_nodes = int(parts[1])
            except ValueError:
                raise GraphError(f"line {lineno}: malformed header {line!r}") from None
            if declared_nodes < 0:
                raise GraphError(f"line {lineno}: negative node count in {line!r}")
            continue
        want = 3 if weighted else 2
        if len(parts) != want:
            raise GraphError(
                f"line {lineno}: expected {want} fields, got {len(parts)}: {line!r}"
            )
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer node id: {line!r}") from None
        if u < 0 or v < 0:
            raise GraphError(f"line {lineno}: negative node id: {line!r}")
        w = 1.0
        if weighted:
            try:
                w = float(parts[2])
            except ValueError:
                raise GraphError(f"line {lineno}: bad weight: {line!r}") from None
            if not w > 0:
                raise GraphError(f"line {lineno}: non-positive weight: {line!r}")
        if u == v:
            raise GraphError(f"line {lineno}: self-loop: {line!r}")
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in pair_seen:
            raise GraphError(f"line {lineno}: duplicate edge: {line!r}")
        pair_seen.add(key)
        edges.append((u, v, w))
        ids_seen.add(u)
        ids_seen.add(v)

    max_id = max(ids_seen) if ids_seen else -1
    if declared_nodes is not None:
        # the header declares the id space, so isolated ids are intentional
        if declared_nodes <= max_id:
            raise GraphError(
                f"header declares {declared_nodes} nodes but edge ids reach {max_id}"
            )
        node_count = declared_nodes
    else:
        missing = set(range(max_id + 1)) - ids_seen
        if missing:
            raise GraphError(
                f"sparse node ids: ids {sorted(missing)[:5]} never appear in any edge"
            )
        node_count = max_id + 1
    try:
        return Graph.build(node_count, edges, directed=directed, weighted=weighted)
    except GraphError as exc:
        raise GraphError(f"invalid edge list: {exc}") from None


def dump_edge_list(g: Graph) -> str:
    """Serialize a Graph in the load_edge_list format (round-trips)."""
    lines = [f"nodes {g.node_count}"]
    for u, v, w in g.edges:
        if g.weighted:
            lines.append(f"{u} {v} {w!r}")  # shortest exact float round-trip
        else:
            lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def shortest_paths(g: Graph, source: int, orientation: str = "forward") -> DistanceRow:
    """Dijkstra single-source distances from (forward) or to (reverse) source."""
    g._check_node(source)
    if orientation == "forward":
        adj = g._out
    elif orientation == "reverse":
        adj = g._in
    else:
        raise GraphError(f"unknown orientation {orientation!r}")
    dist = [INF] * g.node_count
    dist[source] = 0.0
    heap: list[tuple[float, int]] = [(0.0, source)]
    while heap:
        d, u = heapq.heappop(heap)
        if d > dist[u]:
            continue
        for v, w in adj[u]:
            nd = d + w
            if nd < dist[v]:
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    entries = sorted(
        ((node, dist[node]) for node in range(g.node_count) if node != source),
        key=lambda e: (e[1], e[0]),
    )
    return DistanceRow(source=source, entries=tuple(entries))


def distance_matrix(g: Graph, orientation: str = "forward") -> list[list[float]]:
    """All-pairs matrix D[src][dst]; D[v][v] = 0, unreachable = +inf."""
    mat: list[list[float]] = []
    for src in range(g.node_count):
        row = [INF] * g.node_count
        row[src] = 0.0
        for node, d in shortest_paths(g, src, orientation).entries:
            row[node] = d
        mat.append(row)
    return mat


def extended_neighborhood(
    g: Graph, v: int, d_cutoff: float
) -> tuple[frozenset[int], int]:
    """Nodes within d_cutoff of v, and the count of nodes that reach v.

    On undirected graphs the two coincide; on directed graphs members
    follow forward distances while the count uses reverse distances.
    """
    if not d_cutoff > 0:
        raise GraphError(f"d_cutoff must be positive, got {d_cutoff}")
    forward = shortest_paths(g, v, "forward")
    members = frozenset(node for node, d in forward.entries if d <= d_cutoff)
    if not g.directed:
        return members, len(members)
    reverse = shortest_paths(g, v, "reverse")
    ext_degree = sum(1 for _, d in reverse.entries if d <= d_cutoff)
    return members, ext_degree
