"""Weighted undirected graphs, shortest paths and the unit relaxation.

Vertices are dense integer ids ``0..vertex_count-1``. Edge weights are
non-negative integers (energy units). Unreachable distances are reported as
``None`` rather than a large sentinel so that cost sums cannot overflow into a
plausible-looking value.
"""

from __future__ import annotations

import heapq
from bisect import bisect_right
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from relay.errors import GraphError

Edge = tuple[int, int, int]


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class WeightedGraph:
    """Simple undirected graph with non-negative integer edge weights."""

    vertex_count: int
    edges: tuple[Edge, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        edges = tuple((int(u), int(v), int(w)) for u, v, w in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
        if self.vertex_count < 0:
            raise GraphError(f"vertex_count must be >= 0, got {self.vertex_count}")
        if self.labels is not None and len(self.labels) != self.vertex_count:
            raise GraphError("labels must name every vertex exactly once")
        seen: set[tuple[int, int]] = set()
        for i, (u, v, w) in enumerate(edges):
            for x in (u, v):
                if not 0 <= x < self.vertex_count:
                    raise GraphError(f"edge {i}: vertex {x} out of range")
            if u == v:
                raise GraphError(f"edge {i}: self-loop on vertex {u}")
            if w < 0:
                raise GraphError(f"edge {i}: weight {w} is negative")
            key = _pair(u, v)
            if key in seen:
                raise GraphError(f"edge {i}: parallel edge {u}-{v}")
            seen.add(key)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for u, v, w in self.edges:
            adj[u].append((v, w))
            adj[v].append((u, w))
        return tuple(tuple(row) for row in adj)

    @cached_property
    def _weights(self) -> dict[tuple[int, int], int]:
        return {_pair(u, v): w for u, v, w in self.edges}

    def weight(self, u: int, v: int) -> int | None:
        """Weight of edge ``u-v``; 0 when ``u == v``; ``None`` if not adjacent."""
        if u == v:
            return 0
        return self._weights.get(_pair(u, v))

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and _pair(u, v) in self._weights

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    @property
    def edge_count(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class PathRef:
    """A simple s-t path given as a vertex sequence with cumulative offsets."""

    vertices: tuple[int, ...]
    offsets: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))
        object.__setattr__(self, "offsets", tuple(int(o) for o in self.offsets))
        if len(self.vertices) < 1:
            raise GraphError("path must contain at least one vertex")
        if len(self.offsets) != len(self.vertices):
            raise GraphError("path offsets must align with path vertices")
        if self.offsets[0] != 0:
            raise GraphError("path offset of s must be 0")
        if any(b < a for a, b in zip(self.offsets, self.offsets[1:])):
            raise GraphError("path offsets must be non-decreasing")
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError("path repeats a vertex")

    @classmethod
    def from_graph(cls, graph: WeightedGraph, vertices: Sequence[int]) -> "PathRef":
        vertices = tuple(int(v) for v in vertices)
        offsets = [0]
        for a, b in zip(vertices, vertices[1:]):
            w = graph.weight(a, b)
            if w is None or a == b:
                raise GraphError(f"path vertices {a} and {b} are not adjacent")
            offsets.append(offsets[-1] + w)
        for v in vertices:
            if not 0 <= v < graph.vertex_count:
                raise GraphError(f"path vertex {v} out of range")
        return cls(vertices, tuple(offsets))

    @property
    def source(self) -> int:
        return self.vertices[0]

    @property
    def target(self) -> int:
        return self.vertices[-1]

    @property
    def weight(self) -> int:
        return self.offsets[-1]

    @property
    def last(self) -> int:
        """Position (index) of the target."""
        return len(self.vertices) - 1

    def __len__(self) -> int:
        return len(self.vertices)

    def distance(self, i: int, j: int) -> int:
        """Path metric between positions ``i`` and ``j``."""
        return abs(path_offset(self, j) - path_offset(self, i))

    def last_position_within(self, offset: int) -> int:
        """Largest position whose offset is ``<= offset`` (-1 if none)."""
        return bisect_right(self.offsets, offset) - 1


def path_offset(path: PathRef, index: int) -> int:
    """Cumulative weight from s to the vertex at ``index``."""
    if not 0 <= index < len(path.vertices):
        raise GraphError(f"path index {index} outside 0..{len(path.vertices) - 1}")
    return path.offsets[index]


def dijkstra(
    graph: WeightedGraph, source: int, *, with_parents: bool = False
) -> list[int | None] | tuple[list[int | None], list[int]]:
    """Single-source shortest distances (``None`` marks unreachable)."""
    n = graph.vertex_count
    dist: list[int | None] = [None] * n
    parent = [-1] * n
    dist[source] = 0
    heap = [(0, source)]
    adj = graph.adjacency
    while heap:
        d, u = heapq.heappop(heap)
        if d != dist[u]:
            continue
        for v, w in adj[u]:
            nd = d + w
            dv = dist[v]
            if dv is None or nd < dv:
                dist[v] = nd
                parent[v] = u
                heapq.heappush(heap, (nd, v))
    if with_parents:
        return dist, parent
    return dist


def shortest_path(graph: WeightedGraph, u: int, v: int) -> list[int] | None:
    """Vertex sequence of one shortest ``u``-``v`` path, or ``None``."""
    dist, parent = dijkstra(graph, u, with_parents=True)
    if dist[v] is None:
        return None
    walk = [v]
    while walk[-1] != u:
        walk.append(parent[walk[-1]])
    return walk[::-1]


class DistanceTable:
    """Lazily cached all-pairs distances over one graph.

    Rows are computed per source on first use. Since the graph is immutable
    the cache is observationally identical to an eagerly filled table.
    """

    def __init__(self, graph: WeightedGraph, sources: Iterable[int] = ()):
        self.graph = graph
        self._rows: dict[int, list[int | None]] = {}
        for s in sources:
            self.row(s)

    def row(self, source: int) -> list[int | None]:
        if not 0 <= source < self.graph.vertex_count:
            raise GraphError(f"vertex {source} out of range")
        r = self._rows.get(source)
        if r is None:
            r = dijkstra(self.graph, source)
            self._rows[source] = r
        return r

    def dist(self, u: int, v: int) -> int | None:
        if v in self._rows and u not in self._rows:
            u, v = v, u
        return self.row(u)[v]

    def __getitem__(self, key: tuple[int, int]) -> int | None:
        return self.dist(*key)

    @property
    def sources(self) -> tuple[int, ...]:
        return tuple(self._rows)


def shortest_distances(graph: WeightedGraph, sources: Iterable[int]) -> DistanceTable:
    """Distance table with rows for ``sources`` computed up front."""
    return DistanceTable(graph, sources)


@dataclass(frozen=True)
class Relaxation:
    """Result of relaxing a graph to unit weights.

    ``vertex_map[v]`` is the image of original vertex ``v``. ``chains`` maps
    each surviving original edge ``(u, v)`` (with ``u < v``) to the relaxed
    vertex sequence running from the image of ``u`` to the image of ``v``.
    """

    graph: WeightedGraph
    vertex_map: tuple[int, ...]
    chains: dict[tuple[int, int], tuple[int, ...]] = field(compare=False)

    def chain(self, u: int, v: int) -> tuple[int, ...] | None:
        c = self.chains.get(_pair(u, v))
        if c is None:
            return None
        return c if u < v else c[::-1]


def _relax(
    graph: WeightedGraph, *, contract: bool, keep: Iterable[tuple[int, int]] = ()
) -> Relaxation:
    n = graph.vertex_count
    root = list(range(n))

    def find(x: int) -> int:
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    if contract:
        for u, v, w in graph.edges:
            if w == 0:
                ru, rv = find(u), find(v)
                if ru != rv:
                    root[max(ru, rv)] = min(ru, rv)
        reps = sorted({find(v) for v in range(n)})
        index = {r: i for i, r in enumerate(reps)}
        vmap = tuple(index[find(v)] for v in range(n))
    else:
        vmap = tuple(range(n))
    count = max(vmap) + 1 if n else 0

    keep_set = {_pair(u, v) for u, v in keep}
    lightest: dict[tuple[int, int], int] = {}
    for u, v, w in graph.edges:
        if contract and w == 0:
            continue
        a, b = vmap[u], vmap[v]
        if a == b:
            continue
        key = _pair(a, b)
        if key not in lightest or w < lightest[key]:
            lightest[key] = w

    new_edges: list[Edge] = []
    direct: dict[tuple[int, int], tuple[int, ...]] = {}
    chains: dict[tuple[int, int], tuple[int, ...]] = {}
    for u, v, w in graph.edges:
        if contract and w == 0:
            chains[_pair(u, v)] = (vmap[min(u, v)],)
            continue
        a, b = vmap[u], vmap[v]
        if a == b:
            continue
        key = _pair(a, b)
        if w != lightest[key] and _pair(u, v) not in keep_set:
            continue
        if w <= 1:
            # a single relaxed edge; duplicates collapse onto one
            if key not in direct:
                new_edges.append((a, b, w))
                direct[key] = (a, b)
            seq = (a, b)
        else:
            interior = list(range(count, count + w - 1))
            count += w - 1
            seq = (a, *interior, b)
            new_edges.extend((x, y, 1) for x, y in zip(seq, seq[1:]))
        lo, hi = _pair(u, v)
        chains[(lo, hi)] = seq if vmap[lo] == seq[0] else seq[::-1]
    return Relaxation(WeightedGraph(count, tuple(new_edges)), vmap, chains)


def unit_relaxation(graph: WeightedGraph) -> tuple[WeightedGraph, tuple[int, ...]]:
    """Contract zero-weight edges and subdivide the rest into unit edges.

    Returns the relaxed graph and the map from original vertices to their
    images. Self-loops created by contraction are dropped; among edges that
    contraction makes parallel, only the lightest is kept. Distances between
    images equal the original distances.
    """
    r = _relax(graph, contract=True)
    return r.graph, r.vertex_map


def relax(graph: WeightedGraph, keep: Iterable[tuple[int, int]] = ()) -> Relaxation:
    """:func:`unit_relaxation` that also reports edge chains.

    Edges listed in ``keep`` survive even when a lighter parallel edge exists,
    so that a fixed path can be carried over to the relaxed graph.
    """
    return _relax(graph, contract=True, keep=keep)


def subdivide(graph: WeightedGraph) -> Relaxation:
    """Replace every edge of weight ``w >= 2`` by ``w`` unit edges.

    Original vertex ids are preserved and zero-weight edges stay as they are,
    so moves across them remain free.
    """
    return _relax(graph, contract=False)
