"""Immutable simple undirected graphs and purely structural queries.

Vertices are dense integer ids ``0 .. n-1``.  A :class:`Graph` is a value:
equality and hashing go through ``(n, edge set)``, and every derived object
(square, induced subgraph, component) is a fresh value, so graphs can be
shared freely across threads and cached without defensive copies.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterable, Iterator

Edge = tuple[int, int]
VertexSet = frozenset[int]

#: All-pairs distance matrix; ``None`` marks an unreachable pair.
DistanceMatrix = list[list[int | None]]


class GraphError(ValueError):
    """Raised when an edge list does not describe a simple graph."""


class Graph:
    """Simple undirected graph on vertices ``0 .. n-1`` with set semantics."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[Edge] = ()) -> None:
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        norm = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            norm.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))
        adj = [set() for _ in range(n)]
        for u, v in norm:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("Graph is immutable")

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> VertexSet:
        return self._adj[v]

    def closed_neighborhood(self, v: int) -> VertexSet:
        return self._adj[v] | {v}

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def __eq__(self, other) -> bool:
        return (isinstance(other, Graph)
                and self.n == other.n and self.edges == other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"


def build_graph(n: int, edge_list: Iterable[Edge]) -> Graph:
    """Construct a canonical :class:`Graph`; duplicate edges collapse silently."""
    return Graph(n, edge_list)


def adjacency_masks(g: Graph) -> list[int]:
    """Neighborhoods as bitmasks, the working representation of the solvers."""
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def distances(g: Graph) -> list[list[int | None]]:
    """All-pairs BFS distances in edges; ``None`` for unreachable pairs."""
    n = g.n
    out = []
    for s in range(n):
        row: list[int | None] = [None] * n
        row[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            dx = row[x]
            for y in g.neighbors(x):
                if row[y] is None:
                    row[y] = dx + 1
                    queue.append(y)
        out.append(row)
    return out


def square(g: Graph) -> Graph:
    """Second power: same vertices, plus an edge for every distance-2 pair."""
    extra = []
    for v in range(g.n):
        direct = g.neighbors(v)
        for u in direct:
            for w in g.neighbors(u):
                if w > v and w not in direct:
                    extra.append((v, w))
    return Graph(g.n, list(g.edges) + extra)


def pendant_vertices(g: Graph) -> VertexSet:
    """Vertices of degree exactly one."""
    return frozenset(v for v in range(g.n) if g.degree(v) == 1)


def pendant_edges(g: Graph) -> frozenset[Edge]:
    """Edges incident to at least one pendant vertex, normalized (u < v).

    For every connected graph other than a single edge this count equals the
    number of pendant vertices; in a two-vertex component both endpoints are
    pendant but contribute the same single edge.
    """
    out = set()
    for v in range(g.n):
        if g.degree(v) == 1:
            (w,) = g.neighbors(v)
            out.add((min(v, w), max(v, w)))
    return frozenset(out)


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or ``None`` when the graph is acyclic.

    The acyclic case is an explicit sentinel rather than a large number so
    that threshold tests spell out how forests are meant to compare.
    """
    best: int | None = None
    for u, v in g.edges:
        # shortest cycle through uv = dist(u, v) in G - uv, plus the edge
        dist: dict[int, int] = {u: 0}
        queue = deque([u])
        found = None
        while queue:
            x = queue.popleft()
            if best is not None and dist[x] + 1 >= best:
                break
            for y in g.neighbors(x):
                if x == u and y == v:
                    continue
                if y not in dist:
                    dist[y] = dist[x] + 1
                    if y == v:
                        found = dist[y] + 1
                        queue.clear()
                        break
                    queue.append(y)
            if found is not None:
                break
        if found is not None and (best is None or found < best):
            best = found
    return best


def girth_at_least(g: Graph, k: int) -> bool:
    """True when every cycle has length >= k; acyclic graphs qualify."""
    got = girth(g)
    return got is None or got >= k


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``keep`` plus the map from new ids to original ids."""
    old_ids = tuple(sorted(set(keep)))
    for v in old_ids:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
    pos = {old: new for new, old in enumerate(old_ids)}
    edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    return Graph(len(old_ids), edges), old_ids


def components(g: Graph) -> list[tuple[Graph, tuple[int, ...]]]:
    """Connected components as induced subgraphs with their relabeling maps.

    Components are ordered by their smallest original vertex, and each map
    sends new id ``i`` to ``map[i]`` in the parent graph.
    """
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = {s}
        seen[s] = True
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if not seen[y]:
                    seen[y] = True
                    comp.add(y)
                    stack.append(y)
        out.append(induced_subgraph(g, comp))
    return out


def is_connected(g: Graph) -> bool:
    """True for graphs with at most one vertex or a single component."""
    return len(components(g)) <= 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and is_connected(g) and len(g.edges) == g.n - 1


def delete_closed_neighborhood(g: Graph, v: int) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``V - N[v]`` with its relabeling map."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
    keep = [u for u in range(g.n) if u != v and u not in g.neighbors(v)]
    return induced_subgraph(g, keep)


def is_cycle_of_length(g: Graph, k: int) -> bool:
    """True iff g is a connected k-vertex graph in which every degree is 2."""
    return (g.n == k and k >= 3 and is_connected(g)
            and all(g.degree(v) == 2 for v in range(g.n)))


def disjoint_union(*graphs: Graph) -> Graph:
    """Disjoint union; vertex ids of later arguments are shifted upward."""
    n = 0
    edges: list[Edge] = []
    for g in graphs:
        edges.extend((u + n, v + n) for u, v in g.edges)
        n += g.n
    return Graph(n, edges)


def iter_vertex_pairs(n: int) -> Iterator[Edge]:
    """Unordered vertex pairs in lexicographic order."""
    return combinations(range(n), 2)
