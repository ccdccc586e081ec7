"""Immutable simple undirected graphs over dense integer vertex ids."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import GraphError

# Sorted, duplicate-free tuple of vertex ids. Used for cliques and separators.
VertexSet = tuple[int, ...]


def vertex_set(items: Iterable[int]) -> VertexSet:
    return tuple(sorted(set(items)))


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.adj[u]
        # bisect on the sorted adjacency
        lo, hi = 0, len(nbrs)
        while lo < hi:
            mid = (lo + hi) // 2
            if nbrs[mid] < v:
                lo = mid + 1
            else:
                hi = mid
        return lo < len(nbrs) and nbrs[lo] == v

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate an edge list and build a :class:`Graph`.

    Raises :class:`GraphError` naming the offending pair for an endpoint
    outside ``0..n-1``, a self-loop or a repeated edge.
    """
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"endpoint out of range in edge ({u},{v}) for n={n}")
        if u == v:
            raise GraphError(f"self-loop ({u},{v})")
        if v in nbrs[u]:
            raise GraphError(f"duplicate edge ({u},{v})")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def from_adjacency(adj: Sequence[Iterable[int]]) -> Graph:
    """Trusted constructor for generators: symmetric, loop-free input assumed."""
    return Graph(len(adj), tuple(tuple(sorted(a)) for a in adj))


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, VertexSet]:
    """Return ``(G[s], labels)`` where ``labels[i]`` is the original id of new vertex ``i``."""
    labels = vertex_set(s)
    for v in labels:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    index = {v: i for i, v in enumerate(labels)}
    adj = []
    for v in labels:
        adj.append(tuple(index[u] for u in g.adj[v] if u in index))
    return Graph(len(labels), tuple(adj)), labels


def component_labels(g: Graph, removed: Iterable[int] = ()) -> list[int]:
    """Label each vertex with its component id in ``g - removed`` (-1 for removed vertices)."""
    label = [-2] * g.n
    for v in removed:
        label[v] = -1
    c = 0
    for s in range(g.n):
        if label[s] != -2:
            continue
        label[s] = c
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if label[w] == -2:
                    label[w] = c
                    stack.append(w)
        c += 1
    return label


def connected_components(g: Graph) -> list[VertexSet]:
    label = component_labels(g)
    parts: list[list[int]] = [[] for _ in range(max(label, default=-1) + 1)]
    for v, c in enumerate(label):
        parts[c].append(v)
    return [tuple(p) for p in parts]


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


def neighborhood(g: Graph, a: Iterable[int]) -> VertexSet:
    """``Adj(A)``: the union of the neighborhoods of ``a``, minus ``a`` itself."""
    inside = set(a)
    out: set[int] = set()
    for v in inside:
        out.update(g.adj[v])
    return vertex_set(out - inside)


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(tuple(u for u in range(n) if u != v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
