"""Clique-intersection graph, reduced clique graph and k-line graph.

All three share :class:`WeightedCliqueGraph`: nodes are cliques of the base
graph in lexicographic order, edges carry the intersection size. With that
canonical ordering, equality of two derived graphs is plain ``==``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .chordal import EliminationOrdering, is_peo, mcs_order
from .chordal import maximal_cliques as chordal_maximal_cliques
from .errors import CliqueBlowupError
from .graph import Graph, VertexSet, component_labels


@dataclass(frozen=True)
class WeightedCliqueGraph:
    nodes: tuple[VertexSet, ...]
    edges: tuple[tuple[int, int, int], ...]  # (i, j, weight), i < j, sorted
    kind: str = "clique-intersection"

    def same_graph(self, other: WeightedCliqueGraph) -> bool:
        """Equality as labeled graphs, ignoring the ``kind`` tag."""
        return self.nodes == other.nodes and self.edges == other.edges

    def to_graph(self) -> Graph:
        adj: list[list[int]] = [[] for _ in self.nodes]
        for i, j, _ in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return Graph(len(self.nodes), tuple(tuple(sorted(a)) for a in adj))

    def edge_set(self) -> set[tuple[VertexSet, VertexSet]]:
        return {(self.nodes[i], self.nodes[j]) for i, j, _ in self.edges}


def _canonical(nodes: Sequence[VertexSet], edges, kind: str) -> WeightedCliqueGraph:
    nodes = [tuple(q) for q in nodes]
    order = sorted(range(len(nodes)), key=nodes.__getitem__)
    new = [0] * len(nodes)
    for i, old in enumerate(order):
        new[old] = i
    out = []
    for i, j, w in edges:
        a, b = new[i], new[j]
        out.append((a, b, w) if a < b else (b, a, w))
    out.sort()
    return WeightedCliqueGraph(tuple(nodes[o] for o in order), tuple(out), kind)


def _intersecting_pairs(cliques: Sequence[VertexSet]) -> dict[tuple[int, int], int]:
    holders: dict[int, list[int]] = defaultdict(list)
    for i, q in enumerate(cliques):
        for v in q:
            holders[v].append(i)
    weight: dict[tuple[int, int], int] = defaultdict(int)
    for hs in holders.values():
        for a, b in combinations(hs, 2):
            weight[(a, b)] += 1
    return weight


def clique_intersection_graph(cliques: Sequence[VertexSet]) -> WeightedCliqueGraph:
    """Edge between every pair of intersecting cliques, weighted by overlap size."""
    pairs = _intersecting_pairs(cliques)
    return _canonical(cliques, [(i, j, w) for (i, j), w in pairs.items()], "clique-intersection")


def is_separating_pair(g: Graph, q: VertexSet, q2: VertexSet) -> bool:
    """Whether ``q & q2`` is nonempty and separates ``q - q2`` from ``q2 - q``."""
    s = set(q) & set(q2)
    if not s:
        return False
    a = [v for v in q if v not in s]
    b = [v for v in q2 if v not in s]
    if not a or not b:
        return False
    label = component_labels(g, s)
    return label[a[0]] != label[b[0]]


def reduced_clique_graph(
    g: Graph, cliques: Sequence[VertexSet], method: str = "pairwise", k: int | None = None
) -> WeightedCliqueGraph:
    """Reduced clique graph: maximal cliques joined when they form a separating pair.

    ``method="pairwise"`` tests every intersecting pair (components of
    ``G - S`` computed once per distinct intersection ``S``). ``method="ktree"``
    is only valid for a k-tree and keeps exactly the pairs sharing ``k``
    vertices; pass ``k``.
    """
    cliques = [tuple(q) for q in cliques]
    pairs = _intersecting_pairs(cliques)
    if method == "ktree":
        if k is None:
            raise ValueError("method='ktree' needs k")
        edges = [(i, j, w) for (i, j), w in pairs.items() if w == k]
        return _canonical(cliques, edges, "reduced")
    if method != "pairwise":
        raise ValueError(f"unknown method {method!r}")

    by_sep: dict[VertexSet, list[tuple[int, int]]] = defaultdict(list)
    for i, j in pairs:
        s = tuple(sorted(set(cliques[i]) & set(cliques[j])))
        by_sep[s].append((i, j))
    edges = []
    for s, plist in by_sep.items():
        label = component_labels(g, s)
        inside = set(s)
        for i, j in plist:
            a = next(v for v in cliques[i] if v not in inside)
            b = next(v for v in cliques[j] if v not in inside)
            if label[a] != label[b]:
                edges.append((i, j, len(s)))
    return _canonical(cliques, edges, "reduced")


def k_cliques(g: Graph, k: int, cap: int | None = 10**7) -> list[VertexSet]:
    """All k-cliques, by extension over higher-numbered neighbors.

    Raises :class:`CliqueBlowupError` once more than ``cap`` are found.
    """
    out: list[VertexSet] = []
    up = [set(u for u in g.adj[v] if u > v) for v in range(g.n)]

    def extend(clique: list[int], cand: set[int]) -> None:
        if len(clique) == k:
            out.append(tuple(clique))
            if cap is not None and len(out) > cap:
                raise CliqueBlowupError(f"more than {cap} {k}-cliques")
            return
        for v in sorted(cand):
            clique.append(v)
            extend(clique, cand & up[v])
            clique.pop()

    for v in range(g.n):
        extend([v], up[v])
    return out


def _k_cliques_chordal(cliques: Sequence[VertexSet], k: int) -> list[VertexSet]:
    # every clique of a chordal graph lies inside some maximal clique
    found: set[VertexSet] = set()
    for q in cliques:
        if len(q) >= k:
            found.update(combinations(q, k))
    return sorted(found)


def k_line_graph(
    g: Graph,
    k: int,
    cap: int | None = 10**7,
    maximal_cliques: Sequence[VertexSet] | None = None,
) -> WeightedCliqueGraph:
    """The k-line graph: k-cliques of ``g``, adjacent when they share k-1 vertices.

    For chordal ``g`` the k-cliques are read off the maximal cliques (pass
    them in to skip recomputing) and ``cap`` is not applied. Other graphs are
    enumerated directly and refused past ``cap`` k-cliques.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if maximal_cliques is None:
        order = mcs_order(g)
        peo = EliminationOrdering(tuple(reversed(order)))
        if is_peo(g, peo):
            maximal_cliques = chordal_maximal_cliques(g, peo)
    if maximal_cliques is not None:
        nodes = _k_cliques_chordal(maximal_cliques, k)
    else:
        nodes = sorted(k_cliques(g, k, cap))
    index = {q: i for i, q in enumerate(nodes)}
    faces: dict[VertexSet, list[int]] = defaultdict(list)
    for q in nodes:
        for f in combinations(q, k - 1):
            faces[f].append(index[q])
    edges = set()
    for members in faces.values():
        for a, b in combinations(members, 2):
            edges.add((a, b) if a < b else (b, a))
    return WeightedCliqueGraph(tuple(nodes), tuple(sorted((a, b, k - 1) for a, b in edges)), "k-line")
