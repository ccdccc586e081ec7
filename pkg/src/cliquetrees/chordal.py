"""Chordality, maximal cliques, clique trees and the minimal-separator multiset.

The workhorse is :func:`analyze`, a single maximum cardinality search (MCS)
pass that yields a perfect elimination ordering, the maximal cliques and a
clique tree at once (Blair & Peyton's construction). Everything here runs in
O(n + m) except the Prim-based clique tree, which is kept as an independent
construction for cross-checking.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidOrderingError, NotChordalError, NotConnectedError
from .graph import Graph, VertexSet, component_labels


@dataclass(frozen=True)
class EliminationOrdering:
    # order[i] is the i-th vertex eliminated
    order: tuple[int, ...]

    def positions(self) -> list[int]:
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i
        return pos


@dataclass(frozen=True)
class CliqueTree:
    cliques: tuple[VertexSet, ...]
    # (i, j, separator) with i < j and separator == cliques[i] & cliques[j]
    edges: tuple[tuple[int, int, VertexSet], ...]

    def weight(self) -> int:
        return sum(len(s) for _, _, s in self.edges)


@dataclass(frozen=True)
class SeparatorTable:
    entries: tuple[tuple[VertexSet, int], ...]

    def multiplicity(self, s: VertexSet) -> int:
        for sep, mu in self.entries:
            if sep == s:
                return mu
        return 0

    @property
    def separators(self) -> list[VertexSet]:
        return [s for s, _ in self.entries]

    def total(self) -> int:
        return sum(mu for _, mu in self.entries)


@dataclass(frozen=True)
class ChordalStructure:
    """Everything one MCS pass yields for a connected chordal graph."""

    ordering: EliminationOrdering
    tree: CliqueTree

    @property
    def cliques(self) -> tuple[VertexSet, ...]:
        return self.tree.cliques

    def clique_number(self) -> int:
        return max(len(q) for q in self.tree.cliques)


def mcs_scan(g: Graph):
    """Maximum cardinality search with Blair-Peyton clique extraction on the fly.

    Returns ``(order, cliques, parent, seps)``: the MCS visit order, the
    candidate cliques in discovery order, ``parent[c]`` (the clique ``c``
    hangs from, -1 for a root) and ``seps[c]`` (its shared set). A clique
    starts whenever a vertex has no more numbered neighbors than its
    predecessor; it hangs from the clique of its most recently numbered
    neighbor. The cliques are the maximal cliques only if the graph is
    chordal, which the caller must check.

    Ties go to the most recently labelled vertex (bucket stacks); the first
    vertex is 0. Works on disconnected graphs too (one root per component).
    """
    n = g.n
    adj = g.adj
    num = [-1] * n
    weight = [0] * n
    last = [-1] * n
    buckets: list[list[int]] = [[] for _ in range(n + 1)]
    buckets[0] = list(range(n - 1, -1, -1))
    top = 0
    order = []
    clique_of = [0] * n
    cliques: list[list[int]] = []
    parent: list[int] = []
    seps: list[list[int]] = []
    prev = -1
    for i in range(n):
        while True:
            b = buckets[top]
            while not b:
                top -= 1
                b = buckets[top]
            v = b.pop()
            if num[v] < 0 and weight[v] == top:
                break
        num[v] = i
        order.append(v)
        earlier = []
        for u in adj[v]:
            if num[u] < 0:
                w = weight[u] + 1
                weight[u] = w
                last[u] = v
                buckets[w].append(u)
                if w > top:
                    top = w
            else:
                earlier.append(u)
        size = len(earlier)
        if size <= prev or i == 0:
            parent.append(clique_of[last[v]] if size else -1)
            seps.append(earlier)
            earlier = earlier + [v]
            cliques.append(earlier)
        else:
            cliques[-1].append(v)
        clique_of[v] = len(cliques) - 1
        prev = size
    return order, cliques, parent, seps


def mcs_order(g: Graph) -> list[int]:
    """Maximum cardinality search visit order (see :func:`mcs_scan`)."""
    return mcs_scan(g)[0]


def _peo_violation(g: Graph, pos: Sequence[int]) -> tuple[int, int, int] | None:
    """Return ``(v, p, w)`` with p, w later neighbors of v and p, w non-adjacent, or None.

    Tarjan-Yannakakis test: with ``f(v)`` the earliest later neighbor of ``v``,
    every other later neighbor of ``v`` must be adjacent to ``f(v)``.
    """
    n = g.n
    adj = g.adj
    elim = [0] * n
    for v in range(n):
        elim[pos[v]] = v
    follower = list(range(n))
    index = [0] * n
    for i, w in enumerate(elim):
        index[w] = i
        before = [v for v in adj[w] if pos[v] < i]
        for v in before:
            index[v] = i
            if follower[v] == v:
                follower[v] = w
        for v in before:
            if index[follower[v]] < i:
                return (v, follower[v], w)
    return None


def is_peo(g: Graph, ordering: EliminationOrdering) -> bool:
    return _peo_violation(g, ordering.positions()) is None


def _bfs_path(g: Graph, src: int, dst: int, blocked: set[int]) -> list[int] | None:
    prev = {src: -1}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst:
            path = [u]
            while prev[path[-1]] != -1:
                path.append(prev[path[-1]])
            return path[::-1]
        for w in g.adj[u]:
            if w not in prev and w not in blocked:
                prev[w] = u
                queue.append(w)
    return None


def _cycle_through(g: Graph, v: int, u: int, w: int) -> list[int] | None:
    # a shortest u-w path avoiding N[v] - {u, w} closes an induced cycle with v
    blocked = set(g.adj[v]) | {v}
    blocked -= {u, w}
    path = _bfs_path(g, u, w, blocked)
    return None if path is None else [v] + path


def find_chordless_cycle(g: Graph, hint: tuple[int, int, int] | None = None) -> list[int] | None:
    """A chordless cycle of length >= 4, or None if ``g`` is chordal."""
    if hint is not None:
        cyc = _cycle_through(g, *hint)
        if cyc is not None:
            return cyc
    for v in range(g.n):
        nb = g.adj[v]
        for i, u in enumerate(nb):
            for w in nb[i + 1:]:
                if not g.has_edge(u, w):
                    cyc = _cycle_through(g, v, u, w)
                    if cyc is not None:
                        return cyc
    return None


def is_chordal(g: Graph) -> bool:
    order = mcs_order(g)
    pos = [0] * g.n
    for i, v in enumerate(reversed(order)):
        pos[v] = i
    return _peo_violation(g, pos) is None


def _require_connected(g: Graph) -> None:
    if g.n == 0 or max(component_labels(g)) > 0:
        raise NotConnectedError("graph must be connected and non-empty")


def recognize_chordal(g: Graph) -> EliminationOrdering:
    """Return a perfect elimination ordering of a connected graph.

    Raises :class:`NotChordalError` carrying a chordless cycle when none exists.
    """
    _require_connected(g)
    order = mcs_order(g)
    peo = EliminationOrdering(tuple(reversed(order)))
    bad = _peo_violation(g, peo.positions())
    if bad is not None:
        raise NotChordalError(find_chordless_cycle(g, bad))
    return peo


def maximal_cliques(g: Graph, peo: EliminationOrdering) -> list[VertexSet]:
    """Maximal cliques from a PEO, sorted lexicographically.

    ``{v} + later(v)`` is non-maximal exactly when some ``u`` whose earliest
    later neighbor is ``v`` has one more later neighbor than ``v``.
    """
    if sorted(peo.order) != list(range(g.n)):
        raise InvalidOrderingError("ordering is not a permutation of the vertices")
    pos = peo.positions()
    if _peo_violation(g, pos) is not None:
        raise InvalidOrderingError("ordering is not a perfect elimination ordering")
    later = [[u for u in g.adj[v] if pos[u] > pos[v]] for v in range(g.n)]
    absorbed = [False] * g.n
    for u in range(g.n):
        if later[u]:
            p = min(later[u], key=pos.__getitem__)
            if len(later[u]) == len(later[p]) + 1:
                absorbed[p] = True
    cliques = [tuple(sorted(later[v] + [v])) for v in range(g.n) if not absorbed[v]]
    return sorted(cliques)


def _canonical_tree(raw_cliques, parent, seps) -> CliqueTree:
    keyed = [tuple(sorted(c)) for c in raw_cliques]
    order = sorted(range(len(keyed)), key=keyed.__getitem__)
    new_index = [0] * len(keyed)
    for i, old in enumerate(order):
        new_index[old] = i
    edges = []
    for c, p in enumerate(parent):
        if p >= 0:
            i, j = new_index[c], new_index[p]
            if i > j:
                i, j = j, i
            edges.append((i, j, tuple(sorted(seps[c]))))
    edges.sort()
    return CliqueTree(tuple(keyed[o] for o in order), tuple(edges))


def analyze(g: Graph, canonical: bool = True) -> ChordalStructure:
    """One MCS pass: PEO, maximal cliques and a clique tree of a connected chordal graph.

    With ``canonical=False`` cliques stay in discovery order (each one sorted),
    which skips an O(n log n) sort on large inputs.
    """
    if g.n == 0:
        raise NotConnectedError("graph must be non-empty")
    order, cliques, parent, seps = mcs_scan(g)
    peo = EliminationOrdering(tuple(reversed(order)))
    bad = _peo_violation(g, peo.positions())
    if bad is not None:
        _require_connected(g)
        raise NotChordalError(find_chordless_cycle(g, bad))
    if parent.count(-1) > 1:
        raise NotConnectedError("graph must be connected")
    if canonical:
        tree = _canonical_tree(cliques, parent, seps)
    else:
        edges = []
        for c, p in enumerate(parent):
            if p >= 0:
                seps[c].sort()
                edges.append((p, c, tuple(seps[c])) if p < c else (c, p, tuple(seps[c])))
        for q in cliques:
            q.sort()
        tree = CliqueTree(tuple(map(tuple, cliques)), tuple(edges))
    return ChordalStructure(peo, tree)


def _intersection_size(a: VertexSet, b: VertexSet) -> int:
    i = j = c = 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            c += 1
            i += 1
            j += 1
        elif a[i] < b[j]:
            i += 1
        else:
            j += 1
    return c


def build_clique_tree(
    g: Graph,
    cliques: Sequence[VertexSet],
    method: str = "mcs",
    priority: Sequence[int] | None = None,
) -> CliqueTree:
    """Clique tree over ``cliques`` (the maximal cliques of ``g``, any order).

    ``method="mcs"`` uses the linear MCS construction; ``method="prim"`` grows a
    maximum-weight spanning tree of the clique-intersection graph, breaking
    weight ties by ``priority`` (lower wins; default: clique index). Varying
    ``priority`` produces different valid clique trees.
    """
    cliques = [tuple(q) for q in cliques]
    index = {q: i for i, q in enumerate(cliques)}
    if method == "mcs":
        t = analyze(g).tree
        if set(t.cliques) != set(index):
            raise ValueError("cliques are not the maximal cliques of g")
        edges = []
        for a, b, s in t.edges:
            i, j = sorted((index[t.cliques[a]], index[t.cliques[b]]))
            edges.append((i, j, s))
        return CliqueTree(tuple(cliques), tuple(sorted(edges)))
    if method != "prim":
        raise ValueError(f"unknown method {method!r}")

    k = len(cliques)
    prio = list(priority) if priority is not None else list(range(k))
    if k == 0:
        return CliqueTree((), ())
    start = min(range(k), key=prio.__getitem__)
    in_tree = [False] * k
    in_tree[start] = True
    best_w = [-1] * k
    best_from = [-1] * k
    for j in range(k):
        if not in_tree[j]:
            best_w[j] = _intersection_size(cliques[start], cliques[j])
            best_from[j] = start
    edges = []
    for _ in range(k - 1):
        nxt = -1
        for j in range(k):
            if in_tree[j]:
                continue
            if nxt < 0 or (best_w[j], -prio[best_from[j]], -prio[j]) > (
                best_w[nxt], -prio[best_from[nxt]], -prio[nxt]
            ):
                nxt = j
        in_tree[nxt] = True
        p = best_from[nxt]
        sep = tuple(sorted(set(cliques[nxt]) & set(cliques[p])))
        edges.append((min(nxt, p), max(nxt, p), sep))
        for j in range(k):
            if in_tree[j]:
                continue
            w = _intersection_size(cliques[nxt], cliques[j])
            if w > best_w[j] or (w == best_w[j] and prio[nxt] < prio[best_from[j]]):
                best_w[j] = w
                best_from[j] = nxt
    return CliqueTree(tuple(cliques), tuple(sorted(edges)))


def separator_table(t: CliqueTree) -> SeparatorTable:
    """Group clique-tree edge labels into the separator multiset."""
    counts = Counter(s for _, _, s in t.edges)
    return SeparatorTable(tuple(sorted(counts.items())))


def has_induced_subtree_property(t: CliqueTree, n: int) -> bool:
    """Check that, for every vertex, the cliques containing it span a subtree."""
    holders: list[list[int]] = [[] for _ in range(n)]
    for i, q in enumerate(t.cliques):
        for v in q:
            holders[v].append(i)
    # a forest on a node set is connected iff it has |nodes| - 1 edges
    inner = [0] * n
    for a, b, _ in t.edges:
        for v in set(t.cliques[a]) & set(t.cliques[b]):
            inner[v] += 1
    return all(not h or inner[v] == len(h) - 1 for v, h in enumerate(holders))
