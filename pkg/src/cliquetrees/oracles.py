"""Independent ground truth for the closed-form counts.

None of these use clique or separator structure: the Kirchhoff count is an
exact integer determinant, and the two enumerators walk the spanning trees
themselves (with memoised subproblems).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .cliquegraphs import WeightedCliqueGraph
from .errors import NotConnectedError, OracleCapExceeded
from .graph import Graph, component_labels

IntegerMatrix = list[list[int]]

DEFAULT_CAP = 10**9
EDGE_LIMIT = 30
NODE_LIMIT = 12


def laplacian(g: Graph) -> IntegerMatrix:
    """L = D - A as a dense integer matrix."""
    rows = []
    for v in range(g.n):
        row = [0] * g.n
        row[v] = len(g.adj[v])
        for u in g.adj[v]:
            row[u] = -1
        rows.append(row)
    return rows


def minor(a: IntegerMatrix, i: int, j: int | None = None) -> IntegerMatrix:
    j = i if j is None else j
    return [r[:j] + r[j + 1:] for k, r in enumerate(a) if k != i]


def bareiss_determinant(a: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free elimination.

    Every division is exact (Sylvester's identity), so intermediate entries
    stay integers bounded by minors of the input.
    """
    m = [list(r) for r in a]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = m[k][k]
        rowk = m[k][k + 1:]
        for i in range(k + 1, n):
            ri = m[i]
            aik = ri[k]
            tail = ri[k + 1:]
            if aik == 0:
                if piv != prev:
                    tail = [x * piv // prev for x in tail]
            else:
                tail = [(x * piv - aik * y) // prev for x, y in zip(tail, rowk)]
            m[i] = ri[:k] + [0] + tail
        prev = piv
    return sign * m[n - 1][n - 1]


def kirchhoff_count(g: Graph, deleted: int = 0) -> int:
    """Number of spanning trees: the cofactor of L with row/column ``deleted`` removed."""
    if g.n == 0:
        raise NotConnectedError("empty graph has no spanning tree")
    if max(component_labels(g)) > 0:
        raise NotConnectedError("disconnected graph: spanning-tree count is 0")
    return bareiss_determinant(minor(laplacian(g), deleted))


def enumerate_spanning_trees(g: Graph, cap: int = DEFAULT_CAP, edge_limit: int | None = EDGE_LIMIT) -> int:
    """Count spanning trees by deletion/contraction on a multigraph.

    tau(G) = tau(G - e) + c * tau(G / e) for an edge class ``e`` of multiplicity
    ``c``; loops formed by contraction are dropped and parallel edges merge
    their multiplicities.
    """
    if edge_limit is not None and g.m > edge_limit:
        raise OracleCapExceeded(f"{g.m} edges exceeds enumeration limit {edge_limit}")
    if g.n == 0:
        return 0
    start = frozenset(((u, v), 1) for u, v in g.edges())

    @lru_cache(maxsize=None)
    def tau(vertices: frozenset, edges: frozenset) -> int:
        if len(vertices) == 1:
            return 1
        mult = dict(edges)
        incident: dict[int, list[tuple[int, int]]] = {v: [] for v in vertices}
        for e in mult:
            incident[e[0]].append(e)
            incident[e[1]].append(e)
        v = min(vertices, key=lambda x: (len(incident[x]), x))
        if not incident[v]:
            return 0
        if len(incident[v]) == 1:
            # pendant: its edge class is in every spanning tree
            e = incident[v][0]
            c = mult.pop(e)
            return c * tau(vertices - {v}, frozenset(mult.items()))
        e = min(incident[v])
        c = mult.pop(e)
        deleted = tau(vertices, frozenset(mult.items()))
        keep, gone = e if e[0] != v else (e[1], e[0])
        merged: dict[tuple[int, int], int] = {}
        for (a, b), k in mult.items():
            a = keep if a == gone else a
            b = keep if b == gone else b
            if a == b:
                continue
            key = (a, b) if a < b else (b, a)
            merged[key] = merged.get(key, 0) + k
        total = deleted + c * tau(vertices - {gone}, frozenset(merged.items()))
        if total > cap:
            raise OracleCapExceeded(f"spanning-tree count exceeds cap {cap}")
        return total

    return tau(frozenset(range(g.n)), start)


def _max_spanning_weight(n: int, edges: Sequence[tuple[int, int, int]]) -> int | None:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    total = 0
    used = 0
    for u, v, w in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            total += w
            used += 1
    return total if used == n - 1 else None


def enumerate_clique_trees(
    wcg: WeightedCliqueGraph, cap: int = DEFAULT_CAP, node_limit: int | None = NODE_LIMIT
) -> int:
    """Count the maximum-weight spanning trees of a weighted clique graph.

    Edges are decided one at a time (heaviest first); a branch is cut once the
    best completion, found greedily on the remaining edges, can no longer reach
    the maximum weight. Identical subproblems (same edge index, component
    partition and weight so far) are counted once.
    """
    n = len(wcg.nodes)
    if node_limit is not None and n > node_limit:
        raise OracleCapExceeded(f"{n} nodes exceeds enumeration limit {node_limit}")
    if n <= 1:
        return 1
    edges = sorted(wcg.edges, key=lambda e: (-e[2], e[0], e[1]))
    target = _max_spanning_weight(n, edges)
    if target is None:
        return 0

    def relabel(labels) -> tuple[int, ...]:
        seen: dict[int, int] = {}
        return tuple(seen.setdefault(x, len(seen)) for x in labels)

    @lru_cache(maxsize=None)
    def completion(i: int, part: tuple[int, ...]) -> int | None:
        k = max(part) + 1
        return _max_spanning_weight(k, [(part[u], part[v], w) for u, v, w in edges[i:]])

    @lru_cache(maxsize=None)
    def count(i: int, part: tuple[int, ...], weight: int) -> int:
        if max(part) == 0:
            return 1 if weight == target else 0
        best = completion(i, part)
        if best is None or weight + best < target:
            return 0
        u, v, w = edges[i]
        total = count(i + 1, part, weight)
        a, b = part[u], part[v]
        if a != b:
            merged = relabel(a if x == b else x for x in part)
            total += count(i + 1, merged, weight + w)
        if total > cap:
            raise OracleCapExceeded(f"clique-tree count exceeds cap {cap}")
        return total

    return count(0, tuple(range(n)), 0)
