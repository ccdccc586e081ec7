"""Classification: k-trees, block graphs, induced-star size, and the reduced-clique-graph / k-line comparison."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .chordal import ChordalStructure, analyze, separator_table
from .cliquegraphs import k_line_graph, reduced_clique_graph
from .errors import NotBlockGraphError, NotChordalError, NotConnectedError
from .graph import Graph, VertexSet, from_adjacency

REASONS = ("not-connected", "not-chordal", "clique-size-mismatch", "separator-size-mismatch")


@dataclass(frozen=True)
class Rejection:
    reason: str
    detail: str = ""

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class KTreeCertificate:
    """Construction trace: start from the clique ``base`` and add each
    ``(vertex, k-clique)`` step in turn."""

    k: int
    n: int
    base: VertexSet
    steps: tuple[tuple[int, VertexSet], ...]

    def replay(self) -> Graph:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u in self.base:
            adj[u].update(w for w in self.base if w != u)
        for v, clique in self.steps:
            if len(clique) != self.k:
                raise ValueError(f"step for vertex {v} attaches to {len(clique)} vertices, not {self.k}")
            for u in clique:
                adj[v].add(u)
                adj[u].add(v)
        return from_adjacency(adj)


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[VertexSet, ...]
    cut_vertices: VertexSet

    def blocks_per_vertex(self, n: int) -> list[int]:
        count = [0] * n
        for b in self.blocks:
            for v in b:
                count[v] += 1
        return count


@dataclass(frozen=True)
class BlockRejection:
    block: VertexSet
    missing_edge: tuple[int, int]

    def __bool__(self) -> bool:
        return False


def _certificate(g: Graph, st: ChordalStructure, k: int) -> KTreeCertificate:
    visit = st.ordering.order[::-1]
    num = [0] * g.n
    for i, v in enumerate(visit):
        num[v] = i
    base = tuple(sorted(visit[: k + 1]))
    steps = []
    for v in visit[k + 1:]:
        steps.append((v, tuple(u for u in g.adj[v] if num[u] < num[v])))
    return KTreeCertificate(k, g.n, base, tuple(steps))


def recognize_k_tree(g: Graph, structure: ChordalStructure | None = None) -> KTreeCertificate | Rejection:
    """Accept a k-tree by clique and separator cardinalities.

    A connected chordal graph is a k-tree exactly when every maximal clique has
    k+1 vertices and every minimal separator has k. Returns a certificate
    (truthy) or a :class:`Rejection` (falsy) naming the failed condition.
    """
    if structure is None:
        try:
            structure = analyze(g)
        except NotConnectedError:
            return Rejection("not-connected")
        except NotChordalError as e:
            return Rejection("not-chordal", f"chordless cycle {list(e.cycle)}")
    sizes = {len(q) for q in structure.cliques}
    if len(sizes) != 1:
        return Rejection("clique-size-mismatch", f"maximal clique sizes {sorted(sizes)}")
    k = sizes.pop() - 1
    for _, _, s in structure.tree.edges:
        if len(s) != k:
            return Rejection("separator-size-mismatch", f"separator {list(s)} has size {len(s)}, expected {k}")
    return _certificate(g, structure, k)


def is_k_tree(g: Graph, k: int | None = None) -> bool:
    cert = recognize_k_tree(g)
    return bool(cert) and (k is None or cert.k == k)


def _biconnected(g: Graph):
    """Vertex sets of the blocks of a connected graph, with the edge count of each."""
    n = g.n
    adj = g.adj
    if n == 1:
        return [[0]], [0]
    disc = [-1] * n
    low = [0] * n
    it = [0] * n
    earlier = [0] * n
    parent = [-1] * n
    disc[0] = 0
    t = 1
    call = [0]
    vstack: list[int] = []
    blocks: list[list[int]] = []
    counts: list[int] = []
    while call:
        v = call[-1]
        a = adj[v]
        i = it[v]
        if i < len(a):
            it[v] = i + 1
            u = a[i]
            du = disc[u]
            if du < 0:
                parent[u] = v
                disc[u] = low[u] = t
                t += 1
                vstack.append(u)
                call.append(u)
            else:
                if du < disc[v]:
                    earlier[v] += 1
                    if u != parent[v] and du < low[v]:
                        low[v] = du
        else:
            call.pop()
            if call:
                p = call[-1]
                if low[v] < low[p]:
                    low[p] = low[v]
                if low[v] >= disc[p]:
                    block = []
                    edges = 0
                    while True:
                        w = vstack.pop()
                        block.append(w)
                        edges += earlier[w]
                        if w == v:
                            break
                    block.append(p)
                    blocks.append(block)
                    counts.append(edges)
    return blocks, counts


def recognize_block_graph(g: Graph) -> BlockDecomposition | BlockRejection:
    """Biconnected decomposition of a connected graph, accepted when every block is complete.

    On rejection the witness is the first non-complete block and a missing edge in it.
    """
    if g.n == 0:
        raise NotConnectedError("block-graph recognition needs a non-empty graph")
    raw, counts = _biconnected(g)
    if sum(len(b) for b in raw) - len(raw) != g.n - 1:
        raise NotConnectedError("block-graph recognition needs a connected graph")
    per_vertex = [0] * g.n
    blocks = []
    for b, c in zip(raw, counts):
        b.sort()
        size = len(b)
        if c != size * (size - 1) // 2:
            for i, u in enumerate(b):
                for w in b[i + 1:]:
                    if not g.has_edge(u, w):
                        return BlockRejection(tuple(b), (u, w))
        for v in b:
            per_vertex[v] += 1
        blocks.append(tuple(b))
    cuts = tuple(v for v in range(g.n) if per_vertex[v] > 1)
    return BlockDecomposition(tuple(sorted(blocks)), cuts)


def is_block_graph(g: Graph) -> bool:
    try:
        return bool(recognize_block_graph(g))
    except NotConnectedError:
        return False


def max_claw_size(g: Graph, decomp: BlockDecomposition | None = None) -> int:
    """Largest p with an induced K_{1,p} in a block graph.

    An induced star picks at most one leaf per block around its center, so p is
    the largest number of blocks meeting at one vertex (0 for a single vertex).
    """
    if decomp is None:
        decomp = recognize_block_graph(g)
        if not decomp:
            raise NotBlockGraphError(f"not a block graph: block {list(decomp.block)} misses edge {decomp.missing_edge}")
    if g.m == 0:
        return 0
    return max(decomp.blocks_per_vertex(g.n))


def reduced_equals_line_graph(g: Graph, k: int | None = None) -> bool:
    """Whether the reduced clique graph equals the (k+1)-line graph.

    ``k + 1`` defaults to the clique number. The reduced clique graph is always
    built with the pairwise separating-pair test here.
    """
    st = analyze(g)
    if k is None:
        k = st.clique_number() - 1
    cr = reduced_clique_graph(g, st.cliques, method="pairwise")
    if k + 1 < 2:
        # only K1: one clique, one 1-clique, no edges on either side
        return cr.nodes == tuple((v,) for v in range(g.n)) and not cr.edges
    line = k_line_graph(g, k + 1, maximal_cliques=st.cliques)
    return cr.same_graph(line)


def block_tree_encoding(g: Graph, decomp: BlockDecomposition | None = None) -> str:
    """Canonical string of a connected block graph's block-cut tree.

    Two block graphs are isomorphic iff their encodings are equal: block nodes
    are labelled by their count of non-cut vertices, and the tree is encoded
    AHU-style from its center.
    """
    if decomp is None:
        decomp = recognize_block_graph(g)
        if not decomp:
            raise NotBlockGraphError("not a block graph")
    cut_index = {c: len(decomp.blocks) + i for i, c in enumerate(decomp.cut_vertices)}
    total = len(decomp.blocks) + len(cut_index)
    label = []
    nbrs: list[list[int]] = [[] for _ in range(total)]
    for b, block in enumerate(decomp.blocks):
        label.append(f"B{sum(1 for v in block if v not in cut_index)}")
        for v in block:
            if v in cut_index:
                nbrs[b].append(cut_index[v])
                nbrs[cut_index[v]].append(b)
    label.extend("C" for _ in cut_index)
    return min(_ahu(root, nbrs, label) for root in _tree_centers(nbrs))


def _tree_centers(nbrs: list[list[int]]) -> list[int]:
    n = len(nbrs)
    if n <= 2:
        return list(range(n))
    deg = [len(a) for a in nbrs]
    leaves = [v for v in range(n) if deg[v] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(leaves)
        nxt = []
        for v in leaves:
            for u in nbrs[v]:
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        leaves = nxt
    return leaves


def _ahu(root: int, nbrs: list[list[int]], label: list[str]) -> str:
    parent = {root: -1}
    order = [root]
    for v in order:
        for u in nbrs[v]:
            if u not in parent:
                parent[u] = v
                order.append(u)
    children: dict[int, list[str]] = defaultdict(list)
    code = {}
    for v in reversed(order):
        code[v] = "(" + label[v] + "".join(sorted(children[v])) + ")"
        if parent[v] >= 0:
            children[parent[v]].append(code[v])
    return code[root]
