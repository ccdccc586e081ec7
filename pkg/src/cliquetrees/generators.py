"""Seeded instance generators: k-trees, block graphs, chordal graphs, and the
block-graph-to-k-tree lift.

Randomness comes from :class:`SplitMix64` so that a ``(seed, ...)`` pair names
the same graph on every platform and in any language that implements the same
64-bit mixer.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import NotBlockGraphError
from .graph import Graph, VertexSet, from_adjacency
from .recognition import BlockDecomposition, KTreeCertificate, max_claw_size, recognize_block_graph

MASK64 = (1 << 64) - 1


class SplitMix64:
    """Steele, Lea & Flood's SplitMix64: add the golden gamma, then mix."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)`` (rejection sampling, no modulo bias)."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = (1 << 64) - (1 << 64) % n
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def choice(self, seq):
        return seq[self.below(len(seq))]


@dataclass(frozen=True)
class GenSpec:
    seed: int
    n: int
    k: int = 2
    # 0.0 grows paths, 1.0 piles everything onto one attachment point
    bias: float = 0.5


def _adjacency_from_steps(n: int, base, steps) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, w in combinations(base, 2):
        adj[u].append(w)
        adj[w].append(u)
    for v, clique in steps:
        for u in clique:
            adj[v].append(u)
            adj[u].append(v)
    return adj


def random_k_tree(spec: GenSpec) -> tuple[Graph, KTreeCertificate]:
    """Grow a k-tree from K_{k+1} one vertex at a time.

    Each new vertex either reuses an already-used attachment k-clique (with
    probability ``bias``) or extends the newest clique through a k-subset
    containing its newest vertex. ``bias=1`` gives the k-star, ``bias=0`` the
    k-path.
    """
    k, n = spec.k, spec.n
    if k < 1:
        raise ValueError("k must be at least 1")
    if n < k + 1:
        raise ValueError(f"a {k}-tree needs at least {k + 1} vertices, got n={n}")
    rng = SplitMix64(spec.seed)
    base = tuple(range(k + 1))
    used: list[VertexSet] = []
    seen: set[VertexSet] = set()
    latest, newest = base, k
    steps = []
    for v in range(k + 1, n):
        if rng.random() < spec.bias:
            attach = rng.choice(used) if used else base[:k]
        else:
            drop = rng.choice([u for u in latest if u != newest])
            attach = tuple(u for u in latest if u != drop)
        if attach not in seen:
            seen.add(attach)
            used.append(attach)
        steps.append((v, attach))
        latest, newest = attach + (v,), v
    g = from_adjacency(_adjacency_from_steps(n, base, steps))
    return g, KTreeCertificate(k, n, base, tuple(steps))


def k_star(k: int, n: int) -> Graph:
    return random_k_tree(GenSpec(0, n, k, bias=1.0))[0]


def k_path(k: int, n: int) -> Graph:
    """The k-path whose every vertex attaches to the k most recent vertices."""
    steps = [(v, tuple(range(v - k, v))) for v in range(k + 1, n)]
    return from_adjacency(_adjacency_from_steps(n, tuple(range(k + 1)), steps))


def random_block_graph(
    spec: GenSpec, sizes: list[int] | None = None, max_block: int = 5
) -> tuple[Graph, BlockDecomposition]:
    """Glue complete blocks at single vertices into a connected block graph.

    Block sizes are ``sizes`` when given (``spec.n`` is then ignored), else
    drawn from ``2..max_block`` until ``spec.n`` vertices exist. A new block
    hangs from an existing hub vertex with probability ``bias``, otherwise
    from a fresh vertex of the previous block.
    """
    rng = SplitMix64(spec.seed)
    if sizes is None:
        if spec.n < 1:
            raise ValueError("n must be positive")
        sizes = []
        remaining = spec.n - 1
        while remaining > 0:
            s = min(2 + rng.below(max(1, max_block - 1)), remaining + 1)
            sizes.append(s)
            remaining -= s - 1
    if any(s < 2 for s in sizes):
        raise ValueError("block sizes must be at least 2")
    n = 1 + sum(s - 1 for s in sizes)
    blocks: list[tuple[int, ...]] = []
    hubs = [0]
    is_hub = {0}
    nxt = 1
    for s in sizes:
        if not blocks:
            at = 0
        elif rng.random() < spec.bias:
            at = rng.choice(hubs)
        else:
            prev = blocks[-1]
            at = rng.choice(prev[1:])
        block = (at,) + tuple(range(nxt, nxt + s - 1))
        nxt += s - 1
        if blocks and at not in is_hub:
            is_hub.add(at)
            hubs.append(at)
        blocks.append(block)
    adj: list[list[int]] = [[] for _ in range(n)]
    for b in blocks:
        for u, w in combinations(b, 2):
            adj[u].append(w)
            adj[w].append(u)
    g = from_adjacency(adj)
    decomp = recognize_block_graph(g)
    return g, decomp


def random_chordal_graph(seed: int, n: int) -> Graph:
    """Connected chordal graph: each new vertex joins a nonempty subset of a known clique."""
    rng = SplitMix64(seed)
    adj: list[list[int]] = [[] for _ in range(n)]
    cliques: list[tuple[int, ...]] = [(0,)]
    for v in range(1, n):
        q = rng.choice(cliques)
        members = [u for u in q if rng.below(2)] or [rng.choice(q)]
        for u in members:
            adj[v].append(u)
            adj[u].append(v)
        cliques.append(tuple(members) + (v,))
    return from_adjacency(adj)


def perturb_k_tree(g: Graph, cert: KTreeCertificate, case: str, seed: int = 0) -> Graph:
    """Chordal non-k-trees derived from a k-tree.

    ``case="big-clique"`` adds a vertex joined to a whole (k+1)-clique, creating
    a K_{k+2}. ``case="thin-separator"`` (k >= 2) adds an edge ``ab`` joined to a
    (k-1)-subset of a clique, so all maximal cliques keep size k+1 but one
    separator has size k-1.
    """
    rng = SplitMix64(seed)
    k = cert.k
    cliques = [cert.base] + [c + (v,) for v, c in cert.steps]
    q = rng.choice(cliques)
    adj = [list(a) for a in g.adj]
    if case == "big-clique":
        if not cert.steps:
            raise ValueError("big-clique on a single clique gives K_{k+2}, which is a (k+1)-tree")
        v = g.n
        adj.append(list(q))
        for u in q:
            adj[u].append(v)
    elif case == "thin-separator":
        if k < 2:
            raise ValueError("thin-separator needs k >= 2")
        sub = list(q)
        del sub[rng.below(len(sub))]
        del sub[rng.below(len(sub))]
        a, b = g.n, g.n + 1
        adj.append(sub + [b])
        adj.append(sub + [a])
        for u in sub:
            adj[u].extend((a, b))
    else:
        raise ValueError(f"unknown case {case!r}")
    return from_adjacency(adj)


@dataclass(frozen=True)
class LiftedKTree:
    graph: Graph
    k: int
    certificate: KTreeCertificate
    # clique_of[x] is the maximal clique of ``graph`` standing for vertex x of the block graph
    clique_of: tuple[VertexSet, ...]


def lift_block_graph(h: Graph, k: int | None = None) -> LiftedKTree:
    """Build a k-tree whose (k+1)-line graph is ``h``.

    One maximal clique per vertex of ``h``. Walking the blocks breadth-first,
    a block entered at ``x`` picks a k-subset S of ``clique(x)`` not yet used
    by another block at ``x``, and every other vertex ``y`` of the block gets
    ``clique(y) = S + {fresh vertex}``. A vertex in t blocks needs t distinct
    k-subsets of a (k+1)-set, hence the requirement that ``h`` have no induced
    K_{1,k+2}.
    """
    decomp = recognize_block_graph(h)
    if not decomp:
        raise NotBlockGraphError(f"not a block graph: block {list(decomp.block)} misses edge {decomp.missing_edge}")
    p_max = max_claw_size(h, decomp)
    if len(decomp.blocks) == 1:
        minimum, default = 1, 2
    else:
        minimum = default = max(1, p_max - 1)
    if k is None:
        k = default
    if k < minimum:
        raise ValueError(f"k={k} too small: the block graph has an induced K_1,{p_max}")

    blocks_at: list[list[int]] = [[] for _ in range(h.n)]
    for b, block in enumerate(decomp.blocks):
        for v in block:
            blocks_at[v].append(b)
    clique_of: list[VertexSet | None] = [None] * h.n
    spare: list[list[int]] = [[] for _ in range(h.n)]
    done = [False] * len(decomp.blocks)
    clique_of[0] = tuple(range(k + 1))
    spare[0] = list(range(k + 1))
    fresh = k + 1
    steps = []
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for b in blocks_at[x]:
            if done[b]:
                continue
            done[b] = True
            drop = spare[x].pop(0)
            sep = tuple(u for u in clique_of[x] if u != drop)
            for y in decomp.blocks[b]:
                if y == x:
                    continue
                w = fresh
                fresh += 1
                steps.append((w, sep))
                clique_of[y] = sep + (w,)
                spare[y] = list(sep)
                queue.append(y)
    n = fresh
    base = tuple(range(k + 1))
    g = from_adjacency(_adjacency_from_steps(n, base, steps))
    return LiftedKTree(g, k, KTreeCertificate(k, n, base, tuple(steps)), tuple(clique_of))


def block_graph_to_k_tree(h: Graph, k: int | None = None) -> tuple[Graph, int]:
    lifted = lift_block_graph(h, k)
    return lifted.graph, lifted.k
