"""Closed-form clique-tree and spanning-tree counts.

Three products, all exact over Python ints:

* :func:`count_clique_trees_general` - Ho and Lee's count for any connected
  chordal graph, driven by the components hanging off each separator.
* :func:`count_clique_trees_ktree` - for k-trees only the separator
  multiplicities matter: prod (mu + 1) ** (mu - 1).
* :func:`count_spanning_trees_block` - a block graph's spanning trees:
  prod |Q| ** (|Q| - 2) over its blocks.

Each product accepts an optional :class:`MultiplicationCounter`. With one,
powers are formed by repeated multiplication and every multiplication is
counted, so the linear bounds on the number of factors can be checked
exactly. Without one, ``pow`` is used.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .chordal import ChordalStructure, SeparatorTable, analyze, separator_table
from .graph import Graph, VertexSet, component_labels
from .recognition import BlockDecomposition, recognize_k_tree


@dataclass
class MultiplicationCounter:
    count: int = 0


def _balanced_product(values: list[int]) -> int:
    # pairwise tree keeps operand sizes balanced; a running product is quadratic in digits
    while len(values) > 1:
        nxt = [values[i] * values[i + 1] for i in range(0, len(values) - 1, 2)]
        if len(values) % 2:
            nxt.append(values[-1])
        values = nxt
    return values[0] if values else 1


def _product(factors, counter: MultiplicationCounter | None) -> int:
    """Product of ``base ** exponent`` over ``(base, exponent)`` pairs."""
    if counter is None:
        exponents: dict[int, int] = defaultdict(int)
        for base, exp in factors:
            if exp > 0 and base != 1:
                exponents[base] += exp
        return _balanced_product([pow(b, e) for b, e in sorted(exponents.items())])
    total = 1
    for base, exp in factors:
        for _ in range(exp):
            total *= base
            counter.count += 1
    return total


@dataclass(frozen=True)
class SeparatorFactor:
    separator: VertexSet
    # |Q_C| for each component C of G - S whose neighborhood is all of S
    component_cliques: tuple[int, ...]

    @property
    def value(self) -> int:
        c = self.component_cliques
        total = 1
        for q in c:
            total *= q
        return sum(c) ** (len(c) - 2) * total


@dataclass(frozen=True)
class HoLeeFactorization:
    factors: tuple[SeparatorFactor, ...] = field(default=())

    def total(self) -> int:
        out = 1
        for f in self.factors:
            out *= f.value
        return out


def ho_lee_factorization(g: Graph, structure: ChordalStructure | None = None) -> HoLeeFactorization:
    """Per-separator data for the general clique-tree count.

    For each minimal separator S: the components C of G - S with Adj(C) = S,
    and for each such C the number of maximal cliques inside C + S that
    contain S. A maximal clique containing S meets exactly one component,
    namely the one holding its vertices outside S.
    """
    if structure is None:
        structure = analyze(g)
    cliques = structure.cliques
    holders: dict[int, list[int]] = defaultdict(list)
    for i, q in enumerate(cliques):
        for v in q:
            holders[v].append(i)
    table = separator_table(structure.tree)
    factors = []
    for s, _ in table.entries:
        inside = set(s)
        label = component_labels(g, s)
        # components whose neighborhood is the whole separator
        touches: dict[int, set[int]] = defaultdict(set)
        for x in s:
            for u in g.adj[x]:
                if u not in inside:
                    touches[label[u]].add(x)
        full = {c for c, xs in touches.items() if len(xs) == len(s)}
        containing = set(holders[s[0]])
        for x in s[1:]:
            containing.intersection_update(holders[x])
        per_component: dict[int, int] = defaultdict(int)
        for i in containing:
            outside = next(v for v in cliques[i] if v not in inside)
            per_component[label[outside]] += 1
        counts = tuple(sorted(per_component.get(c, 0) for c in full))
        factors.append(SeparatorFactor(s, counts))
    return HoLeeFactorization(tuple(factors))


def count_clique_trees_general(
    g: Graph, counter: MultiplicationCounter | None = None
) -> tuple[int, HoLeeFactorization]:
    """Number of clique trees of a connected chordal graph (Ho-Lee product)."""
    fact = ho_lee_factorization(g)
    pairs = []
    for f in fact.factors:
        c = f.component_cliques
        pairs.append((sum(c), len(c) - 2))
        pairs.extend((q, 1) for q in c)
    return _product(pairs, counter), fact


def ktree_factors(table: SeparatorTable) -> list[tuple[int, int]]:
    """``(mu + 1, mu - 1)`` for every separator, sorted."""
    return sorted((mu + 1, mu - 1) for _, mu in table.entries)


def count_clique_trees_ktree(table: SeparatorTable, counter: MultiplicationCounter | None = None) -> int:
    """prod over separators of (mu + 1) ** (mu - 1); valid for k-trees."""
    return _product(((mu + 1, mu - 1) for _, mu in table.entries), counter)


def block_factors(decomp: BlockDecomposition) -> list[tuple[int, int]]:
    """``(|Q|, |Q| - 2)`` for every block with at least two vertices, sorted."""
    return sorted((len(b), len(b) - 2) for b in decomp.blocks if len(b) >= 2)


def count_spanning_trees_block(decomp: BlockDecomposition, counter: MultiplicationCounter | None = None) -> int:
    """prod over blocks Q of |Q| ** (|Q| - 2); valid for connected block graphs."""
    return _product(((len(b), len(b) - 2) for b in decomp.blocks if len(b) >= 2), counter)


def count_clique_trees(g: Graph) -> int:
    """Clique-tree count of a connected chordal graph, taking the k-tree shortcut when it applies."""
    st = analyze(g)
    if recognize_k_tree(g, st):
        return count_clique_trees_ktree(separator_table(st.tree))
    return count_clique_trees_general(g)[0]
