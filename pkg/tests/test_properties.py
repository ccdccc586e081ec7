"""Invariants checked on generated graphs, with networkx as an outside reference."""

import networkx as nx
from hypothesis import given, settings

from cliquetrees import (
    MultiplicationCounter,
    NotChordalError,
    analyze,
    build_clique_tree,
    count_clique_trees_general,
    count_clique_trees_ktree,
    count_spanning_trees_block,
    enumerate_clique_trees,
    find_chordless_cycle,
    has_induced_subtree_property,
    is_block_graph,
    is_chordal,
    is_peo,
    kirchhoff_count,
    k_line_graph,
    reduced_clique_graph,
    recognize_chordal,
    recognize_k_tree,
    separator_table,
)
from cliquetrees.graph import is_connected

from .strategies import block_graphs, chordal_graphs, graphs, k_trees


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@given(graphs())
def test_chordality_matches_networkx(g):
    assert is_chordal(g) == nx.is_chordal(to_nx(g))


@given(graphs())
def test_witness_is_chordless_cycle(g):
    if not is_connected(g) or is_chordal(g):
        return
    try:
        recognize_chordal(g)
    except NotChordalError as e:
        cycle = e.cycle
    assert len(cycle) >= 4 and len(set(cycle)) == len(cycle)
    on = set(cycle)
    edges = {frozenset(e) for e in to_nx(g).subgraph(on).edges()}
    ring = {frozenset((a, b)) for a, b in zip(cycle, cycle[1:] + cycle[:1])}
    assert edges == ring


@given(chordal_graphs())
def test_structure_of_chordal_graphs(g):
    st = analyze(g)
    assert is_peo(g, st.ordering)
    expected = sorted(tuple(sorted(c)) for c in nx.find_cliques(to_nx(g)))
    assert sorted(st.cliques) == expected
    assert len(st.tree.edges) == len(st.cliques) - 1
    assert has_induced_subtree_property(st.tree, g.n)
    prim = build_clique_tree(g, st.cliques, method="prim")
    assert prim.weight() == st.tree.weight()
    assert separator_table(prim) == separator_table(st.tree)
    if g.n > 1:
        assert sum(len(q) for q in st.cliques) < g.n + g.m


@settings(max_examples=60)
@given(chordal_graphs(max_n=11))
def test_clique_trees_are_heaviest_spanning_trees_of_reduced_graph(g):
    st = analyze(g)
    count, _ = count_clique_trees_general(g)
    assert count == enumerate_clique_trees(reduced_clique_graph(g, st.cliques))


@given(k_trees())
def test_k_tree_certificate_replays(pair):
    g, cert = pair
    found = recognize_k_tree(g)
    assert found and found.k == cert.k
    assert found.replay() == g == cert.replay()
    assert g.m == cert.k * g.n - cert.k * (cert.k + 1) // 2


@settings(max_examples=60)
@given(k_trees(max_n=25))
def test_k_tree_count_agrees_everywhere(pair):
    g, cert = pair
    st = analyze(g)
    table = separator_table(st.tree)
    counter = MultiplicationCounter()
    value = count_clique_trees_ktree(table, counter)
    assert counter.count < g.n
    assert value == count_clique_trees_general(g)[0]
    assert value == kirchhoff_count(k_line_graph(g, cert.k + 1).to_graph())
    assert table.total() == len(st.cliques) - 1


@given(block_graphs())
def test_block_graph_count(pair):
    g, decomp = pair
    assert is_block_graph(g)
    assert set(decomp.cut_vertices) == set(nx.articulation_points(to_nx(g))) if g.n > 1 else True
    counter = MultiplicationCounter()
    value = count_spanning_trees_block(decomp, counter)
    assert counter.count < g.n + g.m
    assert value == kirchhoff_count(g)
    if g.n > 1:
        assert value == round(nx.number_of_spanning_trees(to_nx(g)))


@given(graphs(max_n=9))
def test_block_graph_recognition_matches_networkx(g):
    if not is_connected(g):
        return
    h = to_nx(g)
    expected = all(
        h.subgraph(b).number_of_edges() == len(b) * (len(b) - 1) // 2
        for b in nx.biconnected_components(h)
    )
    assert is_block_graph(g) == expected


@given(graphs(max_n=8))
def test_chordless_cycle_search_on_arbitrary_graphs(g):
    cycle = find_chordless_cycle(g)
    assert (cycle is None) == nx.is_chordal(to_nx(g))
