import pytest

from cliquetrees import (
    EliminationOrdering,
    InvalidOrderingError,
    NotChordalError,
    NotConnectedError,
    analyze,
    build_clique_tree,
    build_graph,
    complete_graph,
    find_chordless_cycle,
    has_induced_subtree_property,
    is_chordal,
    is_peo,
    maximal_cliques,
    recognize_chordal,
    separator_table,
    star_graph,
)
from cliquetrees.chordal import mcs_order

from .graphs import BOWTIE, C4, P3, T5


def test_complete_graph_any_order_is_peo():
    g = complete_graph(4)
    for order in [(0, 1, 2, 3), (3, 1, 0, 2), (2, 3, 1, 0)]:
        assert is_peo(g, EliminationOrdering(order))


def test_c4_witness():
    with pytest.raises(NotChordalError) as exc:
        recognize_chordal(C4)
    cycle = exc.value.cycle
    assert sorted(cycle) == [0, 1, 2, 3]
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        assert C4.has_edge(a, b)


def test_bowtie_peo():
    peo = recognize_chordal(BOWTIE)
    assert is_peo(BOWTIE, peo)
    assert peo.order[0] != 2


def test_mcs_order_is_permutation():
    assert sorted(mcs_order(T5)) == list(range(5))


def test_disconnected_rejected():
    with pytest.raises(NotConnectedError):
        analyze(build_graph(2, []))


def test_maximal_cliques_examples():
    assert maximal_cliques(complete_graph(3), recognize_chordal(complete_graph(3))) == [(0, 1, 2)]
    assert maximal_cliques(P3, recognize_chordal(P3)) == [(0, 1), (1, 2)]
    assert maximal_cliques(T5, recognize_chordal(T5)) == [(0, 1, 2), (1, 2, 3), (1, 2, 4)]


def test_maximal_cliques_rejects_bad_ordering():
    with pytest.raises(InvalidOrderingError):
        maximal_cliques(P3, EliminationOrdering((1, 0, 2)))


def test_clique_tree_examples():
    t = analyze(P3).tree
    assert t.edges == ((0, 1, (1,)),)
    t = analyze(T5).tree
    assert len(t.edges) == 2 and all(s == (1, 2) for _, _, s in t.edges)
    t = analyze(complete_graph(4)).tree
    assert t.cliques == ((0, 1, 2, 3),) and t.edges == ()


def test_prim_tree_matches_weight():
    for g in (T5, BOWTIE, P3):
        st = analyze(g)
        prim = build_clique_tree(g, st.cliques, method="prim")
        assert prim.weight() == st.tree.weight()
        assert has_induced_subtree_property(prim, g.n)
        assert separator_table(prim) == separator_table(st.tree)


def test_separator_tables():
    assert separator_table(analyze(P3).tree).entries == (((1,), 1),)
    assert separator_table(analyze(T5).tree).entries == (((1, 2), 2),)
    assert separator_table(analyze(star_graph(3)).tree).entries == (((0,), 2),)


def test_induced_subtree_property_detects_bad_tree():
    st = analyze(build_graph(4, [(0, 1), (1, 2), (2, 3)]))
    # path of cliques {0,1}-{2,3}-{1,2} breaks the subtree property for vertex 1
    from cliquetrees import CliqueTree

    bad = CliqueTree(((0, 1), (1, 2), (2, 3)), ((0, 2, ()), (1, 2, (2,))))
    assert has_induced_subtree_property(st.tree, 4)
    assert not has_induced_subtree_property(bad, 4)


def test_chordless_cycle_none_for_chordal():
    assert find_chordless_cycle(T5) is None
    assert is_chordal(T5) and not is_chordal(C4)
