import pytest

from cliquetrees import (
    CliqueBlowupError,
    analyze,
    build_graph,
    clique_intersection_graph,
    complete_graph,
    is_separating_pair,
    k_cliques,
    k_line_graph,
    reduced_clique_graph,
)

from .graphs import BOWTIE, C4, P3, T5


def test_intersection_graph_t5():
    wcg = clique_intersection_graph(analyze(T5).cliques)
    assert len(wcg.nodes) == 3
    assert [w for _, _, w in wcg.edges] == [2, 2, 2]


def test_intersection_graph_small():
    assert clique_intersection_graph(analyze(P3).cliques).edges == ((0, 1, 1),)
    assert clique_intersection_graph([(0, 1), (2, 3)]).edges == ()


def test_separating_pairs():
    assert is_separating_pair(T5, (0, 1, 2), (1, 2, 3))
    assert is_separating_pair(P3, (0, 1), (1, 2))
    assert not is_separating_pair(build_graph(4, [(0, 1), (2, 3)]), (0, 1), (2, 3))


@pytest.mark.parametrize("method", ["pairwise", "ktree"])
def test_reduced_clique_graph_t5(method):
    cr = reduced_clique_graph(T5, analyze(T5).cliques, method=method, k=2)
    assert [w for _, _, w in cr.edges] == [2, 2, 2]


def test_reduced_clique_graph_examples():
    assert reduced_clique_graph(P3, analyze(P3).cliques).edges == ((0, 1, 1),)
    cr = reduced_clique_graph(BOWTIE, analyze(BOWTIE).cliques)
    assert cr.nodes == ((0, 1, 2), (2, 3, 4)) and cr.edges == ((0, 1, 1),)


def test_reduced_drops_non_separating_intersections():
    # in the fan 0-1-2-3 with hub 4, the cliques {4,0,1} and {4,2,3} meet at 4 without separating
    fan = build_graph(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)])
    cr = reduced_clique_graph(fan, analyze(fan).cliques)
    cig = clique_intersection_graph(analyze(fan).cliques)
    assert len(cig.edges) == 3 and len(cr.edges) == 2


def test_k_line_graph_examples():
    assert k_line_graph(complete_graph(3), 2).same_graph(k_line_graph(complete_graph(3), 2))
    line = k_line_graph(complete_graph(3), 2)
    assert len(line.nodes) == 3 and len(line.edges) == 3
    line = k_line_graph(T5, 3)
    assert line.nodes == ((0, 1, 2), (1, 2, 3), (1, 2, 4)) and len(line.edges) == 3
    line = k_line_graph(P3, 2)
    assert len(line.nodes) == 2 and len(line.edges) == 1


def test_k_line_graph_non_chordal_and_cap():
    line = k_line_graph(C4, 2)
    assert len(line.nodes) == 4 and len(line.edges) == 4
    with pytest.raises(CliqueBlowupError):
        k_cliques(complete_graph(12), 6, cap=100)
    with pytest.raises(ValueError):
        k_line_graph(P3, 1)
