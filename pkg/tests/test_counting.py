from cliquetrees import (
    MultiplicationCounter,
    analyze,
    build_graph,
    complete_graph,
    count_clique_trees,
    count_clique_trees_general,
    count_clique_trees_ktree,
    count_spanning_trees_block,
    enumerate_clique_trees,
    enumerate_spanning_trees,
    ho_lee_factorization,
    k_path,
    k_star,
    kirchhoff_count,
    path_graph,
    recognize_block_graph,
    separator_table,
    star_graph,
)
from cliquetrees.cliquegraphs import clique_intersection_graph

from .graphs import BOWTIE, MIXED, T5, TRIANGLE_PENDANT


def oracle_clique_trees(g):
    return enumerate_clique_trees(clique_intersection_graph(analyze(g).cliques))


def test_general_formula_examples():
    for g in (star_graph(3), MIXED, complete_graph(4), T5, BOWTIE):
        count, fact = count_clique_trees_general(g)
        assert count == oracle_clique_trees(g) == fact.total()
    assert count_clique_trees_general(star_graph(3))[0] == 3
    assert count_clique_trees_general(MIXED)[0] == 1
    assert count_clique_trees_general(complete_graph(4))[0] == 1


def test_factorization_star():
    fact = ho_lee_factorization(star_graph(3))
    assert len(fact.factors) == 1
    f = fact.factors[0]
    assert f.separator == (0,) and f.value == 3


def test_ktree_formula_examples():
    assert count_clique_trees_ktree(separator_table(analyze(T5).tree)) == 3
    for k in (1, 2, 3):
        assert count_clique_trees_ktree(separator_table(analyze(k_path(k, 12)).tree)) == 1
    for k, n in ((1, 6), (2, 7), (3, 9)):
        g = k_star(k, n)
        assert count_clique_trees(g) == (n - k) ** (n - k - 2) == oracle_clique_trees(g)


def test_block_formula_examples():
    assert count_spanning_trees_block(recognize_block_graph(BOWTIE)) == 9 == enumerate_spanning_trees(BOWTIE)
    assert count_spanning_trees_block(recognize_block_graph(TRIANGLE_PENDANT)) == 3
    assert count_spanning_trees_block(recognize_block_graph(path_graph(7))) == 1
    assert count_spanning_trees_block(recognize_block_graph(build_graph(1, []))) == 1


def test_counter_bounds():
    g = k_star(2, 40)
    c = MultiplicationCounter()
    value = count_clique_trees_ktree(separator_table(analyze(g).tree), c)
    assert value == 38**36 and 0 < c.count < g.n
    c = MultiplicationCounter()
    value = count_spanning_trees_block(recognize_block_graph(complete_graph(9)), c)
    assert value == 9**7 == kirchhoff_count(complete_graph(9)) and c.count < 9 + 36


def test_counter_matches_fast_path():
    g = k_star(3, 30)
    table = separator_table(analyze(g).tree)
    assert count_clique_trees_ktree(table) == count_clique_trees_ktree(table, MultiplicationCounter())
