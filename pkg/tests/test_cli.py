import json

import pytest

from cliquetrees import GenSpec, block_tree_encoding, format_edge_list, parse_edge_list, random_k_tree, recognize_k_tree
from cliquetrees.cli import main
from cliquetrees.io import EdgeListError

from .graphs import BOWTIE, C4, P3, T5


@pytest.fixture
def write(tmp_path):
    def _write(g, name="g.txt"):
        p = tmp_path / name
        p.write_text(format_edge_list(g), encoding="ascii")
        return str(p)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_t5(capsys, write):
    code, out, _ = run(capsys, "analyze", write(T5), "--verify")
    doc = json.loads(out)
    assert code == 0
    assert doc["classification"]["k_tree"] and doc["k"] == 2
    assert doc["clique_trees"] == "3"
    assert doc["reduced_equals_line_graph"] is True
    agreements = [v["agrees"] for v in doc["oracle_agreement"].values() if "agrees" in v]
    assert agreements and all(agreements)


def test_analyze_bowtie_and_keys(capsys, write):
    code, out, _ = run(capsys, "analyze", write(BOWTIE), "--count-ops")
    doc = json.loads(out)
    assert doc["spanning_trees"] == "9" and doc["classification"]["block_graph"]
    for key in ("classification", "k", "clique_trees", "spanning_trees", "separators", "oracle_agreement", "op_count", "wall_ms"):
        assert key in doc
    assert doc["op_count"]["spanning_trees"] < BOWTIE.n + BOWTIE.m


def test_analyze_c4_witness(capsys, write):
    code, out, _ = run(capsys, "analyze", write(C4))
    doc = json.loads(out)
    assert code == 0 and not doc["classification"]["chordal"]
    assert sorted(doc["witness_cycle"]) == [0, 1, 2, 3]


def test_oracle_cap_is_not_fatal(capsys, write):
    code, out, _ = run(capsys, "analyze", write(BOWTIE), "--verify", "--oracle-cap", "2")
    doc = json.loads(out)
    assert code == 0
    assert "skipped" in doc["oracle_agreement"]["enumerate_spanning_trees"]
    assert doc["oracle_agreement"]["kirchhoff"]["agrees"]


def test_expect_exit_codes(capsys, write):
    assert run(capsys, "analyze", write(T5), "--expect", "ktree2")[0] == 0
    assert run(capsys, "analyze", write(T5), "--expect", "ktree3")[0] == 2
    assert run(capsys, "analyze", write(T5), "--expect", "block")[0] == 2
    assert run(capsys, "analyze", write(BOWTIE), "--expect", "block")[0] == 0


def test_parse_errors_exit_1(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 2\n0 1\n1 x\n", encoding="ascii")
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 1 and "line 3" in err
    assert run(capsys, "analyze", str(tmp_path / "missing.txt"))[0] == 1
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1


def test_derive(capsys, write, tmp_path):
    dot = tmp_path / "cr.dot"
    code, out, _ = run(capsys, "derive", write(T5), "--what", "cr", "--dot", str(dot))
    g = parse_edge_list(out)
    assert code == 0 and (g.n, g.m) == (3, 3)
    assert 'label="0 1 2"' in dot.read_text()
    code, out, _ = run(capsys, "derive", write(P3), "--what", "kline", "--k", "2")
    assert (parse_edge_list(out).n, parse_edge_list(out).m) == (2, 1)
    code, out, _ = run(capsys, "derive", write(BOWTIE), "--what", "blocks")
    assert "# node 0: 0 1 2" in out and "# node 1: 2 3 4" in out
    assert run(capsys, "derive", write(P3), "--what", "kline", "--k", "1")[0] == 1
    code, out, _ = run(capsys, "derive", write(T5), "--what", "clique-tree")
    assert parse_edge_list(out).m == 2


def test_generate_deterministic_and_round_trip(capsys, write):
    first = run(capsys, "generate", "--ktree", "-k", "2", "-n", "5", "--seed", "7")[1]
    second = run(capsys, "generate", "--ktree", "-k", "2", "-n", "5", "--seed", "7")[1]
    assert first == second
    assert parse_edge_list(first) == random_k_tree(GenSpec(7, 5, 2))[0]
    assert recognize_k_tree(parse_edge_list(first)).k == 2
    k4 = parse_edge_list(run(capsys, "generate", "--ktree", "-k", "3", "-n", "4")[1])
    assert (k4.n, k4.m) == (4, 6)
    bow = parse_edge_list(run(capsys, "generate", "--block", "--blocks", "3,3", "--seed", "1")[1])
    assert block_tree_encoding(bow) == block_tree_encoding(BOWTIE)
    assert run(capsys, "generate", "--ktree", "-k", "3", "-n", "3")[0] == 1


@pytest.mark.parametrize("seed", range(5))
def test_generated_graphs_classify_as_claimed(capsys, tmp_path, seed):
    text = run(capsys, "generate", "--ktree", "-k", str(1 + seed % 3), "-n", "20", "--seed", str(seed))[1]
    p = tmp_path / "g.txt"
    p.write_text(text, encoding="ascii")
    doc = json.loads(run(capsys, "analyze", str(p))[1])
    assert doc["k"] == 1 + seed % 3
    text = run(capsys, "generate", "--block", "-n", "20", "--seed", str(seed))[1]
    p.write_text(text, encoding="ascii")
    doc = json.loads(run(capsys, "analyze", str(p))[1])
    assert doc["classification"]["block_graph"]
    assert int(doc["spanning_trees"]) > 0


def test_bench_small_ladder(capsys):
    code, out, _ = run(capsys, "bench", "--family", "block", "--bench-ladder", "8,9", "--repeat", "1")
    report = json.loads(out)
    assert code == 0 and report[0]["family"] == "block" and len(report[0]["ratios"]) == 1


def test_edge_list_round_trip():
    text = format_edge_list(T5, ["t5"])
    assert text.startswith("# t5\n5 7\n") and text.endswith("\n")
    assert parse_edge_list(text) == T5
    with pytest.raises(EdgeListError, match="line 2"):
        parse_edge_list("2 1\n0 0\n")
    with pytest.raises(EdgeListError, match="declares 2 edges"):
        parse_edge_list("3 2\n0 1\n")
