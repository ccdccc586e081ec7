"""Command-line front end.

    cliquetrees analyze GRAPH [--verify] [--oracle-cap N] [--count-ops] [--expect CLASS]
    cliquetrees derive GRAPH --what {cr,kline,clique-tree,blocks} [--k K] [--out PATH] [--dot PATH]
    cliquetrees generate (--ktree -k K -n N | --block (--blocks 3,3 | -n N) | --chordal -n N) [--seed S]
    cliquetrees bench [--family ktree|block] [--bench-ladder 14,...,20] [--k K]

Exit codes: 0 success, 1 parse or usage error, 2 classification differs from ``--expect``.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import oracles
from .bench import FAMILIES, run_ladder
from .chordal import analyze, separator_table
from .cliquegraphs import clique_intersection_graph, k_line_graph, reduced_clique_graph
from .counting import (
    MultiplicationCounter,
    count_clique_trees_general,
    count_clique_trees_ktree,
    count_spanning_trees_block,
)
from .errors import CliqueBlowupError, GraphError, NotChordalError, NotConnectedError, OracleCapExceeded
from .generators import GenSpec, random_block_graph, random_chordal_graph, random_k_tree
from .graph import Graph, connected_components
from .io import EdgeListError, format_dot, format_edge_list, parse_edge_list
from .recognition import recognize_block_graph, recognize_k_tree, reduced_equals_line_graph

# dense cofactor of a larger Laplacian is too slow to be a routine check
KIRCHHOFF_LIMIT = 400


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _oracle(name: str, fn, expected: int | None, agreement: dict) -> None:
    try:
        value = fn()
    except (OracleCapExceeded, RecursionError) as e:
        agreement[name] = {"skipped": str(e) or "recursion limit"}
        return
    entry = {"value": str(value)}
    if expected is not None:
        entry["agrees"] = value == expected
    agreement[name] = entry


def analyze_document(g: Graph, verify: bool = False, oracle_cap: int = oracles.DEFAULT_CAP,
                     count_ops: bool = False, digest: str = "") -> dict:
    """Classification, counts and optional oracle comparisons as a JSON-ready dict."""
    t0 = time.perf_counter()
    doc: dict = {
        "input_digest": digest,
        "n": g.n,
        "m": g.m,
        "classification": {"connected": False, "chordal": False, "k_tree": False, "block_graph": False},
        "k": None,
        "clique_trees": None,
        "spanning_trees": None,
        "separators": None,
        "reduced_equals_line_graph": None,
        "oracle_agreement": None,
        "op_count": None,
    }
    cls = doc["classification"]
    cls["connected"] = g.n > 0 and len(connected_components(g)) == 1
    if not cls["connected"]:
        doc["wall_ms"] = (time.perf_counter() - t0) * 1000.0
        return doc

    ops: dict = {}
    agreement: dict = {}
    try:
        st = analyze(g)
    except NotChordalError as e:
        doc["witness_cycle"] = list(e.cycle)
        st = None
    if st is not None:
        cls["chordal"] = True
        table = separator_table(st.tree)
        doc["separators"] = [{"separator": list(s), "multiplicity": mu} for s, mu in table.entries]
        cert = recognize_k_tree(g, st)
        if cert:
            cls["k_tree"] = True
            doc["k"] = cert.k
            count = count_clique_trees_ktree(table)
            doc["clique_trees_method"] = "ktree-product"
            if cert.k >= 1:
                doc["reduced_equals_line_graph"] = reduced_equals_line_graph(g)
            if count_ops:
                c = MultiplicationCounter()
                count_clique_trees_ktree(table, c)
                ops["clique_trees"] = c.count
        else:
            doc["k_tree_rejection"] = cert.reason
            count, _ = count_clique_trees_general(g)
            doc["clique_trees_method"] = "ho-lee"
            if count_ops:
                c = MultiplicationCounter()
                count_clique_trees_general(g, c)
                ops["clique_trees"] = c.count
        doc["clique_trees"] = str(count)
        if verify:
            if cert:
                _oracle("ho_lee", lambda: count_clique_trees_general(g)[0], count, agreement)
                if len(st.cliques) <= KIRCHHOFF_LIMIT:
                    line = k_line_graph(g, cert.k + 1, maximal_cliques=st.cliques) if cert.k >= 1 else None
                    if line is not None:
                        _oracle("kirchhoff_line_graph", lambda: oracles.kirchhoff_count(line.to_graph()), count, agreement)
                    cr = reduced_clique_graph(g, st.cliques)
                    _oracle("kirchhoff_reduced_clique_graph", lambda: oracles.kirchhoff_count(cr.to_graph()), count, agreement)
            cig = clique_intersection_graph(st.cliques)
            _oracle("enumerate_clique_trees", lambda: oracles.enumerate_clique_trees(cig, cap=oracle_cap), count, agreement)

    decomp = recognize_block_graph(g)
    if decomp:
        cls["block_graph"] = True
        doc["blocks"] = [list(b) for b in decomp.blocks]
        span = count_spanning_trees_block(decomp)
        doc["spanning_trees"] = str(span)
        if count_ops:
            c = MultiplicationCounter()
            count_spanning_trees_block(decomp, c)
            ops["spanning_trees"] = c.count
    else:
        doc["block_rejection"] = {"block": list(decomp.block), "missing_edge": list(decomp.missing_edge)}
        span = None
    if verify:
        if g.n <= KIRCHHOFF_LIMIT:
            _oracle("kirchhoff", lambda: oracles.kirchhoff_count(g), span, agreement)
        _oracle("enumerate_spanning_trees", lambda: oracles.enumerate_spanning_trees(g, cap=oracle_cap), span, agreement)
        doc["oracle_agreement"] = agreement
    if count_ops:
        ops["bounds"] = {"n": g.n, "n_plus_m": g.n + g.m}
        doc["op_count"] = ops
    doc["wall_ms"] = (time.perf_counter() - t0) * 1000.0
    return doc


def _load(path: str) -> tuple[Graph, str]:
    data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError:
        raise UsageError(f"{path}: edge list must be ASCII") from None
    return parse_edge_list(text), "sha256:" + hashlib.sha256(data).hexdigest()


def _matches(doc: dict, expect: str) -> bool:
    cls = doc["classification"]
    if expect.startswith("ktree"):
        want_k = expect[len("ktree"):].strip("()=:")
        return cls["k_tree"] and (not want_k or doc["k"] == int(want_k))
    return bool(cls.get({"chordal": "chordal", "block": "block_graph", "connected": "connected"}[expect]))


def cmd_analyze(args) -> int:
    g, digest = _load(args.graph)
    doc = analyze_document(g, args.verify, args.oracle_cap, args.count_ops, digest)
    print(json.dumps(doc, indent=2))
    if args.expect and not _matches(doc, args.expect):
        return 2
    return 0


def _derived(g: Graph, what: str, k: int | None, cap: int):
    """``(node_labels, edges)`` for the requested derived structure."""
    if what == "kline":
        if k is None or k < 2:
            raise UsageError("--what kline needs --k K with K >= 2")
        line = k_line_graph(g, k, cap=cap)
        return line.nodes, list(line.edges)
    if what == "blocks":
        decomp = recognize_block_graph(g)
        if not decomp:
            raise UsageError(f"not a block graph: block {list(decomp.block)} misses edge {list(decomp.missing_edge)}")
        # block-cut tree: blocks first, then cut vertices as singleton nodes
        labels = list(decomp.blocks) + [(c,) for c in decomp.cut_vertices]
        cut_node = {c: len(decomp.blocks) + i for i, c in enumerate(decomp.cut_vertices)}
        edges = [(b, cut_node[v], None) for b, block in enumerate(decomp.blocks) for v in block if v in cut_node]
        return labels, edges
    st = analyze(g)
    if what == "cr":
        cr = reduced_clique_graph(g, st.cliques)
        return cr.nodes, list(cr.edges)
    if what == "clique-tree":
        return st.cliques, [(i, j, len(s)) for i, j, s in st.tree.edges]
    raise UsageError(f"unknown --what {what!r}")


def cmd_derive(args) -> int:
    g, _ = _load(args.graph)
    labels, edges = _derived(g, args.what, args.k, args.cap)
    adj: list[list[int]] = [[] for _ in labels]
    for u, v, _w in edges:
        adj[u].append(v)
        adj[v].append(u)
    derived = Graph(len(labels), tuple(tuple(sorted(a)) for a in adj))
    comments = [f"{args.what} of {args.graph}"] + [f"node {i}: {' '.join(map(str, q))}" for i, q in enumerate(labels)]
    text = format_edge_list(derived, comments)
    if args.out:
        Path(args.out).write_text(text, encoding="ascii")
    else:
        sys.stdout.write(text)
    if args.dot:
        Path(args.dot).write_text(format_dot(len(labels), edges, labels, name=args.what.replace("-", "_")), encoding="ascii")
    return 0


def cmd_generate(args) -> int:
    if args.ktree:
        if args.n is None:
            raise UsageError("--ktree needs -n")
        g, _ = random_k_tree(GenSpec(args.seed, args.n, args.k, args.bias))
        what = f"{args.k}-tree n={args.n} seed={args.seed} bias={args.bias}"
    elif args.block:
        sizes = [int(x) for x in args.blocks.split(",")] if args.blocks else None
        if sizes is None and args.n is None:
            raise UsageError("--block needs --blocks or -n")
        g, _ = random_block_graph(GenSpec(args.seed, args.n or 0, args.k, args.bias), sizes, args.max_block)
        what = f"block graph sizes={args.blocks or 'random'} seed={args.seed} bias={args.bias}"
    elif args.chordal:
        if args.n is None:
            raise UsageError("--chordal needs -n")
        g = random_chordal_graph(args.seed, args.n)
        what = f"chordal graph n={args.n} seed={args.seed}"
    else:
        raise UsageError("choose one of --ktree, --block, --chordal")
    sys.stdout.write(format_edge_list(g, [what]))
    return 0


def cmd_bench(args) -> int:
    exps = [int(x) for x in args.bench_ladder.split(",")]
    families = FAMILIES if args.family == "all" else (args.family,)
    report = [run_ladder(f, exps, k=args.k, repeat=args.repeat, count_ops=not args.no_ops) for f in families]
    print(json.dumps(report, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cliquetrees", description="Clique trees, k-trees and block graphs: recognition and exact counts.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="classify a graph and count its clique trees / spanning trees")
    a.add_argument("graph", help="edge-list file, or - for stdin")
    a.add_argument("--verify", action="store_true", help="compare against the determinant and enumeration oracles")
    a.add_argument("--oracle-cap", type=int, default=oracles.DEFAULT_CAP)
    a.add_argument("--count-ops", action="store_true", help="report multiplication counts of the naive products")
    a.add_argument("--expect", choices=["connected", "chordal", "block", "ktree"] + [f"ktree{k}" for k in range(1, 10)],
                   help="exit 2 unless the graph has this class")
    a.set_defaults(func=cmd_analyze)

    d = sub.add_parser("derive", help="write a derived graph as an edge list (and DOT)")
    d.add_argument("graph")
    d.add_argument("--what", required=True, choices=["cr", "kline", "clique-tree", "blocks"])
    d.add_argument("--k", type=int, help="clique size for --what kline")
    d.add_argument("--cap", type=int, default=10**7, help="k-clique cap on non-chordal input")
    d.add_argument("--out", help="edge-list output path (default stdout)")
    d.add_argument("--dot", help="also write DOT here")
    d.set_defaults(func=cmd_derive)

    gen = sub.add_parser("generate", help="emit a seeded random instance as an edge list")
    kind = gen.add_mutually_exclusive_group(required=True)
    kind.add_argument("--ktree", action="store_true")
    kind.add_argument("--block", action="store_true")
    kind.add_argument("--chordal", action="store_true")
    gen.add_argument("-k", type=int, default=2)
    gen.add_argument("-n", type=int)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--bias", type=float, default=0.5)
    gen.add_argument("--blocks", help="comma-separated block sizes")
    gen.add_argument("--max-block", type=int, default=5)
    gen.set_defaults(func=cmd_generate)

    b = sub.add_parser("bench", help="doubling ladder timings for the linear-time counts")
    b.add_argument("--family", choices=list(FAMILIES) + ["all"], default="all")
    b.add_argument("--bench-ladder", default="14,15,16,17,18,19,20", help="comma-separated exponents of n")
    b.add_argument("--k", type=int, default=2)
    b.add_argument("--repeat", type=int, default=3)
    b.add_argument("--no-ops", action="store_true", help="skip the multiplication-counter run")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, EdgeListError, GraphError, CliqueBlowupError, ValueError, OSError) as e:
        if isinstance(e, NotConnectedError):
            print(f"cliquetrees: {e}", file=sys.stderr)
        else:
            print(f"cliquetrees: error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
