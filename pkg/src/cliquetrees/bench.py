"""Doubling ladders for the k-tree and block-graph counting pipelines.

Each ladder point runs in a fresh interpreter (``isolate=True``) so heap growth
from earlier points does not leak into later timings; within a point the best
of ``repeat`` runs is kept, with the garbage collector paused while timing.
"""

from __future__ import annotations

import gc
import json
import subprocess
import sys
import time

from .chordal import analyze, separator_table
from .counting import MultiplicationCounter, count_clique_trees_ktree, count_spanning_trees_block
from .generators import GenSpec, k_path, random_block_graph
from .graph import Graph
from .recognition import recognize_block_graph, recognize_k_tree

FAMILIES = ("ktree", "block")
RATIO_BAND = (1.6, 2.6)
# naive repeated multiplication is quadratic in the digits of the result
OP_COUNT_LIMIT = 1 << 16


def make_instance(family: str, n: int, k: int = 2) -> Graph:
    """k-path on n vertices, or a path of triangles on about n vertices."""
    if family == "ktree":
        return k_path(k, n)
    if family == "block":
        return random_block_graph(GenSpec(0, 0, bias=0.0), sizes=[3] * max(1, (n - 1) // 2))[0]
    raise ValueError(f"unknown family {family!r}")


def ktree_pipeline(g: Graph, counter: MultiplicationCounter | None = None) -> int:
    st = analyze(g, canonical=False)
    if not recognize_k_tree(g, st):
        raise ValueError("instance is not a k-tree")
    return count_clique_trees_ktree(separator_table(st.tree), counter)


def block_pipeline(g: Graph, counter: MultiplicationCounter | None = None) -> int:
    decomp = recognize_block_graph(g)
    if not decomp:
        raise ValueError("instance is not a block graph")
    return count_spanning_trees_block(decomp, counter)


PIPELINES = {"ktree": ktree_pipeline, "block": block_pipeline}


def time_point(family: str, exponent: int, k: int = 2, repeat: int = 3, count_ops: bool = True) -> dict:
    g = make_instance(family, 1 << exponent, k)
    run = PIPELINES[family]
    best = float("inf")
    for _ in range(repeat):
        gc.collect()
        gc.disable()
        try:
            t0 = time.perf_counter()
            run(g)
            best = min(best, time.perf_counter() - t0)
        finally:
            gc.enable()
    point = {"family": family, "exponent": exponent, "n": g.n, "m": g.m, "wall_ms": best * 1000.0}
    if count_ops and g.n <= OP_COUNT_LIMIT:
        counter = MultiplicationCounter()
        run(g, counter)
        point["op_count"] = counter.count
        point["op_bound"] = g.n if family == "ktree" else g.n + g.m
    else:
        point["op_count"] = None
    return point


def _isolated_point(family: str, exponent: int, k: int, repeat: int, count_ops: bool) -> dict:
    cmd = [sys.executable, "-m", "cliquetrees.bench", family, str(exponent), str(k), str(repeat), str(int(count_ops))]
    out = subprocess.run(cmd, check=True, capture_output=True, text=True)
    return json.loads(out.stdout)


def run_ladder(
    family: str,
    exponents: list[int],
    k: int = 2,
    repeat: int = 3,
    isolate: bool = True,
    count_ops: bool = True,
) -> dict:
    points = []
    for e in exponents:
        if isolate:
            points.append(_isolated_point(family, e, k, repeat, count_ops))
        else:
            points.append(time_point(family, e, k, repeat, count_ops))
    ratios = []
    for a, b in zip(points, points[1:]):
        steps = b["exponent"] - a["exponent"]
        r = (b["wall_ms"] / a["wall_ms"]) ** (1.0 / steps) if a["wall_ms"] > 0 else float("inf")
        ratios.append({"from_n": a["n"], "to_n": b["n"], "ratio": r,
                       "in_band": RATIO_BAND[0] <= r <= RATIO_BAND[1]})
    return {"family": family, "k": k, "points": points, "ratios": ratios, "band": list(RATIO_BAND)}


if __name__ == "__main__":
    fam, e, kk, rep, ops = sys.argv[1:6]
    print(json.dumps(time_point(fam, int(e), int(kk), int(rep), bool(int(ops)))))
