"""Cross-check every counting identity on a batch of seeded instances.

Prints one row per family with the number of instances, mismatches and time.

    python scripts/check_identities.py --instances 300 --max-n 50
"""

import argparse
import time
from dataclasses import dataclass

from cliquetrees import (
    GenSpec,
    analyze,
    count_clique_trees_general,
    count_clique_trees_ktree,
    count_spanning_trees_block,
    enumerate_clique_trees,
    enumerate_spanning_trees,
    k_line_graph,
    kirchhoff_count,
    random_block_graph,
    random_chordal_graph,
    random_k_tree,
    reduced_clique_graph,
    separator_table,
)
from cliquetrees.cliquegraphs import clique_intersection_graph


@dataclass
class CheckConfig:
    instances: int = 300
    max_n: int = 50
    max_k: int = 5
    seed: int = 0
    # enumeration is exponential; only graphs this small go through it
    enum_n: int = 11
    enum_m: int = 25


def check_ktrees(cfg: CheckConfig) -> list:
    bad = []
    for i in range(cfg.instances):
        k = 1 + i % cfg.max_k
        n = k + 1 + (cfg.seed + 7 * i) % max(1, cfg.max_n - k)
        g, cert = random_k_tree(GenSpec(cfg.seed + i, n, k, bias=(i % 5) / 4))
        st = analyze(g)
        values = {
            "product": count_clique_trees_ktree(separator_table(st.tree)),
            "general": count_clique_trees_general(g)[0],
            "kirchhoff(line)": kirchhoff_count(k_line_graph(g, k + 1, maximal_cliques=st.cliques).to_graph()),
            "kirchhoff(reduced)": kirchhoff_count(reduced_clique_graph(g, st.cliques).to_graph()),
        }
        if len(set(values.values())) != 1:
            bad.append((i, values))
    return bad


def check_chordal(cfg: CheckConfig) -> list:
    bad = []
    for i in range(cfg.instances):
        g = random_chordal_graph(cfg.seed + i, 2 + i % (cfg.enum_n - 1))
        got = count_clique_trees_general(g)[0]
        want = enumerate_clique_trees(clique_intersection_graph(analyze(g).cliques))
        if got != want:
            bad.append((i, got, want))
    return bad


def check_blocks(cfg: CheckConfig) -> list:
    bad = []
    for i in range(cfg.instances):
        g, decomp = random_block_graph(GenSpec(cfg.seed + i, 1 + i % cfg.max_n, bias=(i % 5) / 4))
        got = count_spanning_trees_block(decomp)
        want = kirchhoff_count(g)
        if got != want or (g.m <= cfg.enum_m and got != enumerate_spanning_trees(g)):
            bad.append((i, got, want))
    return bad


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--instances", type=int, default=CheckConfig.instances)
    p.add_argument("--max-n", type=int, default=CheckConfig.max_n)
    p.add_argument("--seed", type=int, default=CheckConfig.seed)
    a = p.parse_args()
    cfg = CheckConfig(instances=a.instances, max_n=a.max_n, seed=a.seed)
    failed = False
    for name, fn in [("k-trees", check_ktrees), ("chordal", check_chordal), ("block graphs", check_blocks)]:
        t0 = time.perf_counter()
        bad = fn(cfg)
        failed |= bool(bad)
        print(f"{name:<13} {cfg.instances:>5} instances  {len(bad):>3} mismatches  {time.perf_counter() - t0:6.1f}s")
        for b in bad[:5]:
            print("   ", b)
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
