"""Edge-list and DOT serialization.

Edge-list format: a header line ``n m``, then ``m`` lines ``u v`` with 0-based
ids, ASCII, LF line endings, single spaces. Lines starting with ``#`` are
comments; blank lines are skipped on input.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Sequence

from .errors import GraphError
from .graph import Graph, build_graph


class EdgeListError(GraphError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


def _ints(tokens: list[str], lineno: int, what: str) -> list[int]:
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise EdgeListError(lineno, f"{what} must be integers, got {' '.join(tokens)!r}") from None
    if any(x < 0 for x in values):
        raise EdgeListError(lineno, f"{what} must be non-negative")
    return values


def parse_edge_list(text: str) -> Graph:
    header = None
    edges: list[tuple[int, int]] = []
    lines: list[int] = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if header is None:
            if len(tokens) != 2:
                raise EdgeListError(lineno, "header must be 'n m'")
            header = _ints(tokens, lineno, "header fields")
            continue
        if len(tokens) != 2:
            raise EdgeListError(lineno, "edge line must be 'u v'")
        u, v = _ints(tokens, lineno, "endpoints")
        edges.append((u, v))
        lines.append(lineno)
    if header is None:
        raise EdgeListError(1, "missing header 'n m'")
    n, m = header
    if len(edges) != m:
        raise EdgeListError(lines[-1] if lines else 1, f"header declares {m} edges, found {len(edges)}")
    seen: set[tuple[int, int]] = set()
    for (u, v), lineno in zip(edges, lines):
        if u >= n or v >= n:
            raise EdgeListError(lineno, f"endpoint out of range in ({u},{v}) for n={n}")
        if u == v:
            raise EdgeListError(lineno, f"self-loop ({u},{v})")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise EdgeListError(lineno, f"duplicate edge ({u},{v})")
        seen.add(key)
    return build_graph(n, edges)


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text(encoding="ascii"))


def format_edge_list(g: Graph, comments: Iterable[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(f"{g.n} {g.m}")
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def format_dot(
    n: int,
    edges: Iterable[tuple[int, int, int | None]],
    labels: Sequence[Sequence[int]] | None = None,
    name: str = "G",
) -> str:
    """DOT text; node labels list the clique's vertices, edge labels its weight."""
    out = [f"graph {name} {{"]
    for i in range(n):
        if labels is None:
            out.append(f"  {i};")
        else:
            out.append(f'  {i} [label="{" ".join(map(str, labels[i]))}"];')
    for u, v, w in edges:
        out.append(f'  {u} -- {v} [label="{w}"];' if w is not None else f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"
