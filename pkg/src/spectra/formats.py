"""Graph interchange formats: JSON, edge lists and Graphviz DOT."""

from __future__ import annotations

import json

from .errors import MalformedInput, SpectraError
from .multigraph import Multigraph, from_matrix, regularity


def graph_to_json(g: Multigraph) -> dict:
    return {"n": g.n, "adj": [list(r) for r in g.adj]}


def graph_from_json(obj: dict) -> Multigraph:
    try:
        n = obj["n"]
        adj = obj["adj"]
    except (KeyError, TypeError) as exc:
        raise MalformedInput(f"graph JSON needs 'n' and 'adj': {exc}") from None
    if not isinstance(n, int) or len(adj) != n:
        raise MalformedInput(f"'n' = {n!r} does not match the adjacency size")
    return from_matrix(adj)


def to_edge_list(g: Multigraph) -> str:
    """Header ``n k`` (k = -1 if not regular), then ``u v mult`` for u <= v."""
    k = regularity(g).regular_k
    lines = [f"{g.n} {-1 if k is None else k}"]
    for u in range(g.n):
        for v in range(u, g.n):
            if g.adj[u][v]:
                lines.append(f"{u} {v} {g.adj[u][v]}")
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Multigraph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise MalformedInput("edge list must start with a header line 'n k'")
    try:
        n, k = int(rows[0][0]), int(rows[0][1])
        adj = [[0] * n for _ in range(n)]
        for parts in rows[1:]:
            if len(parts) != 3:
                raise MalformedInput(f"bad edge line {' '.join(parts)!r}")
            u, v, m = map(int, parts)
            if not (0 <= u < n and 0 <= v < n):
                raise MalformedInput(f"vertex out of range in {' '.join(parts)!r}")
            adj[u][v] += m
            if u != v:
                adj[v][u] += m
    except ValueError as exc:
        if isinstance(exc, SpectraError):
            raise
        raise MalformedInput(str(exc)) from None
    g = from_matrix(adj)
    if k != -1 and regularity(g).regular_k != k:
        raise MalformedInput(f"header says {k}-regular, degrees are {g.degrees}")
    return g


def read_graph(text: str) -> Multigraph:
    """Parse JSON (leading ``{``) or an edge list."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise MalformedInput(f"invalid JSON: {exc}") from None
        return graph_from_json(obj)
    return from_edge_list(text)


def to_dot(g: Multigraph, name: str = "G") -> str:
    """One DOT edge line per edge instance; loops become self-edges."""
    lines = [f"graph {name} {{"]
    lines += [f"  {u};" for u in range(g.n)]
    for u in range(g.n):
        for v in range(u, g.n):
            lines += [f"  {u} -- {v};"] * g.adj[u][v]
    lines.append("}")
    return "\n".join(lines) + "\n"
