"""Multigraphs with loops and parallel edges, stored as symmetric integer matrices.

Degree convention: a loop contributes 1 to the degree of its vertex, so the
degree of ``u`` is the plain row sum of the adjacency matrix.  This is *not*
the textbook "a loop counts twice" rule; it is the convention under which the
polarity graphs of projective planes are (q+1)-regular with a unit diagonal.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Sequence

import numpy as np

from .errors import (
    AsymmetricMatrix,
    MalformedInput,
    NegativeEntry,
    NotRegular,
    UnknownName,
    VertexOutOfRange,
)
from .exact import exact_matpow


@dataclass(frozen=True)
class Multigraph:
    """Vertices ``0..n-1``; ``adj[u][v]`` edges between u != v, ``adj[u][u]`` loops on u."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1 or len(self.adj) != self.n or any(len(r) != self.n for r in self.adj):
            raise MalformedInput(f"adjacency must be a square {self.n}x{self.n} matrix")
        for u in range(self.n):
            for v in range(self.n):
                x = self.adj[u][v]
                if x < 0:
                    raise NegativeEntry(f"entry ({u},{v}) = {x} is negative")
                if v > u and x != self.adj[v][u]:
                    raise AsymmetricMatrix(f"entries ({u},{v}) and ({v},{u}) differ")

    @cached_property
    def array(self) -> np.ndarray:
        """Read-only int64 copy of the adjacency matrix."""
        a = np.array(self.adj, dtype=np.int64)
        a.setflags(write=False)
        return a

    @property
    def degrees(self) -> list[int]:
        return [sum(row) for row in self.adj]

    @property
    def trace(self) -> int:
        return sum(self.adj[u][u] for u in range(self.n))

    @property
    def loops(self) -> list[int]:
        return [self.adj[u][u] for u in range(self.n)]

    @property
    def has_multi_edge(self) -> bool:
        return any(self.adj[u][v] >= 2 for u, v in combinations(range(self.n), 2))

    @property
    def is_simple(self) -> bool:
        return self.trace == 0 and not self.has_multi_edge

    def neighbors(self, u: int) -> list[int]:
        """Distinct vertices ``v != u`` joined to ``u`` by at least one edge."""
        return [v for v in range(self.n) if v != u and self.adj[u][v]]

    def __repr__(self):
        return f"Multigraph(n={self.n}, adj={[list(r) for r in self.adj]})"


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    regular_k: int | None


def from_matrix(entries: Sequence[Sequence[int]] | np.ndarray) -> Multigraph:
    rows = [list(r) for r in entries]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise MalformedInput("adjacency matrix must be square and non-empty")
    adj = []
    for r in rows:
        out = []
        for x in r:
            if isinstance(x, (bool, np.bool_)) or not isinstance(x, (int, np.integer)):
                if isinstance(x, float) and x.is_integer():
                    x = int(x)
                else:
                    raise MalformedInput(f"non-integer entry {x!r}")
            out.append(int(x))
        adj.append(tuple(out))
    return Multigraph(n, tuple(adj))


def regularity(g: Multigraph) -> DegreeProfile:
    degs = tuple(g.degrees)
    k = degs[0] if len(set(degs)) == 1 else None
    return DegreeProfile(degs, k)


def require_regular(g: Multigraph) -> int:
    k = regularity(g).regular_k
    if k is None:
        raise NotRegular(f"degrees {g.degrees} are not constant")
    return k


def is_connected(g: Multigraph) -> bool:
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in g.neighbors(u):
            if not seen[v]:
                seen[v] = True
                queue.append(v)
    return all(seen)


def girth(g: Multigraph) -> int | float:
    """Length of a shortest non-backtracking closed walk; ``math.inf`` for forests.

    A loop is a cycle of length 1 and two parallel edges a cycle of length 2;
    otherwise the graph is simple and a BFS from every root finds the girth.
    """
    if g.trace > 0:
        return 1
    if g.has_multi_edge:
        return 2
    best = math.inf
    nbrs = [g.neighbors(u) for u in range(g.n)]
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                break
            for w in nbrs[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def walk_count(g: Multigraph, u: int, v: int, i: int) -> int:
    """Number of walks of length ``i`` from ``u`` to ``v``, i.e. ``(A^i)[u][v]``."""
    for x in (u, v):
        if not 0 <= x < g.n:
            raise VertexOutOfRange(f"vertex {x} not in 0..{g.n - 1}")
    if i < 0:
        raise ValueError("walk length must be non-negative")
    return int(exact_matpow(g.array, i)[u, v])


def bipartite_double(g: Multigraph) -> Multigraph:
    n = g.n
    a = g.array
    out = np.zeros((2 * n, 2 * n), dtype=np.int64)
    out[:n, n:] = a
    out[n:, :n] = a.T
    return from_matrix(out)


def degree_shift(g: Multigraph, t: int) -> Multigraph:
    """Add ``t`` loops at every vertex (adjacency ``A + tI``)."""
    require_regular(g)
    if t < 0:
        raise ValueError("shift must be non-negative")
    return from_matrix(g.array + t * np.eye(g.n, dtype=np.int64))


def disjoint_union(g: Multigraph, h: Multigraph) -> Multigraph:
    out = np.zeros((g.n + h.n, g.n + h.n), dtype=np.int64)
    out[: g.n, : g.n] = g.array
    out[g.n :, g.n :] = h.array
    return from_matrix(out)


def permute(g: Multigraph, perm: Sequence[int]) -> Multigraph:
    """Relabel so that new vertex ``i`` is old vertex ``perm[i]``."""
    idx = np.asarray(perm)
    return from_matrix(g.array[np.ix_(idx, idx)])


# ---------------------------------------------------------------------------
# named graphs
# ---------------------------------------------------------------------------

def cycle(n: int) -> Multigraph:
    """The 2-regular circulant ``P + P^-1``: two loops for n=1, a double edge for n=2."""
    if n < 1:
        raise ValueError("cycle needs n >= 1")
    a = np.zeros((n, n), dtype=np.int64)
    for u in range(n):
        a[u, (u + 1) % n] += 1
        a[u, (u - 1) % n] += 1
    return from_matrix(a)


def complete(n: int) -> Multigraph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return from_matrix(np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64))


def petersen() -> Multigraph:
    # Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint
    pairs = list(combinations(range(5), 2))
    a = [[int(not set(p) & set(r)) for r in pairs] for p in pairs]
    return from_matrix(a)


def path(n: int) -> Multigraph:
    a = np.zeros((n, n), dtype=np.int64)
    for u in range(n - 1):
        a[u, u + 1] = a[u + 1, u] = 1
    return from_matrix(a)


_BUILTIN_RE = re.compile(r"^\s*([a-z_]+)\s*(?:\(\s*(\d+)\s*\))?\s*$")


def builtin(name: str, n: int | None = None) -> Multigraph:
    """Named graphs: ``cycle``, ``complete`` (both need ``n``) and ``petersen``.

    ``builtin("cycle(5)")`` is accepted as shorthand for ``builtin("cycle", 5)``.
    """
    m = _BUILTIN_RE.match(name.lower())
    if m is None:
        raise UnknownName(name)
    base, arg = m.group(1), m.group(2)
    if arg is not None:
        n = int(arg)
    if base == "petersen":
        return petersen()
    if base in ("cycle", "complete"):
        if n is None or n < 1:
            raise ValueError(f"{base} needs a size n >= 1")
        return cycle(n) if base == "cycle" else complete(n)
    raise UnknownName(name)
