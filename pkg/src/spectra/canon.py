"""Canonical forms of small multigraphs.

The canonical form is the lexicographically smallest upper-triangular listing
``(A[0][0], A[0][1], ..., A[0][n-1], A[1][1], ...)`` over all vertex orders.

It is found level by level.  Once the first ``i+1`` positions hold
``p_0..p_i``, row ``i`` of the listing is minimised by ordering the unplaced
vertices by their key ``(A[p_0][w], ..., A[p_i][w])``.  Rows ``0..i`` are then
fixed, and the next vertex must come from the first cell of that order.  So
each level keeps exactly the branches whose newest row is minimal, and the
surviving leaves all carry the minimal listing.
"""

from __future__ import annotations

from typing import Sequence

Listing = tuple[int, ...]


def canonical_form(adj: Sequence[Sequence[int]]) -> tuple[Listing, list[int]]:
    """Return ``(listing, perm)``; new vertex ``i`` of the canonical graph is old ``perm[i]``."""
    a = [list(r) for r in adj]
    n = len(a)
    # a branch: (placed vertices, unplaced vertices in key order, their keys)
    level = [((), list(range(n)), [()] * n)]
    listing: list[int] = []
    for _ in range(n):
        best_row = None
        survivors = []
        for placed, rest, keys in level:
            first = keys[0]
            for idx in range(len(rest)):
                if keys[idx] != first:
                    break
                v = rest[idx]
                av = a[v]
                others = [(keys[j] + (av[w],), w) for j, w in enumerate(rest) if j != idx]
                others.sort()
                row = (av[v],) + tuple(key[-1] for key, _ in others)
                if best_row is None or row < best_row:
                    best_row, survivors = row, []
                if row == best_row:
                    survivors.append(
                        (placed + (v,), [w for _, w in others], [key for key, _ in others])
                    )
        listing.extend(best_row)
        level = survivors
    return tuple(listing), list(level[0][0])


def canonical_listing(adj: Sequence[Sequence[int]]) -> Listing:
    return canonical_form(adj)[0]


def listing_to_matrix(n: int, listing: Listing) -> list[list[int]]:
    m = [[0] * n for _ in range(n)]
    it = iter(listing)
    for a in range(n):
        for b in range(a, n):
            m[a][b] = m[b][a] = next(it)
    return m
