"""Non-backtracking walk polynomials F_i^(k) and the brute-force walk oracle.

    F_0 = 1,  F_1 = x,  F_2 = x^2 - k,  F_i = x F_{i-1} - (k-1) F_{i-2}  (i >= 3)

For a connected k-regular multigraph, entry (u, v) of F_i(A) counts the
non-backtracking walks of length i from u to v.  ``nb_walk_oracle`` counts the
same walks by explicit enumeration over edge instances so the two can be
compared exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import NotConnected, SizeCapExceeded
from .exact import as_fraction, exact_matmul
from .multigraph import Multigraph, is_connected, require_regular

ORACLE_CAP = 10**7


@dataclass(frozen=True)
class FPolynomial:
    k: int
    i: int
    monomial_coeffs: tuple[Fraction, ...]  # c_0 .. c_i

    def __call__(self, x):
        acc = 0
        for c in reversed(self.monomial_coeffs):
            acc = acc * x + c
        return acc


@dataclass(frozen=True)
class FBasisExpansion:
    """The polynomial ``sum_i coeffs[i] * F_i^(k)(x)``."""

    k: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(as_fraction(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        return sum((c * v for c, v in zip(self.coeffs, f_values(self.k, self.degree, x))), 0)

    def to_monomial(self) -> tuple[Fraction, ...]:
        out = [Fraction(0)] * max(1, len(self.coeffs))
        for i, c in enumerate(self.coeffs):
            if c:
                for j, a in enumerate(f_poly(self.k, i).monomial_coeffs):
                    out[j] += c * a
        return tuple(out)

    def evaluate_matrix(self, g: Multigraph) -> np.ndarray:
        """``sum_i f_i F_i(A)`` with exact (object dtype) entries."""
        total = np.zeros((g.n, g.n), dtype=object)
        for i, m in enumerate(f_matrices(g, self.degree)):
            if self.coeffs[i]:
                total = total + self.coeffs[i] * m.astype(object)
        return total


def _check_k(k: int):
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")


def f_poly(k: int, i: int) -> FPolynomial:
    _check_k(k)
    if i < 0:
        raise ValueError("index must be non-negative")
    polys = [[Fraction(1)], [Fraction(0), Fraction(1)], [Fraction(-k), Fraction(0), Fraction(1)]]
    for j in range(3, i + 1):
        prev, prev2 = polys[j - 1], polys[j - 2]
        nxt = [Fraction(0)] + prev
        for d, c in enumerate(prev2):
            nxt[d] -= (k - 1) * c
        polys.append(nxt)
    return FPolynomial(k, i, tuple(polys[i]))


def f_values(k: int, i_max: int, x) -> list:
    """``[F_0(x), ..., F_{i_max}(x)]`` by the three-term recurrence.

    Works for any number type closed under ``+``, ``-`` and ``*`` by integers
    (int, Fraction, float, QuadraticSurd).
    """
    _check_k(k)
    vals = [1 + 0 * x, x]
    if i_max >= 2:
        vals.append(x * x - k)
    for _ in range(3, i_max + 1):
        vals.append(x * vals[-1] - (k - 1) * vals[-2])
    return vals[: i_max + 1]


def f_eval_scalar(k: int, i: int, x):
    if i < 0:
        raise ValueError("index must be non-negative")
    return f_values(k, i, x)[i]


def f_matrices(g: Multigraph, i_max: int) -> list[np.ndarray]:
    """``[F_0(A), ..., F_{i_max}(A)]`` for a connected regular multigraph."""
    k = require_regular(g)
    if not is_connected(g):
        raise NotConnected("F-basis walk counts need a connected graph")
    a = g.array
    eye = np.eye(g.n, dtype=np.int64)
    mats = [eye, a.astype(np.int64)]
    if i_max >= 2:
        mats.append(exact_matmul(a, a) - k * eye)
    for _ in range(3, i_max + 1):
        mats.append(exact_matmul(a, mats[-1]) - (k - 1) * mats[-2])
    return mats[: i_max + 1]


def f_eval_matrix(g: Multigraph, i: int) -> np.ndarray:
    if i < 0:
        raise ValueError("index must be non-negative")
    return f_matrices(g, i)[i]


def edge_instances(g: Multigraph) -> list[tuple[int, int]]:
    """One ``(u, v)`` pair per edge instance (``u <= v``); loops appear as ``(u, u)``."""
    out = []
    for u in range(g.n):
        for v in range(u, g.n):
            out.extend([(u, v)] * g.adj[u][v])
    return out


def nb_walk_oracle(g: Multigraph, i: int) -> np.ndarray:
    """Count non-backtracking walks of length ``i`` by explicit enumeration.

    Parallel edges and loops are distinct instances; a walk may not use the
    same instance twice in a row.  A loop is traversed in one direction only,
    so it contributes a single walk of length 1.
    """
    if i < 1:
        raise ValueError("walk length must be >= 1")
    kmax = max(g.degrees)
    if g.n * kmax**i > ORACLE_CAP:
        raise SizeCapExceeded(f"n*k^i = {g.n * kmax**i} exceeds {ORACLE_CAP}")
    incident: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for idx, (u, v) in enumerate(edge_instances(g)):
        incident[u].append((idx, v))
        if u != v:
            incident[v].append((idx, u))

    counts = np.zeros((g.n, g.n), dtype=np.int64)

    def extend(vertex: int, last: int, remaining: int, start: int):
        if remaining == 0:
            counts[start, vertex] += 1
            return
        for idx, nxt in incident[vertex]:
            if idx != last:
                extend(nxt, idx, remaining - 1, start)

    for start in range(g.n):
        extend(start, -1, i, start)
    return counts


def verify_nb_theorem(g: Multigraph, i_max: int) -> bool:
    mats = f_matrices(g, i_max)
    return all(np.array_equal(mats[i], nb_walk_oracle(g, i)) for i in range(1, i_max + 1))


def expand_in_f_basis(poly: Sequence, k: int) -> FBasisExpansion:
    """Rewrite monomial coefficients ``poly[0] + poly[1] x + ...`` in the F-basis.

    Each F_i is monic of degree i, so subtracting ``lead * F_deg`` from the top
    degree down terminates with the unique coefficients.
    """
    _check_k(k)
    rest = [as_fraction(c) for c in poly]
    while len(rest) > 1 and rest[-1] == 0:
        rest.pop()
    if not rest:
        rest = [Fraction(0)]
    f = [Fraction(0)] * len(rest)
    for d in range(len(rest) - 1, -1, -1):
        lead = rest[d]
        if lead:
            f[d] = lead
            for j, c in enumerate(f_poly(k, d).monomial_coeffs):
                rest[j] -= lead * c
    return FBasisExpansion(k, tuple(f))
