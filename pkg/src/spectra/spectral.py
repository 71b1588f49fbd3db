"""Exact three-eigenvalue certificates and floating-point spectra.

A connected k-regular multigraph has exactly three distinct eigenvalues iff
``A^2 = sA + tI + cJ`` for rationals s, t, c such that the roots of
``x^2 - s x - t`` are distinct, differ from k, and both occur with positive
multiplicity.  The certificate keeps those roots as quadratic surds so that
every downstream sign test stays exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import NotConnected, NotSimple, PreconditionsNotMet
from .exact import QuadraticSurd, exact_matmul, frac_str
from .multigraph import Multigraph, is_connected, require_regular


@dataclass(frozen=True)
class Check:
    """One named condition and whether it holds."""

    condition: str
    passed: bool

    def to_json(self) -> dict:
        return {"condition": self.condition, "pass": self.passed}


@dataclass(frozen=True)
class ThreeEigCertificate:
    s: Fraction
    t: Fraction
    c: Fraction
    k: int
    n: int
    tau1: QuadraticSurd  # the larger non-trivial eigenvalue
    tau2: QuadraticSurd
    m1: int
    m2: int

    @property
    def tau_sum(self) -> Fraction:
        return self.s

    @property
    def tau_prod(self) -> Fraction:
        return -self.t

    @property
    def discriminant(self) -> Fraction:
        return self.s * self.s + 4 * self.t

    @property
    def rational_roots(self) -> bool:
        return self.tau1.is_rational

    @property
    def eigenvalues(self) -> list[tuple[QuadraticSurd, int]]:
        return [(QuadraticSurd(self.k), 1), (self.tau1, self.m1), (self.tau2, self.m2)]

    def to_json(self) -> dict:
        return {
            "s": frac_str(self.s),
            "t": frac_str(self.t),
            "c": frac_str(self.c),
            "k": self.k,
            "n": self.n,
            "tau_sum": frac_str(self.tau_sum),
            "tau_prod": frac_str(self.tau_prod),
            "multiplicities": [self.m1, self.m2],
        }


@dataclass(frozen=True)
class SrgParams:
    n: int
    k: int
    lam: int
    mu: int


@dataclass(frozen=True)
class ApproxSpectrum:
    eigenvalues: tuple[tuple[float, int], ...]  # (value, multiplicity), descending
    tol: float

    @property
    def values(self) -> list[float]:
        return [v for v, _ in self.eigenvalues]

    def __len__(self):
        return len(self.eigenvalues)


@dataclass
class ConditionReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {"pass": self.passed, "checks": [c.to_json() for c in self.checks]}


def _require_connected_regular(g: Multigraph) -> int:
    k = require_regular(g)
    if not is_connected(g):
        raise NotConnected("graph is not connected")
    return k


def _solve_exact(rows: list[list[Fraction]], ncols: int) -> list[Fraction] | None:
    """Gaussian elimination on an augmented system; None if inconsistent or underdetermined."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        lead = m[r][col]
        m[r] = [x / lead for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    if any(all(x == 0 for x in row[:ncols]) and row[ncols] != 0 for row in m):
        return None
    if len(pivots) < ncols:
        return None
    return [m[i][ncols] for i in range(ncols)]


def _multiplicities(k: int, n: int, trace: int, tau1: QuadraticSurd, tau2: QuadraticSurd):
    # m1 + m2 = n - 1 and tau1*m1 + tau2*m2 = trace - k
    if tau1.is_rational:
        m1 = (Fraction(trace - k) - tau2.a * (n - 1)) / (tau1.a - tau2.a)
        m2 = (n - 1) - m1
    else:
        # conjugate roots: the irrational parts cancel only if m1 == m2
        if (n - 1) % 2:
            return None
        m1 = m2 = Fraction(n - 1, 2)
        if tau1.a * (n - 1) != trace - k:
            return None
    if m1.denominator != 1 or m2.denominator != 1 or m1 < 1 or m2 < 1:
        return None
    return int(m1), int(m2)


def certify_three_eigenvalues(g: Multigraph) -> ThreeEigCertificate | None:
    k = _require_connected_regular(g)
    n = g.n
    a = g.array
    a2 = exact_matmul(a, a)
    # one equation A2[u][v] = s*A[u][v] + t*delta + c per distinct entry pattern
    eqs = {(int(a[u, v]), int(u == v), int(a2[u, v])) for u in range(n) for v in range(n)}
    rows = [[Fraction(x), Fraction(d), Fraction(1), Fraction(y)] for x, d, y in sorted(eqs)]
    sol = _solve_exact(rows, 3)
    if sol is None:
        return None
    s, t, c = sol
    # entrywise verification of A^2 = sA + tI + cJ
    for x, d, y in eqs:
        if y != s * x + t * d + c:
            return None
    disc = s * s + 4 * t
    if disc <= 0:
        return None
    root = QuadraticSurd.sqrt(disc)
    tau1 = (root + s) * Fraction(1, 2)
    tau2 = (-root + s) * Fraction(1, 2)
    if tau1 == k or tau2 == k:
        return None
    mult = _multiplicities(k, n, g.trace, tau1, tau2)
    if mult is None:
        return None
    return ThreeEigCertificate(s, t, c, k, n, tau1, tau2, *mult)


def hoffman_identity_holds(g: Multigraph, cert: ThreeEigCertificate) -> bool:
    """Check ``n (A^2 - (t1+t2) A + t1 t2 I) = (k-t1)(k-t2) J`` entrywise."""
    a = g.array
    a2 = exact_matmul(a, a)
    rhs = cert.k * cert.k - cert.s * cert.k - cert.t
    for u in range(g.n):
        for v in range(g.n):
            lhs = cert.n * (int(a2[u, v]) - cert.tau_sum * int(a[u, v]) + cert.tau_prod * (u == v))
            if lhs != rhs:
                return False
    return True


def srg_params(g: Multigraph) -> SrgParams | None:
    if not g.is_simple:
        raise NotSimple("strongly regular parameters need a simple graph")
    k = _require_connected_regular(g)
    n = g.n
    a = g.array
    a2 = exact_matmul(a, a)
    adjacent = [(u, v) for u in range(n) for v in range(u + 1, n) if a[u, v]]
    non_adjacent = [(u, v) for u in range(n) for v in range(u + 1, n) if not a[u, v]]
    if not adjacent or not non_adjacent:
        return None
    lam = int(a2[adjacent[0]])
    mu = int(a2[non_adjacent[0]])
    for u in range(n):
        for v in range(n):
            expected = k if u == v else (lam if a[u, v] else mu)
            if a2[u, v] != expected:
                return None
    return SrgParams(n, k, lam, mu)


def jacobi_eigenvalues(m: np.ndarray, tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps stop once the off-diagonal Frobenius norm drops below
    ``tol * ||m||_F``.
    """
    a = np.array(m, dtype=float)
    n = a.shape[0]
    scale = np.linalg.norm(a) or 1.0
    for _ in range(max_sweeps):
        off = float(np.linalg.norm(a - np.diag(np.diag(a))))
        if off < tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q]
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :]
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
    return np.diag(a).copy()


def cluster(values, radius: float) -> list[tuple[float, int]]:
    """Group sorted-descending values whose neighbours lie within ``radius``."""
    vals = sorted((float(v) for v in values), reverse=True)
    groups: list[list[float]] = []
    for v in vals:
        if groups and groups[-1][-1] - v <= radius:
            groups[-1].append(v)
        else:
            groups.append([v])
    return [(sum(gr) / len(gr), len(gr)) for gr in groups]


def approx_spectrum(g: Multigraph, tol: float = 1e-12, merge: float | None = None) -> ApproxSpectrum:
    if merge is None:
        merge = max(10 * tol, 1e-9)
    return ApproxSpectrum(tuple(cluster(jacobi_eigenvalues(g.array, tol), merge)), tol)


def loop_consistency(g: Multigraph, cert: ThreeEigCertificate) -> bool:
    """Diagonal of the Hoffman identity for graphs without multiple edges.

    Checks ``l_v^2 - (t1+t2+1) l_v == (k-t1)(k-t2)/n - k - t1 t2`` at every vertex.
    """
    rhs = Fraction(cert.k * cert.k - cert.s * cert.k - cert.t, cert.n) - cert.k - cert.tau_prod
    return all(l * l - (cert.tau_sum + 1) * l == rhs for l in g.loops)


def check_extremal_conditions(g: Multigraph, cert: ThreeEigCertificate) -> ConditionReport:
    """The four necessary conditions for a three-eigenvalue graph of order q^2+q+1."""
    return ConditionReport(
        [
            Check("has a loop", g.trace > 0),
            Check("no multiple edge", not g.has_multi_edge),
            Check("every loop count in {0,1}", all(l in (0, 1) for l in g.loops)),
            Check("tau1 + tau2 = 0", cert.tau_sum == 0),
        ]
    )


def extremal_necessary_conditions(g: Multigraph) -> ConditionReport:
    k = _require_connected_regular(g)
    q = k - 1
    if g.n != q * q + q + 1:
        raise PreconditionsNotMet(f"order {g.n} != q^2+q+1 = {q * q + q + 1}")
    cert = certify_three_eigenvalues(g)
    if cert is None:
        raise PreconditionsNotMet("graph does not have exactly three distinct eigenvalues")
    return check_extremal_conditions(g, cert)


def count_distinct_eigenvalues(g: Multigraph) -> int:
    return len(approx_spectrum(g, merge=1e-6))
