"""Order bounds for regular multigraphs with few distinct eigenvalues.

Every bound returns a :class:`BoundReport`.  A failed hypothesis is recorded
in the report rather than raised, and ``value`` is only meaningful when all
hypotheses pass.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NotPrimePower
from .exact import QuadraticSurd, as_fraction, exact_sign, frac_str
from .fbasis import FBasisExpansion
from .field import prime_power
from .multigraph import Multigraph
from .spectral import Check, SrgParams

MOORE_DEGREES = (2, 3, 7, 57)


class BruckRyser(str, enum.Enum):
    INFEASIBLE = "infeasible"
    PASSES = "passes"
    NOT_APPLICABLE = "not_applicable"


class Existence(str, enum.Enum):
    EXISTS = "exists"
    NONEXISTENT = "nonexistent"
    UNKNOWN = "unknown"


@dataclass
class BoundReport:
    name: str
    value: object
    hypotheses: list[Check] = field(default_factory=list)
    inputs: dict = field(default_factory=dict)
    verdict: str | None = None

    @property
    def ok(self) -> bool:
        return all(h.passed for h in self.hypotheses)

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "value": _value_str(self.value),
            "hypotheses": [h.to_json() for h in self.hypotheses],
            "inputs": {k: _jsonable(v) for k, v in self.inputs.items()},
        }
        if self.verdict is not None:
            out["verdict"] = self.verdict
        return out


def _value_str(v) -> str | None:
    if v is None:
        return None
    if isinstance(v, enum.Enum):
        return v.value
    if isinstance(v, (int, Fraction)):
        return frac_str(v)
    return str(v)


def _jsonable(v):
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, QuadraticSurd):
        return v.to_json()
    if isinstance(v, Fraction):
        return frac_str(v)
    if isinstance(v, enum.Enum):
        return v.value
    return v


def k_i(k: int, i: int) -> int:
    """Number of non-backtracking walks of length i leaving a vertex."""
    return 1 if i == 0 else k * (k - 1) ** (i - 1)


def moore_bound(k: int, d: int) -> int:
    if k < 2 or d < 1:
        raise ValueError("moore bound needs k >= 2 and d >= 1")
    return 1 + k * sum((k - 1) ** i for i in range(d))


def lp_bound_verify(k: int, eigenvalues: Iterable, f: FBasisExpansion) -> BoundReport:
    """Check the hypotheses of the linear-programming bound ``n <= f(k)/f_0``.

    ``eigenvalues`` are the non-trivial distinct eigenvalues, each an int,
    Fraction or QuadraticSurd; all comparisons are exact.
    """
    eigs = list(eigenvalues)
    coeffs = list(f.coeffs)
    hyps = [Check(f"f is expanded over F^({k})", f.k == k)]
    hyps.append(Check("eigenvalues exclude k", all(e != k for e in eigs)))
    hyps.append(Check("f_0 > 0", bool(coeffs) and coeffs[0] > 0))
    hyps.extend(Check(f"f_{i} >= 0", c >= 0) for i, c in enumerate(coeffs) if i >= 1)
    fk = f(Fraction(k))
    hyps.append(Check("f(k) > 0", fk > 0))
    for e in eigs:
        hyps.append(Check(f"f({e}) <= 0", exact_sign(f(e)) <= 0))
    ok = all(h.passed for h in hyps)
    return BoundReport(
        "lp",
        fk / coeffs[0] if ok else None,
        hyps,
        {"k": k, "eigenvalues": eigs, "f": list(coeffs)},
    )


def harmonic_bound(k: int, f: FBasisExpansion, graph: Multigraph | None = None) -> BoundReport:
    """``n <= sum of k_i over indices with f_i > 0``, valid when F(A) is entrywise positive.

    Positivity of F(A) depends on the graph; it is checked when ``graph`` is
    given and otherwise recorded as asserted by the caller.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    value = sum(k_i(k, i) for i, c in enumerate(f.coeffs) if c > 0)
    hyps = [Check(f"f is expanded over F^({k})", f.k == k)]
    if graph is None:
        hyps.append(Check("F(A) is entrywise positive (caller-asserted)", True))
    else:
        m = f.evaluate_matrix(graph)
        hyps.append(Check("F(A) is entrywise positive", all(x > 0 for x in m.flat)))
    return BoundReport("harmonic", value, hyps, {"k": k, "f": list(f.coeffs)})


def three_ev_bound(k: int) -> BoundReport:
    if k < 2:
        raise ValueError("k must be >= 2")
    q = k - 1
    if k not in MOORE_DEGREES:
        return BoundReport(
            "three_ev",
            q * q + q + 1,
            [Check("k not in {2,3,7,57}", True)],
            {"k": k, "q": q},
        )
    existence = known_nonexistence("moore_graph", k)
    hyps = [Check("k in {2,3,7,57}: order bounded by the diameter-2 Moore bound k^2+1", True)]
    verdict = "unknown existence" if existence is Existence.UNKNOWN else "moore graph exists"
    return BoundReport("three_ev", moore_bound(k, 2), hyps, {"k": k, "q": q}, verdict)


def srg_identity(params: SrgParams) -> BoundReport:
    n, k, lam, mu = params.n, params.k, params.lam, params.mu
    inputs = {"n": n, "k": k, "lambda": lam, "mu": mu}
    if mu < 1:
        return BoundReport("srg_identity", None, [Check("mu >= 1", False)], inputs)
    rhs = k + 1 + Fraction(k * k - lam * k - k, mu)
    hyps = [Check("mu >= 1", True), Check("n = k+1+(k^2-lambda*k-k)/mu", n == rhs)]
    verdict = None
    if mu >= 2 and k >= 3:
        q = k - 1
        mid = Fraction(k * k, 2) + Fraction(k, 2) + 1
        hyps.append(Check("n <= k^2/2+k/2+1", n <= mid))
        hyps.append(Check("k^2/2+k/2+1 <= q^2+q+1", mid <= q * q + q + 1))
        if n == q * q + q + 1:
            verdict = "chain attains q^2+q+1, equality case (n,k)=(7,3)" if (n, k) == (7, 3) \
                else "chain attains q^2+q+1"
    return BoundReport("srg_identity", rhs, hyps, inputs, verdict)


def sum_of_two_squares(q: int) -> bool:
    return any(math.isqrt(q - a * a) ** 2 == q - a * a for a in range(math.isqrt(q) + 1))


def bruck_ryser(q: int) -> BruckRyser:
    if q < 2:
        raise ValueError("plane order must be >= 2")
    if q % 4 not in (1, 2):
        return BruckRyser.NOT_APPLICABLE
    return BruckRyser.PASSES if sum_of_two_squares(q) else BruckRyser.INFEASIBLE


def bruck_ryser_report(q: int) -> BoundReport:
    v = bruck_ryser(q)
    hyps = [Check("q = 1 or 2 (mod 4)", q % 4 in (1, 2))]
    if v is not BruckRyser.NOT_APPLICABLE:
        hyps.append(Check("q is a sum of two squares", v is BruckRyser.PASSES))
    return BoundReport("bruck_ryser", v, hyps, {"q": q}, v.value)


def known_nonexistence(kind: str, param: int) -> Existence:
    """Literature facts: diameter-2 Moore graphs of degree k, projective planes of order q."""
    if kind == "moore_graph":
        if param in (2, 3, 7):
            return Existence.EXISTS
        if param == 57:
            return Existence.UNKNOWN
        return Existence.NONEXISTENT
    if kind == "plane":
        if param < 2:
            raise ValueError("plane order must be >= 2")
        try:
            prime_power(param)
            return Existence.EXISTS
        except NotPrimePower:
            pass
        if param == 10 or bruck_ryser(param) is BruckRyser.INFEASIBLE:
            return Existence.NONEXISTENT
        return Existence.UNKNOWN
    raise ValueError(f"unknown kind {kind!r}")


def f_from_coeffs(k: int, coeffs: Sequence) -> FBasisExpansion:
    return FBasisExpansion(k, tuple(as_fraction(c) for c in coeffs))
