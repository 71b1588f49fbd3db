"""The classical projective plane PG(2, q) and its orthogonal polarity graph.

Points and lines of PG(2, q) are both written as normalised triples; the line
``a`` is the set of points ``y`` with ``a . y = 0``.  Identifying each point
with the line it names (the polarity of the standard dot product) makes the
incidence matrix symmetric.  Read as an adjacency matrix it defines the
(q+1)-regular polarity graph G_q, whose loops are the absolute points.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import PreconditionsNotMet
from .field import FieldSpec, GFElement, field_of_order
from .multigraph import (
    Multigraph,
    bipartite_double,
    from_matrix,
    girth,
    is_connected,
    regularity,
)
from .spectral import Check, certify_three_eigenvalues


@dataclass(frozen=True)
class ProjectivePoint:
    coords: tuple[GFElement, GFElement, GFElement]

    @property
    def codes(self) -> tuple[int, int, int]:
        return tuple(c.code for c in self.coords)

    def __repr__(self):
        return f"P{self.codes}"


@dataclass(frozen=True)
class PlaneIncidence:
    q: int
    field: FieldSpec
    points: tuple[ProjectivePoint, ...]
    incidence: tuple[tuple[int, ...], ...]

    @property
    def absolute_points(self) -> list[int]:
        return [i for i in range(len(self.points)) if self.incidence[i][i]]

    def sidecar(self) -> dict:
        return {
            "q": self.q,
            "p": self.field.p,
            "e": self.field.e,
            "modulus": list(self.field.modulus),
            "absolute_points": self.absolute_points,
        }


def _as_field(field: FieldSpec | int) -> FieldSpec:
    return field_of_order(field) if isinstance(field, int) else field


def pg2_points(field: FieldSpec | int) -> list[ProjectivePoint]:
    """Normalised points in the order (1,a,b), (0,1,c), (0,0,1)."""
    f = _as_field(field)
    els = f.elements()
    zero, one = f.zero, f.one
    pts = [ProjectivePoint((one, a, b)) for a in els for b in els]
    pts += [ProjectivePoint((zero, one, c)) for c in els]
    pts.append(ProjectivePoint((zero, zero, one)))
    return pts


def plane_incidence(field: FieldSpec | int) -> PlaneIncidence:
    f = _as_field(field)
    add, mul = f.tables
    pts = pg2_points(f)
    codes = [pt.codes for pt in pts]

    def dot(x, y):
        return add[add[mul[x[0]][y[0]]][mul[x[1]][y[1]]]][mul[x[2]][y[2]]]

    rows = tuple(tuple(int(dot(x, y) == 0) for y in codes) for x in codes)
    return PlaneIncidence(f.q, f, tuple(pts), rows)


def polarity_graph(field: FieldSpec | int) -> Multigraph:
    return from_matrix(plane_incidence(field).incidence)


def incidence_graph(field: FieldSpec | int) -> Multigraph:
    """Point-line incidence graph of PG(2, q), lines labelled by their polar points."""
    return bipartite_double(polarity_graph(field))


def verify_plane_axioms(inc: PlaneIncidence | np.ndarray | list) -> bool:
    """Two points lie on exactly one common line and two lines meet in exactly one point."""
    m = np.array(inc.incidence if isinstance(inc, PlaneIncidence) else inc, dtype=np.int64)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or not np.isin(m, (0, 1)).all():
        return False
    n = m.shape[0]
    off = ~np.eye(n, dtype=bool)
    return bool(((m @ m.T)[off] == 1).all() and ((m.T @ m)[off] == 1).all())


@dataclass(frozen=True)
class PlaneRecognition:
    q: int
    checks: tuple[Check, ...]

    @property
    def recognized(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def verdict(self) -> str:
        if self.recognized:
            return (
                f"plane of order {self.q} recognized; the bipartite double is its "
                "incidence graph and the graph itself its polarity graph"
            )
        failed = ", ".join(c.condition for c in self.checks if not c.passed)
        return f"not recognized: {failed}"

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "recognized": self.recognized,
            "verdict": self.verdict,
            "checks": [c.to_json() for c in self.checks],
        }


def recognize_plane_from_double(g: Multigraph) -> PlaneRecognition:
    """Recover a projective plane with polarity from an extremal three-eigenvalue graph.

    The bipartite double of such a graph must be a simple bipartite graph of
    order 2(q^2+q+1) and girth 6, whose biadjacency block is then the
    incidence matrix of a plane of order q (symmetric, hence with a polarity).
    """
    k = regularity(g).regular_k
    if k is None or k < 2 or not is_connected(g):
        raise PreconditionsNotMet("need a connected k-regular graph with k >= 2")
    q = k - 1
    order = q * q + q + 1
    if g.n != order:
        raise PreconditionsNotMet(f"order {g.n} != q^2+q+1 = {order} for k = {k}")
    if certify_three_eigenvalues(g) is None:
        raise PreconditionsNotMet("graph does not have exactly three distinct eigenvalues")
    double = bipartite_double(g)
    checks = (
        Check("bipartite double is simple", double.is_simple),
        Check(f"bipartite double has order 2(q^2+q+1) = {2 * order}", double.n == 2 * order),
        Check("bipartite double has girth 6", girth(double) == 6),
        Check("biadjacency block satisfies the plane axioms", verify_plane_axioms(g.array)),
    )
    return PlaneRecognition(q, checks)
