from __future__ import annotations

import pytest

from spectra.bounds import three_ev_bound
from spectra.geometry import polarity_graph
from spectra.multigraph import Multigraph, builtin, from_matrix
from spectra.spectral import ThreeEigCertificate, certify_three_eigenvalues


def check_order_bounds(g: Multigraph, cert: ThreeEigCertificate) -> None:
    """Order bounds every three-eigenvalue graph must obey.

    * tau1 + tau2 >= 0 forces n <= q^2+q+1 (q = k-1);
    * in general n <= three_ev_bound(k).
    """
    k, q = cert.k, cert.k - 1
    assert cert.n == g.n
    if cert.tau_sum >= 0:
        assert g.n <= q * q + q + 1, f"nonnegative tau sum but n={g.n} > q^2+q+1 for k={k}"
    if k >= 2:
        assert g.n <= three_ev_bound(k).value, f"n={g.n} exceeds the three-eigenvalue bound for k={k}"


def certify_checked(g: Multigraph) -> ThreeEigCertificate | None:
    cert = certify_three_eigenvalues(g)
    if cert is not None:
        check_order_bounds(g, cert)
    return cert


@pytest.fixture
def certify():
    """``certify(g)``: certificate or None, with the order bounds asserted on every hit."""
    return certify_checked


@pytest.fixture(scope="session")
def g2() -> Multigraph:
    return polarity_graph(2)


@pytest.fixture(scope="session")
def g3() -> Multigraph:
    return polarity_graph(3)


@pytest.fixture(scope="session")
def g4() -> Multigraph:
    return polarity_graph(4)


@pytest.fixture(scope="session")
def c5() -> Multigraph:
    return builtin("cycle", 5)


@pytest.fixture(scope="session")
def c6() -> Multigraph:
    return builtin("cycle", 6)


@pytest.fixture(scope="session")
def petersen() -> Multigraph:
    return builtin("petersen")


@pytest.fixture(scope="session")
def double_edge() -> Multigraph:
    return from_matrix([[0, 2], [2, 0]])


@pytest.fixture(scope="session")
def loop_vertex() -> Multigraph:
    return from_matrix([[1]])
