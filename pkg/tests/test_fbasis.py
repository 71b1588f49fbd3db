from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spectra.errors import SizeCapExceeded
from spectra.exact import QuadraticSurd
from spectra.fbasis import (
    FBasisExpansion,
    edge_instances,
    expand_in_f_basis,
    f_eval_matrix,
    f_eval_scalar,
    f_poly,
    nb_walk_oracle,
    verify_nb_theorem,
)
from spectra.multigraph import builtin, from_matrix

small_fracs = st.fractions(max_denominator=12).filter(lambda x: abs(x) < 100)


@pytest.mark.parametrize("k", [2, 3, 5])
def test_low_degree_polynomials(k):
    assert f_poly(k, 0).monomial_coeffs == (1,)
    assert f_poly(k, 1).monomial_coeffs == (0, 1)
    assert f_poly(k, 2).monomial_coeffs == (-k, 0, 1)
    assert f_poly(k, 3).monomial_coeffs == (0, -(2 * k - 1), 0, 1)


@pytest.mark.parametrize("k", [2, 3, 4, 7])
def test_value_at_k_counts_non_backtracking_walks(k):
    for i in range(1, 9):
        assert f_eval_scalar(k, i, k) == k * (k - 1) ** (i - 1)
        assert f_poly(k, i)(Fraction(k)) == k * (k - 1) ** (i - 1)


def test_scalar_examples():
    assert f_eval_scalar(3, 4, 3) == 24
    assert f_eval_scalar(5, 1, Fraction(7, 3)) == Fraction(7, 3)
    assert f_eval_scalar(3, 2, 2**0.5) == pytest.approx(-1.0)
    assert f_eval_scalar(3, 2, QuadraticSurd.sqrt(2)) == -1


def test_matrix_examples(g2, c5):
    assert np.array_equal(f_eval_matrix(g2, 2), np.ones((7, 7), dtype=int) - np.eye(7, dtype=int))
    assert np.array_equal(f_eval_matrix(c5, 0), np.eye(5, dtype=int))
    dist2 = np.array([[1 if min((u - v) % 5, (v - u) % 5) == 2 else 0 for v in range(5)] for u in range(5)])
    assert np.array_equal(f_eval_matrix(c5, 2), dist2)


def test_edge_instances(double_edge, g2):
    assert edge_instances(double_edge) == [(0, 1), (0, 1)]
    assert len(edge_instances(g2)) == (7 * 3 + 3) // 2


def test_oracle_examples(loop_vertex, double_edge):
    assert nb_walk_oracle(loop_vertex, 1).tolist() == [[1]]
    assert nb_walk_oracle(loop_vertex, 2).tolist() == [[0]]
    # one 2-cycle through the two parallel instances, walked in either direction
    assert nb_walk_oracle(double_edge, 2).tolist() == [[2, 0], [0, 2]]


def test_walk_identity_examples(c5, g2, double_edge, petersen):
    assert verify_nb_theorem(c5, 6)
    assert verify_nb_theorem(g2, 5)
    assert verify_nb_theorem(double_edge, 4)
    assert verify_nb_theorem(petersen, 5)
    assert verify_nb_theorem(from_matrix([[2, 1], [1, 2]]), 6)


def test_oracle_refuses_huge_enumerations(petersen):
    with pytest.raises(SizeCapExceeded):
        nb_walk_oracle(petersen, 20)


def test_expansion_examples():
    for q in (2, 3, 4, 9):
        assert expand_in_f_basis([-q, 0, 1], q + 1).coeffs == (1, 0, 1)
    assert expand_in_f_basis([1], 3).coeffs == (1,)
    # (x - t1)(x - t2) with t1 + t2 = -1, t1 t2 = -2 (Petersen) and k = 3
    assert expand_in_f_basis([-2, 1, 1], 3).coeffs == (1, 1, 1)


@given(st.integers(2, 8), st.lists(small_fracs, min_size=1, max_size=7))
def test_expansion_round_trip(k, poly):
    exp = expand_in_f_basis(poly, k)
    mono = list(exp.to_monomial())
    trimmed = list(poly)
    while len(trimmed) > 1 and trimmed[-1] == 0:
        trimmed.pop()
    assert mono + [0] * (len(trimmed) - len(mono)) == trimmed + [0] * (len(mono) - len(trimmed))


@given(st.integers(2, 8), st.lists(small_fracs, min_size=1, max_size=6), small_fracs)
def test_expansion_evaluates_like_the_polynomial(k, poly, x):
    exp = expand_in_f_basis(poly, k)
    assert exp(x) == sum(c * x**j for j, c in enumerate(poly))


@settings(max_examples=30, deadline=None)
@given(st.integers(3, 7), st.integers(0, 2))
def test_walk_identity_on_shifted_cycles(n, t):
    from spectra.multigraph import degree_shift

    assert verify_nb_theorem(degree_shift(builtin("cycle", n), t), 4)


def test_expansion_matrix_matches_sum(g2):
    f = FBasisExpansion(3, (1, 0, 1))
    m = f.evaluate_matrix(g2)
    assert (m == np.ones((7, 7), dtype=int)).all()
