import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from spectra.errors import AsymmetricMatrix, MalformedInput, NegativeEntry, NotRegular, UnknownName
from spectra.multigraph import (
    bipartite_double,
    builtin,
    degree_shift,
    disjoint_union,
    from_matrix,
    girth,
    is_connected,
    path,
    permute,
    regularity,
    walk_count,
)


@st.composite
def multigraphs(draw, max_n=6, max_entry=2):
    n = draw(st.integers(1, max_n))
    adj = [[0] * n for _ in range(n)]
    for u in range(n):
        for v in range(u, n):
            adj[u][v] = adj[v][u] = draw(st.integers(0, max_entry))
    return from_matrix(adj)


def test_from_matrix_examples():
    g = from_matrix([[0, 1], [1, 0]])
    assert g.n == 2 and g.is_simple
    h = from_matrix([[1, 1], [1, 1]])
    assert h.loops == [1, 1]
    assert regularity(h).regular_k == 2
    with pytest.raises(AsymmetricMatrix):
        from_matrix([[0, 2], [1, 0]])


def test_from_matrix_rejects_bad_entries():
    with pytest.raises(NegativeEntry):
        from_matrix([[0, -1], [-1, 0]])
    with pytest.raises(MalformedInput):
        from_matrix([[0, 1]])
    with pytest.raises(MalformedInput):
        from_matrix([[0.5]])


def test_regularity(c5, g2):
    assert regularity(c5).regular_k == 2
    assert regularity(g2).regular_k == 3
    p3 = regularity(path(3))
    assert p3.regular_k is None
    assert list(p3.degrees) == [1, 2, 1]


def test_connectivity(c5, g2):
    triangle = builtin("cycle", 3)
    assert is_connected(c5)
    assert is_connected(g2)
    assert not is_connected(disjoint_union(triangle, triangle))


def test_girth_examples(g2, double_edge, petersen, c6):
    assert girth(from_matrix([[0, 1, 0], [1, 1, 1], [0, 1, 0]])) == 1
    assert girth(double_edge) == 2
    assert girth(bipartite_double(g2)) == 6
    assert girth(petersen) == 5
    assert girth(c6) == 6
    assert girth(path(4)) == math.inf


def test_walk_count_examples(c5, loop_vertex):
    assert walk_count(c5, 2, 2, 0) == 1
    assert walk_count(c5, 0, 1, 1) == 1
    assert walk_count(loop_vertex, 0, 0, 2) == 1


@given(multigraphs(max_n=5), st.integers(0, 3), st.integers(0, 3))
def test_walk_counts_compose(g, i, j):
    for u in range(g.n):
        for v in range(g.n):
            total = sum(walk_count(g, u, w, i) * walk_count(g, w, v, j) for w in range(g.n))
            assert walk_count(g, u, v, i + j) == total


def test_bipartite_double_examples(loop_vertex, c5, g2):
    assert bipartite_double(loop_vertex).adj == ((0, 1), (1, 0))
    d = bipartite_double(g2)
    assert d.n == 14 and d.is_simple
    c10 = bipartite_double(c5)
    assert regularity(c10).regular_k == 2
    assert is_connected(c10) and girth(c10) == 10


def test_degree_shift(petersen, c5):
    shifted = degree_shift(petersen, 1)
    assert regularity(shifted).regular_k == 4 and shifted.n == 10
    assert degree_shift(c5, 0) == c5
    s2 = degree_shift(c5, 2)
    assert regularity(s2).regular_k == 4
    assert s2.loops == [2] * 5
    with pytest.raises(NotRegular):
        degree_shift(path(3), 1)


def test_builtins():
    c5 = builtin("cycle(5)")
    assert c5 == builtin("cycle", 5)
    assert regularity(c5).regular_k == 2
    p = builtin("petersen")
    assert p.n == 10 and regularity(p).regular_k == 3
    k4 = builtin("complete", 4)
    assert k4.n == 4 and regularity(k4).regular_k == 3
    with pytest.raises(UnknownName):
        builtin("heawood")


def test_small_cycles_are_two_regular():
    assert builtin("cycle", 1).adj == ((2,),)
    assert builtin("cycle", 2).adj == ((0, 2), (2, 0))


@given(multigraphs(), st.randoms(use_true_random=False))
def test_permute_preserves_invariants(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = permute(g, perm)
    assert sorted(h.degrees) == sorted(g.degrees)
    assert h.trace == g.trace
    assert is_connected(h) == is_connected(g)
    assert girth(h) == girth(g)


def test_array_is_read_only(c5):
    with pytest.raises(ValueError):
        c5.array[0, 0] = 1
    assert np.array_equal(c5.array, np.array(c5.adj))
