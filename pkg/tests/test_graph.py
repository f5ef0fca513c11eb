import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from structholes import (
    DuplicateEdgeError,
    NonFiniteWeightError,
    NotBinaryUndirectedError,
    SelfLoopError,
    binarize,
    build_graph,
    degree_vector,
    hadamard,
    row_sums,
    spmm,
    symmetrize,
)
from _graphs import binary_sweep, complete

FIG1_A = np.array(
    [
        [0, 1, 0, 0, 1, 1, 1],
        [1, 0, 0, 1, 0, 0, 1],
        [0, 0, 0, 0, 0, 0, 1],
        [0, 1, 0, 0, 0, 0, 1],
        [1, 0, 0, 0, 0, 0, 1],
        [1, 0, 0, 0, 0, 0, 1],
        [1, 1, 1, 1, 1, 1, 0],
    ],
    dtype=float,
)

FIG1_A2 = np.array(
    [
        [4, 1, 1, 2, 1, 1, 3],
        [1, 3, 1, 1, 2, 2, 2],
        [1, 1, 1, 1, 1, 1, 0],
        [2, 1, 1, 2, 1, 1, 1],
        [1, 2, 1, 1, 2, 2, 1],
        [1, 2, 1, 1, 2, 2, 1],
        [3, 2, 0, 1, 1, 1, 6],
    ],
    dtype=float,
)


def common_neighbors(adj, i, j):
    return sum(1 for k in range(len(adj)) if adj[i][k] and adj[k][j])


def test_single_edge_symmetric():
    g = build_graph([("A", "B", 1)], weighted=False)
    assert g.n == 2
    assert g.adjacency.get(0, 1) == g.adjacency.get(1, 0) == 1.0
    assert g.n_edges == 1


def test_fig1_adjacency(fig1_graph):
    assert fig1_graph.labels == tuple("ABCDEFG")
    assert fig1_graph.n_edges == 10
    np.testing.assert_array_equal(fig1_graph.adjacency.to_dense(), FIG1_A)


def test_fig1_degree_and_square(fig1_graph):
    d = degree_vector(fig1_graph)
    assert list(d) == [4, 3, 1, 2, 2, 2, 6]
    a = fig1_graph.adjacency
    a2 = spmm(a, a)
    np.testing.assert_array_equal(a2.to_dense(), FIG1_A2)
    np.testing.assert_array_equal(a2.diagonal(), d)
    assert list(row_sums(a)) == [4, 3, 1, 2, 2, 2, 6]


def test_fig1_masked_common_neighbor_sums(fig1_graph):
    a = fig1_graph.adjacency
    brute = [sum(common_neighbors(FIG1_A, i, j) for j in range(7) if FIG1_A[i, j]) for i in range(7)]
    assert brute == [6, 4, 0, 2, 2, 2, 8]
    assert list(row_sums(hadamard(spmm(a, a), a))) == brute


@pytest.mark.parametrize(
    "edges, kwargs, error",
    [
        ([("A", "A", 1)], {}, SelfLoopError),
        ([("A", "B"), ("B", "A")], {}, DuplicateEdgeError),
        ([("A", "B"), ("A", "B")], {"directed": True}, DuplicateEdgeError),
        ([("A", "B", float("nan"))], {}, NonFiniteWeightError),
        ([("A", "B", float("inf"))], {}, NonFiniteWeightError),
    ],
)
def test_build_graph_errors(edges, kwargs, error):
    with pytest.raises(error):
        build_graph(edges, **kwargs)


def test_error_carries_line():
    with pytest.raises(SelfLoopError, match="line 7"):
        build_graph([("A", "B"), ("C", "C")], lines=[3, 7])


def test_directed_reciprocal_arcs_allowed():
    g = build_graph([("A", "B"), ("B", "A"), ("B", "C")], directed=True)
    assert g.n_edges == 3
    assert g.adjacency.get(2, 1) == 0.0


def test_isolated_node_declared():
    g = build_graph([], nodes=["solo"])
    assert g.n == 1
    assert list(degree_vector(g)) == [0]


def test_binarize():
    g = build_graph([("a", "b", 2.5), ("b", "c", -1.0), ("c", "d", 0.0)])
    b = binarize(g)
    assert not b.weighted
    assert b.adjacency.get(0, 1) == b.adjacency.get(1, 2) == 1.0
    assert b.adjacency.get(2, 3) == 0.0
    assert binarize(b) == b
    empty = build_graph([], nodes=["x", "y"], weighted=True)
    assert binarize(empty).adjacency.nnz == 0


def test_symmetrize_takes_max():
    g = build_graph([("a", "b", 2.0), ("b", "a", 5.0), ("b", "c", 1.5)], directed=True)
    s = symmetrize(g)
    assert not s.directed
    assert s.adjacency.get(0, 1) == s.adjacency.get(1, 0) == 5.0
    assert s.adjacency.get(2, 1) == 1.5


def test_degree_vector_requires_binary_undirected():
    with pytest.raises(NotBinaryUndirectedError):
        degree_vector(build_graph([("a", "b", 2.0)]))
    with pytest.raises(NotBinaryUndirectedError):
        degree_vector(build_graph([("a", "b")], directed=True))
    assert list(degree_vector(complete(4))) == [3, 3, 3, 3]


def test_square_counts_common_neighbors_and_degrees():
    for _, g in binary_sweep(seed=5)[::7]:
        if g.n > 30:
            continue
        adj = g.adjacency.to_dense()
        a2 = spmm(g.adjacency, g.adjacency).to_dense()
        for i, j in itertools.product(range(g.n), repeat=2):
            assert a2[i, j] == common_neighbors(adj, i, j)
        assert np.array_equal(np.diag(a2), degree_vector(g))


@given(st.lists(st.tuples(st.integers(0, 8), st.integers(0, 8), st.floats(-5, 5)), max_size=25))
@settings(max_examples=80, deadline=None)
def test_binarize_idempotent(raw):
    seen, edges = set(), []
    for u, v, w in raw:
        key = (min(u, v), max(u, v))
        if u != v and key not in seen:
            seen.add(key)
            edges.append((str(u), str(v), w))
    g = build_graph(edges, weighted=True)
    once = binarize(g)
    assert binarize(once) == once
    assert set(once.adjacency.csr.data) <= {1.0}
