"""Graph container and construction helpers."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DuplicateEdgeError,
    InputError,
    NonFiniteWeightError,
    NotBinaryUndirectedError,
    SelfLoopError,
)
from .sparse import SparseMatrix, row_sums

__all__ = [
    "Graph",
    "build_graph",
    "binarize",
    "symmetrize",
    "coerce_binary_undirected",
    "degree_vector",
]


@dataclass(frozen=True, eq=False)
class Graph:
    """Labelled graph backed by its adjacency matrix ``A = (a_ij)``.

    Nodes are indexed ``0..n-1`` in the order of ``labels``. Undirected
    graphs store both ``a_ij`` and ``a_ji``.
    """

    labels: tuple
    adjacency: SparseMatrix
    directed: bool = False
    weighted: bool = False
    index: dict = field(init=False, repr=False)

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        n = len(labels)
        index = {lab: i for i, lab in enumerate(labels)}
        if len(index) != n:
            raise InputError("duplicate node labels")
        object.__setattr__(self, "index", index)
        a = self.adjacency
        if a.shape != (n, n):
            raise InputError(f"adjacency shape {a.shape} does not match {n} labels")
        if np.any(a.diagonal() != 0):
            i = int(np.flatnonzero(a.diagonal())[0])
            raise SelfLoopError(f"self-loop at node {labels[i]!r}")
        data = a.csr.data
        if not np.all(np.isfinite(data)):
            raise NonFiniteWeightError("non-finite weight in adjacency")
        if not self.weighted and np.any(data != 1.0):
            raise InputError("binary graph with a weight other than 1")
        if not self.directed and not a == SparseMatrix(a.csr.T):
            raise InputError("undirected graph with asymmetric adjacency")

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def n_edges(self) -> int:
        """Stored arcs for directed graphs, unordered pairs otherwise."""
        nnz = self.adjacency.nnz
        return nnz if self.directed else nnz // 2

    @property
    def is_binary_undirected(self) -> bool:
        return not self.directed and not self.weighted

    @property
    def has_negative_weights(self) -> bool:
        return bool(np.any(self.adjacency.csr.data < 0))

    def edges(self):
        """Yield ``(src_label, dst_label, weight)``; each undirected edge once."""
        for i, j, w in self.adjacency.entries():
            if self.directed or i < j:
                yield self.labels[i], self.labels[j], w

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.labels == other.labels
            and self.directed == other.directed
            and self.weighted == other.weighted
            and self.adjacency == other.adjacency
        )

    __hash__ = None


def build_graph(edge_list, directed=False, weighted=None, nodes=(), lines=None) -> Graph:
    """Build a :class:`Graph` from ``(src, dst[, weight])`` tuples.

    Labels get indices in order of first appearance, ``nodes`` first (this
    is also how isolated nodes are declared). ``weighted=None`` infers a
    weighted graph when any tuple carries a weight. ``lines``, if given,
    holds a source line number per edge for error messages.

    Zero weights introduce their endpoints but store no edge.
    """
    edge_list = list(edge_list)
    if weighted is None:
        weighted = any(len(e) > 2 for e in edge_list)
    index: dict[str, int] = {}

    def idx(label):
        label = str(label)
        if label not in index:
            index[label] = len(index)
        return index[label]

    for v in nodes:
        idx(v)
    rows, cols, vals = [], [], []
    seen = set()
    for pos, e in enumerate(edge_list):
        line = lines[pos] if lines is not None else None
        if len(e) == 2:
            src, dst = e
            w = 1.0
        elif len(e) == 3:
            src, dst, w = e
            w = float(w)
        else:
            raise InputError(f"edge must have 2 or 3 fields, got {len(e)}", line)
        if str(src) == str(dst):
            raise SelfLoopError(f"self-loop at node {str(src)!r}", line)
        if not math.isfinite(w):
            raise NonFiniteWeightError(f"non-finite weight {w!r} on edge {src!r}-{dst!r}", line)
        if not weighted and w != 1.0:
            raise InputError(f"weight {w!r} in a binary graph", line)
        i, j = idx(src), idx(dst)
        key = (i, j) if directed else (min(i, j), max(i, j))
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {str(src)!r}-{str(dst)!r}", line)
        seen.add(key)
        if w == 0.0:
            continue
        rows.append(i)
        cols.append(j)
        vals.append(w)
        if not directed:
            rows.append(j)
            cols.append(i)
            vals.append(w)
    n = len(index)
    adj = SparseMatrix.from_triplets(rows, cols, vals, (n, n))
    return Graph(tuple(index), adj, directed=directed, weighted=weighted)


def binarize(g: Graph) -> Graph:
    """Replace every nonzero weight by 1 (same directedness)."""
    if not g.weighted:
        return g
    return Graph(g.labels, g.adjacency.map_values(np.ones_like), directed=g.directed, weighted=False)


def symmetrize(g: Graph) -> Graph:
    """Undirected graph with weight ``max(a_ij, a_ji)`` over the arcs present."""
    if not g.directed:
        return g
    best: dict[tuple[int, int], float] = {}
    for i, j, w in g.adjacency.entries():
        key = (min(i, j), max(i, j))
        best[key] = max(w, best[key]) if key in best else w
    rows = [k[0] for k in best] + [k[1] for k in best]
    cols = [k[1] for k in best] + [k[0] for k in best]
    vals = list(best.values()) * 2
    adj = SparseMatrix.from_triplets(rows, cols, vals, (g.n, g.n))
    return Graph(g.labels, adj, directed=False, weighted=g.weighted)


def coerce_binary_undirected(g: Graph) -> Graph:
    return symmetrize(binarize(g))


def degree_vector(g: Graph) -> np.ndarray:
    """``d = A 1`` for a binary undirected graph."""
    if not g.is_binary_undirected:
        raise NotBinaryUndirectedError("degree vector requires a binary undirected graph")
    return row_sums(g.adjacency)
