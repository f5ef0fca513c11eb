"""Definition-based reference implementations.

Everything here loops over neighbour lists exactly as the measures are
defined and shares no arithmetic with :mod:`structholes.matrix`. These
functions are the ground truth in tests and the naive baseline in
benchmarks, so keep them simple rather than fast.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import NotBinaryUndirectedError, ZeroDenominatorError
from .graph import Graph
from .report import PAPER, LocalConstraintMatrix, MeasureReport, check_variant
from .sparse import SparseMatrix

__all__ = [
    "NeighborLists",
    "oracle_redundancy",
    "oracle_effective_size",
    "oracle_local_constraint",
    "oracle_constraint",
]


class NeighborLists:
    """Out- and in-neighbours of every node with their weights."""

    def __init__(self, g: Graph):
        self.n = g.n
        self.out = [dict() for _ in range(g.n)]
        self.inn = [dict() for _ in range(g.n)]
        for i, j, w in g.adjacency.entries():
            self.out[i][j] = w
            self.inn[j][i] = w

    def weight(self, i, j):
        return self.out[i].get(j, 0.0)

    def is_isolated(self, i):
        return not self.out[i] and not self.inn[i]


def _check_binary_undirected(g, measure):
    if g.directed or g.weighted:
        raise NotBinaryUndirectedError(f"{measure} is defined for binary undirected graphs only")


def oracle_redundancy(g: Graph) -> MeasureReport:
    """``r_i = 2 t_i / d_i`` with ``t_i`` the ties among i's neighbours."""
    _check_binary_undirected(g, "redundancy")
    nl = NeighborLists(g)
    values = []
    for i in range(g.n):
        nbrs = list(nl.out[i])
        d = len(nbrs)
        if d == 0:
            values.append(math.nan)
            continue
        ties = 0
        for a in range(d):
            for b in range(a + 1, d):
                if nbrs[b] in nl.out[nbrs[a]]:
                    ties += 1
        values.append(2 * ties / d)
    return MeasureReport("redundancy", g.labels, np.array(values, dtype=np.float64))


def oracle_effective_size(g: Graph) -> MeasureReport:
    _check_binary_undirected(g, "effective-size")
    r = oracle_redundancy(g).values
    nl = NeighborLists(g)
    d = np.array([len(nl.out[i]) for i in range(g.n)], dtype=np.float64)
    return MeasureReport("effective-size", g.labels, d - r)


def _mutual_weight_fn(g: Graph, nl: NeighborLists):
    total = []
    bad = []
    for i in range(g.n):
        x = sum(nl.out[i].values()) + sum(nl.inn[i].values())
        if x == 0 and not nl.is_isolated(i):
            bad.append(g.labels[i])
        total.append(x)
    if bad:
        raise ZeroDenominatorError(bad)

    def p(i, j):
        if total[i] == 0:
            return 0.0
        return (nl.weight(i, j) + nl.weight(j, i)) / total[i]

    return p


def _local(i, j, p, nl, variant):
    if variant == PAPER:
        through = [k for k in nl.out[i] if k != j]
    else:
        through = list(nl.inn[j])
    return (p(i, j) + sum(p(i, k) * p(k, j) for k in through)) ** 2


def oracle_local_constraint(g: Graph, variant: str = PAPER, full: bool = False) -> LocalConstraintMatrix:
    """``l_ij = (p_ij + sum_k p_ik p_kj)^2`` for every arc ``i -> j``.

    ``k`` ranges over ``N(i) \\ {j}`` (out-neighbours of i) for the
    ``paper`` variant and over ``{k : a_kj != 0}`` for ``neighbors-of-j``.
    With ``full=True`` every ordered pair ``i != j`` is evaluated.
    """
    check_variant(variant)
    nl = NeighborLists(g)
    p = _mutual_weight_fn(g, nl)
    rows, cols, vals = [], [], []
    for i in range(g.n):
        targets = [j for j in range(g.n) if j != i] if full else list(nl.out[i])
        for j in targets:
            rows.append(i)
            cols.append(j)
            vals.append(_local(i, j, p, nl, variant))
    l = SparseMatrix.from_triplets(rows, cols, vals, (g.n, g.n))
    mask = SparseMatrix.from_triplets(
        [i for i in range(g.n) for _ in nl.out[i]],
        [j for i in range(g.n) for j in nl.out[i]],
        [1.0] * sum(len(o) for o in nl.out),
        (g.n, g.n),
    )
    return LocalConstraintMatrix(l, mask, g.labels, variant)


def oracle_constraint(g: Graph, variant: str = PAPER) -> MeasureReport:
    """``c_i = sum over j in N(i) of l_ij``; NaN for isolated nodes."""
    check_variant(variant)
    nl = NeighborLists(g)
    p = _mutual_weight_fn(g, nl)
    values = []
    for i in range(g.n):
        if nl.is_isolated(i):
            values.append(math.nan)
        else:
            values.append(sum(_local(i, j, p, nl, variant) for j in nl.out[i]))
    return MeasureReport("constraint", g.labels, np.array(values, dtype=np.float64), variant)
