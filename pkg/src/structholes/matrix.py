"""Structural-hole measures computed with sparse matrix algebra.

Redundancy and effective size come from common-neighbour counts on
linked pairs, ``(A^2 * A) 1``. Local constraint uses the normalized
mutual weights ``P = Diag(1 / x) (A + A^T)`` and
``L = [P + (A * P) P] ** 2`` (entry-wise), and constraint is the
masked row sum of ``L``.
"""

from __future__ import annotations

import logging

import numpy as np

from . import sparse as sm
from .errors import NotBinaryUndirectedError, ZeroDenominatorError
from .graph import Graph, binarize
from .report import (
    PAPER,
    LocalConstraintMatrix,
    MeasureReport,
    MutualWeightMatrix,
    check_variant,
)

__all__ = [
    "common_neighbor_counts",
    "redundancy",
    "effective_size",
    "mutual_weights",
    "local_constraint",
    "constraint",
]

log = logging.getLogger(__name__)

NEGATIVE_WEIGHT_WARNING = "negative weights: mutual weights are not guaranteed to be normalized or non-negative"


def _require_binary_undirected(g: Graph, measure: str):
    if not g.is_binary_undirected:
        kind = " and ".join(k for k, on in (("directed", g.directed), ("weighted", g.weighted)) if on)
        raise NotBinaryUndirectedError(f"{measure} is defined for binary undirected graphs only; got a {kind} graph")


def common_neighbor_counts(g: Graph, threads: int = 1) -> tuple[np.ndarray, np.ndarray]:
    """Degrees ``d = A 1`` and per-node sums ``(A^2 * A) 1``.

    The second vector counts, for every linked pair ``(i, j)``, the common
    neighbours of ``i`` and ``j``, summed over ``j``; it equals twice the
    number of ties among ``i``'s neighbours.
    """
    _require_binary_undirected(g, "redundancy")
    a = g.adjacency
    d = sm.row_sums(a)
    a2 = sm.spmm(a, a, threads=threads)
    return d, sm.row_sums(sm.hadamard(a2, a))


def _redundancy_vector(g, threads):
    d, shared = common_neighbor_counts(g, threads)
    r = np.full(g.n, np.nan)
    linked = d > 0
    r[linked] = shared[linked] / d[linked]
    return d, r


def redundancy(g: Graph, threads: int = 1) -> MeasureReport:
    _require_binary_undirected(g, "redundancy")
    _, r = _redundancy_vector(g, threads)
    return MeasureReport("redundancy", g.labels, r)


def effective_size(g: Graph, threads: int = 1) -> MeasureReport:
    """``s = d - r``; NaN for isolated nodes."""
    _require_binary_undirected(g, "effective-size")
    d, r = _redundancy_vector(g, threads)
    return MeasureReport("effective-size", g.labels, d - r)


def mutual_weights(g: Graph) -> MutualWeightMatrix:
    a = g.adjacency
    s = sm.add(a, sm.transpose(a))
    x = sm.row_sums(s)
    b = binarize(g).adjacency
    isolated = sm.row_sums(sm.add(b, sm.transpose(b))) == 0
    bad = np.flatnonzero((x == 0) & ~isolated)
    if bad.size:
        raise ZeroDenominatorError(g.labels[i] for i in bad)
    y = np.zeros(g.n)
    nz = x != 0
    y[nz] = 1.0 / x[nz]
    warnings = ()
    if g.has_negative_weights:
        log.warning(NEGATIVE_WEIGHT_WARNING)
        warnings = (NEGATIVE_WEIGHT_WARNING,)
    return MutualWeightMatrix(sm.diag_scale(y, s), x, y, isolated, warnings)


def _indirect(p: sm.SparseMatrix, mask: sm.SparseMatrix, variant: str, threads: int) -> sm.SparseMatrix:
    if variant == PAPER:
        # sum over k in N(i) of p_ik p_kj
        return sm.spmm(sm.hadamard(mask, p), p, threads=threads)
    # sum over k with a_kj != 0 of p_ik p_kj
    return sm.spmm(p, sm.hadamard(p, mask), threads=threads)


def local_constraint(g: Graph, variant: str = PAPER, threads: int = 1) -> LocalConstraintMatrix:
    """Local constraint matrix ``L``.

    The mask in the indirect term is the binarized adjacency, also for
    weighted graphs. ``L`` is stored on the support of ``P`` plus the pairs
    joined by one intermediary.
    """
    check_variant(variant)
    mw = mutual_weights(g)
    mask = binarize(g).adjacency
    t = sm.add(mw.p, _indirect(mw.p, mask, variant, threads))
    return LocalConstraintMatrix(sm.hadamard(t, t), mask, g.labels, variant, mw.warnings)


def constraint(g: Graph, variant: str = PAPER, threads: int = 1) -> MeasureReport:
    """``c_i = sum_j l_ij a_ij`` over the binarized adjacency; NaN for isolated nodes."""
    lc = local_constraint(g, variant, threads)
    c = sm.row_sums(sm.hadamard(lc.l, lc.mask))
    b = lc.mask
    isolated = sm.row_sums(sm.add(b, sm.transpose(b))) == 0
    c[isolated] = np.nan
    return MeasureReport("constraint", g.labels, c, variant, lc.warnings)
