"""Result containers shared by the matrix and oracle implementations."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .sparse import SparseMatrix

PAPER = "paper"
NEIGHBORS_OF_J = "neighbors-of-j"
VARIANTS = (PAPER, NEIGHBORS_OF_J)

MEASURES = ("redundancy", "effective-size", "local-constraint", "constraint")


def check_variant(variant: str) -> str:
    if variant not in VARIANTS:
        raise ValueError(f"unknown local-constraint variant {variant!r}; expected one of {VARIANTS}")
    return variant


@dataclass(frozen=True, eq=False)
class MeasureReport:
    """Per-node (or per-edge) values of one measure.

    ``keys`` are node labels, or ``(src, dst)`` label pairs for per-edge
    measures. Undefined values (isolated nodes) are stored as NaN.
    """

    measure: str
    keys: tuple
    values: np.ndarray
    variant: str | None = None
    warnings: tuple = ()

    @property
    def per_edge(self) -> bool:
        return bool(self.keys) and isinstance(self.keys[0], tuple)

    @property
    def defined(self) -> np.ndarray:
        return ~np.isnan(self.values)

    def __len__(self):
        return len(self.keys)

    def __getitem__(self, key):
        """Value for a label (or label pair); ``None`` when undefined."""
        v = self.values[self.keys.index(key)]
        return None if np.isnan(v) else float(v)

    def as_dict(self) -> dict:
        return {k: (None if np.isnan(v) else float(v)) for k, v in zip(self.keys, self.values)}


@dataclass(frozen=True, eq=False)
class MutualWeightMatrix:
    """Normalized mutual weights ``p_ij`` with their row denominators.

    ``x`` holds the total mutual weight of every node and ``y`` its
    reciprocal (0 where ``x`` is 0). ``isolated`` flags nodes with no arc
    in either direction; their rows of ``p`` are empty.
    """

    p: SparseMatrix
    x: np.ndarray
    y: np.ndarray
    isolated: np.ndarray
    warnings: tuple = ()


@dataclass(frozen=True, eq=False)
class LocalConstraintMatrix:
    """Local (dyadic) constraints ``l_ij``.

    ``mask`` is the binarized adjacency; only its support is reported by
    :meth:`on_edges`. The diagonal is never reported.
    """

    l: SparseMatrix
    mask: SparseMatrix
    labels: tuple
    variant: str
    warnings: tuple = ()

    def value(self, i: int, j: int) -> float:
        return self.l.get(i, j)

    def on_edges(self) -> MeasureReport:
        keys, vals = [], []
        for i, j, _ in self.mask.entries():
            keys.append((self.labels[i], self.labels[j]))
            vals.append(self.l.get(i, j))
        return MeasureReport("local-constraint", tuple(keys), np.array(vals, dtype=np.float64), self.variant, self.warnings)

    def full(self) -> MeasureReport:
        """Every ordered pair ``i != j``, zeros included."""
        dense = self.l.to_dense()
        n = len(self.labels)
        keys, vals = [], []
        for i in range(n):
            for j in range(n):
                if i != j:
                    keys.append((self.labels[i], self.labels[j]))
                    vals.append(dense[i, j])
        return MeasureReport("local-constraint", tuple(keys), np.array(vals, dtype=np.float64), self.variant, self.warnings)
