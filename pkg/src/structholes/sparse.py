"""Compressed-row sparse matrices and the few primitives the measures need.

Storage is delegated to ``scipy.sparse.csr_array``; this module pins down
the invariants (sorted column indices, no explicit zeros) and the
accumulation order of products so results are bit-reproducible.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np
import scipy.sparse as sp

from .errors import DimensionMismatchError

__all__ = [
    "SparseMatrix",
    "spmm",
    "hadamard",
    "row_sums",
    "diag_scale",
    "add",
    "transpose",
]


def _canonical(m: sp.csr_array) -> sp.csr_array:
    m = sp.csr_array(m, dtype=np.float64)
    m.sum_duplicates()
    m.eliminate_zeros()
    m.sort_indices()
    return m


class SparseMatrix:
    """Immutable real matrix in CSR layout.

    Column indices are strictly increasing within a row and no stored
    value is zero.
    """

    __slots__ = ("_m",)

    def __init__(self, m):
        if not sp.issparse(m):
            m = sp.csr_array(np.asarray(m, dtype=np.float64))
        self._m = _canonical(m)
        self._m.data.flags.writeable = False

    @classmethod
    def from_triplets(cls, rows, cols, values, shape) -> SparseMatrix:
        """Build from coordinate triplets; repeated coordinates are summed."""
        m = sp.coo_array(
            (np.asarray(values, dtype=np.float64), (np.asarray(rows, dtype=np.int64), np.asarray(cols, dtype=np.int64))),
            shape=shape,
        )
        return cls(m.tocsr())

    @classmethod
    def identity(cls, n: int) -> SparseMatrix:
        return cls(sp.identity(n, format="csr"))

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> SparseMatrix:
        return cls(sp.csr_array((n_rows, n_cols)))

    @property
    def shape(self) -> tuple[int, int]:
        return self._m.shape

    @property
    def n_rows(self) -> int:
        return self._m.shape[0]

    @property
    def n_cols(self) -> int:
        return self._m.shape[1]

    @property
    def nnz(self) -> int:
        return self._m.nnz

    @property
    def csr(self) -> sp.csr_array:
        """The underlying scipy array. Do not mutate."""
        return self._m

    def row(self, i: int) -> tuple[np.ndarray, np.ndarray]:
        """Column indices and values of row ``i``."""
        lo, hi = self._m.indptr[i], self._m.indptr[i + 1]
        return self._m.indices[lo:hi], self._m.data[lo:hi]

    def entries(self):
        """Yield ``(row, col, value)`` in row-major order."""
        m = self._m
        for i in range(m.shape[0]):
            for k in range(m.indptr[i], m.indptr[i + 1]):
                yield i, int(m.indices[k]), float(m.data[k])

    def get(self, i: int, j: int) -> float:
        cols, vals = self.row(i)
        k = np.searchsorted(cols, j)
        if k < len(cols) and cols[k] == j:
            return float(vals[k])
        return 0.0

    def diagonal(self) -> np.ndarray:
        return self._m.diagonal()

    def to_dense(self) -> np.ndarray:
        return self._m.toarray()

    def map_values(self, fn) -> SparseMatrix:
        """Apply ``fn`` to the stored values (zeros stay zero)."""
        m = self._m.copy()
        m.data = fn(m.data)
        return SparseMatrix(m)

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        a, b = self._m, other._m
        return (
            a.shape == b.shape
            and np.array_equal(a.indptr, b.indptr)
            and np.array_equal(a.indices, b.indices)
            and np.array_equal(a.data, b.data)
        )

    __hash__ = None

    def __repr__(self):
        return f"SparseMatrix(shape={self.shape}, nnz={self.nnz})"


def _check_same_shape(a: SparseMatrix, b: SparseMatrix, op: str):
    if a.shape != b.shape:
        raise DimensionMismatchError(f"{op}: shapes {a.shape} and {b.shape} differ")


def spmm(a: SparseMatrix, b: SparseMatrix, threads: int = 1) -> SparseMatrix:
    """Matrix product ``a @ b``.

    Each output row accumulates its terms in ascending order of the inner
    index, so the result does not depend on ``threads``; with
    ``threads > 1`` row blocks are computed concurrently and stacked.
    """
    if a.n_cols != b.n_rows:
        raise DimensionMismatchError(f"spmm: cannot multiply {a.shape} by {b.shape}")
    am, bm = a.csr, b.csr
    n = am.shape[0]
    if threads <= 1 or n < 2 * threads:
        return SparseMatrix(am @ bm)
    bounds = np.linspace(0, n, threads + 1).astype(int)
    blocks = [(int(lo), int(hi)) for lo, hi in zip(bounds[:-1], bounds[1:])]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(lambda lh: am[lh[0] : lh[1]] @ bm, blocks))
    return SparseMatrix(sp.vstack(parts, format="csr"))


def hadamard(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    """Entry-wise product; the support is the intersection of supports."""
    _check_same_shape(a, b, "hadamard")
    return SparseMatrix(a.csr.multiply(b.csr))


def add(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    _check_same_shape(a, b, "add")
    return SparseMatrix(a.csr + b.csr)


def transpose(a: SparseMatrix) -> SparseMatrix:
    return SparseMatrix(a.csr.T.tocsr())


def row_sums(a: SparseMatrix) -> np.ndarray:
    """``a @ 1`` as a dense vector, each row summed left to right."""
    m = a.csr
    rows = np.repeat(np.arange(m.shape[0]), np.diff(m.indptr))
    return np.bincount(rows, weights=m.data, minlength=m.shape[0]).astype(np.float64)


def diag_scale(y, a: SparseMatrix) -> SparseMatrix:
    """``Diag(y) @ a``: row ``i`` of ``a`` multiplied by ``y[i]``."""
    y = np.asarray(y, dtype=np.float64)
    if y.shape != (a.n_rows,):
        raise DimensionMismatchError(f"diag_scale: vector of length {y.shape} for {a.n_rows} rows")
    m = a.csr.copy()
    m.data = m.data * np.repeat(y, np.diff(m.indptr))
    return SparseMatrix(m)
