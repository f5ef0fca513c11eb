"""Burt's structural-hole measures (redundancy, effective size, local
constraint, constraint) computed with sparse matrix products, with
loop-based reference implementations for validation."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    DimensionMismatchError,
    DuplicateEdgeError,
    InputError,
    InvalidSpecError,
    MeasureDomainError,
    NonFiniteWeightError,
    NotBinaryUndirectedError,
    ParseError,
    SelfLoopError,
    StructHolesError,
    UnsupportedFormatError,
    ZeroDenominatorError,
)
from .graph import Graph, binarize, build_graph, coerce_binary_undirected, degree_vector, symmetrize  # noqa: E402
from .matrix import constraint, effective_size, local_constraint, mutual_weights, redundancy  # noqa: E402
from .oracle import (  # noqa: E402
    oracle_constraint,
    oracle_effective_size,
    oracle_local_constraint,
    oracle_redundancy,
)
from .report import NEIGHBORS_OF_J, PAPER, LocalConstraintMatrix, MeasureReport, MutualWeightMatrix  # noqa: E402
from .sparse import SparseMatrix, diag_scale, hadamard, row_sums, spmm  # noqa: E402
