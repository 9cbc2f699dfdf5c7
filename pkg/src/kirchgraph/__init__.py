"""Exact enumeration and tiling algebra for uniform Kirchhoff graphs."""

from kirchgraph.exactalg import (
    DegenerateShape,
    ParallelColumns,
    RankDeficient,
    RationalMatrix,
    RowSystem,
    RowSystemError,
    ZeroRowInC,
    build_row_system,
    enumerate_bounded_cuts,
    in_null_space,
    in_row_space,
    rref,
    span_rank,
)
from kirchgraph.vgraph import (
    EdgeInstance,
    KirchhoffVerdict,
    Multiplicity,
    VectorGraph,
)
from kirchgraph.enumerator import (
    Search,
    SearchConfig,
    SearchStats,
    cut_list,
    enumerate_kirchhoff,
    min_multiplicity,
)
from kirchgraph.tiling import (
    FamilyConstructionError,
    KirchhoffViolation,
    NoEmbeddingAtOffset,
    Placement,
    PrimalityVerdict,
    SpanResult,
    SystemMismatch,
    TilingError,
    TilingExpression,
    Vector2ConnectivityLost,
    add,
    build_infinite_prime_family,
    find_embeddings,
    fundamental_sets,
    is_prime,
    span_contains,
    subtract,
)
from kirchgraph.document import build_document, document_to_json, parse_document

__all__ = [
    "DegenerateShape",
    "EdgeInstance",
    "FamilyConstructionError",
    "KirchhoffVerdict",
    "KirchhoffViolation",
    "Multiplicity",
    "NoEmbeddingAtOffset",
    "ParallelColumns",
    "Placement",
    "PrimalityVerdict",
    "RankDeficient",
    "RationalMatrix",
    "RowSystem",
    "RowSystemError",
    "Search",
    "SearchConfig",
    "SearchStats",
    "SpanResult",
    "SystemMismatch",
    "TilingError",
    "TilingExpression",
    "Vector2ConnectivityLost",
    "VectorGraph",
    "ZeroRowInC",
    "add",
    "build_document",
    "build_infinite_prime_family",
    "build_row_system",
    "cut_list",
    "document_to_json",
    "enumerate_bounded_cuts",
    "enumerate_kirchhoff",
    "find_embeddings",
    "fundamental_sets",
    "in_null_space",
    "in_row_space",
    "is_prime",
    "min_multiplicity",
    "parse_document",
    "rref",
    "span_contains",
    "span_rank",
    "subtract",
]

__version__ = "0.1.0"
