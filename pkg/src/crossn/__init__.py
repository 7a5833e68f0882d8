"""Exact-arithmetic cross products on R^n.

Builds the recursively generated orthonormal basis family and its
multiplication tables, exposes the concrete 3D/7D coordinate products, and
verifies which cross-product axioms (perpendicular, Pythagorean, bilinear)
hold in each dimension: a genuine cross product exists only for
n = 0, 1, 3 and 7.
"""

from .vecalg import (
    DOUBLE,
    EXACT,
    Scalar,
    Vector,
    cross3,
    cross7,
    det_product,
    dot,
    format_vector,
    padded_cross,
    parse_vector,
    table_product,
)
from .symbolic import (
    BasisWord,
    MulTable,
    RewriteStep,
    RewriteTrace,
    SignedBasis,
    build_basis,
    build_table,
    counterexample_vectors,
    normalize_product,
    normalize_product_traced,
    table_from_json,
    table_to_csv,
    table_to_json,
    table_to_markdown,
    word_to_index,
)
from .verify import (
    AxiomReport,
    DimensionVerdict,
    ProductUnderTest,
    Witness,
    check_bilinear,
    check_identities,
    check_perpendicular,
    check_pythagorean,
    classify_dimensions,
    cross3_product,
    cross7_product,
    expected_verdict,
    orthonormal_closure_check,
    padded_product,
    product_for_table,
    replay,
)

__version__ = "0.1.0"

__all__ = [
    "BasisWord",
    "AxiomReport",
    "DimensionVerdict",
    "DOUBLE",
    "EXACT",
    "MulTable",
    "ProductUnderTest",
    "RewriteStep",
    "RewriteTrace",
    "Scalar",
    "SignedBasis",
    "Vector",
    "Witness",
    "build_basis",
    "build_table",
    "check_bilinear",
    "check_identities",
    "check_perpendicular",
    "check_pythagorean",
    "classify_dimensions",
    "counterexample_vectors",
    "cross3",
    "cross3_product",
    "cross7",
    "cross7_product",
    "det_product",
    "dot",
    "expected_verdict",
    "format_vector",
    "normalize_product",
    "normalize_product_traced",
    "orthonormal_closure_check",
    "padded_cross",
    "padded_product",
    "parse_vector",
    "product_for_table",
    "replay",
    "table_from_json",
    "table_product",
    "table_to_csv",
    "table_to_json",
    "table_to_markdown",
    "word_to_index",
]
