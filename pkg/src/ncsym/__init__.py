"""Exact verification engine for noncommutative symmetric algebras of
bimodules over division rings: Euler-complex exactness, zero-divisor
cancellation, Gorenstein Ext concentration, local-cohomology dimensions,
and the Hilbert-function comparison with Zhang-algebra projective lines.
"""

__version__ = "0.1.0"

from .fields import GF, QQ, GroundField
from .algebra import (
    DivisionAlgebra,
    ReducibleMinpoly,
    ZeroDivisorDetected,
    alg_inv,
    alg_mul,
    base_field_algebra,
    make_extension_field,
)
from .bimodule import (
    ActionMismatch,
    Bimodule,
    NotFree,
    canonical_q,
    check_forbidden_type,
    check_two_periodic,
    dual_basis_pair,
    double_dual_map,
    extension_as_bimodule,
    extract_basis,
    iterated_dual,
    left_dual,
    regular_bimodule,
    right_dual,
    tensor_over_division_ring,
    tensor_square_bimodule,
    vector_space_bimodule,
)

__all__ = [
    "GF",
    "QQ",
    "GroundField",
    "DivisionAlgebra",
    "ReducibleMinpoly",
    "ZeroDivisorDetected",
    "alg_inv",
    "alg_mul",
    "base_field_algebra",
    "make_extension_field",
    "ActionMismatch",
    "Bimodule",
    "NotFree",
    "canonical_q",
    "check_forbidden_type",
    "check_two_periodic",
    "dual_basis_pair",
    "double_dual_map",
    "extension_as_bimodule",
    "extract_basis",
    "iterated_dual",
    "left_dual",
    "regular_bimodule",
    "right_dual",
    "tensor_over_division_ring",
    "tensor_square_bimodule",
    "vector_space_bimodule",
]
