"""Difference-operator calculus for polynomial-like functions on groups.

The package provides concrete groups with canonical normal forms, the
difference operator D_h f = f(.h) - f, finite-surface membership checks
for the mixed (polynomial) and single-step (semipolynomial) vanishing
conditions, exact invariant-subspace computations for rational matrix
representations, the classic counterexample constructions, and
generator-set (Montel-type) verifications.  See README.md for a tour.
"""

from .functions import (
    CheckReport,
    GroupFunction,
    Witness,
    check_polynomial,
    check_semipolynomial,
    constant_function,
    delta,
    estimate_degree,
    iterated_delta,
    polynomial_function,
    star,
    table_function,
    verify_delta_identities,
)
from .groups import (
    CyclicFinite,
    FreeProdZZ2,
    FreeWordGroup,
    GLFloat,
    Group,
    GroupError,
    HeisenbergRational,
    IntDirectSum,
    IntVector,
    RationalAdditive,
    group_from_name,
    power,
)
from .linalg import Subspace
from .reps import (
    MatrixRep,
    NilpotencyClassification,
    OperatorAlgebra,
    RepresentationError,
    classify_nilpotency,
    delta_algebra,
    fixed_subspace,
    invariance_check,
    p_subspace,
    sp_subspace,
    verify_anticommutation,
    verify_sp_equals_p,
)
from .constructions import (
    AlphaSequence,
    builtin_function,
    freeproduct_counterexample,
    gl_polynomial_demo,
    heisenberg_function,
    infgen_counterexample,
    rational_fit_check,
    triangular_polynomial_demo,
    triangular_sample,
)
from .montel import (
    MontelResult,
    bounded_montel_check,
    degree_from_generator_orders,
    finite_order_fixed_check,
    montel_polynomial_check,
)
from .quasipoly import certify_degree_via_rep, growth_probe, matrix_element, orbit_rank

__version__ = "0.1.0"

__all__ = [
    "CheckReport",
    "GroupFunction",
    "Witness",
    "check_polynomial",
    "check_semipolynomial",
    "constant_function",
    "delta",
    "estimate_degree",
    "iterated_delta",
    "polynomial_function",
    "star",
    "table_function",
    "verify_delta_identities",
    "CyclicFinite",
    "FreeProdZZ2",
    "FreeWordGroup",
    "GLFloat",
    "Group",
    "GroupError",
    "HeisenbergRational",
    "IntDirectSum",
    "IntVector",
    "RationalAdditive",
    "group_from_name",
    "power",
    "Subspace",
    "MatrixRep",
    "NilpotencyClassification",
    "OperatorAlgebra",
    "RepresentationError",
    "classify_nilpotency",
    "delta_algebra",
    "fixed_subspace",
    "invariance_check",
    "p_subspace",
    "sp_subspace",
    "verify_anticommutation",
    "verify_sp_equals_p",
    "AlphaSequence",
    "builtin_function",
    "freeproduct_counterexample",
    "gl_polynomial_demo",
    "heisenberg_function",
    "infgen_counterexample",
    "rational_fit_check",
    "triangular_polynomial_demo",
    "triangular_sample",
    "MontelResult",
    "bounded_montel_check",
    "degree_from_generator_orders",
    "finite_order_fixed_check",
    "montel_polynomial_check",
    "orbit_rank",
    "growth_probe",
    "matrix_element",
    "certify_degree_via_rep",
]
