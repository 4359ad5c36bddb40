"""Exact certification that log-concavity transfers from a symmetric
polynomial's gamma vector to the polynomial itself.

Everything here is exact: big integers, ``fractions.Fraction``, no floats.
The public surface mirrors the proof pipeline: basis transforms
(:mod:`polycore`), sequence predicates and the transfer check
(:mod:`concavity`), the quadratic-form coefficients with their diagonal sign
structure (:mod:`coefficients`), and the lattice-path certificate
(:mod:`paths`).
"""

from .coefficients import (
    AbelReport,
    CoeffTable,
    DiagonalSequence,
    SignQuadratic,
    abel_check,
    check_diagonal_factorization,
    coeff_table,
    diagonal,
    diagonal_sum,
    quad_coeff,
    quad_coeff_oracle,
    sign_quadratic,
)
from .concavity import (
    SequenceReport,
    TransferReport,
    UlcTransferReport,
    check_transfer,
    check_ulc_transfer,
    has_internal_zeros,
    is_log_concave,
    is_ultra_log_concave,
    is_unimodal,
    pairwise_log_concave,
)
from .errors import (
    DegenerateFactorError,
    EndpointError,
    GammaCertError,
    HypothesisError,
    InternalCheckError,
    NegativeEntryError,
    ParseError,
    PathCountExceededError,
    RangeError,
    SymmetryError,
)
from .paths import (
    Certificate,
    CrossingReport,
    DiagonalSegment,
    LatticePath,
    PathConfig,
    RotationBalanceReport,
    build_certificate,
    check_crossing_claim,
    check_rotation_balance,
    count_paths,
    enumerate_paths,
    lhs_by_formula,
    lhs_by_paths,
    rhs_by_formula,
    rhs_by_paths,
    rotate_180,
    segment_intersections,
)
from .polycore import (
    GammaVector,
    SymmetricPolynomial,
    basis_polynomial,
    binomial,
    gamma_to_h,
    gamma_vector,
    h_to_gamma,
    symmetric_polynomial,
)

__version__ = "0.1.0"

__all__ = [
    "AbelReport",
    "Certificate",
    "CoeffTable",
    "CrossingReport",
    "DegenerateFactorError",
    "DiagonalSegment",
    "DiagonalSequence",
    "EndpointError",
    "GammaCertError",
    "GammaVector",
    "HypothesisError",
    "InternalCheckError",
    "LatticePath",
    "NegativeEntryError",
    "ParseError",
    "PathConfig",
    "PathCountExceededError",
    "RangeError",
    "RotationBalanceReport",
    "SequenceReport",
    "SignQuadratic",
    "SymmetricPolynomial",
    "SymmetryError",
    "TransferReport",
    "UlcTransferReport",
    "abel_check",
    "basis_polynomial",
    "binomial",
    "build_certificate",
    "check_crossing_claim",
    "check_diagonal_factorization",
    "check_rotation_balance",
    "check_transfer",
    "check_ulc_transfer",
    "coeff_table",
    "count_paths",
    "diagonal",
    "diagonal_sum",
    "enumerate_paths",
    "gamma_to_h",
    "gamma_vector",
    "h_to_gamma",
    "has_internal_zeros",
    "is_log_concave",
    "is_ultra_log_concave",
    "is_unimodal",
    "lhs_by_formula",
    "lhs_by_paths",
    "pairwise_log_concave",
    "quad_coeff",
    "quad_coeff_oracle",
    "rhs_by_formula",
    "rhs_by_paths",
    "rotate_180",
    "segment_intersections",
    "sign_quadratic",
    "symmetric_polynomial",
]
