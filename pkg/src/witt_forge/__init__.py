"""Exact computations with symmetric functions, big and p-typical Witt vectors,
and total positivity of power series."""

from .bigwitt import Domain, WittVector, member_W, member_WSch
from .partitions import CapacityError, Partition, partitions_of
from .ptypical import PTypGhost, PTypWitt
from .symfunc import (
    SymFunc,
    TensorSymFunc,
    Verdict,
    coproduct_add,
    coproduct_mul,
    d_operator,
    from_basis,
    is_monomial_positive,
    is_schur_positive,
    multiply,
    omega,
    parse_symfunc,
    plethysm,
    theta,
    to_basis_coeffs,
)
from .totalpos import TruncSeries, nonpositive_real_roots, toeplitz_minors_nonneg
from .verify import VerificationReport, run_paper_suite

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "Domain",
    "PTypGhost",
    "PTypWitt",
    "Partition",
    "SymFunc",
    "TensorSymFunc",
    "TruncSeries",
    "Verdict",
    "VerificationReport",
    "WittVector",
    "coproduct_add",
    "coproduct_mul",
    "d_operator",
    "from_basis",
    "is_monomial_positive",
    "is_schur_positive",
    "member_W",
    "member_WSch",
    "multiply",
    "nonpositive_real_roots",
    "omega",
    "parse_symfunc",
    "partitions_of",
    "plethysm",
    "run_paper_suite",
    "theta",
    "to_basis_coeffs",
    "toeplitz_minors_nonneg",
]
