"""Abstract Fock space: straightening, bar involution, canonical bases and
the symmetric-function action, backed by a C++ core."""

from ._core import (
    FockSpace,
    FuelExhausted,
    InconsistencyError,
    LaurentPoly,
    NonInvariantError,
    PreconditionError,
    RootSystem,
    affine_graded_character,
    casselman_shalika_check,
    frobenius_check,
    gh_coefficients,
    gh_identity_check,
    llt_coefficient,
    mod_t_cancellation_check,
    steinberg_product,
    verify_linkage_rho,
    verify_steinberg,
    whittaker_avatar,
)

__all__ = [
    "FockSpace",
    "FuelExhausted",
    "InconsistencyError",
    "LaurentPoly",
    "NonInvariantError",
    "PreconditionError",
    "RootSystem",
    "affine_graded_character",
    "casselman_shalika_check",
    "frobenius_check",
    "gh_coefficients",
    "gh_identity_check",
    "llt_coefficient",
    "mod_t_cancellation_check",
    "steinberg_product",
    "verify_linkage_rho",
    "verify_steinberg",
    "whittaker_avatar",
]
