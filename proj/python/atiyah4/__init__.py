"""Exact identities for the four-point Atiyah determinant, with a numeric cross-check."""

from ._atiyah4 import (
    CertificateError,
    atiyah_det,
    cayley_menger,
    check_certificate,
    check_eq52,
    check_perm_group,
    check_special_vectors,
    distance_vector,
    evaluate,
    evaluate_float,
    is_skew_symmetric,
    is_symmetric,
    polynomial_names,
    polynomial_text,
    run_cli,
    sample_config,
    solve_lp,
    verify,
)

__all__ = [
    "CertificateError",
    "atiyah_det",
    "cayley_menger",
    "check_certificate",
    "check_eq52",
    "check_perm_group",
    "check_special_vectors",
    "distance_vector",
    "evaluate",
    "evaluate_float",
    "is_skew_symmetric",
    "is_symmetric",
    "polynomial_names",
    "polynomial_text",
    "run_cli",
    "sample_config",
    "solve_lp",
    "verify",
]
