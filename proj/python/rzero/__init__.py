"""Riemann's auxiliary function R(s): evaluation, zero counting and location."""

from ._rzero import (
    Certificate,
    CountResult,
    Evaluation,
    RzeroError,
    Zero,
    chi,
    count_zeros,
    eta,
    fraction_right,
    locate_zeros,
    main_term,
    r_eval,
    r_value,
    zeta_from_r,
    zeta_reference,
)

__all__ = [
    "Certificate",
    "CountResult",
    "Evaluation",
    "RzeroError",
    "Zero",
    "chi",
    "count_zeros",
    "eta",
    "fraction_right",
    "locate_zeros",
    "main_term",
    "r_eval",
    "r_value",
    "zeta_from_r",
    "zeta_reference",
]
