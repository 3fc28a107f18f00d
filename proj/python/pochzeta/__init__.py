"""Pochhammer-polynomial expansions of zeta-related functions.

Numeric arguments may be Python numbers (taken at their binary value) or
strings such as "0.1", "i" or "1+2i" (parsed exactly). Results are returned as
Python floats and complex numbers; ``run_cli`` gives full-precision CSV/JSON.
"""

from ._pochzeta import (
    CapacityError,
    DomainError,
    Error,
    ParseError,
    PoleError,
    PrecisionError,
    bundled_zeros,
    coefficients,
    dhat_primes,
    dhat_zeros,
    eta_factor,
    first_primes,
    gamma,
    log_zeta_deriv,
    pochhammer,
    psi1,
    psi2,
    run_cli,
    series,
    sweep,
    zeta,
)

__all__ = [
    "CapacityError",
    "DomainError",
    "Error",
    "ParseError",
    "PoleError",
    "PrecisionError",
    "bundled_zeros",
    "coefficients",
    "dhat_primes",
    "dhat_zeros",
    "eta_factor",
    "first_primes",
    "gamma",
    "log_zeta_deriv",
    "pochhammer",
    "psi1",
    "psi2",
    "run_cli",
    "series",
    "sweep",
    "zeta",
]
