"""Explicit lower bounds for linear forms in exponentials.

All functions return plain dicts. Interval values are ``[lo, hi]`` decimal
strings rounded outward; complex enclosures are ``{mid_re, mid_im, rad}``.
"""

from ._core import (
    DEFAULT_PRECISION,
    SCHEMA,
    DomainError,
    FieldError,
    a_hat,
    b_hat,
    bound,
    check,
    compare_prior,
    constants,
    example,
    pade_build,
    siegel_solve,
    z_of,
)

__all__ = [
    "DEFAULT_PRECISION",
    "SCHEMA",
    "DomainError",
    "FieldError",
    "a_hat",
    "b_hat",
    "bound",
    "check",
    "compare_prior",
    "constants",
    "example",
    "pade_build",
    "siegel_solve",
    "z_of",
]


def midpoint(value):
    """Midpoint of an ``[lo, hi]`` interval pair as a float."""
    lo, hi = value
    return (float(lo) + float(hi)) / 2
