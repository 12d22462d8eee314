"""Exact truncated q-series and the identity catalogue."""

from .poly import VARIABLES, ParamPolynomial
from .series import Series, geometric_factor, inverse_pochhammer, pochhammer, q_binomial

__all__ = [
    "VARIABLES",
    "ParamPolynomial",
    "Series",
    "geometric_factor",
    "inverse_pochhammer",
    "pochhammer",
    "q_binomial",
]
