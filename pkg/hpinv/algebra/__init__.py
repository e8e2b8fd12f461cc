"""
Exact and certified arithmetic used throughout hpinv
"""

from hpinv.algebra.balls import BallComplex
from hpinv.algebra.coeffs import CoeffValue, coeffs_equal, compare_coeffs, is_exact, zero_status
from hpinv.algebra.gaussian import GaussianRational
from hpinv.algebra.number_field import common_field, is_algebraic
from hpinv.algebra.poly import (
    BivariatePoly,
    gcd_in_x,
    homogeneous_part,
    order,
    poly_add,
    poly_derivative,
    poly_mul,
)
from hpinv.algebra.precision import retry_with_precision
from hpinv.algebra.series import PuiseuxSeries, XSeriesPoly, shift_expand, substitute_arc
from hpinv.algebra.univariate import UnivariatePoly, uni_roots

__all__ = [
    "BallComplex",
    "BivariatePoly",
    "CoeffValue",
    "GaussianRational",
    "PuiseuxSeries",
    "UnivariatePoly",
    "XSeriesPoly",
    "coeffs_equal",
    "common_field",
    "compare_coeffs",
    "gcd_in_x",
    "homogeneous_part",
    "is_algebraic",
    "is_exact",
    "order",
    "poly_add",
    "poly_derivative",
    "poly_mul",
    "retry_with_precision",
    "shift_expand",
    "substitute_arc",
    "uni_roots",
    "zero_status",
]
