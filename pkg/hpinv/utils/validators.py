"""
Validation utilities module
Regex patterns and helpers for CLI inputs: parameter grids and family templates
"""

import re
from typing import List

from hpinv.algebra.gaussian import GaussianRational
from hpinv.errors import ParseError
from hpinv.expr_parser import parse_poly

# Regex patterns
GRID_VALUE_RGX = r"^[0-9i+\-*/.()\s]+$"
PARAM_RGX = r"(?<![A-Za-z0-9_])t(?![A-Za-z0-9_])"

# x^3 - 3 t^2 x y^(2d) + y^(3d): the family with continuous moduli
HP_PRESET = "x^3 - 3*t^2*x*y^{two_d} + y^{three_d}"


def is_template(s: str) -> bool:
    """
    Check that a family template mentions the parameter t

    Args:
        s: Germ expression with placeholder t

    Returns:
        True if t occurs as a standalone identifier
    """
    return bool(re.search(PARAM_RGX, s))


def instantiate(template: str, value: GaussianRational) -> str:
    """Substitute (value) for every standalone t"""
    return re.sub(PARAM_RGX, f"({value})", template)


def parse_grid_value(s: str) -> GaussianRational:
    """
    Parse one Gaussian-rational literal such as 2, -1/2, 1+i or 1/3-2/3 i

    Raises:
        ValueError: not a constant Gaussian rational
    """
    s = s.strip()
    if not re.match(GRID_VALUE_RGX, s):
        raise ValueError(f"invalid parameter value {s!r}")
    try:
        value = parse_poly(s)
    except ParseError as e:
        raise ValueError(f"invalid parameter value {s!r}: {e}")
    if not value.is_constant():
        raise ValueError(f"parameter value {s!r} is not a constant")
    return value.constant_term()


def parse_grid(s: str) -> List[GaussianRational]:
    """Comma-separated list of parameter values; duplicates are dropped"""
    values: List[GaussianRational] = []
    for item in s.split(","):
        if not item.strip():
            continue
        value = parse_grid_value(item)
        if value not in values:
            values.append(value)
    if not values:
        raise ValueError("empty parameter grid")
    return values


def box_grid(bound: int) -> List[GaussianRational]:
    """Gaussian integers a+bi with |a|, |b| <= bound"""
    if bound < 0:
        raise ValueError("box bound must be non-negative")
    return [
        GaussianRational(a, b)
        for a in range(-bound, bound + 1)
        for b in range(-bound, bound + 1)
    ]


def hp_template(d: int) -> str:
    """Template of the family x^3 - 3t^2 x y^(2d) + y^(3d)"""
    if d < 1:
        raise ValueError("d must be a positive integer")
    return HP_PRESET.format(two_d=2 * d, three_d=3 * d)
