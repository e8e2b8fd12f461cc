"""
Germ normalization: order, initial form, mini-regularizing shear,
reducedness and the lines of the tangent cone
"""

import logging
from dataclasses import dataclass
from typing import List

from hpinv.algebra.coeffs import CoeffValue, format_coeff, is_exact, sort_key
from hpinv.algebra.poly import BivariatePoly, gcd_in_x, is_unit
from hpinv.algebra.univariate import UnivariatePoly, uni_roots
from hpinv.errors import NonvanishingAtOrigin, NotReduced, ZeroGerm

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TangentLine:
    """The line x = slope * y, counted ``multiplicity`` times in the cone"""

    slope: CoeffValue
    multiplicity: int

    def __str__(self) -> str:
        slope = self.slope
        if is_exact(slope):
            if slope.is_zero():
                return "x=0"
            if slope == 1:
                return "x=y"
            if slope == -1:
                return "x=-y"
            if slope.is_real():
                return f"x={slope}*y"
        return f"x=({format_coeff(slope)})*y"


@dataclass(frozen=True)
class GermProfile:
    """
    A germ in mini-regular coordinates

    ``f`` is the sheared germ f(x, y + shear * x); ``original`` the input.
    """

    f: BivariatePoly
    original: BivariatePoly
    k: int
    initial_form: BivariatePoly
    shear: int
    reduced: bool

    def cone_polynomial(self) -> UnivariatePoly:
        """H_k(z, 1)"""
        return UnivariatePoly(self.initial_form.dehomogenize())


def repeated_factor(f: BivariatePoly) -> BivariatePoly:
    """gcd(f, df/dx, df/dy); a unit exactly when f is squarefree"""
    common = gcd_in_x(f, f.derivative("x"))
    return gcd_in_x(common, f.derivative("y"))


def mini_regular_shear(initial_form: BivariatePoly) -> int:
    """Least s >= 0 with H_k(1, s) != 0"""
    k = initial_form.total_degree()
    for s in range(k + 1):
        if initial_form.evaluate(1, s):
            return s
    raise AssertionError("a nonzero form of degree k has at most k roots")


def analyze_germ(f: BivariatePoly, strict: bool = True) -> GermProfile:
    """
    Order, initial form and mini-regular coordinates of a germ

    Args:
        f: Polynomial germ with f(0, 0) = 0
        strict: Raise NotReduced for germs with a repeated factor

    Returns:
        GermProfile of the (possibly sheared) germ

    Raises:
        ZeroGerm: f is identically zero
        NonvanishingAtOrigin: f(0, 0) != 0
        NotReduced: strict and f has a repeated factor
    """
    if f.is_zero():
        raise ZeroGerm("the zero polynomial is not a reduced germ")
    if f.constant_term():
        raise NonvanishingAtOrigin(f"f(0,0) = {f.constant_term()}")

    k = f.order()
    shear = mini_regular_shear(f.homogeneous_part(k))
    sheared = f if shear == 0 else f.linear_substitute(1, 0, shear, 1)
    if shear:
        logger.info(f"Applied shear y -> y + {shear}*x to reach mini-regular coordinates")

    profile = GermProfile(
        f=sheared,
        original=f,
        k=k,
        initial_form=sheared.homogeneous_part(k),
        shear=shear,
        reduced=is_unit(repeated_factor(sheared)),
    )
    logger.info(f"Germ profile: order {k}, shear {shear}, reduced {profile.reduced}")
    if strict:
        require_reduced(profile)
    return profile


def require_reduced(profile: GermProfile) -> None:
    """Raise NotReduced, quoting the repeated factor, for a non-reduced germ"""
    if not profile.reduced:
        from hpinv.expr_parser import format_poly

        raise NotReduced(format_poly(repeated_factor(profile.original)))


def tangent_cone_lines(profile: GermProfile) -> List[TangentLine]:
    """Factor H_k = c * prod (x - a_i y)^m_i; multiplicities add up to k"""
    lines = [TangentLine(root, mult) for root, mult in uni_roots(profile.cone_polynomial())]
    lines.sort(key=lambda line: sort_key(line.slope))
    return lines


def singular_cone_lines(profile: GermProfile) -> List[TangentLine]:
    """Lines of Sing(C_0): the repeated lines of the tangent cone"""
    return [line for line in tangent_cone_lines(profile) if line.multiplicity >= 2]


def cone_is_squarefree(profile: GermProfile) -> bool:
    """True when the tangent cone is k distinct lines"""
    return bool(profile.cone_polynomial().to_sympy().is_sqf)
