"""
Exact arithmetic for coefficients outside Q(i)

A ball tagged with its irreducible factor over Q(i) names one algebraic
number. Finitely many such numbers are embedded in a single sympy number
field Q(theta) that also contains i, where products, quotients, powers and
equality are exact.
"""

import logging
from fractions import Fraction
from typing import Any, List, Sequence, Tuple

import mpmath
import sympy
from mpmath import mp
from sympy import QQ, primitive_element

from hpinv.algebra.balls import BallComplex
from hpinv.algebra.coeffs import CoeffValue, is_exact
from hpinv.algebra.gaussian import GaussianRational
from hpinv.algebra.univariate import Z, UnivariatePoly
from hpinv.errors import IndeterminateComparison

logger = logging.getLogger(__name__)

# Extra decimal digits requested from sympy when locating a root
_EXTRA_DIGITS = 10


def is_algebraic(value: CoeffValue) -> bool:
    """Exact, or a ball isolating a root of a known factor"""
    return is_exact(value) or value.minpoly is not None


def rational_norm(minpoly: Tuple[GaussianRational, ...]) -> sympy.Poly:
    """
    Polynomial over Q whose roots contain those of an irreducible factor over Q(i):
    the factor itself when its coefficients are real, else factor * conjugate
    """
    factor = UnivariatePoly(minpoly)
    norm = factor.to_sympy()
    if not all(c.is_real() for c in minpoly):
        conjugate = UnivariatePoly([c.conjugate() for c in minpoly])
        norm = norm * conjugate.to_sympy()
    return sympy.Poly(norm.as_expr(), Z, domain=QQ)


def _to_mpc(value) -> mpmath.mpc:
    re, im = value.as_real_imag()
    return mpmath.mpc(mpmath.mpf(str(re)), mpmath.mpf(str(im)))


def root_of(ball: BallComplex) -> sympy.Expr:
    """
    The sympy CRootOf isolated by a tagged ball

    Raises:
        ValueError: the ball carries no factor
        IndeterminateComparison: the ball still meets a conjugate root
    """
    if ball.minpoly is None:
        raise ValueError(f"{ball} is not tagged with a defining factor")
    norm = rational_norm(ball.minpoly)
    digits = mp.dps + _EXTRA_DIGITS
    slack = mpmath.mpf(10) ** (_EXTRA_DIGITS // 2 - digits)
    hits = []
    for root in norm.all_roots(radicals=False):
        value = _to_mpc(root.evalf(digits))
        if abs(value - ball.mid) <= ball.rad + slack * (1 + abs(value)):
            hits.append(root)
    if len(hits) != 1:
        raise IndeterminateComparison(f"{ball} meets {len(hits)} roots of {norm.as_expr()}")
    return hits[0]


def _qq(value: Fraction):
    return QQ(value.numerator, value.denominator)


def common_field(values: Sequence[CoeffValue]) -> Tuple[Any, List[Any]]:
    """
    Embed exact and tagged coefficients in one number field

    Returns:
        (one, elements): the unit of the field and one element per value,
        supporting exact *, /, ** and == (and hashing)

    Raises:
        ValueError: a ball carries no factor
        IndeterminateComparison: a ball cannot be told from a conjugate root yet
    """
    generators: List[sympy.Expr] = [sympy.I]
    index: List[int] = []
    for value in values:
        if is_exact(value):
            index.append(-1)
            continue
        root = root_of(value)
        if root not in generators:
            generators.append(root)
        index.append(generators.index(root))

    minpoly, combination, reps = primitive_element(generators, ex=True, polys=True)
    theta = sum(c * g for c, g in zip(combination, generators))
    field = QQ.algebraic_field((minpoly, theta))
    gens = [field.new(rep) for rep in reps]
    logger.debug(f"{len(generators)} generators embedded in a field of degree {minpoly.degree()}")

    elements = []
    for value, k in zip(values, index):
        if k < 0:
            elements.append(field.one * _qq(value.re) + gens[0] * _qq(value.im))
        else:
            elements.append(gens[k])
    return field.one, elements
