"""
Arc-local expansion F(X, Y) = f(X + lambda(Y), Y) = sum X^i f_i(Y)
Orders h_i, the exponent xi, the weighted-homogeneous part Q, R(z) = Q(z, 1)
and the truncation certificate T > xi built from them
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from hpinv.algebra.balls import BallComplex
from hpinv.algebra.coeffs import CoeffValue, format_coeff, is_exact
from hpinv.algebra.gaussian import GaussianRational
from hpinv.algebra.poly import BivariatePoly
from hpinv.algebra.series import INFINITY, PuiseuxSeries, shift_expand
from hpinv.algebra.univariate import UnivariatePoly
from hpinv.config import INITIAL_TRUNCATION, MAX_REFINEMENTS, TRUNC_GUARD
from hpinv.errors import ArcInZeroSet, IndeterminateComparison, PrecisionExhausted
from hpinv.newton_puiseux import PuiseuxArc, expand_branches

logger = logging.getLogger(__name__)

Order = Union[Fraction, float]


@dataclass(frozen=True)
class WeightedHomogeneous:
    """
    Q(X, Y) = sum c_m X^m Y^(h_m) over m = 0 and every m achieving xi;
    weighted homogeneous of degree h_0 for the weights (xi, 1)
    """

    xi: Fraction
    degree: Fraction
    terms: Tuple[Tuple[int, Fraction, CoeffValue], ...]

    def __str__(self) -> str:
        text = ""
        for m, h, c in sorted(self.terms, key=lambda t: -t[0]):
            monomial = "*".join(p for p in (_power("X", m), _power("Y", h)) if p)
            if not is_exact(c) or not c.is_real():
                sign, body = "+", f"({format_coeff(c)})"
                body = f"{body}*{monomial}" if monomial else body
            else:
                sign = "-" if c.re < 0 else "+"
                magnitude = str(abs(c.re))
                if monomial:
                    body = monomial if magnitude == "1" else f"{magnitude}*{monomial}"
                else:
                    body = magnitude
            if not text:
                text = body if sign == "+" else f"-{body}"
            else:
                text += f" {sign} {body}"
        return text


def _power(var: str, e) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}" if Fraction(e).denominator == 1 else f"{var}^({e})"


@dataclass(frozen=True)
class ArcLocalData:
    f_i: Tuple[PuiseuxSeries, ...]
    h_i: Tuple[Order, ...]
    xi: Fraction
    Q: WeightedHomogeneous
    R: UnivariatePoly

    @property
    def h0(self) -> Fraction:
        return self.h_i[0]

    @property
    def c0(self) -> CoeffValue:
        """Leading coefficient of f along the arc; equals R(0)"""
        return self.R.coeffs[0]


def _tangent_of(arc) -> CoeffValue:
    if isinstance(arc, PuiseuxArc):
        return arc.tangent_coefficient
    return arc.coefficient(1)


def structural_zeros(f: BivariatePoly, arc, f_i: List[PuiseuxSeries]) -> List[PuiseuxSeries]:
    """
    Clear the y^(k-m) terms of f_m that vanish exactly

    Along an arc with tangent x = a*y that coefficient is the m-th Taylor
    coefficient of H_k(z, 1) at a. When a isolates a root of an exact
    factor q, it vanishes exactly when q divides that derivative.
    """
    a = _tangent_of(arc)
    if not isinstance(a, BallComplex) or a.minpoly is None:
        return f_i
    k = f.order()
    cone = UnivariatePoly(f.homogeneous_part(k).dehomogenize())
    factor = UnivariatePoly(a.minpoly)
    cleared = list(f_i)
    for m in range(min(k, len(cleared) - 1) + 1):
        if factor.divides(cone.derivative(m)):
            cleared[m] = cleared[m].drop(k - m)
    return cleared


def _leading_order(series: PuiseuxSeries, h0: Fraction) -> Order:
    order = series.certified_order()
    if order == INFINITY and series.truncation is not None and series.truncation <= h0:
        # unknown tail below h0; keep it in the maximum conservatively
        return series.truncation
    return order


def arc_local_data(f: BivariatePoly, arc, truncation=None) -> ArcLocalData:
    """
    Expand f around an arc and read off its leading asymptotics

    Args:
        f: The germ
        arc: PuiseuxArc or PuiseuxSeries lambda(y)
        truncation: Cut every f_i at this exponent (None keeps all terms)

    Returns:
        ArcLocalData with h_0 = ord f_0, xi, Q and R

    Raises:
        ArcInZeroSet: f_0 vanishes identically (to truncation)
        IndeterminateComparison: the leading term of f_0 is undecided
    """
    f_i = structural_zeros(f, arc, shift_expand(f, arc, truncation))
    leading = f_i[0].leading_term()
    if leading is None:
        if len(f_i[0]):
            raise IndeterminateComparison("every stored term of f(lambda(y), y) is undecided")
        raise ArcInZeroSet(f"f vanishes along x = {_series_text(arc)}")
    h0, c0 = leading

    h_i: List[Order] = [h0]
    for series in f_i[1:]:
        h_i.append(_leading_order(series, h0))

    candidates = [
        ((h0 - h) / m, m) for m, h in enumerate(h_i) if m > 0 and h != INFINITY and h < h0
    ]
    xi = max((Fraction(ratio) for ratio, _ in candidates), default=Fraction(0))
    achieving = [m for ratio, m in candidates if ratio == xi] if candidates else []

    terms = [(0, h0, c0)]
    for m in achieving:
        c = f_i[m].coefficient(h_i[m])
        terms.append((m, Fraction(h_i[m]), c))
    coeffs: List[CoeffValue] = [GaussianRational(0)] * (max(achieving, default=0) + 1)
    for m, _, c in terms:
        coeffs[m] = c

    data = ArcLocalData(
        f_i=tuple(f_i),
        h_i=tuple(h_i),
        xi=xi,
        Q=WeightedHomogeneous(xi, h0, tuple(terms)),
        R=UnivariatePoly(coeffs),
    )
    logger.debug(f"Arc {_series_text(arc)}: h0={h0}, xi={xi}, R={data.R}")
    return data


def _series_text(arc) -> str:
    return str(arc.series if isinstance(arc, PuiseuxArc) else arc)


def truncation_certificate(data: ArcLocalData, truncation) -> bool:
    """True iff truncation > xi, so terms of order >= truncation cannot move (h0, c0)"""
    return Fraction(truncation) > data.xi


def shifted_R(data: ArcLocalData, a: CoeffValue) -> UnivariatePoly:
    """R(z + a): the R of the arc lambda + a*y^xi"""
    return data.R.taylor_shift(a)


def certified_arc_data(
    f: BivariatePoly,
    curve: BivariatePoly,
    guard: int = TRUNC_GUARD,
    max_refinements: int = MAX_REFINEMENTS,
    initial: Optional[Fraction] = None,
) -> List[Tuple[PuiseuxArc, ArcLocalData]]:
    """
    Branches of ``curve`` with their data along f, truncated past every xi

    Expands at an initial order, then raises the order to floor(xi) + 1 + guard
    for the arcs whose certificate fails, until all pass.

    Raises:
        ArcInZeroSet: f vanishes along a terminating branch
        PrecisionExhausted: no certified truncation within max_refinements rounds
    """
    truncation = Fraction(initial if initial is not None else INITIAL_TRUNCATION)
    for attempt in range(max_refinements):
        arcs = expand_branches(curve, truncation)
        certified: List[Tuple[PuiseuxArc, ArcLocalData]] = []
        needed = truncation
        for arc in arcs:
            try:
                data = arc_local_data(f, arc)
            except ArcInZeroSet:
                if arc.terminating:
                    raise
                needed = max(needed, truncation + 1 + guard)
                continue
            if arc.terminating or truncation_certificate(data, truncation):
                certified.append((arc, data))
            else:
                needed = max(needed, Fraction(math.floor(data.xi) + 1 + guard))
        if len(certified) == len(arcs):
            logger.debug(f"Certified {len(arcs)} arcs at truncation {truncation}")
            return certified
        logger.debug(f"Round {attempt}: raising truncation from {truncation} to {max(needed, truncation + 1)}")
        truncation = max(needed, truncation + 1)
    raise PrecisionExhausted(f"no certified truncation after {max_refinements} refinements")
