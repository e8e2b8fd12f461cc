"""
Newton-Puiseux expansion of the branches x = gamma(y) of g(x, y) = 0 at the origin
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from hpinv.algebra.coeffs import CoeffValue, coeffs_equal, zero_status
from hpinv.algebra.poly import BivariatePoly
from hpinv.algebra.series import PuiseuxSeries, XSeriesPoly, shift_expand, substitute_arc
from hpinv.algebra.univariate import UnivariatePoly, uni_roots
from hpinv.errors import BranchSplit, IndeterminateComparison, NotMiniRegular, ZeroPolynomial

logger = logging.getLogger(__name__)

Point = Tuple[int, Fraction]


@dataclass(frozen=True)
class NewtonPolygonEdge:
    """
    Lower-hull edge. ``slope`` is the exponent sigma of x ~ y^sigma it resolves;
    None marks the vertical edge of a factor x^i0 (root 0).
    """

    slope: Optional[Fraction]
    support: Tuple[Point, ...]
    char_poly: UnivariatePoly

    @property
    def extent(self) -> int:
        return self.char_poly.degree


@dataclass(frozen=True)
class PuiseuxArc:
    """
    A Puiseux root x = sum c_k y^(n_k/N), known below ``series.truncation``
    (or exactly, when ``terminating``), shared by ``multiplicity`` branches.
    """

    series: PuiseuxSeries
    multiplicity: int
    tangent_coefficient: CoeffValue
    residual_bound: Optional[Fraction]
    terminating: bool

    @property
    def truncation(self) -> Optional[Fraction]:
        return self.series.truncation

    @property
    def ramification(self) -> int:
        return self.series.ramification

    def __str__(self) -> str:
        return f"x = {self.series}"


# Newton polygon

def _certified_points(G: XSeriesPoly, r: int) -> Tuple[List[Point], List[Point]]:
    """
    Split the support of G_0..G_r into hull points (first certified term of each
    G_l) and undecided terms lying underneath them
    """
    points: List[Point] = []
    undecided: List[Point] = []
    for l in range(r + 1):
        for e, c in G.coefficient(l).items():
            status = zero_status(c)
            if status is False:
                points.append((l, e))
                break
            if status is None:
                undecided.append((l, e))
    return points, undecided


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lower_hull(points: Sequence[Point]) -> List[Point]:
    """Lower convex hull, left to right (monotone chain)"""
    hull: List[Point] = []
    for p in sorted(points):
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    return hull


def _slope(left: Point, right: Point) -> Fraction:
    return Fraction(left[1] - right[1]) / (right[0] - left[0])


def _edge(G: XSeriesPoly, left: Point, right: Point) -> NewtonPolygonEdge:
    sigma = _slope(left, right)
    beta = right[1] + sigma * right[0]
    coeffs = []
    support = []
    for l in range(left[0], right[0] + 1):
        e = beta - sigma * l
        c = G.coefficient(l).coefficient(e)
        coeffs.append(c)
        if zero_status(c) is not True:
            support.append((l, e))
    return NewtonPolygonEdge(sigma, tuple(support), UnivariatePoly(coeffs))


def newton_polygon(g: Union[BivariatePoly, XSeriesPoly], r: Optional[int] = None) -> List[NewtonPolygonEdge]:
    """
    Edges of the lower convex hull of {(i, ord g_i)} for i <= r, slopes increasing

    Args:
        g: Curve, as a polynomial or as a polynomial in x over series
        r: Rightmost x-degree considered (defaults to ord g for polynomials)

    Returns:
        Edges from the pivot leftwards; a vertical edge (slope None) is added
        when x^i0 divides g
    """
    if isinstance(g, BivariatePoly):
        if g.is_zero():
            raise ZeroPolynomial("Newton polygon of the zero polynomial")
        if r is None:
            r = g.order()
        g = XSeriesPoly.from_bivariate(g)
    elif r is None:
        r = g.degree
    points, _ = _certified_points(g, r)
    hull = lower_hull(points)
    edges = [_edge(g, hull[k], hull[k + 1]) for k in range(len(hull) - 1)]
    edges.reverse()
    i0 = hull[0][0]
    if i0 > 0 and all(g.coefficient(l).is_exact_zero() for l in range(i0)):
        z_power = UnivariatePoly([0] * i0 + [1])
        edges.append(NewtonPolygonEdge(None, (hull[0],), z_power))
    return edges


# Branch expansion

def _boundary(hull: List[Point], split: int, truncation: Fraction, l: int) -> Fraction:
    """Height of the relevant lower boundary at x-degree l"""
    anchor = hull[split]
    if l <= anchor[0]:
        return anchor[1] + truncation * (anchor[0] - l)
    for k in range(split, len(hull) - 1):
        left, right = hull[k], hull[k + 1]
        if left[0] <= l <= right[0]:
            return left[1] - _slope(left, right) * (l - left[0])
    return hull[-1][1]


def _expand(
    G: XSeriesPoly,
    prefix: Dict[Fraction, CoeffValue],
    r: int,
    truncation: Fraction,
) -> List[PuiseuxArc]:
    points, undecided = _certified_points(G, r)
    if not points or points[-1][0] != r:
        raise IndeterminateComparison("pivot coefficient of the Newton polygon is undecided")
    hull = lower_hull(points)

    # walk from the pivot leftwards through edges of slope < truncation
    split = len(hull) - 1
    while split > 0 and _slope(hull[split - 1], hull[split]) < truncation:
        split -= 1

    for l, e in undecided:
        if e < _boundary(hull, split, truncation, l):
            raise IndeterminateComparison(f"undecided term y^{e} x^{l} below the Newton polygon")

    arcs: List[PuiseuxArc] = []
    i_t = hull[split][0]
    if i_t > 0:
        terminating = all(G.coefficient(l).is_exact_zero() for l in range(i_t))
        series = PuiseuxSeries(prefix, None if terminating else truncation)
        bound = None if terminating else hull[split][1] + truncation * i_t
        arcs.append(
            PuiseuxArc(
                series=series,
                multiplicity=i_t,
                tangent_coefficient=series.coefficient(1),
                residual_bound=bound,
                terminating=terminating,
            )
        )

    for k in range(len(hull) - 1, split, -1):
        edge = _edge(G, hull[k - 1], hull[k])
        sigma = edge.slope
        beta = hull[k][1] + sigma * hull[k][0]
        for c, mu in uni_roots(edge.char_poly):
            logger.debug(f"Puiseux step: slope {sigma}, root {c}, multiplicity {mu}")
            shifted = G.taylor_shift(c, sigma)
            # the edge line carries the vanishing derivatives of the characteristic polynomial
            for l in range(mu):
                shifted = shifted.replace(l, shifted.coefficient(l).drop(beta - sigma * l))
            pivot_height = beta - sigma * mu
            shifted = shifted.prune(pivot_height + truncation * mu)
            step = dict(prefix)
            step[sigma] = c
            arcs.extend(_expand(shifted, step, mu, truncation))
    return arcs


def expand_branches(g: BivariatePoly, truncation) -> List[PuiseuxArc]:
    """
    All Puiseux roots of g = 0 at the origin, each known below ``truncation``

    Args:
        g: Curve, mini-regular in x
        truncation: Exponent up to which every branch is resolved

    Returns:
        One arc per Puiseux root; branches agreeing below ``truncation`` are
        grouped into one arc whose multiplicity counts them.
        Multiplicities add up to ord_0(g).

    Raises:
        NotMiniRegular: g has no pure x^m term in its initial form
        IndeterminateComparison: a certified coefficient could not be decided
    """
    truncation = Fraction(truncation)
    m = g.order()
    if not g.coefficient(m, 0):
        raise NotMiniRegular(f"coefficient of x^{m} vanishes")
    G = XSeriesPoly.from_bivariate(g).prune(truncation * m)
    arcs = [_settle(g, arc) for arc in _expand(G, {}, m, truncation)]
    logger.debug(f"{len(arcs)} Puiseux roots below y^{truncation}")
    return arcs


def _settle(g: BivariatePoly, arc: PuiseuxArc) -> PuiseuxArc:
    """Mark an exact arc terminating when it is a root of g of its full multiplicity"""
    if arc.terminating or not arc.series.is_exact():
        return arc
    exact = PuiseuxSeries(arc.series.terms)
    shifted = shift_expand(g, exact)
    if all(shifted[j].is_exact_zero() for j in range(arc.multiplicity)):
        return PuiseuxArc(exact, arc.multiplicity, arc.tangent_coefficient, None, True)
    return arc


def _agrees_below(candidate: PuiseuxArc, arc: PuiseuxArc) -> Optional[bool]:
    limit = arc.truncation
    mine = {e: c for e, c in candidate.series.items() if limit is None or e < limit}
    theirs = arc.series.terms
    if set(mine) != set(theirs):
        return False
    verdict: Optional[bool] = True
    for e, c in theirs.items():
        same = coeffs_equal(mine[e], c)
        if same is False:
            return False
        if same is None:
            verdict = None
    return verdict


def refine_group(g: BivariatePoly, arc: PuiseuxArc, truncation) -> List[PuiseuxArc]:
    """The branches of g extending ``arc``, resolved below ``truncation``"""
    if arc.terminating:
        return [arc]
    matches = []
    for candidate in expand_branches(g, truncation):
        verdict = _agrees_below(candidate, arc)
        if verdict is None:
            raise IndeterminateComparison("cannot tell refined branches apart")
        if verdict:
            matches.append(candidate)
    if sum(a.multiplicity for a in matches) != arc.multiplicity:
        raise ValueError(f"{arc} is not a Puiseux root of the given curve")
    return matches


def refine_arc(g: BivariatePoly, arc: PuiseuxArc, truncation) -> PuiseuxArc:
    """
    Extend one arc to a higher truncation order

    Raises:
        BranchSplit: the grouped branches separate before the new order
    """
    matches = refine_group(g, arc, truncation)
    if len(matches) > 1:
        raise BranchSplit(f"{arc} splits into {len(matches)} branches below y^{truncation}")
    return matches[0]


def residual(g: BivariatePoly, arc: PuiseuxArc) -> PuiseuxSeries:
    """g(gamma(y), y) for the finite series stored in the arc"""
    return substitute_arc(g, PuiseuxSeries(arc.series.terms))

