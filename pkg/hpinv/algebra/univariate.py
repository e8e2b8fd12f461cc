"""
Univariate polynomials over CoeffValue and certified root isolation
"""

import logging
from functools import lru_cache
from math import comb
from typing import List, Sequence, Tuple

import mpmath
import sympy
from mpmath import mp
from sympy import QQ_I

from hpinv.algebra.balls import BallComplex
from hpinv.algebra.coeffs import CoeffValue, format_coeff, is_exact
from hpinv.algebra.gaussian import GaussianRational
from hpinv.errors import IndeterminateComparison, ZeroPolynomial

logger = logging.getLogger(__name__)

Z = sympy.Symbol("z")

# Second Durand-Kerner attempt runs this many steps per bit of precision
_MAXSTEPS_FACTOR = 4


class UnivariatePoly:
    """Dense polynomial in z, coefficients ascending; trailing exact zeros stripped"""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        items = [c if isinstance(c, BallComplex) else GaussianRational.coerce(c) for c in coeffs]
        while items and is_exact(items[-1]) and items[-1].is_zero():
            items.pop()
        self.coeffs: Tuple[CoeffValue, ...] = tuple(items)

    def __reduce__(self):
        return (UnivariatePoly, (self.coeffs,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_exact(self) -> bool:
        return all(is_exact(c) for c in self.coeffs)

    def leading(self) -> CoeffValue:
        return self.coeffs[-1]

    def evaluate(self, z):
        total = GaussianRational(0)
        for c in reversed(self.coeffs):
            total = total * z + c
        return total

    def derivative(self, times: int = 1) -> "UnivariatePoly":
        coeffs = list(self.coeffs)
        for _ in range(times):
            coeffs = [c * k for k, c in enumerate(coeffs)][1:]
        return UnivariatePoly(coeffs)

    def taylor_shift(self, a: CoeffValue) -> "UnivariatePoly":
        """p(z + a)"""
        n = len(self.coeffs)
        result = [GaussianRational(0)] * n
        for k, c in enumerate(self.coeffs):
            power = GaussianRational(1)
            for l in range(k, -1, -1):
                # term c * C(k, l) * a^(k-l) * z^l
                result[l] = result[l] + c * comb(k, l) * power
                power = power * a
        return UnivariatePoly(result)

    def monic(self) -> "UnivariatePoly":
        lead = self.leading()
        return UnivariatePoly([c / lead for c in self.coeffs])

    def divides(self, other: "UnivariatePoly") -> bool:
        """Exact divisibility test, both polynomials exact"""
        if other.is_zero():
            return True
        return other.to_sympy().rem(self.to_sympy()).is_zero

    def to_sympy(self) -> sympy.Poly:
        if not self.is_exact():
            raise TypeError("only exact polynomials convert to sympy")
        return sympy.Poly([c.to_sympy() for c in reversed(self.coeffs)] or [0], Z, domain=QQ_I)

    @classmethod
    def from_sympy(cls, poly: sympy.Poly) -> "UnivariatePoly":
        return cls([GaussianRational.from_sympy(c) for c in reversed(poly.all_coeffs())])

    def key(self) -> Tuple[GaussianRational, ...]:
        return tuple(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UnivariatePoly):
            return NotImplemented
        return self.coeffs == other.coeffs if self.is_exact() and other.is_exact() else self is other

    def __hash__(self) -> int:
        return hash(self.coeffs) if self.is_exact() else id(self)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if is_exact(c) and c.is_zero():
                continue
            monomial = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if not is_exact(c) or not c.is_real():
                text = f"({format_coeff(c)})"
                parts.append(("+", f"{text}*{monomial}" if monomial else text))
                continue
            magnitude = str(abs(c.re))
            body = monomial if monomial and magnitude == "1" else (f"{magnitude}*{monomial}" if monomial else magnitude)
            parts.append(("-" if c.re < 0 else "+", body))
        if not parts:
            return "0"
        sign, body = parts[0]
        text = body if sign == "+" else f"-{body}"
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"UnivariatePoly({self})"


def uni_roots(q: UnivariatePoly) -> List[Tuple[CoeffValue, int]]:
    """
    All complex roots of q with multiplicities

    Exact polynomials are factored over Q(i): linear factors give exact roots,
    the other irreducible factors give certified balls tagged with the factor.
    Ball polynomials get certified disks; overlapping disks form one cluster,
    reported as a multiple root.

    Raises:
        ZeroPolynomial: q is zero
        IndeterminateComparison: the leading coefficient or a cluster is undecided
    """
    if q.is_zero():
        raise ZeroPolynomial("roots of the zero polynomial")
    if q.degree == 0:
        return []
    if q.is_exact():
        return _exact_roots(q)
    return _ball_roots(q)


def _exact_roots(q: UnivariatePoly) -> List[Tuple[CoeffValue, int]]:
    _, factors = q.to_sympy().factor_list()
    roots: List[Tuple[CoeffValue, int]] = []
    for factor, multiplicity in factors:
        factor = UnivariatePoly.from_sympy(factor).monic()
        if factor.degree == 1:
            roots.append((-factor.coeffs[0], multiplicity))
            continue
        for ball in isolate_factor_roots(factor.key(), mp.prec):
            roots.append((ball, multiplicity))
    return roots


@lru_cache(maxsize=512)
def isolate_factor_roots(minpoly: Tuple[GaussianRational, ...], prec: int) -> Tuple[BallComplex, ...]:
    """
    Disjoint certified disks for the roots of a squarefree exact polynomial.
    Cached so that every caller sees the very same balls for a factor.
    """
    with mp.workprec(prec):
        coeffs = [BallComplex.from_exact(c) for c in minpoly]
        disks = _weierstrass_disks(coeffs)
        for i, (mid_i, rad_i) in enumerate(disks):
            for mid_j, rad_j in disks[i + 1:]:
                if abs(mid_i - mid_j) <= rad_i + rad_j:
                    raise IndeterminateComparison(f"roots of {minpoly} not yet separated")
        return tuple(BallComplex(mid, rad, minpoly=minpoly) for mid, rad in disks)


def _ball_roots(q: UnivariatePoly) -> List[Tuple[CoeffValue, int]]:
    coeffs = [BallComplex.coerce(c) for c in q.coeffs]
    if not coeffs[-1].certifies_nonzero():
        raise IndeterminateComparison("leading coefficient may vanish")
    if q.degree == 1:
        return [(-coeffs[0] / coeffs[1], 1)]
    disks = _weierstrass_disks(coeffs)
    return _clusters(disks)


def _weierstrass_disks(coeffs: List[BallComplex]) -> List[Tuple[mpmath.mpc, mpmath.mpf]]:
    """
    Approximate roots by Durand-Kerner, then inclusion radii
    n * |p(z_i)| / (|a_n| * prod |z_i - z_j|); every connected union of
    m disks holds exactly m roots of every polynomial in the coefficient balls.
    """
    n = len(coeffs) - 1
    mids = [c.mid for c in reversed(coeffs)]
    approx = None
    for maxsteps, extra in ((50 + 10 * n, 2 * n * mp.prec // 8 + 20), (_MAXSTEPS_FACTOR * mp.prec, n * mp.prec)):
        try:
            approx = mpmath.polyroots(mids, maxsteps=maxsteps, extraprec=extra, cleanup=False)
            break
        except mp.NoConvergence:
            logger.debug(f"polyroots did not converge (maxsteps={maxsteps}); retrying")
    if approx is None:
        raise IndeterminateComparison("root iteration did not converge")

    lead = coeffs[-1].abs_lower()
    disks = []
    for i, z in enumerate(approx):
        value = UnivariatePoly(coeffs).evaluate(BallComplex(z))
        numerator = n * BallComplex.coerce(value).abs_upper()
        denominator = lead
        for j, w in enumerate(approx):
            if j != i:
                denominator *= abs(z - w)
        if denominator == 0:
            raise IndeterminateComparison("coincident root approximations")
        radius = numerator / denominator
        disks.append((mpmath.mpc(z), radius * (1 + mpmath.ldexp(1, 8 - mp.prec))))
    return disks


def _clusters(disks: List[Tuple[mpmath.mpc, mpmath.mpf]]) -> List[Tuple[CoeffValue, int]]:
    parent = list(range(len(disks)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(len(disks)):
        for j in range(i + 1, len(disks)):
            if abs(disks[i][0] - disks[j][0]) <= disks[i][1] + disks[j][1]:
                parent[find(i)] = find(j)

    groups = {}
    for i in range(len(disks)):
        groups.setdefault(find(i), []).append(disks[i])

    roots: List[Tuple[CoeffValue, int]] = []
    for members in groups.values():
        center = sum((m for m, _ in members), mpmath.mpc(0)) / len(members)
        radius = max(abs(center - m) + r for m, r in members)
        roots.append((BallComplex(center, radius), len(members)))
    return roots

