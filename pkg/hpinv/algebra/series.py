"""
Truncated Puiseux series in y and polynomials in x over them
"""

import math
from fractions import Fraction
from math import comb
from typing import Dict, Iterator, List, Mapping, Optional, Tuple, Union

from hpinv.algebra.balls import BallComplex
from hpinv.algebra.coeffs import CoeffValue, format_coeff, is_exact, zero_status
from hpinv.algebra.gaussian import GaussianRational
from hpinv.algebra.poly import BivariatePoly
from hpinv.errors import IndeterminateComparison

Exponent = Union[int, Fraction]

INFINITY = math.inf


def _clean(value) -> CoeffValue:
    if isinstance(value, BallComplex):
        return value
    return GaussianRational.coerce(value)


class PuiseuxSeries:
    """
    Finite sum of c * y^e with rational e. ``truncation`` (if set) marks the
    exponent from which on coefficients are unknown; None means the stored
    terms are the whole series.
    """

    __slots__ = ("_terms", "truncation")

    def __init__(
        self,
        terms: Optional[Mapping[Exponent, CoeffValue]] = None,
        truncation: Optional[Exponent] = None,
    ):
        limit = None if truncation is None else Fraction(truncation)
        clean: Dict[Fraction, CoeffValue] = {}
        for e, c in (terms or {}).items():
            e = Fraction(e)
            if limit is not None and e >= limit:
                continue
            c = _clean(c)
            if is_exact(c) and c.is_zero():
                continue
            clean[e] = c
        self._terms = clean
        self.truncation = limit

    def __reduce__(self):
        return (PuiseuxSeries, (self._terms, self.truncation))

    @classmethod
    def monomial(cls, c: CoeffValue, e: Exponent) -> "PuiseuxSeries":
        return cls({Fraction(e): c})

    @classmethod
    def constant(cls, c: CoeffValue) -> "PuiseuxSeries":
        return cls({Fraction(0): c})

    # Access

    @property
    def terms(self) -> Dict[Fraction, CoeffValue]:
        return dict(self._terms)

    def items(self) -> List[Tuple[Fraction, CoeffValue]]:
        return sorted(self._terms.items())

    def __iter__(self) -> Iterator[Tuple[Fraction, CoeffValue]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, e: Exponent) -> CoeffValue:
        return self._terms.get(Fraction(e), GaussianRational(0))

    @property
    def ramification(self) -> int:
        """Least N with every stored exponent in (1/N)Z"""
        n = 1
        for e in self._terms:
            n = n * e.denominator // math.gcd(n, e.denominator)
        return n

    def is_exact(self) -> bool:
        return all(is_exact(c) for c in self._terms.values())

    def is_exact_zero(self) -> bool:
        """Known to vanish identically"""
        return not self._terms and self.truncation is None

    def lower_order(self):
        """A lower bound for the order: first stored exponent, else the truncation"""
        if self._terms:
            return min(self._terms)
        if self.truncation is not None:
            return self.truncation
        return INFINITY

    def certified_order(self):
        """
        Exponent of the first term certified nonzero, treating undecided
        terms as present; INFINITY when nothing certified is stored.
        """
        for e, c in self.items():
            if zero_status(c) is not True:
                return e
        return INFINITY

    def leading_term(self) -> Optional[Tuple[Fraction, CoeffValue]]:
        """
        First term certified nonzero

        Raises:
            IndeterminateComparison: an undecided term comes first
        """
        for e, c in self.items():
            status = zero_status(c)
            if status is None:
                raise IndeterminateComparison(f"coefficient of y^{e} undecided: {c}")
            if status is False:
                return e, c
        return None

    def truncate(self, limit: Optional[Exponent]) -> "PuiseuxSeries":
        if limit is None:
            return self
        limit = Fraction(limit)
        if self.truncation is not None:
            limit = min(limit, self.truncation)
        return PuiseuxSeries(self._terms, limit)

    def drop(self, exponent: Exponent) -> "PuiseuxSeries":
        """Same series with the term at ``exponent`` known to be zero"""
        terms = dict(self._terms)
        terms.pop(Fraction(exponent), None)
        return PuiseuxSeries(terms, self.truncation)

    # Arithmetic

    def __neg__(self) -> "PuiseuxSeries":
        return PuiseuxSeries({e: -c for e, c in self._terms.items()}, self.truncation)

    def __add__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms[e] + c if e in terms else c
        return PuiseuxSeries(terms, _min_truncation(self.truncation, other.truncation))

    def __sub__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, PuiseuxSeries):
            if isinstance(other, (int, Fraction, GaussianRational, BallComplex)):
                return self.scale(other)
            return NotImplemented
        truncation = None
        if self.truncation is not None and other.lower_order() != INFINITY:
            truncation = self.truncation + other.lower_order()
        if other.truncation is not None and self.lower_order() != INFINITY:
            truncation = _min_truncation(truncation, other.truncation + self.lower_order())
        terms: Dict[Fraction, CoeffValue] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                if truncation is not None and e >= truncation:
                    continue
                terms[e] = terms[e] + c1 * c2 if e in terms else c1 * c2
        return PuiseuxSeries(terms, truncation)

    __rmul__ = __mul__

    def scale(self, c) -> "PuiseuxSeries":
        c = _clean(c)
        if is_exact(c) and c.is_zero():
            return PuiseuxSeries({}, self.truncation)
        return PuiseuxSeries({e: v * c for e, v in self._terms.items()}, self.truncation)

    def shift(self, e: Exponent) -> "PuiseuxSeries":
        """Multiply by y^e"""
        e = Fraction(e)
        truncation = None if self.truncation is None else self.truncation + e
        return PuiseuxSeries({k + e: c for k, c in self._terms.items()}, truncation)

    def __pow__(self, n: int) -> "PuiseuxSeries":
        if not isinstance(n, int) or n < 0:
            raise ValueError("series powers need a non-negative integer exponent")
        result = PuiseuxSeries.constant(GaussianRational(1))
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        return self._terms == other._terms and self.truncation == other.truncation

    def __hash__(self) -> int:
        return hash((frozenset(self._terms), self.truncation))

    def __str__(self) -> str:
        parts = []
        for e, c in self.items():
            monomial = _format_power(e)
            text = format_coeff(c)
            if not is_exact(c) or not c.is_real():
                text = f"({text})"
                parts.append(("+", f"{text}*{monomial}" if monomial else text))
                continue
            sign = "-" if c.re < 0 else "+"
            magnitude = str(abs(c.re))
            if monomial and magnitude == "1":
                body = monomial
            else:
                body = f"{magnitude}*{monomial}" if monomial else magnitude
            parts.append((sign, body))
        if self.truncation is not None:
            parts.append(("+", f"O({_format_power(self.truncation) or '1'})"))
        if not parts:
            return "0"
        sign, body = parts[0]
        text = body if sign == "+" else f"-{body}"
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"PuiseuxSeries({self})"


def _format_power(e: Fraction) -> str:
    if e == 0:
        return ""
    if e == 1:
        return "y"
    if e.denominator == 1:
        return f"y^{e.numerator}"
    return f"y^({e})"


def _min_truncation(a: Optional[Fraction], b: Optional[Fraction]) -> Optional[Fraction]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class XSeriesPoly:
    """Polynomial in x with PuiseuxSeries coefficients: {i: G_i(y)}"""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Optional[Mapping[int, PuiseuxSeries]] = None):
        self._coeffs: Dict[int, PuiseuxSeries] = {
            i: s for i, s in (coeffs or {}).items() if not s.is_exact_zero()
        }

    @classmethod
    def from_bivariate(cls, p: BivariatePoly) -> "XSeriesPoly":
        return cls(
            {i: PuiseuxSeries({Fraction(j): c for j, c in row.items()}) for i, row in p.x_coefficients().items()}
        )

    @property
    def degree(self) -> int:
        return max(self._coeffs, default=-1)

    def coefficient(self, i: int) -> PuiseuxSeries:
        return self._coeffs.get(i, PuiseuxSeries())

    def items(self) -> List[Tuple[int, PuiseuxSeries]]:
        return sorted(self._coeffs.items())

    def taylor_shift(self, c: CoeffValue, sigma: Exponent) -> "XSeriesPoly":
        """Substitute x -> c * y^sigma + x"""
        sigma = Fraction(sigma)
        n = self.degree
        powers: List[CoeffValue] = [GaussianRational(1)]
        for _ in range(n):
            powers.append(powers[-1] * c)
        result: Dict[int, PuiseuxSeries] = {}
        for i, g in self._coeffs.items():
            for l in range(i + 1):
                term = g.scale(powers[i - l] * comb(i, l)).shift(sigma * (i - l))
                result[l] = result[l] + term if l in result else term
        return XSeriesPoly(result)

    def shift_by_series(self, lam: PuiseuxSeries) -> "XSeriesPoly":
        """Substitute x -> lam(y) + x one monomial at a time"""
        shifted = self
        for e, c in lam.items():
            shifted = shifted.taylor_shift(c, e)
        return shifted

    def prune(self, limit: Fraction) -> "XSeriesPoly":
        """Forget every term of exponent >= limit"""
        return XSeriesPoly({i: g.truncate(limit) for i, g in self._coeffs.items()})

    def replace(self, i: int, series: PuiseuxSeries) -> "XSeriesPoly":
        coeffs = dict(self._coeffs)
        coeffs[i] = series
        return XSeriesPoly(coeffs)


def _series_of(arc) -> PuiseuxSeries:
    return arc if isinstance(arc, PuiseuxSeries) else arc.series


def _determined_limit(p: BivariatePoly, lam: PuiseuxSeries) -> Optional[Fraction]:
    """Exponent below which p(lam(y), y) does not depend on the unknown tail of lam"""
    if lam.truncation is None:
        return None
    v = lam.lower_order()
    limits = [lam.truncation + (a - 1) * v + b for (a, b), _ in p.items() if a >= 1]
    return min(limits) if limits else None


def substitute_arc(p: BivariatePoly, arc, truncation: Optional[Exponent] = None) -> PuiseuxSeries:
    """
    p(lambda(y), y) by Horner's rule in x, terms below ``truncation``

    When the arc carries a truncation the result is cut where its unknown
    tail starts to contribute.
    """
    lam = _series_of(arc)
    truncation = _min_truncation(
        None if truncation is None else Fraction(truncation), _determined_limit(p, lam)
    )
    lam = PuiseuxSeries(lam.terms)
    rows = p.x_coefficients()
    result = PuiseuxSeries()
    for i in range(p.degree_in("x"), -1, -1):
        row = PuiseuxSeries({Fraction(j): c for j, c in rows.get(i, {}).items()})
        result = result * lam + row
        if truncation is not None:
            result = PuiseuxSeries(result.terms).truncate(truncation)
    return result.truncate(truncation)


def shift_expand(p: BivariatePoly, arc, truncation: Optional[Exponent] = None) -> List[PuiseuxSeries]:
    """
    Coefficients f_0..f_n of X^i in F(X, Y) = p(X + lambda(Y), Y), each
    cut at ``truncation``
    """
    lam = PuiseuxSeries(_series_of(arc).terms)
    shifted = XSeriesPoly.from_bivariate(p).shift_by_series(lam)
    n = p.degree_in("x")
    return [shifted.coefficient(i).truncate(truncation) for i in range(n + 1)]
