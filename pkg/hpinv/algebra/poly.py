"""
Exact bivariate polynomials over Q(i)
"""

from typing import Dict, Iterator, List, Mapping, Optional, Tuple

import sympy
from sympy import QQ_I

from hpinv.algebra.gaussian import GaussianRational, Scalar
from hpinv.errors import ZeroPolynomial

Monomial = Tuple[int, int]

X, Y = sympy.symbols("x y")


class BivariatePoly:
    """
    Sparse polynomial in x, y: {(i, j): c} for c * x^i * y^j.
    Zero coefficients are never stored.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, Scalar]] = None):
        clean: Dict[Monomial, GaussianRational] = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in monomial {(i, j)}")
            c = GaussianRational.coerce(c)
            if c:
                clean[(int(i), int(j))] = c
        self._terms = clean

    def __reduce__(self):
        return (BivariatePoly, (self._terms,))

    # Constructors

    @classmethod
    def zero(cls) -> "BivariatePoly":
        return cls()

    @classmethod
    def constant(cls, c: Scalar) -> "BivariatePoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c: Scalar = 1) -> "BivariatePoly":
        return cls({(i, j): c})

    @classmethod
    def x(cls) -> "BivariatePoly":
        return cls.monomial(1, 0)

    @classmethod
    def y(cls) -> "BivariatePoly":
        return cls.monomial(0, 1)

    # Access

    @property
    def terms(self) -> Dict[Monomial, GaussianRational]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, GaussianRational]]:
        return iter(self._terms.items())

    def coefficient(self, i: int, j: int) -> GaussianRational:
        return self._terms.get((i, j), GaussianRational(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(m == (0, 0) for m in self._terms)

    def constant_term(self) -> GaussianRational:
        return self.coefficient(0, 0)

    def total_degree(self) -> int:
        return max((i + j for i, j in self._terms), default=-1)

    def degree_in(self, var: str) -> int:
        index = _var_index(var)
        return max((m[index] for m in self._terms), default=-1)

    def x_coefficients(self) -> Dict[int, Dict[int, GaussianRational]]:
        """Group by x-degree: {i: {j: c}}"""
        grouped: Dict[int, Dict[int, GaussianRational]] = {}
        for (i, j), c in self._terms.items():
            grouped.setdefault(i, {})[j] = c
        return grouped

    # Ring operations

    def __neg__(self) -> "BivariatePoly":
        return BivariatePoly({m: -c for m, c in self._terms.items()})

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        result = dict(self._terms)
        for m, c in other._terms.items():
            result[m] = result.get(m, GaussianRational(0)) + c
        return BivariatePoly(result)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        result: Dict[Monomial, GaussianRational] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                result[key] = result.get(key, GaussianRational(0)) + c1 * c2
        return BivariatePoly(result)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BivariatePoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers need a non-negative integer exponent")
        result = BivariatePoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: Scalar) -> "BivariatePoly":
        c = GaussianRational.coerce(c)
        return BivariatePoly({m: v * c for m, v in self._terms.items()})

    def __eq__(self, other) -> bool:
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # Calculus and structure

    def derivative(self, var: str) -> "BivariatePoly":
        index = _var_index(var)
        result = {}
        for m, c in self._terms.items():
            if m[index] == 0:
                continue
            lowered = (m[0] - 1, m[1]) if index == 0 else (m[0], m[1] - 1)
            result[lowered] = c * m[index]
        return BivariatePoly(result)

    def order(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("order of the zero polynomial is undefined")
        return min(i + j for i, j in self._terms)

    def homogeneous_part(self, degree: int) -> "BivariatePoly":
        return BivariatePoly({m: c for m, c in self._terms.items() if sum(m) == degree})

    def evaluate(self, x, y):
        """Value at (x, y); accepts any coefficient type closed under + and *"""
        total = GaussianRational(0)
        for (i, j), c in self._terms.items():
            total = total + c * (x ** i) * (y ** j)
        return total

    def dehomogenize(self) -> List[GaussianRational]:
        """Coefficients of p(z, 1), ascending in z"""
        degree = self.degree_in("x")
        coeffs = [GaussianRational(0)] * (degree + 1)
        for (i, _), c in self._terms.items():
            coeffs[i] = coeffs[i] + c
        return coeffs

    def linear_substitute(self, a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> "BivariatePoly":
        """p(a*x + b*y, c*x + d*y)"""
        new_x = BivariatePoly({(1, 0): a, (0, 1): b})
        new_y = BivariatePoly({(1, 0): c, (0, 1): d})
        x_powers = _powers(new_x, self.degree_in("x"))
        y_powers = _powers(new_y, self.degree_in("y"))
        result = BivariatePoly()
        for (i, j), coeff in self._terms.items():
            result = result + (x_powers[i] * y_powers[j]).scale(coeff)
        return result

    # sympy bridge

    def to_sympy(self) -> sympy.Poly:
        rep = {m: c.to_sympy() for m, c in self._terms.items()}
        return sympy.Poly.from_dict(rep or {(0, 0): 0}, X, Y, domain=QQ_I)

    @classmethod
    def from_sympy(cls, poly: sympy.Poly) -> "BivariatePoly":
        poly = sympy.Poly(poly.as_expr(), X, Y, domain=QQ_I)
        return cls({m: GaussianRational.from_sympy(c) for m, c in poly.terms() if c != 0})

    def __repr__(self) -> str:
        from hpinv.expr_parser import format_poly

        return f"BivariatePoly({format_poly(self)})"


def _var_index(var: str) -> int:
    if var == "x":
        return 0
    if var == "y":
        return 1
    raise ValueError(f"unknown variable {var!r}")


def _as_poly(value) -> Optional[BivariatePoly]:
    if isinstance(value, BivariatePoly):
        return value
    try:
        return BivariatePoly.constant(GaussianRational.coerce(value))
    except TypeError:
        return None


def _powers(p: BivariatePoly, n: int) -> List[BivariatePoly]:
    powers = [BivariatePoly.constant(1)]
    for _ in range(max(n, 0)):
        powers.append(powers[-1] * p)
    return powers


# Module-level operations

def poly_add(p: BivariatePoly, q: BivariatePoly) -> BivariatePoly:
    return p + q


def poly_mul(p: BivariatePoly, q: BivariatePoly) -> BivariatePoly:
    return p * q


def poly_derivative(p: BivariatePoly, var: str) -> BivariatePoly:
    return p.derivative(var)


def order(p: BivariatePoly) -> int:
    """Multiplicity ord_0(p): least total degree of a term"""
    return p.order()


def homogeneous_part(p: BivariatePoly, j: int) -> BivariatePoly:
    if j < 0:
        raise ValueError("degree must be non-negative")
    return p.homogeneous_part(j)


def gcd_in_x(p: BivariatePoly, q: BivariatePoly) -> BivariatePoly:
    """
    Greatest common divisor over Q(i), normalized monic.

    sympy eliminates x through a subresultant remainder sequence
    (dmp_ff_prs_gcd) for fields other than Q.
    """
    if p.is_zero() and q.is_zero():
        raise ZeroPolynomial("gcd of two zero polynomials")
    if p.is_zero():
        return _monic(q)
    if q.is_zero():
        return _monic(p)
    return BivariatePoly.from_sympy(sympy.gcd(p.to_sympy(), q.to_sympy()))


def _monic(p: BivariatePoly) -> BivariatePoly:
    return BivariatePoly.from_sympy(p.to_sympy().monic())


def is_unit(p: BivariatePoly) -> bool:
    return not p.is_zero() and p.is_constant()

