"""
Exact Gaussian rationals a + b*i with a, b in Q
"""

from fractions import Fraction
from numbers import Rational
from typing import Tuple, Union

import mpmath
import sympy

Scalar = Union[int, Fraction, "GaussianRational"]


class GaussianRational:
    """Immutable element of Q(i); parts are reduced Fractions"""

    __slots__ = ("re", "im")

    def __init__(self, re: Union[int, Fraction] = 0, im: Union[int, Fraction] = 0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def __reduce__(self):
        return (GaussianRational, (self.re, self.im))

    @classmethod
    def coerce(cls, value: Scalar) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Rational)):
            return cls(Fraction(value))
        raise TypeError(f"cannot convert {type(value).__name__} to GaussianRational")

    @classmethod
    def from_sympy(cls, expr) -> "GaussianRational":
        re, im = sympy.sympify(expr).as_real_imag()
        return cls(Fraction(int(re.p), int(re.q)), Fraction(int(im.p), int(im.q)))

    def to_sympy(self):
        return sympy.Rational(self.re.numerator, self.re.denominator) + sympy.I * sympy.Rational(
            self.im.numerator, self.im.denominator
        )

    def to_mpc(self) -> mpmath.mpc:
        return mpmath.mpc(
            mpmath.mpf(self.re.numerator) / self.re.denominator,
            mpmath.mpf(self.im.numerator) / self.im.denominator,
        )

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    # Predicates

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def key(self) -> Tuple[Fraction, Fraction]:
        """Sort key: real part first, then imaginary part"""
        return (self.re, self.im)

    # Arithmetic

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __pos__(self) -> "GaussianRational":
        return self

    def __add__(self, other):
        if isinstance(other, (int, Rational)):
            return GaussianRational(self.re + other, self.im)
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re + other.re, self.im + other.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Rational)):
            return GaussianRational(self.re - other, self.im)
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re - other.re, self.im - other.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Rational)):
            return GaussianRational(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return GaussianRational(self.re * other, self.im * other)
        if isinstance(other, GaussianRational):
            return GaussianRational(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        return NotImplemented

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """|z|^2"""
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            if other == 0:
                raise ZeroDivisionError("GaussianRational division by zero")
            return GaussianRational(self.re / other, self.im / other)
        if isinstance(other, GaussianRational):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Rational)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, exponent: int) -> "GaussianRational":
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = GaussianRational(1)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    # Comparison and hashing

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Rational)):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    # Text

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        magnitude = abs(self.im)
        imag = "i" if magnitude == 1 else f"{magnitude} i"
        if self.re == 0:
            return imag if self.im > 0 else f"-{imag}"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{imag}"

    def __repr__(self) -> str:
        return f"GaussianRational({self})"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
