"""
Complex balls: an mpmath midpoint with a non-negative error radius.

Every operation inflates the radius by the rounding error of the
midpoint computation, so the exact value of a composed expression
always lies inside the result.
"""

from typing import Optional, Tuple

import mpmath
from mpmath import mp

from hpinv.algebra.gaussian import GaussianRational


def _ulp(value) -> mpmath.mpf:
    """Rounding slack for a midpoint of the given magnitude"""
    return abs(value) * mpmath.ldexp(1, 4 - mp.prec)


class BallComplex:
    """
    Closed disk {z : |z - mid| <= rad}.

    ``minpoly`` optionally names the exact irreducible factor over Q(i)
    (monic, as a tuple of GaussianRational coefficients in ascending order)
    that this ball isolates a root of. Arithmetic drops it.
    """

    __slots__ = ("mid", "rad", "minpoly")

    def __init__(self, mid, rad=0, minpoly: Optional[Tuple[GaussianRational, ...]] = None):
        self.mid = mpmath.mpc(mid)
        self.rad = abs(mpmath.mpf(rad))
        self.minpoly = minpoly

    def __reduce__(self):
        return (BallComplex, (self.mid, self.rad, self.minpoly))

    @classmethod
    def from_exact(cls, value: GaussianRational) -> "BallComplex":
        mid = value.to_mpc()
        return cls(mid, _ulp(mid))

    @classmethod
    def coerce(cls, value) -> "BallComplex":
        if isinstance(value, BallComplex):
            return value
        return cls.from_exact(GaussianRational.coerce(value))

    # Queries

    def certifies_nonzero(self) -> bool:
        return abs(self.mid) > self.rad

    def is_exact_zero(self) -> bool:
        return self.rad == 0 and self.mid == 0

    def contains(self, value) -> bool:
        if isinstance(value, GaussianRational):
            value = value.to_mpc()
        return abs(mpmath.mpc(value) - self.mid) <= self.rad

    def overlaps(self, other: "BallComplex") -> bool:
        return abs(self.mid - other.mid) <= self.rad + other.rad

    def abs_upper(self) -> mpmath.mpf:
        return abs(self.mid) + self.rad

    def abs_lower(self) -> mpmath.mpf:
        return max(abs(self.mid) - self.rad, mpmath.mpf(0))

    def real_interval(self) -> Tuple[mpmath.mpf, mpmath.mpf]:
        return (self.mid.real - self.rad, self.mid.real + self.rad)

    def imag_interval(self) -> Tuple[mpmath.mpf, mpmath.mpf]:
        return (self.mid.imag - self.rad, self.mid.imag + self.rad)

    # Arithmetic

    def __neg__(self) -> "BallComplex":
        return BallComplex(-self.mid, self.rad)

    def __pos__(self) -> "BallComplex":
        return self

    def __add__(self, other):
        try:
            other = BallComplex.coerce(other)
        except TypeError:
            return NotImplemented
        mid = self.mid + other.mid
        return BallComplex(mid, self.rad + other.rad + _ulp(mid))

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = BallComplex.coerce(other)
        except TypeError:
            return NotImplemented
        mid = self.mid - other.mid
        return BallComplex(mid, self.rad + other.rad + _ulp(mid))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        try:
            other = BallComplex.coerce(other)
        except TypeError:
            return NotImplemented
        mid = self.mid * other.mid
        rad = abs(self.mid) * other.rad + abs(other.mid) * self.rad + self.rad * other.rad
        return BallComplex(mid, rad + _ulp(mid))

    __rmul__ = __mul__

    def inverse(self) -> "BallComplex":
        if not self.certifies_nonzero():
            raise ZeroDivisionError("ball may contain zero")
        m = abs(self.mid)
        mid = 1 / self.mid
        rad = self.rad / (m * (m - self.rad))
        return BallComplex(mid, rad + _ulp(mid))

    def __truediv__(self, other):
        try:
            other = BallComplex.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        try:
            other = BallComplex.coerce(other)
        except TypeError:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> "BallComplex":
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = BallComplex(1)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def __str__(self) -> str:
        return f"[{mpmath.nstr(self.mid, 15)} +/- {mpmath.nstr(self.rad, 3)}]"

    def __repr__(self) -> str:
        return f"BallComplex({self})"
