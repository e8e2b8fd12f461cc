"""
Helpers over CoeffValue = GaussianRational | BallComplex
"""

from typing import Any, Dict, Optional, Union

import mpmath

from hpinv.algebra.balls import BallComplex
from hpinv.algebra.gaussian import GaussianRational
from hpinv.algebra.precision import settling
from hpinv.errors import IndeterminateComparison

CoeffValue = Union[GaussianRational, BallComplex]


def is_exact(value: CoeffValue) -> bool:
    return isinstance(value, GaussianRational)


def zero_status(value: CoeffValue) -> Optional[bool]:
    """
    Tri-state zero test

    Returns:
        True if certainly zero, False if certainly nonzero, None if undecided
    """
    if isinstance(value, GaussianRational):
        return value.is_zero()
    if value.is_exact_zero():
        return True
    if value.certifies_nonzero():
        return False
    return None


def is_zero(value: CoeffValue) -> bool:
    """Zero test that refuses to guess"""
    status = zero_status(value)
    if status is None:
        raise IndeterminateComparison(f"cannot decide whether {value} vanishes")
    return status


def to_complex(value: CoeffValue) -> mpmath.mpc:
    if isinstance(value, GaussianRational):
        return value.to_mpc()
    return value.mid


def _compare_parts(a_lo, a_hi, b_lo, b_hi) -> Optional[int]:
    if a_hi < b_lo:
        return -1
    if b_hi < a_lo:
        return 1
    return None


def compare_coeffs(a: CoeffValue, b: CoeffValue) -> int:
    """
    Total order by (Re, Im)

    Balls are ordered only when separated; overlapping balls raise
    IndeterminateComparison, except while settling, where they tie.
    """
    if isinstance(a, GaussianRational) and isinstance(b, GaussianRational):
        ka, kb = a.key(), b.key()
        return (ka > kb) - (ka < kb)
    if coeffs_equal(a, b):
        return 0
    ba, bb = BallComplex.coerce(a), BallComplex.coerce(b)
    verdict = _compare_parts(*ba.real_interval(), *bb.real_interval())
    if verdict is not None:
        return verdict
    verdict = _compare_parts(*ba.imag_interval(), *bb.imag_interval())
    if verdict is not None:
        # real parts may coincide; only certain if they provably do
        if settling():
            return verdict
        raise IndeterminateComparison(f"cannot order {a} and {b}")
    if settling():
        return 0
    raise IndeterminateComparison(f"cannot order {a} and {b}")


def coeffs_equal(a: CoeffValue, b: CoeffValue) -> Optional[bool]:
    """
    Equality test

    Returns:
        True or False when certain, None when overlapping balls cannot be told apart.
        Balls are certainly equal only when both isolate a root of the same
        exact factor and overlap (isolating disks of distinct roots are disjoint).
    """
    if isinstance(a, GaussianRational) and isinstance(b, GaussianRational):
        return a == b
    ba, bb = BallComplex.coerce(a), BallComplex.coerce(b)
    if not ba.overlaps(bb):
        return False
    if ba.minpoly is not None and ba.minpoly == bb.minpoly:
        return True
    if isinstance(a, GaussianRational) and bb.minpoly is not None:
        # a tagged root of a nonlinear irreducible factor is irrational
        return False
    if isinstance(b, GaussianRational) and ba.minpoly is not None:
        return False
    return None


def format_coeff(value: CoeffValue, digits: int = 15) -> str:
    if isinstance(value, GaussianRational):
        return str(value)
    mid = value.mid
    # imaginary noise inside the radius is not printed
    if abs(mid.imag) <= value.rad:
        return mpmath.nstr(mid.real, digits)
    return mpmath.nstr(mid, digits).strip("()")


def coeff_to_json(value: CoeffValue) -> Dict[str, Any]:
    """Serialize as {"exact": "a/b+c/d i"} or {"mid": [re, im], "rad": r}"""
    if isinstance(value, GaussianRational):
        return {"exact": str(value)}
    return {
        "mid": [mpmath.nstr(value.mid.real, 20), mpmath.nstr(value.mid.imag, 20)],
        "rad": mpmath.nstr(value.rad, 5),
    }


def sort_key(value: CoeffValue):
    """Deterministic (non-certified) key for presentation order"""
    if isinstance(value, GaussianRational):
        return value.key()
    return (float(value.mid.real), float(value.mid.imag))
