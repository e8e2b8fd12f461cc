"""
Configuration module for hpinv
Loads environment variables and provides typed constants
"""

import os
from fractions import Fraction
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


def _int_env(name: str, default: int, minimum: int) -> int:
    raw = os.getenv(name, str(default))
    try:
        value = int(raw)
    except ValueError:
        raise RuntimeError(f"{name} must be an integer, got {raw!r}")
    if value < minimum:
        raise RuntimeError(f"{name} must be at least {minimum}, got {value}")
    return value


def _float_env(name: str, default: float) -> float:
    raw = os.getenv(name, str(default))
    try:
        return float(raw)
    except ValueError:
        raise RuntimeError(f"{name} must be a number, got {raw!r}")


# Certified arithmetic
PRECISION_BITS: int = _int_env("HPINV_PRECISION_BITS", 256, 53)
PRECISION_CAP: int = _int_env("HPINV_PRECISION_CAP", 4096, 53)
if PRECISION_CAP < PRECISION_BITS:
    raise RuntimeError("HPINV_PRECISION_CAP must not be below HPINV_PRECISION_BITS")

# Extra Puiseux steps past the xi certificate
TRUNC_GUARD: int = _int_env("HPINV_TRUNC_GUARD", 1, 0)
MAX_REFINEMENTS: int = _int_env("HPINV_MAX_REFINEMENTS", 32, 1)

# Moduli scans
WORKERS: int = _int_env("HPINV_WORKERS", os.cpu_count() or 1, 1)

# Numeric oracle
ORACLE_R_START: float = _float_env("HPINV_ORACLE_R_START", 1e-2)
ORACLE_STEPS: int = _int_env("HPINV_ORACLE_STEPS", 16, 8)
ORACLE_RATIO: float = _float_env("HPINV_ORACLE_RATIO", 0.5)
ORACLE_H0_TOL: float = _float_env("HPINV_ORACLE_H0_TOL", 1e-3)
ORACLE_C0_TOL: float = _float_env("HPINV_ORACLE_C0_TOL", 1e-2)
if ORACLE_R_START <= 0:
    raise RuntimeError("HPINV_ORACLE_R_START must be positive")
if not 0 < ORACLE_RATIO < 1:
    raise RuntimeError("HPINV_ORACLE_RATIO must lie strictly between 0 and 1")

# Logging
LOG_LEVEL: str = os.getenv("HPINV_LOG_LEVEL", "WARNING").upper()

# First truncation order tried for polar arcs; must exceed 1 so tangents are resolved
INITIAL_TRUNCATION: Fraction = Fraction(2)
