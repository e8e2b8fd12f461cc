"""
Working-precision escalation for certified computations
"""

import logging
from contextvars import ContextVar
from typing import Callable, TypeVar

from mpmath import mp

from hpinv.config import PRECISION_BITS, PRECISION_CAP
from hpinv.errors import IndeterminateComparison, PrecisionExhausted

logger = logging.getLogger(__name__)

T = TypeVar("T")

# Set while the last attempt at the cap runs; overlapping balls then order as ties
_settling: ContextVar[bool] = ContextVar("hpinv_settling", default=False)


def settling() -> bool:
    """True while running the final attempt at the precision cap"""
    return _settling.get()


def retry_with_precision(
    func: Callable[[], T],
    bits: int = PRECISION_BITS,
    cap: int = PRECISION_CAP,
) -> T:
    """
    Run func under increasing working precision

    Args:
        func: Computation that raises IndeterminateComparison when undecided
        bits: Starting precision in bits
        cap: Largest precision tried

    Returns:
        Whatever func returns

    Raises:
        PrecisionExhausted: if func is still undecided at the cap
    """
    while True:
        try:
            with mp.workprec(bits):
                return func()
        except IndeterminateComparison as e:
            if bits >= cap:
                logger.info(f"Undecided at cap {cap} bits ({e}); settling ties")
                break
            logger.info(f"Undecided at {bits} bits ({e}); retrying with {min(bits * 2, cap)}")
            bits = min(bits * 2, cap)

    token = _settling.set(True)
    try:
        with mp.workprec(cap):
            return func()
    except IndeterminateComparison as e:
        raise PrecisionExhausted(f"undecided at {cap} bits: {e}") from e
    finally:
        _settling.reset(token)
