"""
Shared helpers for command handlers
Exit codes, germ loading and output
"""

import logging
import sys
from argparse import Namespace
from typing import Any, Dict

from hpinv.algebra.poly import BivariatePoly
from hpinv.expr_parser import parse_poly
from hpinv.reports import to_json

logger = logging.getLogger(__name__)

# Exit codes are a stable contract for scripts
EXIT_OK = 0
EXIT_DISTINCT = 1
EXIT_INDETERMINATE = 2
EXIT_ERROR = 3


def load_germ(text: str) -> BivariatePoly:
    """Parse a germ given on the command line"""
    germ = parse_poly(text)
    logger.info(f"Loaded germ {text!r}")
    return germ


def precision_kwargs(args: Namespace) -> Dict[str, int]:
    """bits / cap / guard keyword arguments from the global flags"""
    return {"bits": args.precision_bits, "cap": args.precision_cap, "guard": args.trunc_guard}


def emit(args: Namespace, doc: Dict[str, Any], text: str) -> None:
    """Print the JSON document with --json, the text report otherwise"""
    print(to_json(doc) if args.json else text)


def fail(message: str, code: int = EXIT_ERROR) -> int:
    """Log and report an error on stderr; returns the exit code"""
    logger.error(message)
    print(f"error: {message}", file=sys.stderr)
    return code
