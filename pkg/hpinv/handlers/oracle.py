"""
Oracle handler module
Runs the numeric cross-check of polar arc leading terms
"""

import logging
from argparse import Namespace

from hpinv import config
from hpinv.errors import HPInvError
from hpinv.handlers.common import EXIT_DISTINCT, EXIT_ERROR, EXIT_OK, emit, fail, load_germ, precision_kwargs
from hpinv.numeric_oracle import cross_check
from hpinv.reports import oracle_to_json, oracle_to_text

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    """Register the oracle command"""
    parser = subparsers.add_parser("oracle", help="numeric cross-check of the polar arcs of a germ")
    parser.add_argument("germ", help="germ expression in x and y")
    parser.add_argument("--r-start", type=float, default=config.ORACLE_R_START, help="largest tracking radius")
    parser.add_argument("--steps", type=int, default=config.ORACLE_STEPS, help="number of radii (at least 8)")
    parser.set_defaults(handler=handle_oracle)


def handle_oracle(args: Namespace) -> int:
    """Handle the oracle command: 0 pass, 1 mismatch, 3 error"""
    if args.r_start <= 0:
        return fail("--r-start must be positive")
    if args.steps < 8:
        return fail("--steps must be at least 8")

    try:
        report = cross_check(
            load_germ(args.germ), r_start=args.r_start, steps=args.steps, **precision_kwargs(args)
        )
    except HPInvError as e:
        return fail(f"{type(e).__name__}: {e}")

    emit(args, oracle_to_json(report), oracle_to_text(report))
    if report.passed:
        return EXIT_OK
    # A symbolic failure is an error, not a disagreement
    if report.aborted:
        logger.error(f"Oracle could not run: {'; '.join(report.errors)}")
        return EXIT_ERROR
    return EXIT_DISTINCT
