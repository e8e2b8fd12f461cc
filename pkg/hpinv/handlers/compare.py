"""
Compare handler module
Decides whether two germs can be Lipschitz/Holder equivalent
"""

import logging
from argparse import Namespace

from hpinv.errors import HPInvError
from hpinv.handlers.common import EXIT_DISTINCT, EXIT_INDETERMINATE, EXIT_OK, emit, fail, load_germ, precision_kwargs
from hpinv.hp_invariant import VerdictKind, compare
from hpinv.reports import verdict_to_json

logger = logging.getLogger(__name__)

EXIT_CODES = {
    VerdictKind.INVARIANTS_EQUAL: EXIT_OK,
    VerdictKind.DISTINCT: EXIT_DISTINCT,
    VerdictKind.INDETERMINATE: EXIT_INDETERMINATE,
}


def register(subparsers) -> None:
    """Register the compare command"""
    parser = subparsers.add_parser("compare", help="compare the invariants of two germs")
    parser.add_argument("f", help="first germ")
    parser.add_argument("g", help="second germ")
    parser.set_defaults(handler=handle_compare)


def handle_compare(args: Namespace) -> int:
    """
    Handle the compare command

    Returns:
        0 InvariantsEqual, 1 Distinct, 2 Indeterminate, 3 error
    """
    try:
        verdict = compare(load_germ(args.f), load_germ(args.g), **precision_kwargs(args))
    except HPInvError as e:
        return fail(f"{type(e).__name__}: {e}")

    logger.info(f"Verdict: {verdict}")
    emit(args, verdict_to_json(verdict), str(verdict))
    return EXIT_CODES[verdict.kind]
