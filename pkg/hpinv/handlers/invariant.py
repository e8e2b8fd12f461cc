"""
Invariant handler module
Emits the canonical Inv(f) of a reduced germ
"""

import logging
from argparse import Namespace

from hpinv.errors import HPInvError, PrecisionExhausted
from hpinv.germ_analysis import analyze_germ
from hpinv.handlers.common import EXIT_INDETERMINATE, EXIT_OK, emit, fail, load_germ, precision_kwargs
from hpinv.hp_invariant import invariant
from hpinv.reports import invariant_to_json, invariant_to_text

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    """Register the invariant command"""
    parser = subparsers.add_parser("invariant", help="canonical polar invariant of a germ")
    parser.add_argument("germ", help="germ expression in x and y")
    parser.add_argument(
        "--no-shortcut",
        action="store_true",
        help="expand polar arcs even when the tangent cone is squarefree",
    )
    parser.set_defaults(handler=handle_invariant)


def handle_invariant(args: Namespace) -> int:
    """Handle the invariant command"""
    try:
        profile = analyze_germ(load_germ(args.germ))
        inv = invariant(profile, shortcut=not args.no_shortcut, **precision_kwargs(args))
    except PrecisionExhausted as e:
        return fail(str(e), EXIT_INDETERMINATE)
    except HPInvError as e:
        return fail(f"{type(e).__name__}: {e}")

    emit(args, invariant_to_json(inv), invariant_to_text(inv))
    return EXIT_OK
