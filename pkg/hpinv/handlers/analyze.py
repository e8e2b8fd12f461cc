"""
Analyze handler module
Prints the profile of a germ: order, cone, Sing(C0) and the polar arc table
"""

import logging
from argparse import Namespace

from hpinv.algebra.precision import retry_with_precision
from hpinv.errors import HPInvError, PrecisionExhausted
from hpinv.germ_analysis import analyze_germ, tangent_cone_lines
from hpinv.handlers.common import EXIT_INDETERMINATE, EXIT_OK, emit, fail, load_germ, precision_kwargs
from hpinv.hp_invariant import polar_report
from hpinv.reports import profile_to_json, profile_to_text

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    """Register the analyze command"""
    parser = subparsers.add_parser("analyze", help="order, tangent cone and polar arcs of a germ")
    parser.add_argument("germ", help="germ expression in x and y, e.g. 'x^2 - y^3'")
    parser.set_defaults(handler=handle_analyze)


def handle_analyze(args: Namespace) -> int:
    """Handle the analyze command"""
    options = precision_kwargs(args)
    try:
        profile = analyze_germ(load_germ(args.germ))
        lines = retry_with_precision(lambda: tangent_cone_lines(profile), options["bits"], options["cap"])
        sing = [line for line in lines if line.multiplicity >= 2]
        polar = polar_report(profile, **options)
    except PrecisionExhausted as e:
        return fail(str(e), EXIT_INDETERMINATE)
    except HPInvError as e:
        return fail(f"{type(e).__name__}: {e}")

    emit(
        args,
        profile_to_json(profile, lines, sing, polar),
        profile_to_text(profile, lines, sing, polar),
    )
    return EXIT_OK
