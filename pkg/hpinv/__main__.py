#!/usr/bin/env python3
"""
hpinv - Main Entry Point
"""

import argparse
import logging
import sys
from typing import List, Optional

from hpinv import config
from hpinv.handlers import analyze, compare, invariant, moduli, oracle
from hpinv.handlers.common import EXIT_ERROR

logger = logging.getLogger(__name__)

COMMANDS = (analyze, invariant, compare, moduli, oracle)


class HPInvArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with 3; exit code 2 means Indeterminate"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    """Global flags plus one subcommand per handler module"""
    parser = HPInvArgumentParser(
        prog="hpinv",
        description="Bi-Lipschitz polar invariant of plane curve germs",
    )
    parser.add_argument("--precision-bits", type=int, default=config.PRECISION_BITS,
                        help="starting working precision in bits")
    parser.add_argument("--precision-cap", type=int, default=config.PRECISION_CAP,
                        help="largest working precision before giving up")
    parser.add_argument("--trunc-guard", type=int, default=config.TRUNC_GUARD,
                        help="extra Puiseux orders past the xi certificate")
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    parser.add_argument("--log-level", default=config.LOG_LEVEL,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"], type=str.upper)

    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, configure logging and dispatch to the handler"""
    parser = build_parser()
    args = parser.parse_args(argv)

    # Configure logging
    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )

    if args.precision_bits < 53:
        parser.error("--precision-bits must be at least 53")
    if args.precision_cap < args.precision_bits:
        parser.error("--precision-cap must not be below --precision-bits")
    if args.trunc_guard < 0:
        parser.error("--trunc-guard must be non-negative")

    logger.info(f"Running {args.command}")
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
