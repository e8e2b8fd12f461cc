"""
Moduli handler module
Scans a parametric family f_t over a grid of parameter values and clusters
the parameters whose germs have equal invariants
"""

import concurrent.futures
import logging
from argparse import Namespace
from functools import partial
from typing import Dict, List, Optional, Sequence, Tuple

from hpinv import config
from hpinv.errors import GermError, HPInvError, ParseError, PrecisionExhausted
from hpinv.expr_parser import parse_poly
from hpinv.germ_analysis import analyze_germ
from hpinv.handlers.common import EXIT_OK, emit, fail
from hpinv.hp_invariant import GermInvariant, VerdictKind, compare_invariants, invariant
from hpinv.reports import DEG, EQ, IND, NEQ, matrix_to_csv, moduli_to_json, moduli_to_text
from hpinv.utils.validators import box_grid, hp_template, instantiate, is_template, parse_grid

logger = logging.getLogger(__name__)

# Outcome of one grid point: (status, invariant or None, reason)
PointResult = Tuple[str, Optional[GermInvariant], str]

OK = "OK"


def register(subparsers) -> None:
    """Register the moduli command"""
    parser = subparsers.add_parser("moduli", help="cluster a parametric family by invariant")
    family = parser.add_mutually_exclusive_group(required=True)
    family.add_argument("--template", help="germ expression with the parameter t, e.g. 'x^3 - 3*t^2*x*y^4 + y^6'")
    family.add_argument("--preset", choices=["hp"], help="built-in family: hp is x^3 - 3t^2 x y^(2d) + y^(3d)")
    parser.add_argument("--d", type=int, default=2, help="d for --preset hp (default 2)")
    grid = parser.add_mutually_exclusive_group(required=True)
    grid.add_argument("--grid", help="comma-separated Gaussian rationals, e.g. '1,-1,2,1+i'")
    grid.add_argument("--box", type=int, help="Gaussian integers a+bi with |a|,|b| <= BOX")
    parser.add_argument("--csv", metavar="FILE", help="write the verdict matrix to FILE")
    parser.add_argument("--workers", type=int, default=config.WORKERS, help="worker processes")
    parser.set_defaults(handler=handle_moduli)


def _point_invariant(germ: str, bits: int, cap: int, guard: int) -> PointResult:
    """Invariant of one family member; runs in a worker process"""
    try:
        profile = analyze_germ(parse_poly(germ))
        return OK, invariant(profile, bits=bits, cap=cap, guard=guard), ""
    except GermError as e:
        return DEG, None, f"{type(e).__name__}: {e}"
    except PrecisionExhausted as e:
        return IND, None, str(e)
    except HPInvError as e:
        return IND, None, f"{type(e).__name__}: {e}"


def point_results(germs: Sequence[str], workers: int, bits: int, cap: int, guard: int) -> List[PointResult]:
    """Invariants of all grid points, in grid order"""
    job = partial(_point_invariant, bits=bits, cap=cap, guard=guard)
    if workers <= 1 or len(germs) <= 1:
        return [job(germ) for germ in germs]
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(job, germs, chunksize=1))


def verdict_matrix(results: Sequence[PointResult], bits: int, cap: int) -> List[List[str]]:
    """Symmetric matrix of EQ / NEQ / IND / DEG cells"""
    n = len(results)
    matrix = [[EQ] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            status_i, inv_i, _ = results[i]
            status_j, inv_j, _ = results[j]
            if DEG in (status_i, status_j):
                cell = DEG
            elif IND in (status_i, status_j):
                cell = IND
            elif i == j:
                cell = EQ
            else:
                kind = compare_invariants(inv_i, inv_j, bits, cap).kind
                cell = {VerdictKind.INVARIANTS_EQUAL: EQ, VerdictKind.DISTINCT: NEQ}.get(kind, IND)
            matrix[i][j] = matrix[j][i] = cell
    return matrix


def clusters(labels: Sequence[str], results: Sequence[PointResult], matrix: Sequence[Sequence[str]]) -> List[List[str]]:
    """Connected components of the EQ relation over the valid points, in grid order"""
    parent = list(range(len(labels)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    valid = [i for i, (status, _, _) in enumerate(results) if status == OK]
    for a in valid:
        for b in valid:
            if a < b and matrix[a][b] == EQ:
                parent[find(b)] = find(a)

    groups: Dict[int, List[str]] = {}
    for i in valid:
        groups.setdefault(find(i), []).append(labels[i])
    return list(groups.values())


def handle_moduli(args: Namespace) -> int:
    """Handle the moduli command"""
    try:
        template = hp_template(args.d) if args.preset else args.template
        values = box_grid(args.box) if args.box is not None else parse_grid(args.grid)
    except ValueError as e:
        return fail(str(e))
    if not is_template(template):
        return fail(f"template {template!r} does not mention the parameter t")
    if args.workers < 1:
        return fail("--workers must be at least 1")

    germs = [instantiate(template, value) for value in values]
    try:
        parse_poly(germs[0])
    except ParseError as e:
        return fail(f"invalid template: {e}")

    labels = [str(value) for value in values]
    logger.info(f"Scanning {len(germs)} parameters of {template!r} with {args.workers} workers")
    results = point_results(germs, args.workers, args.precision_bits, args.precision_cap, args.trunc_guard)
    matrix = verdict_matrix(results, args.precision_bits, args.precision_cap)
    groups = clusters(labels, results, matrix)
    degenerate = {label: reason for label, (status, _, reason) in zip(labels, results) if status == DEG}
    indeterminate = {label: reason for label, (status, _, reason) in zip(labels, results) if status == IND}
    logger.info(f"{len(groups)} clusters, {len(degenerate)} degenerate, {len(indeterminate)} indeterminate")

    if args.csv:
        try:
            with open(args.csv, "w", encoding="utf-8", newline="") as fh:
                fh.write(matrix_to_csv(labels, matrix))
        except OSError as e:
            return fail(f"Error writing {args.csv}: {e}")
        logger.info(f"Verdict matrix written to {args.csv}")

    emit(
        args,
        moduli_to_json(labels, matrix, groups, degenerate, indeterminate),
        moduli_to_text(groups, degenerate, indeterminate),
    )
    return EXIT_OK
