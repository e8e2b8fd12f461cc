"""
Floating-point oracle for the symbolic pipeline
Tracks polar roots of df/dx(x, r) as r shrinks, fits log|f| against log r
and compares the fitted leading terms with the certified ones
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import mpmath
import numpy as np
from mpmath import mp

from hpinv.algebra.coeffs import to_complex
from hpinv.algebra.poly import BivariatePoly
from hpinv.config import (
    ORACLE_C0_TOL,
    ORACLE_H0_TOL,
    ORACLE_R_START,
    ORACLE_RATIO,
    ORACLE_STEPS,
    PRECISION_BITS,
    PRECISION_CAP,
    TRUNC_GUARD,
)
from hpinv.errors import DegenerateFit, HPInvError, OracleError, RootCollision

logger = logging.getLogger(__name__)

# Working digits: double precision first, one extended retry
DIGITS = (15, 30)
# Roots closer than this in x / r are one polar branch counted with multiplicity
MERGE_TOL = 1e-6
UNDERFLOW_GUARD = 1e-300
ESCALATIONS = 2


@dataclass
class BranchTrack:
    """One polar root followed from r_start down by nearest-root continuation"""

    radii: List[float] = field(default_factory=list)
    points: List[complex] = field(default_factory=list)
    values: List[complex] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.radii)


@dataclass
class ArcCheck:
    arc: str
    h0: Fraction
    c0_abs: float
    h0_est: Optional[float] = None
    c0_abs_est: Optional[float] = None
    passed: bool = False
    note: str = ""

    @property
    def h0_error(self) -> Optional[float]:
        if self.h0_est is None:
            return None
        return abs(self.h0_est - float(self.h0)) / float(self.h0)

    @property
    def c0_error(self) -> Optional[float]:
        if self.c0_abs_est is None:
            return None
        return abs(self.c0_abs_est - self.c0_abs) / self.c0_abs


@dataclass
class OracleReport:
    r_start: float
    steps: int
    checks: List[ArcCheck] = field(default_factory=list)
    errors: List[str] = field(default_factory=list)
    # symbolic pipeline raised before any tracking
    aborted: bool = False

    @property
    def passed(self) -> bool:
        return not self.errors and all(check.passed for check in self.checks)


def _rows(p: BivariatePoly) -> Dict[int, List[Tuple[int, mpmath.mpc]]]:
    rows: Dict[int, List[Tuple[int, mpmath.mpc]]] = {}
    for (i, j), c in p.items():
        rows.setdefault(i, []).append((j, c.to_mpc()))
    return rows


def _evaluate(p: BivariatePoly, x, y) -> mpmath.mpc:
    total = mpmath.mpc(0)
    for (i, j), c in p.items():
        total += c.to_mpc() * mpmath.power(x, i) * mpmath.power(y, j)
    return total


def _polar_roots(fx: BivariatePoly, r: mpmath.mpf, count: int) -> List[mpmath.mpc]:
    """The ``count`` smallest roots of df/dx(x, r), computed in u = x / r"""
    rows = _rows(fx)
    degree = max(rows)
    zeros = 0
    while zeros <= degree and zeros not in rows:
        zeros += 1
    coeffs = []
    for i in range(degree, zeros - 1, -1):
        value = sum((c * mpmath.power(r, j) for j, c in rows.get(i, [])), mpmath.mpc(0))
        coeffs.append(value * mpmath.power(r, i))
    roots = [mpmath.mpc(0)] * zeros
    if len(coeffs) > 1:
        found = mpmath.polyroots(coeffs, maxsteps=200 + 20 * degree, extraprec=4 * mp.prec)
        roots.extend(mpmath.mpc(u) * r for u in found)
    roots.sort(key=abs)
    return roots[:count]


def _roots_at(fx: BivariatePoly, r: float, count: int) -> List[mpmath.mpc]:
    for digits in DIGITS:
        try:
            with mp.workdps(digits):
                return _polar_roots(fx, mpmath.mpf(r), count)
        except mp.NoConvergence:
            logger.debug(f"Root iteration at r={r} did not converge with {digits} digits")
    raise OracleError(f"no root convergence at r={r}")


def _distinct(roots: List[mpmath.mpc], r: float) -> List[mpmath.mpc]:
    kept: List[mpmath.mpc] = []
    for z in roots:
        if all(abs(z - w) / r > MERGE_TOL for w in kept):
            kept.append(z)
    return kept


def track_polar(
    f: BivariatePoly,
    r_start: float = ORACLE_R_START,
    steps: int = ORACLE_STEPS,
    ratio: float = ORACLE_RATIO,
) -> List[BranchTrack]:
    """
    Follow the polar roots near the origin along y = r_start * ratio^n

    Args:
        f: Mini-regular germ of order k
        r_start: First radius
        steps: Number of radii (at least 8)
        ratio: Geometric decay of the radius

    Returns:
        One track per distinct polar root at r_start

    Raises:
        RootCollision: two tracks continue to the same root
    """
    if steps < 8:
        raise ValueError("at least 8 radii are needed for a fit")
    k = f.order()
    fx = f.derivative("x")
    if k < 2 or fx.is_zero():
        return []
    count = k - 1

    radii = [r_start * ratio ** n for n in range(steps)]
    previous = _distinct(_roots_at(fx, radii[0], count), radii[0])
    tracks = [BranchTrack() for _ in previous]
    for r in radii:
        roots = _roots_at(fx, r, count)
        chosen = [min(range(len(roots)), key=lambda n: abs(roots[n] - last)) for last in previous]
        if len(set(chosen)) < len(chosen):
            raise RootCollision(f"polar tracks merge at r={r:.3e}; lower r_start")
        for track, index in zip(tracks, chosen):
            point = roots[index]
            with mp.workdps(DIGITS[-1]):
                value = _evaluate(f, point, mpmath.mpf(r))
            track.radii.append(r)
            track.points.append(complex(point))
            track.values.append(complex(value))
        previous = [roots[n] for n in chosen]
    logger.debug(f"Tracked {len(tracks)} polar roots over {steps} radii from r={r_start}")
    return tracks


def fit_leading(track: BranchTrack) -> Tuple[float, float]:
    """
    Least-squares fit of log|f| = h0 * log r + log|c0| on the smaller-radius half

    Returns:
        (h0_est, |c0|_est)

    Raises:
        DegenerateFit: fewer than 8 samples or values below the underflow guard
    """
    if len(track) < 8:
        raise DegenerateFit(f"{len(track)} samples, need at least 8")
    half = len(track) // 2
    radii = track.radii[half:]
    values = track.values[half:]
    if any(abs(v) < UNDERFLOW_GUARD for v in values):
        raise DegenerateFit("f vanishes numerically along the track")
    xs = np.array([float(mpmath.log(r)) for r in radii])
    ys = np.array([float(mpmath.log(abs(v))) for v in values])
    slope, intercept = np.polyfit(xs, ys, 1)
    return float(slope), float(np.exp(intercept))


def _arc_point(series, r: float) -> complex:
    """Principal-branch value of a Puiseux series at y = r > 0"""
    total = mpmath.mpc(0)
    for e, c in series.items():
        total += to_complex(c) * mpmath.power(mpmath.mpf(r), mpmath.mpf(e.numerator) / e.denominator)
    return complex(total)


def _check(polar_arcs, tracks: List[BranchTrack], h0_tol: float, c0_tol: float) -> List[ArcCheck]:
    checks = []
    for polar in polar_arcs:
        c0_abs = float(abs(to_complex(polar.leading.c0)))
        check = ArcCheck(arc=str(polar.arc), h0=polar.leading.h0, c0_abs=c0_abs)
        checks.append(check)
        if not tracks:
            check.note = "no numeric track"
            continue
        r_end = tracks[0].radii[-1]
        target = _arc_point(polar.arc.series, r_end)
        track = min(tracks, key=lambda t: abs(t.points[-1] - target))
        try:
            check.h0_est, check.c0_abs_est = fit_leading(track)
        except DegenerateFit as e:
            check.note = str(e)
            continue
        check.passed = check.h0_error <= h0_tol and check.c0_error <= c0_tol
        if not check.passed:
            check.note = f"h0 error {check.h0_error:.2e}, |c0| error {check.c0_error:.2e}"
    return checks


def cross_check(
    f: BivariatePoly,
    r_start: float = ORACLE_R_START,
    steps: int = ORACLE_STEPS,
    ratio: float = ORACLE_RATIO,
    h0_tol: float = ORACLE_H0_TOL,
    c0_tol: float = ORACLE_C0_TOL,
    bits: int = PRECISION_BITS,
    cap: int = PRECISION_CAP,
    guard: int = TRUNC_GUARD,
) -> OracleReport:
    """
    Compare numeric fits with the symbolic leading terms of every polar arc

    r_start is lowered tenfold, at most twice, while tracks collide or
    disagree. Failures end up in the report rather than being raised.
    bits, cap and guard drive the symbolic side as in polar_report.
    """
    from hpinv.germ_analysis import analyze_germ
    from hpinv.hp_invariant import polar_report

    try:
        profile = analyze_germ(f)
        polar = polar_report(profile, bits, cap, guard)
    except HPInvError as e:
        return OracleReport(r_start, steps, errors=[f"symbolic pipeline failed: {e}"], aborted=True)

    report = OracleReport(r_start, steps)
    for attempt in range(ESCALATIONS + 1):
        report = OracleReport(r_start, steps)
        try:
            tracks = track_polar(profile.f, r_start, steps, ratio)
            report.checks = _check(polar, tracks, h0_tol, c0_tol)
        except OracleError as e:
            report.errors.append(f"{type(e).__name__}: {e}")
        if report.passed:
            break
        if attempt < ESCALATIONS:
            logger.info(f"Oracle mismatch at r_start={r_start:.1e}; retrying at {r_start / 10:.1e}")
            r_start /= 10
    return report
