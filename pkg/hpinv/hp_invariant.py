"""
Bi-Lipschitz polar invariant of a plane curve germ
Polar arcs, their leading terms, grouping by singular tangent line,
canonical forms under y -> c*y and comparison of two germs
"""

import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cmp_to_key, reduce
from typing import Any, Dict, List, Optional, Sequence, Tuple

import sympy
from sympy import QQ_I

from hpinv.algebra.balls import BallComplex
from hpinv.algebra.coeffs import (
    CoeffValue,
    coeffs_equal,
    compare_coeffs,
    format_coeff,
    is_exact,
    sort_key,
)
from hpinv.algebra.gaussian import GaussianRational
from hpinv.algebra.number_field import common_field, is_algebraic
from hpinv.algebra.poly import X, Y, BivariatePoly
from hpinv.algebra.precision import retry_with_precision
from hpinv.algebra.univariate import UnivariatePoly, uni_roots
from hpinv.asymptotics import ArcLocalData, certified_arc_data
from hpinv.config import MAX_REFINEMENTS, PRECISION_BITS, PRECISION_CAP, TRUNC_GUARD
from hpinv.errors import (
    ArcInZeroSet,
    ConeConsistencyViolation,
    IndeterminateComparison,
    PrecisionExhausted,
    SharedComponent,
)
from hpinv.germ_analysis import (
    GermProfile,
    TangentLine,
    analyze_germ,
    cone_is_squarefree,
    require_reduced,
    singular_cone_lines,
)
from hpinv.newton_puiseux import PuiseuxArc, newton_polygon

logger = logging.getLogger(__name__)

CanonicalForm = Tuple[Tuple[Fraction, CoeffValue], ...]


@dataclass(frozen=True)
class ArcLeadingTerm:
    """c0 * y^h0, the leading term of f along a polar arc"""

    h0: Fraction
    c0: CoeffValue

    def __str__(self) -> str:
        return f"({format_coeff(self.c0)})*y^{self.h0}"


@dataclass(frozen=True)
class PolarArc:
    """A polar arc with its certified data along f"""

    arc: PuiseuxArc
    data: ArcLocalData
    leading: ArcLeadingTerm
    tangential: bool
    line: Optional[TangentLine] = None


@dataclass(frozen=True)
class LineClass:
    """I(l): leading terms of the tangential polar arcs tangent to one singular line"""

    line: TangentLine
    raw_terms: Tuple[ArcLeadingTerm, ...]
    canonical: CanonicalForm

    def exponents(self) -> List[Fraction]:
        return sorted(t.h0 for t in self.raw_terms)


@dataclass(frozen=True)
class GermInvariant:
    k: int
    classes: Tuple[LineClass, ...] = field(default_factory=tuple)

    def is_empty(self) -> bool:
        return not self.classes


class VerdictKind(Enum):
    DISTINCT = "Distinct"
    INVARIANTS_EQUAL = "InvariantsEqual"
    INDETERMINATE = "Indeterminate"


class DistinctReason(Enum):
    MULTIPLICITY_MISMATCH = "MultiplicityMismatch"
    INVARIANT_MISMATCH = "InvariantMismatch"


@dataclass(frozen=True)
class Verdict:
    """
    Outcome of compare. InvariantsEqual is a necessary condition for
    Lipschitz or Holder equivalence, never a sufficient one.
    """

    kind: VerdictKind
    reason: Optional[DistinctReason] = None
    detail: str = ""

    def __str__(self) -> str:
        if self.reason is not None:
            return f"{self.kind.value}({self.reason.value}): {self.detail}"
        return f"{self.kind.value}: {self.detail}" if self.detail else self.kind.value


# Polar arcs

def _polar_arcs(
    profile: GermProfile,
    guard: int = TRUNC_GUARD,
    max_refinements: int = MAX_REFINEMENTS,
) -> List[PolarArc]:
    require_reduced(profile)
    if profile.k == 1:
        # df/dx(0, 0) != 0: no polar branch passes through the origin
        return []
    curve = profile.f.derivative("x")
    try:
        pairs = certified_arc_data(profile.f, curve, guard=guard, max_refinements=max_refinements)
    except ArcInZeroSet as e:
        raise SharedComponent(str(e)) from e

    sing_lines = singular_cone_lines(profile)
    values: Optional[BivariatePoly] = None
    arcs = []
    for arc, data in pairs:
        leading = ArcLeadingTerm(data.h0, data.c0)
        tangential = data.h0 > profile.k
        if tangential and not is_exact(leading.c0):
            if values is None:
                values = polar_values(profile.f)
            leading = exact_leading_term(values, leading)
        line = _match_line(arc.tangent_coefficient, sing_lines) if tangential else None
        arcs.append(PolarArc(arc, data, leading, tangential, line))
    logger.info(
        f"{len(arcs)} polar arcs ({sum(a.arc.multiplicity for a in arcs)} branches), "
        f"{sum(a.tangential for a in arcs)} tangential"
    )
    return arcs


def polar_values(f: BivariatePoly) -> BivariatePoly:
    """
    D(z, y) = Res_x(df/dx, f - z), with z stored in the x slot.
    Its roots z(y) are the values of f along the branches of the polar curve.
    """
    z = sympy.Symbol("z")
    gens = (X, Y, z)
    polar = sympy.Poly(f.derivative("x").to_sympy().as_expr(), *gens, domain=QQ_I)
    shifted = sympy.Poly(f.to_sympy().as_expr() - z, *gens, domain=QQ_I)
    # eliminating x leaves a polynomial in (y, z)
    resultant = polar.resultant(shifted)
    return BivariatePoly({(i, j): GaussianRational.from_sympy(c) for (j, i), c in resultant.terms()})


def exact_leading_term(values: BivariatePoly, leading: ArcLeadingTerm) -> ArcLeadingTerm:
    """
    Replace a ball c0 by the root it encloses of the characteristic polynomial
    of the slope-h0 edge of the polar values: an exact Gaussian rational, or
    a ball tagged with its irreducible factor

    Raises:
        IndeterminateComparison: the ball meets several roots
    """
    if is_exact(leading.c0):
        return leading
    edge = next(
        (e for e in newton_polygon(values, values.degree_in("x")) if e.slope == leading.h0),
        None,
    )
    if edge is None:
        raise IndeterminateComparison(f"no polar value of order {leading.h0} to pin {format_coeff(leading.c0)}")
    ball = BallComplex.coerce(leading.c0)
    hits = [root for root, _ in uni_roots(edge.char_poly) if BallComplex.coerce(root).overlaps(ball)]
    if len(hits) != 1:
        raise IndeterminateComparison(f"c0 {format_coeff(leading.c0)} meets {len(hits)} polar values")
    logger.debug(f"c0 {format_coeff(leading.c0)} pinned to a root of {edge.char_poly}")
    return ArcLeadingTerm(leading.h0, hits[0])


def _match_line(slope: CoeffValue, lines: Sequence[TangentLine]) -> TangentLine:
    undecided = False
    for line in lines:
        same = coeffs_equal(slope, line.slope)
        if same:
            return line
        if same is None:
            undecided = True
    if undecided:
        raise IndeterminateComparison(f"tangent {format_coeff(slope)} not yet matched to a singular line")
    raise ConeConsistencyViolation(f"tangential polar arc with tangent x={format_coeff(slope)}*y misses Sing(C0)")


def polar_report(profile: GermProfile, bits: int = PRECISION_BITS, cap: int = PRECISION_CAP,
                 guard: int = TRUNC_GUARD) -> List[PolarArc]:
    """Every polar arc with its leading term, tangency and line"""
    return retry_with_precision(lambda: _polar_arcs(profile, guard), bits, cap)


def polar_arcs(profile: GermProfile, bits: int = PRECISION_BITS, cap: int = PRECISION_CAP,
               guard: int = TRUNC_GUARD) -> List[PuiseuxArc]:
    """
    Branches of the polar curve df/dx = 0, truncated past their xi certificate

    Multiplicities add up to k - 1.

    Raises:
        SharedComponent: f vanishes along a polar arc
    """
    return [polar.arc for polar in polar_report(profile, bits, cap, guard)]


def tangential_arcs(profile: GermProfile, bits: int = PRECISION_BITS, cap: int = PRECISION_CAP,
                    guard: int = TRUNC_GUARD) -> List[Tuple[PuiseuxArc, ArcLeadingTerm, TangentLine]]:
    """
    Polar arcs with h0 > k, each with its leading term and singular tangent line

    Raises:
        ConeConsistencyViolation: a tangential arc is not tangent to Sing(C0)
    """
    return [
        (polar.arc, polar.leading, polar.line)
        for polar in polar_report(profile, bits, cap, guard)
        if polar.tangential
    ]


# Canonical forms

def _term_cmp(a: Tuple[Fraction, CoeffValue], b: Tuple[Fraction, CoeffValue]) -> int:
    if a[0] != b[0]:
        return -1 if a[0] < b[0] else 1
    return compare_coeffs(a[1], b[1])


def _form_cmp(a: CanonicalForm, b: CanonicalForm) -> int:
    for x, y in zip(a, b):
        verdict = _term_cmp(x, y)
        if verdict:
            return verdict
    return (len(a) > len(b)) - (len(a) < len(b))


def action_exponents(exponents: Sequence[Fraction]) -> List[int]:
    """
    Integers m_j with c_j -> c_j * w^(m_j) describing y -> c*y, w = c^(1/N),
    divided by their gcd so that every w acts nontrivially
    """
    n = reduce(lambda acc, h: acc * h.denominator // math.gcd(acc, h.denominator), exponents, 1)
    scaled = [int(h * n) for h in exponents]
    common = reduce(math.gcd, scaled, 0) or 1
    return [m // common for m in scaled]


def canonicalize(terms: Sequence[ArcLeadingTerm]) -> CanonicalForm:
    """
    Canonical representative of a multiset of terms c_j y^(h_j) under y -> c*y

    Every term of least exponent is tried as pivot; for each, the rescalings
    taking its coefficient to 1 are enumerated and the least resulting sorted
    term list is returned.

    Raises:
        ValueError: no terms
        IndeterminateComparison: ball coefficients too coarse to order
    """
    if not terms:
        raise ValueError("cannot canonicalize an empty class")
    exponents = [Fraction(t.h0) for t in terms]
    coeffs = [t.c0 for t in terms]
    m = action_exponents(exponents)
    lowest = min(exponents)

    pivots: List[int] = []
    for j, h in enumerate(exponents):
        if h == lowest and not any(coeffs_equal(coeffs[j], coeffs[p]) for p in pivots):
            pivots.append(j)

    candidates: List[CanonicalForm] = []
    for p in pivots:
        target = GaussianRational(1) / coeffs[p]
        roots = uni_roots(UnivariatePoly([-target] + [0] * (m[p] - 1) + [1]))
        for w, _ in roots:
            scaled = [c * w ** mj for c, mj in zip(coeffs, m)]
            scaled[p] = GaussianRational(1)
            form = sorted(zip(exponents, scaled), key=cmp_to_key(_term_cmp))
            candidates.append(tuple(form))
    return min(candidates, key=cmp_to_key(_form_cmp))


def _bezout(values: Sequence[int]) -> List[int]:
    """Coefficients b with sum b_j * values_j = gcd(values)"""

    def ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
        if b == 0:
            return (a, 1, 0) if a >= 0 else (-a, -1, 0)
        g, s, t = ext_gcd(b, a % b)
        return g, t, s - (a // b) * t

    coeffs = [1]
    g = values[0]
    for v in values[1:]:
        g, s, t = ext_gcd(g, v)
        coeffs = [c * s for c in coeffs] + [t]
    return coeffs


def exact_orbit_match(a: Sequence[ArcLeadingTerm], b: Sequence[ArcLeadingTerm]) -> bool:
    """
    Decide exactly whether two multisets of terms lie in one orbit of y -> c*y

    Coefficients must be exact or tagged balls; tagged ones are first embedded
    with the others in one number field. Within each exponent group the ratio
    rho_g = w^(m_g) must map one coefficient multiset onto the other; a common
    w exists iff the Bezout combination u = prod rho_g^(b_g) satisfies
    u^(e_g) = rho_g.

    Raises:
        IndeterminateComparison: a tagged ball cannot be told from a conjugate root yet
    """
    if Counter(t.h0 for t in a) != Counter(t.h0 for t in b):
        return False
    coeffs = [t.c0 for t in a] + [t.c0 for t in b]
    if all(is_exact(c) for c in coeffs):
        one: Any = GaussianRational(1)
        elements: List[Any] = coeffs
    else:
        one, elements = common_field(coeffs)

    groups_a: Dict[Fraction, List[Any]] = {}
    groups_b: Dict[Fraction, List[Any]] = {}
    for t, c in zip(a, elements[:len(a)]):
        groups_a.setdefault(Fraction(t.h0), []).append(c)
    for t, c in zip(b, elements[len(a):]):
        groups_b.setdefault(Fraction(t.h0), []).append(c)

    heights = sorted(groups_a)
    exponents = action_exponents(heights)
    ratios: List[List[Any]] = []
    for h in heights:
        source, target = groups_a[h], Counter(groups_b[h])
        options: List[Any] = []
        for d in target:
            rho = d / source[0]
            if rho not in options and Counter(c * rho for c in source) == target:
                options.append(rho)
        if not options:
            return False
        ratios.append(options)

    bezout = _bezout(exponents)
    for choice in itertools.product(*ratios):
        u = one
        for rho, b_g in zip(choice, bezout):
            u = u * rho ** b_g
        if all(u ** e == rho for rho, e in zip(choice, exponents)):
            return True
    return False


def _canonical_equal(a: CanonicalForm, b: CanonicalForm) -> Optional[bool]:
    if len(a) != len(b) or any(x[0] != y[0] for x, y in zip(a, b)):
        return False
    verdict: Optional[bool] = True
    for x, y in zip(a, b):
        same = coeffs_equal(x[1], y[1])
        if same is False:
            return False
        if same is None:
            verdict = None
    return verdict


def classes_equivalent(a: LineClass, b: LineClass) -> Optional[bool]:
    """
    Same orbit? Exact and tagged terms are matched exactly; otherwise
    canonical forms are compared and None reports balls that cannot be told apart
    """
    if a.exponents() != b.exponents():
        return False
    raw = a.raw_terms + b.raw_terms
    if all(is_algebraic(t.c0) for t in raw):
        return exact_orbit_match(a.raw_terms, b.raw_terms)
    return _canonical_equal(a.canonical, b.canonical)


# Invariant

def _form_key(form: CanonicalForm):
    return tuple((h, sort_key(c)) for h, c in form)


def _invariant(profile: GermProfile, shortcut: bool, guard: int) -> GermInvariant:
    require_reduced(profile)
    if shortcut and cone_is_squarefree(profile):
        logger.info("Tangent cone is k distinct lines; invariant is empty")
        return GermInvariant(profile.k)

    grouped: Dict[int, Tuple[TangentLine, List[ArcLeadingTerm]]] = {}
    for polar in _polar_arcs(profile, guard):
        if not polar.tangential:
            continue
        _, terms = grouped.setdefault(id(polar.line), (polar.line, []))
        terms.extend([polar.leading] * polar.arc.multiplicity)

    classes = []
    for line, terms in grouped.values():
        classes.append(LineClass(line, tuple(terms), canonicalize(terms)))
    classes.sort(key=lambda c: _form_key(c.canonical))
    logger.info(f"Invariant of order {profile.k}: {len(classes)} line classes")
    return GermInvariant(profile.k, tuple(classes))


def invariant(
    profile: GermProfile,
    shortcut: bool = True,
    bits: int = PRECISION_BITS,
    cap: int = PRECISION_CAP,
    guard: int = TRUNC_GUARD,
) -> GermInvariant:
    """
    Inv(f): the classes I(l) over the lines l of Sing(C0)

    Args:
        profile: Reduced germ in mini-regular coordinates
        shortcut: Return the empty invariant for a squarefree tangent cone
            without expanding polar arcs
        bits: Starting working precision
        cap: Precision cap
        guard: Extra Puiseux orders past the xi certificate

    Raises:
        NotReduced, SharedComponent, ConeConsistencyViolation, PrecisionExhausted
    """
    return retry_with_precision(lambda: _invariant(profile, shortcut, guard), bits, cap)


def _match_classes(a: Sequence[LineClass], b: Sequence[LineClass], used: Tuple[bool, ...]) -> Optional[bool]:
    """Perfect matching of classes: True if one exists with certain pairs, None if only with undecided ones"""
    if not a:
        return True
    best: Optional[bool] = False
    for j, other in enumerate(b):
        if used[j]:
            continue
        pair = classes_equivalent(a[0], other)
        if pair is False:
            continue
        rest = _match_classes(a[1:], b, used[:j] + (True,) + used[j + 1:])
        if pair and rest:
            return True
        if rest is not False:
            best = None
    return best


def invariants_equal(a: GermInvariant, b: GermInvariant) -> Optional[bool]:
    """Equality of invariants as multisets of classes; None when undecided"""
    if a.k != b.k or len(a.classes) != len(b.classes):
        return False
    return _match_classes(a.classes, b.classes, (False,) * len(b.classes))


def _compare(f: BivariatePoly, g: BivariatePoly, guard: int) -> Verdict:
    prof_f, prof_g = analyze_germ(f, strict=False), analyze_germ(g, strict=False)
    if prof_f.k != prof_g.k:
        return Verdict(
            VerdictKind.DISTINCT, DistinctReason.MULTIPLICITY_MISMATCH, f"ord0 {prof_f.k} vs {prof_g.k}"
        )
    inv_f = _invariant(prof_f, True, guard)
    inv_g = _invariant(prof_g, True, guard)
    same = invariants_equal(inv_f, inv_g)
    if same is None:
        raise IndeterminateComparison("invariant classes overlap but cannot be matched")
    if same:
        return Verdict(VerdictKind.INVARIANTS_EQUAL, detail=f"{len(inv_f.classes)} classes agree")
    return Verdict(
        VerdictKind.DISTINCT,
        DistinctReason.INVARIANT_MISMATCH,
        f"{len(inv_f.classes)} vs {len(inv_g.classes)} classes, no class-by-class match",
    )


def compare(
    f: BivariatePoly,
    g: BivariatePoly,
    bits: int = PRECISION_BITS,
    cap: int = PRECISION_CAP,
    guard: int = TRUNC_GUARD,
) -> Verdict:
    """
    Necessary-condition test for Lipschitz/Holder equivalence of two germs

    Multiplicities are compared first; then the invariants.
    Precision exhaustion yields an Indeterminate verdict.

    Raises:
        GermError subclasses for invalid germs (zero, non-reduced, ...)
    """
    try:
        return retry_with_precision(lambda: _compare(f, g, guard), bits, cap)
    except PrecisionExhausted as e:
        logger.info(f"Comparison undecided: {e}")
        return Verdict(VerdictKind.INDETERMINATE, detail=str(e))


def compare_invariants(a: GermInvariant, b: GermInvariant,
                       bits: int = PRECISION_BITS, cap: int = PRECISION_CAP) -> Verdict:
    """Verdict for two precomputed invariants"""
    if a.k != b.k:
        return Verdict(VerdictKind.DISTINCT, DistinctReason.MULTIPLICITY_MISMATCH, f"ord0 {a.k} vs {b.k}")

    def decide() -> Optional[bool]:
        same = invariants_equal(a, b)
        if same is None:
            raise IndeterminateComparison("invariant classes overlap but cannot be matched")
        return same

    try:
        same = retry_with_precision(decide, bits, cap)
    except PrecisionExhausted as e:
        return Verdict(VerdictKind.INDETERMINATE, detail=str(e))
    if same:
        return Verdict(VerdictKind.INVARIANTS_EQUAL)
    return Verdict(VerdictKind.DISTINCT, DistinctReason.INVARIANT_MISMATCH)
