"""
Report serialization module
Turns profiles, invariants, verdicts, moduli scans and oracle runs into
JSON documents, CSV matrices and plain-text tables
"""

import csv
import io
import json
from typing import Any, Dict, List, Optional, Sequence

from hpinv.algebra.coeffs import coeff_to_json, format_coeff
from hpinv.algebra.series import PuiseuxSeries
from hpinv.expr_parser import format_poly
from hpinv.germ_analysis import GermProfile, TangentLine
from hpinv.hp_invariant import GermInvariant, LineClass, PolarArc, Verdict
from hpinv.numeric_oracle import OracleReport

# CSV cell codes for the moduli verdict matrix
EQ, NEQ, IND, DEG = "EQ", "NEQ", "IND", "DEG"


def to_json(doc: Dict[str, Any]) -> str:
    """Stable JSON text: keys keep insertion order, two-space indent"""
    return json.dumps(doc, indent=2, ensure_ascii=False)


def line_to_json(line: TangentLine) -> Dict[str, Any]:
    return {"line": str(line), "slope": coeff_to_json(line.slope), "multiplicity": line.multiplicity}


def class_to_json(cls: LineClass) -> Dict[str, Any]:
    return {
        "line": str(cls.line),
        "terms": [{"h0": str(h), "c0": coeff_to_json(c)} for h, c in cls.canonical],
    }


def invariant_to_json(inv: GermInvariant) -> Dict[str, Any]:
    """{"order": k, "classes": [{"line": "x=a*y", "terms": [{"h0": "p/q", "c0": ...}]}]}"""
    return {"order": inv.k, "classes": [class_to_json(cls) for cls in inv.classes]}


def polar_arc_to_json(polar: PolarArc) -> Dict[str, Any]:
    doc: Dict[str, Any] = {
        "arc": str(polar.arc.series),
        "multiplicity": polar.arc.multiplicity,
        "h0": str(polar.leading.h0),
        "c0": coeff_to_json(polar.leading.c0),
        "tangential": polar.tangential,
    }
    if polar.tangential:
        doc["line"] = str(polar.line)
        doc["xi"] = str(polar.data.xi)
        doc["Q"] = str(polar.data.Q)
        doc["R"] = str(polar.data.R)
    return doc


def profile_to_json(
    profile: GermProfile,
    lines: Sequence[TangentLine],
    sing: Sequence[TangentLine],
    polar: Sequence[PolarArc],
) -> Dict[str, Any]:
    return {
        "germ": format_poly(profile.original),
        "order": profile.k,
        "shear": profile.shear,
        "initial_form": format_poly(profile.initial_form),
        "tangent_cone": [line_to_json(line) for line in lines],
        "singular_lines": [str(line) for line in sing],
        "polar_arcs": [polar_arc_to_json(p) for p in polar],
    }


def profile_to_text(
    profile: GermProfile,
    lines: Sequence[TangentLine],
    sing: Sequence[TangentLine],
    polar: Sequence[PolarArc],
) -> str:
    out = [
        f"germ:          {format_poly(profile.original)}",
        f"order k:       {profile.k}",
        f"initial form:  {format_poly(profile.initial_form)}",
        f"shear:         {profile.shear}" + (f"  (germ used: {format_poly(profile.f)})" if profile.shear else ""),
        "tangent cone:  " + ", ".join(f"{line} (x{line.multiplicity})" for line in lines),
        "Sing(C0):      " + (", ".join(str(line) for line in sing) or "none"),
        "polar arcs:",
    ]
    if not polar:
        out.append("  none")
    for p in polar:
        mark = f"tangential to {p.line}" if p.tangential else "not tangential"
        out.append(
            f"  {p.arc}  [mult {p.arc.multiplicity}]  h0={p.leading.h0}  "
            f"c0={format_coeff(p.leading.c0)}  {mark}"
        )
        if p.tangential:
            out.append(f"      xi={p.data.xi}  Q={p.data.Q}  R(z)={p.data.R}")
    return "\n".join(out)


def invariant_to_text(inv: GermInvariant) -> str:
    if inv.is_empty():
        return f"order {inv.k}; Inv(f) is empty"
    out = [f"order {inv.k}; {len(inv.classes)} line class(es)"]
    for cls in inv.classes:
        terms = ", ".join(str(PuiseuxSeries.monomial(c, h)) for h, c in cls.canonical)
        out.append(f"  {cls.line}: {{{terms}}}")
    return "\n".join(out)


def verdict_to_json(verdict: Verdict) -> Dict[str, Any]:
    return {
        "verdict": verdict.kind.value,
        "reason": verdict.reason.value if verdict.reason else None,
        "detail": verdict.detail,
    }


def matrix_to_csv(labels: Sequence[str], matrix: Sequence[Sequence[str]]) -> str:
    """Header row and column hold the parameter values"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["t"] + list(labels))
    for label, row in zip(labels, matrix):
        writer.writerow([label] + list(row))
    return buffer.getvalue()


def moduli_to_json(
    labels: Sequence[str],
    matrix: Sequence[Sequence[str]],
    clusters: Sequence[Sequence[str]],
    degenerate: Dict[str, str],
    indeterminate: Dict[str, str],
) -> Dict[str, Any]:
    return {
        "parameters": list(labels),
        "clusters": [list(c) for c in clusters],
        "degenerate": dict(degenerate),
        "indeterminate": dict(indeterminate),
        "matrix": [list(row) for row in matrix],
    }


def moduli_to_text(
    clusters: Sequence[Sequence[str]],
    degenerate: Dict[str, str],
    indeterminate: Dict[str, str],
) -> str:
    out = [f"{len(clusters)} cluster(s):"]
    for n, cluster in enumerate(clusters, 1):
        out.append(f"  [{n}] " + ", ".join(cluster))
    if degenerate:
        out.append("degenerate parameters:")
        out.extend(f"  {label}: {reason}" for label, reason in degenerate.items())
    if indeterminate:
        out.append("indeterminate parameters:")
        out.extend(f"  {label}: {reason}" for label, reason in indeterminate.items())
    return "\n".join(out)


def _fmt(value: Optional[float]) -> str:
    return "-" if value is None else f"{value:.6g}"


def oracle_to_json(report: OracleReport) -> Dict[str, Any]:
    return {
        "passed": report.passed,
        "r_start": report.r_start,
        "steps": report.steps,
        "errors": list(report.errors),
        "arcs": [
            {
                "arc": check.arc,
                "h0": str(check.h0),
                "h0_est": check.h0_est,
                "c0_abs": check.c0_abs,
                "c0_abs_est": check.c0_abs_est,
                "h0_error": check.h0_error,
                "c0_error": check.c0_error,
                "passed": check.passed,
                "note": check.note,
            }
            for check in report.checks
        ],
    }


def oracle_to_text(report: OracleReport) -> str:
    out: List[str] = [f"oracle {'PASS' if report.passed else 'FAIL'} (r_start={report.r_start:.1e}, {report.steps} radii)"]
    for check in report.checks:
        out.append(
            f"  {check.arc}: h0={check.h0} est={_fmt(check.h0_est)} "
            f"|c0|={_fmt(check.c0_abs)} est={_fmt(check.c0_abs_est)} "
            f"{'ok' if check.passed else 'MISMATCH'} {check.note}".rstrip()
        )
    out.extend(f"  error: {e}" for e in report.errors)
    return "\n".join(out)
