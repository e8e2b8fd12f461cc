"""
Unit tests for report serialization
"""

import json
import unittest

from hpinv.expr_parser import parse_poly
from hpinv.germ_analysis import analyze_germ, singular_cone_lines, tangent_cone_lines
from hpinv.hp_invariant import DistinctReason, Verdict, VerdictKind, invariant, polar_report
from hpinv.numeric_oracle import ArcCheck, OracleReport
from hpinv.reports import (
    invariant_to_json,
    invariant_to_text,
    matrix_to_csv,
    moduli_to_text,
    oracle_to_text,
    profile_to_json,
    to_json,
    verdict_to_json,
)


class TestInvariantReports(unittest.TestCase):
    """Test cases for invariant documents"""

    def test_cusp_json(self):
        """Test the JSON document of Inv(x^2 - y^3)"""
        inv = invariant(analyze_germ(parse_poly("x^2 - y^3")))
        expected = {
            "order": 2,
            "classes": [{"line": "x=0", "terms": [{"h0": "3", "c0": {"exact": "1"}}]}],
        }
        self.assertEqual(json.loads(to_json(invariant_to_json(inv))), expected)

    def test_empty_text(self):
        """Test the text of an empty invariant"""
        inv = invariant(analyze_germ(parse_poly("x^2 - y^2")))
        self.assertEqual(invariant_to_text(inv), "order 2; Inv(f) is empty")

    def test_family_text(self):
        """Test that canonical terms print like series monomials"""
        inv = invariant(analyze_germ(parse_poly("x^3 - 3*x*y^4 + y^6")))
        self.assertEqual(invariant_to_text(inv), "order 3; 1 line class(es)\n  x=0: {-3*y^6, y^6}")


    def test_profile_json(self):
        """Test the analyze document of the cusp"""
        profile = analyze_germ(parse_poly("x^2 - y^3"))
        lines = tangent_cone_lines(profile)
        doc = profile_to_json(profile, lines, singular_cone_lines(profile), polar_report(profile))
        self.assertEqual(doc["order"], 2)
        self.assertEqual(doc["shear"], 0)
        self.assertEqual(doc["singular_lines"], ["x=0"])
        self.assertEqual(doc["polar_arcs"][0]["h0"], "3")
        self.assertEqual(doc["polar_arcs"][0]["xi"], "3/2")


class TestVerdictReports(unittest.TestCase):
    """Test cases for verdict and moduli documents"""

    def test_verdict_json(self):
        """Test verdict serialization"""
        verdict = Verdict(VerdictKind.DISTINCT, DistinctReason.MULTIPLICITY_MISMATCH, "ord0 2 vs 3")
        self.assertEqual(
            verdict_to_json(verdict),
            {"verdict": "Distinct", "reason": "MultiplicityMismatch", "detail": "ord0 2 vs 3"},
        )
        self.assertIsNone(verdict_to_json(Verdict(VerdictKind.INVARIANTS_EQUAL))["reason"])

    def test_matrix_csv(self):
        """Test the verdict matrix with parameter headers"""
        csv_text = matrix_to_csv(["1", "-1"], [["EQ", "EQ"], ["EQ", "EQ"]])
        self.assertEqual(csv_text, "t,1,-1\n1,EQ,EQ\n-1,EQ,EQ\n")

    def test_moduli_text(self):
        """Test the cluster listing"""
        text = moduli_to_text([["1", "-1"], ["2"]], {"0": "zero germ"}, {})
        self.assertIn("2 cluster(s):", text)
        self.assertIn("[1] 1, -1", text)
        self.assertIn("0: zero germ", text)
        self.assertNotIn("indeterminate", text)


class TestOracleReports(unittest.TestCase):
    """Test cases for oracle text"""

    def test_mismatch_line(self):
        """Test that failing arcs and errors are listed"""
        report = OracleReport(1e-2, 16)
        report.checks.append(ArcCheck(arc="0", h0=3, c0_abs=1.0, h0_est=3.5, c0_abs_est=1.0))
        report.errors.append("RootCollision: merged")
        text = oracle_to_text(report)
        self.assertTrue(text.startswith("oracle FAIL"))
        self.assertIn("MISMATCH", text)
        self.assertIn("error: RootCollision: merged", text)


if __name__ == '__main__':
    unittest.main()
