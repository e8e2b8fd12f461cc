"""
Unit tests for the numeric oracle
Tests for polar root tracking, leading-term fits and the cross-check
"""

import math
import random
import unittest
from unittest.mock import patch

from hpinv.errors import DegenerateFit, PrecisionExhausted
from hpinv.expr_parser import parse_poly
from hpinv.numeric_oracle import BranchTrack, cross_check, fit_leading, track_polar


class TestTrackPolar(unittest.TestCase):
    """Test cases for track_polar"""

    def test_cusp_track(self):
        """Test the polar root x = 0 of x^2 - y^3"""
        tracks = track_polar(parse_poly("x^2 - y^3"), r_start=1e-2, steps=10, ratio=0.5)
        self.assertEqual(len(tracks), 1)
        track = tracks[0]
        self.assertEqual(len(track), 10)
        for r, point, value in zip(track.radii, track.points, track.values):
            self.assertEqual(point, 0)
            self.assertAlmostEqual(value.real / r ** 3, -1.0, places=9)

    def test_two_tracks(self):
        """Test that the polar roots +-y^2 of f_1 are followed separately"""
        tracks = track_polar(parse_poly("x^3 - 3*x*y^4 + y^6"), r_start=1e-2, steps=8)
        self.assertEqual(len(tracks), 2)
        ends = sorted(t.points[-1].real / t.radii[-1] ** 2 for t in tracks)
        self.assertAlmostEqual(ends[0], -1.0, places=6)
        self.assertAlmostEqual(ends[1], 1.0, places=6)

    def test_smooth_germ(self):
        """Test that order-one germs have nothing to track"""
        self.assertEqual(track_polar(parse_poly("x + y^2")), [])

    def test_too_few_steps(self):
        """Test that fewer than 8 radii are refused"""
        with self.assertRaises(ValueError):
            track_polar(parse_poly("x^2 - y^3"), steps=4)


class TestFitLeading(unittest.TestCase):
    """Test cases for fit_leading"""

    def setUp(self):
        """Set up test fixtures"""
        self.radii = [1e-2 * 0.5 ** n for n in range(12)]

    def test_power_law(self):
        """Test that a pure power law is recovered"""
        rng = random.Random(7)
        phases = [complex(math.cos(a), math.sin(a)) for a in (rng.uniform(0, 6) for _ in self.radii)]
        track = BranchTrack(
            radii=list(self.radii),
            points=[0j] * len(self.radii),
            values=[2.0 * r ** 3 * p for r, p in zip(self.radii, phases)],
        )
        h0, c0 = fit_leading(track)
        self.assertAlmostEqual(h0, 3.0, places=9)
        self.assertAlmostEqual(c0, 2.0, places=9)

    def test_too_short(self):
        """Test that short tracks are refused"""
        track = BranchTrack(radii=[1.0] * 4, points=[0j] * 4, values=[1.0] * 4)
        with self.assertRaises(DegenerateFit):
            fit_leading(track)

    def test_vanishing_values(self):
        """Test that values below the underflow guard are refused"""
        track = BranchTrack(radii=list(self.radii), points=[0j] * 12, values=[0j] * 12)
        with self.assertRaises(DegenerateFit):
            fit_leading(track)


class TestCrossCheck(unittest.TestCase):
    """Test cases for cross_check"""

    def test_cusp_passes(self):
        """Test agreement on x^2 - y^3"""
        report = cross_check(parse_poly("x^2 - y^3"))
        self.assertTrue(report.passed)
        self.assertEqual(len(report.checks), 1)
        self.assertLess(report.checks[0].h0_error, 1e-3)

    def test_transversal_arc_matched(self):
        """Test that the h0 = k arc of x^2 - y^2 is also checked"""
        report = cross_check(parse_poly("x^2 - y^2"))
        self.assertTrue(report.passed)
        self.assertEqual(len(report.checks), 1)

    def test_symbolic_failure_reported(self):
        """Test that an invalid germ ends up in the report"""
        report = cross_check(parse_poly("(x - y)^2"))
        self.assertFalse(report.passed)
        self.assertTrue(report.aborted)
        self.assertIn("symbolic pipeline failed", report.errors[0])

    @patch('hpinv.hp_invariant.polar_report')
    def test_precision_settings_forwarded(self, mock_report):
        """Test that bits, cap and guard reach the symbolic side"""
        mock_report.side_effect = PrecisionExhausted("undecided at 1024 bits")
        report = cross_check(parse_poly("x^2 - y^3"), bits=128, cap=1024, guard=3)
        args = mock_report.call_args[0]
        self.assertEqual(args[1:], (128, 1024, 3))
        self.assertTrue(report.aborted)
        self.assertIn("1024 bits", report.errors[0])



if __name__ == '__main__':
    unittest.main()
