"""
Unit tests for arc-local asymptotics
Tests for h_i, xi, Q, R and the truncation certificate
"""

import random
import unittest
from fractions import Fraction

from hpinv.algebra.gaussian import GaussianRational
from hpinv.algebra.series import INFINITY, PuiseuxSeries
from hpinv.asymptotics import (
    arc_local_data,
    certified_arc_data,
    shifted_R,
    truncation_certificate,
)
from hpinv.errors import ArcInZeroSet, PrecisionExhausted
from hpinv.expr_parser import parse_poly


class TestArcLocalData(unittest.TestCase):
    """Test cases for arc_local_data"""

    def setUp(self):
        """Set up test fixtures"""
        # x^3 - 3 t^2 x y^4 + y^6 at t = 1
        self.f = parse_poly("x^3 - 3*x*y^4 + y^6")
        self.arc = PuiseuxSeries({2: 1})

    def test_orders_and_xi(self):
        """Test h_i and xi along x = y^2"""
        data = arc_local_data(self.f, self.arc)
        self.assertEqual(data.h0, 6)
        self.assertEqual(data.c0, GaussianRational(-1))
        self.assertEqual(data.h_i, (6, INFINITY, 2, 0))
        self.assertEqual(data.xi, 2)

    def test_weighted_homogeneous_part(self):
        """Test Q and R(z) = z^3 + 3 z^2 - 1"""
        data = arc_local_data(self.f, self.arc)
        self.assertEqual(data.R.coeffs, (-1, 0, 3, 1))
        self.assertEqual(data.Q.degree, 6)
        self.assertEqual(sorted(m for m, _, _ in data.Q.terms), [0, 2, 3])
        self.assertEqual(str(data.Q), "X^3 + 3*X^2*Y^2 - Y^6")

    def test_shifted_R(self):
        """Test that R(z - 1) is f(z y^2, y) / y^6"""
        data = arc_local_data(self.f, self.arc)
        self.assertEqual(shifted_R(data, GaussianRational(-1)).coeffs, (1, -3, 0, 1))

    def test_certificate(self):
        """Test that only truncations beyond xi certify"""
        data = arc_local_data(self.f, self.arc)
        self.assertFalse(truncation_certificate(data, 2))
        self.assertTrue(truncation_certificate(data, Fraction(5, 2)))

    def test_cusp_along_tangent(self):
        """Test x^2 - y^3 along x = 0"""
        data = arc_local_data(parse_poly("x^2 - y^3"), PuiseuxSeries())
        self.assertEqual(data.h0, 3)
        self.assertEqual(data.xi, Fraction(3, 2))
        self.assertEqual(data.R.coeffs, (-1, 0, 1))

    def test_arc_in_zero_set(self):
        """Test that an arc inside f = 0 is reported"""
        with self.assertRaises(ArcInZeroSet):
            arc_local_data(parse_poly("x^2 - y^3"), PuiseuxSeries({Fraction(3, 2): 1}))

    def test_truncated_expansion(self):
        """Test that truncating hides the leading term"""
        with self.assertRaises(ArcInZeroSet):
            arc_local_data(self.f, self.arc, truncation=6)


class TestCertifiedArcData(unittest.TestCase):
    """Test cases for certified_arc_data"""

    def test_polar_arcs_of_family_member(self):
        """Test that both polar arcs x = +-y^2 are resolved and certified"""
        f = parse_poly("x^3 - 3*x*y^4 + y^6")
        pairs = certified_arc_data(f, f.derivative("x"))
        self.assertEqual(len(pairs), 2)
        self.assertEqual({data.h0 for _, data in pairs}, {6})
        self.assertEqual({data.c0 for _, data in pairs}, {GaussianRational(-1), GaussianRational(3)})
        for arc, _ in pairs:
            self.assertTrue(arc.terminating)

    def test_refinement_budget(self):
        """Test that a refinement budget too small to certify is reported"""
        f = parse_poly("x^2 - y^2 - y^3 + x^3")
        with self.assertRaises(PrecisionExhausted):
            certified_arc_data(f, parse_poly("x^2 - y^2 - y^7"), max_refinements=1)


class TestArcProperties(unittest.TestCase):
    """Test cases for the shift law and the certificate on random arcs"""

    POOL = ("x^3 - 3*x*y^4 + y^6", "x^2 - y^3", "x^3 - y^4 + x*y^3", "x^4 - y^5 + x^2*y^3")

    def setUp(self):
        """Set up test fixtures"""
        self.rng = random.Random(2718)

    def _gaussian(self) -> GaussianRational:
        re = Fraction(self.rng.choice((-5, -3, -2, 1, 2, 4)), self.rng.randint(1, 7))
        return GaussianRational(re, Fraction(self.rng.randint(-4, 4), self.rng.randint(1, 5)))

    def _arc(self) -> PuiseuxSeries:
        return PuiseuxSeries({
            Fraction(self.rng.randint(2, 6), 2): self._gaussian() for _ in range(self.rng.randint(1, 2))
        })

    def _tail(self, start: Fraction) -> PuiseuxSeries:
        return PuiseuxSeries({start + Fraction(k, 2): self._gaussian() for k in range(self.rng.randint(1, 3))})

    def test_shift_law_on_perturbed_arcs(self):
        """Test that R of lambda + a*y^xi + higher terms is R(z + a)"""
        for _ in range(40):
            f = parse_poly(self.rng.choice(self.POOL))
            arc = self._arc()
            try:
                data = arc_local_data(f, arc)
            except ArcInZeroSet:
                continue
            a = self._gaussian()
            expected = shifted_R(data, a)
            if expected.coeffs[0] == 0:
                continue
            moved = arc + PuiseuxSeries.monomial(a, data.xi) + self._tail(data.xi + Fraction(1, 3))
            with self.subTest(f=f, arc=arc, a=a):
                shifted = arc_local_data(f, moved)
                self.assertEqual(shifted.xi, data.xi)
                self.assertEqual(shifted.h0, data.h0)
                self.assertEqual(shifted.R.coeffs, expected.coeffs)

    def test_certificate_survives_refinement(self):
        """Test that terms at or past a certified truncation leave (h0, c0) alone"""
        for _ in range(40):
            f = parse_poly(self.rng.choice(self.POOL))
            arc = self._arc()
            try:
                data = arc_local_data(f, arc)
            except ArcInZeroSet:
                continue
            truncation = data.xi + Fraction(self.rng.randint(1, 4), self.rng.randint(1, 3))
            self.assertTrue(truncation_certificate(data, truncation))
            refined = arc + self._tail(truncation)
            with self.subTest(f=f, arc=arc, refined=refined):
                moved = arc_local_data(f, refined)
                self.assertEqual(moved.h0, data.h0)
                self.assertEqual(moved.c0, data.c0)


if __name__ == '__main__':
    unittest.main()
