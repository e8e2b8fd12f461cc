"""
Unit tests for truncated Puiseux series
Tests for series arithmetic, arc substitution and the arc-local expansion
"""

import random
import unittest
from fractions import Fraction

import mpmath

from hpinv.algebra.balls import BallComplex
from hpinv.algebra.gaussian import GaussianRational
from hpinv.algebra.poly import BivariatePoly
from hpinv.algebra.series import INFINITY, PuiseuxSeries, shift_expand, substitute_arc
from hpinv.errors import IndeterminateComparison
from hpinv.expr_parser import parse_poly


class TestPuiseuxSeries(unittest.TestCase):
    """Test cases for PuiseuxSeries"""

    def test_terms_past_truncation_dropped(self):
        """Test that terms at or above the truncation are not stored"""
        s = PuiseuxSeries({1: 1, 2: 5, 3: 7}, truncation=2)
        self.assertEqual(s.items(), [(Fraction(1), GaussianRational(1))])
        self.assertEqual(s.truncation, 2)

    def test_product_truncation(self):
        """Test that a product is only known below the shifted truncation"""
        s = PuiseuxSeries({1: 1}, truncation=3) * PuiseuxSeries({Fraction(1, 2): 1})
        self.assertEqual(s.truncation, Fraction(7, 2))
        self.assertEqual(s.items(), [(Fraction(3, 2), GaussianRational(1))])

    def test_ramification(self):
        """Test the common denominator of the exponents"""
        s = PuiseuxSeries({Fraction(1, 2): 1, Fraction(2, 3): 1})
        self.assertEqual(s.ramification, 6)

    def test_text(self):
        """Test the string form"""
        s = PuiseuxSeries({1: 1, Fraction(3, 2): -2}, truncation=2)
        self.assertEqual(str(s), "y - 2*y^(3/2) + O(y^2)")
        self.assertEqual(str(PuiseuxSeries()), "0")

    def test_leading_term(self):
        """Test the first certified nonzero term"""
        s = PuiseuxSeries({2: BallComplex(0, 0), 3: GaussianRational(-4)})
        self.assertEqual(s.leading_term(), (Fraction(3), GaussianRational(-4)))
        self.assertIsNone(PuiseuxSeries({}, truncation=5).leading_term())

    def test_undecided_leading_term(self):
        """Test that an undecided first term blocks the leading term"""
        s = PuiseuxSeries({2: BallComplex(0, mpmath.mpf("1e-30")), 3: GaussianRational(1)})
        with self.assertRaises(IndeterminateComparison):
            s.leading_term()
        self.assertEqual(s.certified_order(), 2)

    def test_exact_zero(self):
        """Test that only an untruncated empty series is known to vanish"""
        self.assertTrue(PuiseuxSeries().is_exact_zero())
        self.assertFalse(PuiseuxSeries({}, truncation=3).is_exact_zero())
        self.assertEqual(PuiseuxSeries().certified_order(), INFINITY)

    def test_drop(self):
        """Test removing a term known to vanish"""
        s = PuiseuxSeries({1: 1, 2: 2}).drop(1)
        self.assertEqual(s.items(), [(Fraction(2), GaussianRational(2))])


class TestSubstitution(unittest.TestCase):
    """Test cases for substitute_arc and shift_expand"""

    def setUp(self):
        """Set up test fixtures"""
        self.f = parse_poly("x^3 - 3*x*y^4 + y^6")

    def test_arc_in_zero_set(self):
        """Test that the cusp vanishes along x = y^(3/2)"""
        value = substitute_arc(parse_poly("x^2 - y^3"), PuiseuxSeries({Fraction(3, 2): 1}))
        self.assertTrue(value.is_exact_zero())

    def test_substitute_with_truncation(self):
        """Test Horner substitution cut at an order"""
        value = substitute_arc(self.f, PuiseuxSeries({2: 1}), truncation=7)
        self.assertEqual(value.items(), [(Fraction(6), GaussianRational(-1))])
        self.assertEqual(value.truncation, 7)

    def test_arc_truncation_clamps_result(self):
        """Test that the unknown tail of a truncated arc cuts the result"""
        cusp = parse_poly("x^2 - y^3")
        value = substitute_arc(cusp, PuiseuxSeries({1: 1}, truncation=2))
        self.assertEqual(value.items(), [(Fraction(2), GaussianRational(1))])
        self.assertEqual(value.truncation, 3)
        value = substitute_arc(cusp, PuiseuxSeries({1: 1}, truncation=2), truncation=7)
        self.assertEqual(value.truncation, 3)
        value = substitute_arc(self.f, PuiseuxSeries({2: 1}, truncation=3), truncation=7)
        self.assertEqual(value.truncation, 7)

    def test_substitution_matches_shift_at_zero(self):
        """Test substitute_arc against f_0 of shift_expand on random inputs"""
        rng = random.Random(1618)
        for _ in range(80):
            p = BivariatePoly({
                (rng.randint(0, 4), rng.randint(0, 6)): GaussianRational(rng.randint(1, 4), rng.randint(-1, 1))
                for _ in range(rng.randint(1, 5))
            })
            lam = PuiseuxSeries({
                Fraction(rng.randint(2, 9), rng.randint(1, 3)):
                    GaussianRational(rng.choice((-3, -1, 1, 2)), rng.randint(-2, 2))
                for _ in range(rng.randint(1, 3))
            })
            limit = Fraction(rng.randint(4, 24), rng.randint(1, 3))
            with self.subTest(p=p, lam=lam, limit=limit):
                self.assertEqual(substitute_arc(p, lam, limit), shift_expand(p, lam, limit)[0])


    def test_shift_expand(self):
        """Test the coefficients of F(X, Y) = f(X + y^2, y)"""
        f_i = shift_expand(self.f, PuiseuxSeries({2: 1}))
        self.assertEqual(len(f_i), 4)
        self.assertEqual(f_i[0].items(), [(Fraction(6), GaussianRational(-1))])
        self.assertTrue(f_i[1].is_exact_zero())
        self.assertEqual(f_i[2].items(), [(Fraction(2), GaussianRational(3))])
        self.assertEqual(f_i[3].items(), [(Fraction(0), GaussianRational(1))])


if __name__ == '__main__':
    unittest.main()
