"""
Unit tests for germ analysis
Tests for order, shear, reducedness and tangent cone lines
"""

import unittest

from mpmath import mp

from hpinv.algebra.balls import BallComplex
from hpinv.algebra.gaussian import GaussianRational
from hpinv.algebra.poly import BivariatePoly, is_unit
from hpinv.errors import NonvanishingAtOrigin, NotReduced, ZeroGerm
from hpinv.expr_parser import parse_poly
from hpinv.germ_analysis import (
    analyze_germ,
    cone_is_squarefree,
    mini_regular_shear,
    repeated_factor,
    singular_cone_lines,
    tangent_cone_lines,
)


class TestAnalyzeGerm(unittest.TestCase):
    """Test cases for analyze_germ"""

    def test_cusp_profile(self):
        """Test the profile of x^2 - y^3"""
        profile = analyze_germ(parse_poly("x^2 - y^3"))
        self.assertEqual(profile.k, 2)
        self.assertEqual(profile.shear, 0)
        self.assertTrue(profile.reduced)
        self.assertEqual(profile.initial_form, parse_poly("x^2"))
        self.assertEqual(profile.cone_polynomial().coeffs, (0, 0, 1))

    def test_shear_applied(self):
        """Test that a germ without an x^k term is sheared"""
        profile = analyze_germ(parse_poly("y^2 + x^3"))
        self.assertEqual(profile.shear, 1)
        self.assertEqual(profile.f, parse_poly("(x+y)^2 + x^3"))
        self.assertEqual(profile.f.coefficient(2, 0), 1)
        self.assertEqual(profile.original, parse_poly("y^2 + x^3"))

    def test_mini_regular_shear(self):
        """Test the least shear making H_k(1, s) nonzero"""
        self.assertEqual(mini_regular_shear(parse_poly("x*y")), 1)
        self.assertEqual(mini_regular_shear(parse_poly("x^2 - y^2")), 0)
        self.assertEqual(mini_regular_shear(parse_poly("x*y*(x - y)")), 2)

    def test_invalid_germs(self):
        """Test the zero germ and germs not vanishing at the origin"""
        with self.assertRaises(ZeroGerm):
            analyze_germ(BivariatePoly())
        with self.assertRaises(NonvanishingAtOrigin):
            analyze_germ(parse_poly("1 + x"))

    def test_not_reduced(self):
        """Test that a repeated factor is refused and quoted"""
        with self.assertRaises(NotReduced) as ctx:
            analyze_germ(parse_poly("(x - y)^2"))
        self.assertIn("x - y", str(ctx.exception))

    def test_not_reduced_lenient(self):
        """Test that strict=False returns the profile of a non-reduced germ"""
        profile = analyze_germ(parse_poly("(x - y)^2*(x + y)"), strict=False)
        self.assertFalse(profile.reduced)
        self.assertEqual(profile.k, 3)

    def test_repeated_factor(self):
        """Test gcd(f, f_x, f_y)"""
        self.assertTrue(is_unit(repeated_factor(parse_poly("x^2 - y^3"))))
        self.assertEqual(repeated_factor(parse_poly("x^2*(x - y^2)")), parse_poly("x"))


class TestTangentCone(unittest.TestCase):
    """Test cases for tangent cone lines"""

    def test_single_singular_line(self):
        """Test the cusp's double line x = 0"""
        profile = analyze_germ(parse_poly("x^2 - y^3"))
        lines = tangent_cone_lines(profile)
        self.assertEqual(len(lines), 1)
        self.assertEqual(str(lines[0]), "x=0")
        self.assertEqual(lines[0].multiplicity, 2)
        self.assertEqual(len(singular_cone_lines(profile)), 1)
        self.assertFalse(cone_is_squarefree(profile))

    def test_squarefree_cone(self):
        """Test two distinct rational lines"""
        profile = analyze_germ(parse_poly("x^2 - y^2"))
        self.assertEqual([str(line) for line in tangent_cone_lines(profile)], ["x=-y", "x=y"])
        self.assertEqual(singular_cone_lines(profile), [])
        self.assertTrue(cone_is_squarefree(profile))

    def test_multiplicities_sum_to_order(self):
        """Test that the cone lines count k with multiplicity"""
        profile = analyze_germ(parse_poly("x^2*(x - 2*y)*(x + i*y) + y^6"))
        lines = tangent_cone_lines(profile)
        self.assertEqual(sum(line.multiplicity for line in lines), 4)
        self.assertEqual({str(line) for line in lines}, {"x=0", "x=2*y", "x=(-i)*y"})
        self.assertEqual([str(line) for line in singular_cone_lines(profile)], ["x=0"])

    def test_irrational_lines(self):
        """Test that irrational lines are certified balls"""
        with mp.workprec(128):
            profile = analyze_germ(parse_poly("x^2 - 2*y^2"))
            lines = tangent_cone_lines(profile)
        self.assertEqual(len(lines), 2)
        for line in lines:
            self.assertIsInstance(line.slope, BallComplex)
            self.assertTrue(str(line).startswith("x=("))
        self.assertIn("1.414", str(lines[1]))
        self.assertEqual(lines[0].slope.minpoly, (GaussianRational(-2), GaussianRational(0), GaussianRational(1)))


if __name__ == '__main__':
    unittest.main()
