"""
Unit tests for univariate polynomials
Tests for Taylor shifts and certified root isolation
"""

import unittest

import mpmath
from mpmath import mp

from hpinv.algebra.balls import BallComplex
from hpinv.algebra.gaussian import GaussianRational
from hpinv.algebra.univariate import UnivariatePoly, uni_roots
from hpinv.errors import ZeroPolynomial

ONE = GaussianRational(1)
I = GaussianRational(0, 1)


class TestUnivariatePoly(unittest.TestCase):
    """Test cases for UnivariatePoly operations"""

    def test_trailing_zeros_stripped(self):
        """Test that exact zero leading coefficients are dropped"""
        self.assertEqual(UnivariatePoly([1, 2, 0, 0]).degree, 1)
        self.assertTrue(UnivariatePoly([0]).is_zero())

    def test_taylor_shift(self):
        """Test p(z + a)"""
        shifted = UnivariatePoly([0, 0, 1]).taylor_shift(ONE)
        self.assertEqual(shifted.coeffs, (ONE, GaussianRational(2), ONE))

    def test_derivative(self):
        """Test repeated derivatives"""
        cube = UnivariatePoly([0, 0, 0, 1])
        self.assertEqual(cube.derivative().coeffs, (0, 0, 3))
        self.assertEqual(cube.derivative(3).coeffs, (6,))
        self.assertTrue(cube.derivative(4).is_zero())

    def test_divides(self):
        """Test exact divisibility"""
        self.assertTrue(UnivariatePoly([-1, 1]).divides(UnivariatePoly([-1, 0, 1])))
        self.assertFalse(UnivariatePoly([-2, 0, 1]).divides(UnivariatePoly([-1, 0, 1])))

    def test_text(self):
        """Test the string form"""
        self.assertEqual(str(UnivariatePoly([-1, 0, 3, 1])), "z^3 + 3*z^2 - 1")


class TestUniRoots(unittest.TestCase):
    """Test cases for uni_roots"""

    def test_exact_roots_with_multiplicity(self):
        """Test that linear factors over Q(i) give exact roots"""
        # (z - 1)^2 (z + i)
        q = UnivariatePoly([GaussianRational(0, 1), GaussianRational(1, -2), GaussianRational(-2, 1), 1])
        roots = dict((r, m) for r, m in uni_roots(q))
        self.assertEqual(roots, {ONE: 2, -I: 1})

    def test_gaussian_split(self):
        """Test that z^2 + 1 splits over Q(i)"""
        roots = {r for r, _ in uni_roots(UnivariatePoly([1, 0, 1]))}
        self.assertEqual(roots, {I, -I})

    def test_irrational_roots_are_tagged_balls(self):
        """Test that an irreducible factor gives tagged, disjoint balls"""
        with mp.workprec(128):
            roots = uni_roots(UnivariatePoly([-2, 0, 1]))
            self.assertEqual(len(roots), 2)
            minpoly = (GaussianRational(-2), GaussianRational(0), ONE)
            for ball, multiplicity in roots:
                self.assertIsInstance(ball, BallComplex)
                self.assertEqual(multiplicity, 1)
                self.assertEqual(ball.minpoly, minpoly)
            self.assertTrue(any(ball.contains(mpmath.sqrt(2)) for ball, _ in roots))
            self.assertTrue(any(ball.contains(-mpmath.sqrt(2)) for ball, _ in roots))

    def test_ball_polynomial(self):
        """Test certified disks for a polynomial with ball coefficients"""
        with mp.workprec(128):
            q = UnivariatePoly([BallComplex(-2), BallComplex(0), BallComplex(1)])
            roots = uni_roots(q)
            self.assertEqual(sorted(m for _, m in roots), [1, 1])
            self.assertTrue(any(ball.contains(mpmath.sqrt(2)) for ball, _ in roots))

    def test_degenerate_inputs(self):
        """Test constant and zero polynomials"""
        self.assertEqual(uni_roots(UnivariatePoly([5])), [])
        with self.assertRaises(ZeroPolynomial):
            uni_roots(UnivariatePoly([]))


if __name__ == '__main__':
    unittest.main()
