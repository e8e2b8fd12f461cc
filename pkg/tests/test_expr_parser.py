"""
Unit tests for the germ expression parser
Tests for tokenizing, parsing and canonical formatting of polynomials
"""

import random
import unittest
from fractions import Fraction

from hpinv.algebra.gaussian import GaussianRational
from hpinv.algebra.poly import BivariatePoly
from hpinv.errors import (
    DivisionByPolynomial,
    ExpressionSyntaxError,
    NonIntegerExponent,
    ParseError,
    UnknownIdentifier,
)
from hpinv.expr_parser import format_poly, parse_poly, tokenize


class TestTokenize(unittest.TestCase):
    """Test cases for the tokenizer"""

    def test_tokens_with_positions(self):
        """Test that tokens carry their kind and source position"""
        tokens = tokenize("x^2 - 3/2 i")
        kinds = [t.kind for t in tokens]
        self.assertEqual(kinds, ["ident", "op", "number", "op", "imag", "end"])
        self.assertEqual(tokens[4].text, "3/2 i")
        self.assertEqual(tokens[4].position, 6)

    def test_stray_character(self):
        """Test that an unknown character is reported with its position"""
        with self.assertRaises(ExpressionSyntaxError) as ctx:
            tokenize("x $ y")
        self.assertEqual(ctx.exception.position, 2)


class TestParsePoly(unittest.TestCase):
    """Test cases for parse_poly"""

    def test_cusp(self):
        """Test parsing of a simple germ"""
        p = parse_poly("x^2 - y^3")
        self.assertEqual(p.terms, {(2, 0): GaussianRational(1), (0, 3): GaussianRational(-1)})

    def test_expansion(self):
        """Test that powers of sums are expanded"""
        p = parse_poly("(x+y)^2")
        self.assertEqual(p, BivariatePoly({(2, 0): 1, (1, 1): 2, (0, 2): 1}))

    def test_rational_and_decimal_literals(self):
        """Test p/q and decimal literals"""
        self.assertEqual(parse_poly("2/3*x").coefficient(1, 0), GaussianRational(Fraction(2, 3)))
        self.assertEqual(parse_poly("1.5*y").coefficient(0, 1), GaussianRational(Fraction(3, 2)))

    def test_gaussian_literals(self):
        """Test imaginary literals, alone and with a magnitude"""
        self.assertEqual(parse_poly("(1+2i)*x").coefficient(1, 0), GaussianRational(1, 2))
        self.assertEqual(parse_poly("i*x").coefficient(1, 0), GaussianRational(0, 1))
        self.assertEqual(parse_poly("2/3 i*y").coefficient(0, 1), GaussianRational(0, Fraction(2, 3)))

    def test_unary_minus_binds_looser_than_power(self):
        """Test that -x^2 is -(x^2) and (-x)^2 is x^2"""
        self.assertEqual(parse_poly("-x^2").coefficient(2, 0), GaussianRational(-1))
        self.assertEqual(parse_poly("(-x)^2").coefficient(2, 0), GaussianRational(1))

    def test_constant_exponent_expression(self):
        """Test that exponents may be constant expressions"""
        self.assertEqual(parse_poly("x^(1+1)"), parse_poly("x^2"))
        self.assertEqual(parse_poly("2^3*x").coefficient(1, 0), GaussianRational(8))

    def test_cancellation_gives_zero(self):
        """Test that cancelling terms leave the zero polynomial"""
        self.assertTrue(parse_poly("x*y - y*x").is_zero())

    def test_division_by_constant(self):
        """Test division by a nonzero constant"""
        self.assertEqual(parse_poly("x/(1+i)").coefficient(1, 0), GaussianRational(Fraction(1, 2), Fraction(-1, 2)))

    def test_errors(self):
        """Test the error classes for malformed input"""
        cases = [
            ("", ExpressionSyntaxError),
            ("x +", ExpressionSyntaxError),
            ("x y", ExpressionSyntaxError),
            ("(x", ExpressionSyntaxError),
            ("x/0", ExpressionSyntaxError),
            ("x/y", DivisionByPolynomial),
            ("x^-1", NonIntegerExponent),
            ("x^(1/2)", NonIntegerExponent),
            ("x^y", NonIntegerExponent),
            ("z", UnknownIdentifier),
            ("t*x", UnknownIdentifier),
            ("ix", UnknownIdentifier),
        ]
        for src, error in cases:
            with self.subTest(src=src):
                with self.assertRaises(error):
                    parse_poly(src)

    def test_zero_denominator_in_literal(self):
        """Test that a literal with a zero denominator is a syntax error at its position"""
        for src, position in (("x + 1/0 i", 4), ("1/0 i*y", 0), ("x^2 - 2/0i*y^3", 6)):
            with self.subTest(src=src):
                with self.assertRaises(ExpressionSyntaxError) as ctx:
                    parse_poly(src)
                self.assertEqual(ctx.exception.position, position)
                self.assertIn("division by zero", str(ctx.exception))

    def test_errors_share_base_class(self):
        """Test that every parser error is a ParseError"""
        with self.assertRaises(ParseError):
            parse_poly("x/y")


class TestFormatPoly(unittest.TestCase):
    """Test cases for format_poly"""

    def test_order_of_terms(self):
        """Test ascending total degree, then descending x-degree"""
        self.assertEqual(format_poly(parse_poly("y^3 - x^2")), "x^2 - y^3")
        self.assertEqual(format_poly(parse_poly("y^6 + x^3 - 3*x*y^4")), "x^3 - 3*x*y^4 + y^6")

    def test_coefficients(self):
        """Test rational, negative leading and non-real coefficients"""
        self.assertEqual(format_poly(parse_poly("-x/2 + y^2")), "-1/2*x + y^2")
        self.assertEqual(format_poly(parse_poly("(1+i)*x*y")), "(1+i)*x*y")

    def test_zero(self):
        """Test the zero polynomial"""
        self.assertEqual(format_poly(BivariatePoly()), "0")

    def test_reparse(self):
        """Test that formatted text parses back to the same polynomial"""
        for src in ("x^3 - 3*x*y^4 + y^6", "(2-i)*x^2*y + 1/3*y^5", "x*y - x^2"):
            with self.subTest(src=src):
                p = parse_poly(src)
                self.assertEqual(parse_poly(format_poly(p)), p)

    def test_reparse_random_supports(self):
        """Test format/parse on random supports and Gaussian coefficients"""
        rng = random.Random(20240611)
        for _ in range(200):
            terms = {}
            for _ in range(rng.randint(1, 6)):
                monomial = (rng.randint(0, 7), rng.randint(0, 7))
                re = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
                im = Fraction(rng.randint(-9, 9), rng.randint(1, 5)) if rng.random() < 0.4 else 0
                terms[monomial] = GaussianRational(re, im)
            p = BivariatePoly(terms)
            with self.subTest(p=format_poly(p)):
                self.assertEqual(parse_poly(format_poly(p)), p)


if __name__ == '__main__':
    unittest.main()
