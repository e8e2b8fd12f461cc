"""
Germ expression parser
Reads polynomial expressions in x, y with Gaussian-rational literals and
writes polynomials back in a canonical text form
"""

import logging
import re
from fractions import Fraction
from typing import List, NamedTuple, Optional

from hpinv.algebra.gaussian import GaussianRational
from hpinv.algebra.poly import BivariatePoly
from hpinv.errors import (
    DivisionByPolynomial,
    ExpressionSyntaxError,
    NonIntegerExponent,
    UnknownIdentifier,
)

logger = logging.getLogger(__name__)

# Token patterns, tried in order; an imaginary literal may carry a p/q magnitude ("2/3 i")
TOKEN_RGX = re.compile(
    r"""
    (?P<space>\s+)
  | (?P<imag>(?:\d+(?:\.\d+)?(?:/\d+)?)?\s*i(?![A-Za-z0-9_]))
  | (?P<number>\d+(?:\.\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*/^()])
    """,
    re.VERBOSE,
)

VARIABLES = {"x": BivariatePoly.x, "y": BivariatePoly.y}


class Token(NamedTuple):
    kind: str
    text: str
    position: int


def _literal(text: str, position: int) -> Fraction:
    if "/" in text:
        num, den = text.split("/")
        if Fraction(den) == 0:
            raise ExpressionSyntaxError("division by zero", position)
        return Fraction(num) / Fraction(den)
    return Fraction(text)


def tokenize(src: str) -> List[Token]:
    """Split source into tokens, rejecting stray characters"""
    tokens: List[Token] = []
    pos = 0
    while pos < len(src):
        match = TOKEN_RGX.match(src, pos)
        if not match:
            raise ExpressionSyntaxError(f"unexpected character {src[pos]!r}", pos)
        kind = match.lastgroup
        if kind != "space":
            tokens.append(Token(kind, match.group(), pos))
        pos = match.end()
    tokens.append(Token("end", "", len(src)))
    return tokens


class _Parser:
    """Recursive descent over the token list; every rule returns a BivariatePoly"""

    def __init__(self, src: str):
        self.src = src
        self.tokens = tokenize(src)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _accept(self, *ops: str) -> Optional[Token]:
        if self.current.kind == "op" and self.current.text in ops:
            return self._advance()
        return None

    def _unexpected(self) -> ExpressionSyntaxError:
        token = self.current
        if token.kind == "end":
            return ExpressionSyntaxError("unexpected end of expression", token.position)
        return ExpressionSyntaxError(f"unexpected token {token.text!r}", token.position)

    def parse(self) -> BivariatePoly:
        if self.current.kind == "end":
            raise ExpressionSyntaxError("empty expression", 0)
        result = self.expr()
        if self.current.kind != "end":
            raise self._unexpected()
        return result

    # expr := term (('+'|'-') term)*
    def expr(self) -> BivariatePoly:
        result = self.term()
        while True:
            if self._accept("+"):
                result = result + self.term()
            elif self._accept("-"):
                result = result - self.term()
            else:
                return result

    # term := unary (('*'|'/') unary)*
    def term(self) -> BivariatePoly:
        result = self.unary()
        while True:
            if self._accept("*"):
                result = result * self.unary()
            elif self.current.kind == "op" and self.current.text == "/":
                position = self._advance().position
                divisor = self.unary()
                if not divisor.is_constant():
                    raise DivisionByPolynomial("divisor depends on x or y", position)
                if divisor.is_zero():
                    raise ExpressionSyntaxError("division by zero", position)
                result = result.scale(divisor.constant_term().inverse())
            else:
                return result

    # unary := ('-'|'+') unary | power
    def unary(self) -> BivariatePoly:
        if self._accept("-"):
            return -self.unary()
        if self._accept("+"):
            return self.unary()
        return self.power()

    # power := base ('^' unary)?, right-associative
    def power(self) -> BivariatePoly:
        base = self.base()
        token = self._accept("^")
        if token is None:
            return base
        exponent_position = self.current.position
        exponent = self.unary()
        return base ** _exponent_value(exponent, exponent_position)

    # base := number | imag | 'x' | 'y' | '(' expr ')'
    def base(self) -> BivariatePoly:
        token = self.current
        if token.kind == "number":
            self._advance()
            return BivariatePoly.constant(_literal(token.text, token.position))
        if token.kind == "imag":
            self._advance()
            magnitude = token.text[:-1].strip()
            value = _literal(magnitude, token.position) if magnitude else Fraction(1)
            return BivariatePoly.constant(GaussianRational(0, value))
        if token.kind == "ident":
            self._advance()
            if token.text not in VARIABLES:
                raise UnknownIdentifier(f"unknown identifier {token.text!r}", token.position)
            return VARIABLES[token.text]()
        if self._accept("("):
            inner = self.expr()
            if not self._accept(")"):
                raise self._unexpected()
            return inner
        raise self._unexpected()


def _exponent_value(exponent: BivariatePoly, position: int) -> int:
    if not exponent.is_constant():
        raise NonIntegerExponent("exponent depends on x or y", position)
    value = exponent.constant_term()
    if not value.is_real() or value.re.denominator != 1 or value.re < 0:
        raise NonIntegerExponent(f"exponent {value} is not a non-negative integer", position)
    return int(value.re)


def parse_poly(src: str) -> BivariatePoly:
    """
    Parse a germ expression into an expanded polynomial

    Args:
        src: Expression in x, y, i and integer, decimal or p/q literals

    Returns:
        Expanded BivariatePoly over Q(i)

    Raises:
        ParseError subclasses, annotated with the offending position
    """
    poly = _Parser(src).parse()
    logger.debug(f"Parsed {src!r} into {len(poly.terms)} terms")
    return poly


def _monomial(i: int, j: int) -> str:
    parts = []
    for var, power in (("x", i), ("y", j)):
        if power == 1:
            parts.append(var)
        elif power > 1:
            parts.append(f"{var}^{power}")
    return "*".join(parts)


def format_poly(p: BivariatePoly) -> str:
    """
    Canonical text: ascending total degree, then descending x-degree.
    Real coefficients print as a/b, others as (a/b+c/d i).
    """
    if p.is_zero():
        return "0"
    ordered = sorted(p.items(), key=lambda item: (item[0][0] + item[0][1], -item[0][0]))
    pieces = []
    for (i, j), c in ordered:
        monomial = _monomial(i, j)
        if c.is_real():
            sign = "-" if c.re < 0 else "+"
            magnitude = abs(c.re)
            if monomial and magnitude == 1:
                body = monomial
            else:
                body = f"{magnitude}*{monomial}" if monomial else str(magnitude)
        else:
            sign = "+"
            body = f"({c})*{monomial}" if monomial else f"({c})"
        pieces.append((sign, body))

    sign, body = pieces[0]
    text = body if sign == "+" else f"-{body}"
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text
