"""
Exception hierarchy for hpinv
Library code raises these; only the CLI handlers turn them into exit codes
"""

from typing import Optional


class HPInvError(Exception):
    """Base class for every error raised by hpinv"""


# Parsing

class ParseError(HPInvError):
    """Germ expression could not be parsed"""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ExpressionSyntaxError(ParseError):
    """Malformed expression"""


class NonIntegerExponent(ParseError):
    """Exponent is not a non-negative integer constant"""


class UnknownIdentifier(ParseError):
    """Identifier other than x, y or i"""


class DivisionByPolynomial(ParseError):
    """Division by a non-constant subexpression"""


# Algebra

class AlgebraError(HPInvError):
    """Invalid algebraic operation"""


class ZeroPolynomial(AlgebraError):
    """Operation undefined on the zero polynomial"""


class PrecisionExhausted(HPInvError):
    """Certified arithmetic could not decide a question at the precision cap"""


class IndeterminateComparison(PrecisionExhausted):
    """Undecided at the current working precision; retrying with more bits may help"""


# Germs

class GermError(HPInvError):
    """Input germ violates a standing assumption"""


class ZeroGerm(GermError):
    """The germ is identically zero"""


class NonvanishingAtOrigin(GermError):
    """f(0, 0) != 0"""


class NotReduced(GermError):
    """The germ has a repeated factor"""

    def __init__(self, factor: str):
        self.factor = factor
        super().__init__(f"germ is not reduced: repeated factor {factor}")


class NotMiniRegular(GermError):
    """Initial form does not contain a pure power of x"""


class ArcInZeroSet(HPInvError):
    """f vanishes identically along the arc"""


class SharedComponent(GermError):
    """A polar arc lies in the zero set of f"""


class ConeConsistencyViolation(HPInvError):
    """A tangential polar arc is not tangent to a singular line of the tangent cone"""


class BranchSplit(HPInvError):
    """Refining a grouped arc separated it into several branches"""


# Numeric oracle

class OracleError(HPInvError):
    """Numeric tracking failed"""


class RootCollision(OracleError):
    """Two polar tracks merged"""


class DegenerateFit(OracleError):
    """Not enough usable samples to fit a leading term"""
