"""Exact rational plumbing.

Every probabilistic quantity in this package (weights, moments, bounds)
is an exact rational; floating point never enters those code paths.
`fractions.Fraction` is the representation, re-exported as `Rational`.
"""

from fractions import Fraction

Rational = Fraction


def rational_str(x) -> str:
    """Render a rational as "numerator/denominator", never as a decimal.

    Integers come out with an explicit /1 (e.g. "2/1") so that reports
    stay uniformly parseable.
    """
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"
