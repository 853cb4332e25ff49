"""Exact rational arithmetic helpers.

All quantities in this package are rational numbers represented by
``fractions.Fraction``: always in lowest terms, positive denominator,
and hashable.  The helpers below add the small amount of surface the
rest of the package needs on top of the standard library type.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction


def reduce(numerator: int, denominator: int) -> Fraction:
    """Build the reduced fraction numerator/denominator.

    Raises ValueError on a zero denominator.  The sign always lands on
    the numerator.
    """
    if denominator == 0:
        raise ValueError("zero denominator")
    return Fraction(numerator, denominator)


def scale_floor_pow(alpha: Fraction, p: int, e: int) -> int:
    """floor(p**e * alpha) for a nonnegative rational alpha."""
    if alpha < 0:
        raise ValueError("negative value")
    if p < 2:
        raise ValueError("base must be at least 2")
    if e < 0:
        raise ValueError("negative exponent")
    scaled = alpha * p**e
    return scaled.numerator // scaled.denominator


def format_rational(x: Fraction | int) -> str:
    """Render as "num/den", omitting "/den" when the denominator is 1."""
    return str(Fraction(x))


def parse_rational(text: str) -> Fraction:
    """Inverse of format_rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational literal: {text!r}") from exc
