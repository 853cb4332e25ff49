"""Base-p digits, truncations, and carry analysis for rationals in [0, 1].

Every alpha in (0, 1] has a unique base-p expansion that does not
terminate: values with a p-power denominator are written with a tail of
repeating (p - 1) digits instead of trailing zeros.  All digit queries
in this module refer to that non-terminating expansion; alpha = 0 is
the convention all-zero expansion.

The e-th truncation <alpha>_e keeps the first e digits, so the tail
alpha - <alpha>_e always lies in (0, 1/p^e] for positive alpha.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm


def _check_unit_interval(alpha: Fraction) -> None:
    if alpha < 0 or alpha > 1:
        raise ValueError("value must lie in [0, 1]")


def _check_base(p: int) -> None:
    if p < 2:
        raise ValueError("base must be at least 2")


def scaled_truncation(alpha: Fraction, p: int, e: int) -> int:
    """p**e * <alpha>_e as an integer, for alpha in [0, 1].

    Closed form: ceil(p^e alpha) - 1 when p^e alpha is an integer,
    floor(p^e alpha) otherwise; 0 for alpha = 0 regardless of e.
    """
    _check_unit_interval(alpha)
    _check_base(p)
    if e < 0:
        raise ValueError("negative truncation level")
    if alpha == 0:
        return 0
    scaled = alpha * p**e
    if scaled.denominator == 1:
        return scaled.numerator - 1
    return scaled.numerator // scaled.denominator


def truncate(alpha: Fraction, p: int, e: int) -> Fraction:
    """<alpha>_e: the first e digits of alpha, as a rational."""
    return Fraction(scaled_truncation(alpha, p, e), p**e)


def tail(alpha: Fraction, p: int, e: int) -> Fraction:
    """alpha - <alpha>_e; lies in (0, 1/p^e] when alpha > 0."""
    return alpha - truncate(alpha, p, e)


def digit(alpha: Fraction, p: int, e: int) -> int:
    """The e-th digit (1-based) of the non-terminating expansion."""
    if e < 1:
        raise ValueError("digit positions start at 1")
    return scaled_truncation(alpha, p, e) - p * scaled_truncation(alpha, p, e - 1)


@dataclass(frozen=True)
class DigitExpansion:
    """Eventually periodic digit string of some alpha in [0, 1].

    The period is never empty.  A repeating block of a single 0 is only
    produced for alpha = 0; every positive value ends in a genuinely
    repeating nonzero pattern (possibly the all-(p-1) tail).
    """

    prime: int
    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def digit(self, e: int) -> int:
        """Digit at 1-based position e."""
        if e < 1:
            raise ValueError("digit positions start at 1")
        if e <= len(self.preperiod):
            return self.preperiod[e - 1]
        return self.period[(e - len(self.preperiod) - 1) % len(self.period)]

    def value(self) -> Fraction:
        """Exact rational reconstruction of the expansion."""
        p = self.prime
        pre_len, per_len = len(self.preperiod), len(self.period)
        pre_int = 0
        for dg in self.preperiod:
            pre_int = pre_int * p + dg
        per_int = 0
        for dg in self.period:
            per_int = per_int * p + dg
        return Fraction(pre_int, p**pre_len) + Fraction(
            per_int, p**pre_len * (p**per_len - 1)
        )

    def render(self) -> str:
        """". d1 d2 (q1 ... qk)~ (base p)" with the repeating block in parens."""
        head = " ".join(str(d) for d in self.preperiod)
        block = " ".join(str(d) for d in self.period)
        body = f"{head} ({block})~" if head else f"({block})~"
        return f".{body} (base {self.prime})"


def expand(alpha: Fraction, p: int) -> DigitExpansion:
    """Non-terminating base-p expansion of alpha in [0, 1].

    Runs the long-division state machine on scaled tails: with
    t = num/den in (0, 1], the next digit is (p*num - 1) // den and the
    next state is p*num - digit*den.  States repeat within den steps,
    which pins down the minimal preperiod and period exactly.
    """
    _check_unit_interval(alpha)
    _check_base(p)
    if alpha == 0:
        return DigitExpansion(p, (), (0,))
    den = alpha.denominator
    num = alpha.numerator
    digits: list[int] = []
    seen: dict[int, int] = {}
    while num not in seen:
        seen[num] = len(digits)
        dg = (p * num - 1) // den
        digits.append(dg)
        num = p * num - dg * den
    start = seen[num]
    return DigitExpansion(p, tuple(digits[:start]), tuple(digits[start:]))


def positional_digits(alpha: Fraction, p: int) -> tuple[list[int], list[int]]:
    """Display digits of alpha: (leading digits, repeating block).

    Unlike expand(), values with a p-power denominator come back in
    their terminating form, with an empty repeating block.
    """
    _check_unit_interval(alpha)
    _check_base(p)
    if alpha == 0:
        return [0], []
    if alpha == 1:
        return [], []  # no fractional digits; callers render the integer part
    den = alpha.denominator
    num = alpha.numerator
    digits: list[int] = []
    seen: dict[int, int] = {}
    while num and num not in seen:
        seen[num] = len(digits)
        dg = (p * num) // den
        digits.append(dg)
        num = p * num - dg * den
    if num == 0:
        return digits, []
    start = seen[num]
    return digits[:start], digits[start:]


def render_positional(alpha: Fraction, p: int) -> str:
    """Human rendering of a value in [0, 1], terminating form preferred."""
    if alpha == 1:
        return f"1 (base {p})"
    head, block = positional_digits(alpha, p)
    parts = " ".join(str(d) for d in head)
    if block:
        tail_part = "(" + " ".join(str(d) for d in block) + ")~"
        parts = f"{parts} {tail_part}" if parts else tail_part
    return f".{parts} (base {p})"


@dataclass(frozen=True)
class CarryProfile:
    """Carry analysis for a pair of digit expansions.

    L is the last position before the first carry when adding the two
    expansions digit by digit (None when no carry ever occurs).  d is
    the last position at or before L whose digit sum is at most p - 2
    (None when no such position exists).  certificate_depth is how many
    leading positions were inspected, which covers one full combined
    period past the combined preperiod and therefore certifies the
    carry-free case.
    """

    L: int | None
    d: int | None
    certificate_depth: int

    @property
    def carry_free(self) -> bool:
        return self.L is None


def carry_profile(alpha: Fraction, beta: Fraction, p: int) -> CarryProfile:
    """Locate the first carry when adding alpha and beta digit by digit."""
    ea = expand(alpha, p)
    eb = expand(beta, p)
    rho = max(len(ea.preperiod), len(eb.preperiod))
    big_pi = lcm(len(ea.period), len(eb.period))
    depth = rho + big_pi
    first_carry: int | None = None
    last_small: int | None = None
    for e in range(1, depth + 1):
        s = ea.digit(e) + eb.digit(e)
        if s >= p:
            first_carry = e
            break
        if s <= p - 2:
            last_small = e
    if first_carry is None:
        return CarryProfile(None, None, depth)
    return CarryProfile(first_carry - 1, last_small, depth)


def adds_without_carrying(k1: int, k2: int, p: int) -> bool:
    """True when the base-p additions of k1 and k2 involve no carry."""
    if k1 < 0 or k2 < 0:
        raise ValueError("expected nonnegative integers")
    _check_base(p)
    while k1 or k2:
        if k1 % p + k2 % p >= p:
            return False
        k1 //= p
        k2 //= p
    return True


def multinomial_nonzero(k1: int, k2: int, p: int) -> bool:
    """Whether binom(k1 + k2, k1) is nonzero mod the prime p.

    By Lucas' rule this holds exactly when k1 and k2 add without
    carrying in base p.
    """
    return adds_without_carrying(k1, k2, p)
