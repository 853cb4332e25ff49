"""F-pure threshold engine for binomials over a prime field.

A binomial u1 x^a + u2 x^b vanishing at the origin factors as a
monomial times a core in which no variable has equal exponents.  The
threshold of the monomial part is the classical minimum of reciprocal
exponents; the threshold of the core comes from the unique maximal
point eta of its splitting polytope:

  * |eta| > 1: the core threshold is 1;
  * eta1 and eta2 add without carrying in base p: it is |eta|;
  * otherwise it is the L-th truncation of |eta|, plus a rational
    correction epsilon exactly when one of two lattice candidate
    points lies in the lower interior of the polytope.

The threshold of the product is the minimum of the two parts.  The
dispatch below asserts the digit-carry identity and the epsilon bounds
it relies on, so a violated expectation aborts loudly instead of
returning a wrong value.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .base_p import carry_profile, tail, truncate
from .polytope import (
    Axis,
    Point2,
    SplittingMatrix,
    build,
    contains_lower_interior,
    maximal_point,
    ray_max_delta,
)
from .primes import is_prime

ONE = Fraction(1)


@dataclass(frozen=True)
class Binomial:
    """u1 x^a + u2 x^b with distinct exponent vectors.

    Coefficients are optional integers (None meaning 1) and only
    matter to the brute-force oracles; the threshold itself is
    coefficient independent.  Every retained variable appears in at
    least one of the two monomials.
    """

    variables: tuple[str, ...]
    a: tuple[int, ...]
    b: tuple[int, ...]
    coeff1: int | None = None
    coeff2: int | None = None

    def __post_init__(self) -> None:
        n = len(self.variables)
        if len(self.a) != n or len(self.b) != n or n == 0:
            raise ValueError("exponent vectors must match the variable list")
        if len(set(self.variables)) != n:
            raise ValueError("repeated variable name")
        if any(x < 0 for x in self.a + self.b):
            raise ValueError("exponents must be nonnegative")
        if self.a == self.b:
            raise ValueError("monomials not distinct")
        if any(x == 0 and y == 0 for x, y in zip(self.a, self.b)):
            raise ValueError("variable appears in neither monomial")

    def vanishes_at_origin(self) -> bool:
        return any(self.a) and any(self.b)


@dataclass(frozen=True)
class Factorization:
    """g = (monomial part) * (core); the core keeps the unequal exponents."""

    monomial_variables: tuple[str, ...]
    monomial_exponents: tuple[int, ...]
    core: Binomial
    core_is_unit: bool


class FptCase(Enum):
    UNIT = "UNIT"
    MONOMIAL_ONLY = "MONOMIAL_ONLY"
    STANDARD_GT1 = "STANDARD_GT1"
    CARRY_FREE = "CARRY_FREE"
    TRUNCATED = "TRUNCATED"
    TRUNCATED_PLUS_EPSILON = "TRUNCATED_PLUS_EPSILON"
    MIN_COMBINED = "MIN_COMBINED"


@dataclass(frozen=True)
class FptResult:
    """Threshold value plus the diagnostics that produced it.

    carry_free is None when no carry analysis ran (monomial-only
    results and cores with |eta| > 1).  L and d are only set for
    finite carry analyses; epsilon only in the corrected case.
    """

    value: Fraction
    case: FptCase
    eta: Point2 | None = None
    eta_sum: Fraction | None = None
    carry_free: bool | None = None
    L: int | None = None
    d: int | None = None
    epsilon: Fraction | None = None
    monomial_fpt: Fraction | None = None
    core_fpt: Fraction | None = None


def factor(g: Binomial) -> Factorization:
    """Split off gcd-like equal exponents into a monomial factor.

    Variables with a_i = b_i move to the monomial part at that power;
    the rest form the core.  Distinctness of the input monomials
    guarantees a nonempty core; the core is flagged as a unit when one
    of its exponent vectors is all zero (the core then has a nonzero
    constant term and does not vanish at the origin).
    """
    mono_vars: list[str] = []
    mono_exps: list[int] = []
    core_vars: list[str] = []
    core_a: list[int] = []
    core_b: list[int] = []
    for var, ai, bi in zip(g.variables, g.a, g.b):
        if ai == bi:
            mono_vars.append(var)
            mono_exps.append(ai)
        else:
            core_vars.append(var)
            core_a.append(ai)
            core_b.append(bi)
    core = Binomial(
        tuple(core_vars), tuple(core_a), tuple(core_b), g.coeff1, g.coeff2
    )
    unit = not any(core_a) or not any(core_b)
    return Factorization(tuple(mono_vars), tuple(mono_exps), core, unit)


def monomial_fpt(exponents: tuple[int, ...]) -> Fraction | None:
    """min(1/e) over positive exponents; None for an empty monomial."""
    positive = [e for e in exponents if e > 0]
    if any(e < 0 for e in exponents):
        raise ValueError("exponents must be nonnegative")
    if not positive:
        return None
    return Fraction(1, max(positive))


def _in_lattice(value: Fraction, denominator: int) -> bool:
    return (value * denominator).denominator == 1


def core_fpt(core: Binomial, p: int) -> FptResult:
    """Threshold of a core binomial (no equal-exponent variables)."""
    if not is_prime(p):
        raise ValueError("p must be prime")
    if any(ai == bi for ai, bi in zip(core.a, core.b)):
        raise ValueError("core must not contain equal-exponent variables")
    if not core.vanishes_at_origin():
        raise ValueError("core is a local unit")
    matrix = build(core.a, core.b)
    mp = maximal_point(matrix)
    if mp is None:
        raise RuntimeError("constant row reached core")
    eta, eta_sum = mp.point, mp.sum
    if eta_sum > 1:
        return FptResult(ONE, FptCase.STANDARD_GT1, eta=eta, eta_sum=eta_sum)
    profile = carry_profile(eta.s1, eta.s2, p)
    if profile.carry_free:
        return FptResult(
            eta_sum, FptCase.CARRY_FREE, eta=eta, eta_sum=eta_sum, carry_free=True
        )
    L, d = profile.L, profile.d
    if d is None:
        raise RuntimeError("no digit position with sum <= p - 2 before the carry")
    assert L is not None and 1 <= d <= L, f"carry profile out of range: L={L}, d={d}"
    step = Fraction(1, p**d)
    t1 = truncate(eta.s1, p, d)
    t2 = truncate(eta.s2, p, d)
    trunc_sum = truncate(eta_sum, p, L)
    assert t1 + t2 + step == trunc_sum, "digit-carry identity violated"
    cand_right = Point2(t1 + step, t2)
    cand_up = Point2(t1, t2 + step)
    in_right = contains_lower_interior(matrix, cand_right)
    in_up = contains_lower_interior(matrix, cand_up)
    common = dict(eta=eta, eta_sum=eta_sum, carry_free=False, L=L, d=d)
    if not in_right and not in_up:
        return FptResult(trunc_sum, FptCase.TRUNCATED, **common)
    # Only rays whose own base candidate lies in the lower interior
    # count: a base sitting on a polytope face parallel to its ray
    # direction never enters the open region, so clipping that ray
    # against the closed polytope would overstate the correction (the
    # brute-force nu ladder comes out one short of such a value).
    deltas = []
    if in_right:
        deltas.append(ray_max_delta(matrix, cand_right, Axis.AXIS2))
    if in_up:
        deltas.append(ray_max_delta(matrix, cand_up, Axis.AXIS1))
    epsilon = max(delta for delta in deltas if delta is not None)
    sum_tail = tail(eta_sum, p, L)
    assert 0 < epsilon <= sum_tail, "epsilon outside its proven bounds"
    on_lattice = (in_right and _in_lattice(eta.s1, p**d)) or (
        in_up and _in_lattice(eta.s2, p**d)
    )
    assert (epsilon == sum_tail) == on_lattice, "epsilon equality criterion violated"
    return FptResult(
        trunc_sum + epsilon, FptCase.TRUNCATED_PLUS_EPSILON, epsilon=epsilon, **common
    )


def fpt(g: Binomial, p: int) -> FptResult:
    """F-pure threshold of a binomial vanishing at the origin."""
    if not is_prime(p):
        raise ValueError("p must be prime")
    parts = factor(g)
    mono = monomial_fpt(parts.monomial_exponents)
    core_result = None if parts.core_is_unit else core_fpt(parts.core, p)
    if mono is None and core_result is None:
        raise ValueError("input does not vanish at the origin")
    if core_result is None:
        return FptResult(mono, FptCase.MONOMIAL_ONLY, monomial_fpt=mono)
    if mono is None:
        return FptResult(
            value=core_result.value,
            case=core_result.case,
            eta=core_result.eta,
            eta_sum=core_result.eta_sum,
            carry_free=core_result.carry_free,
            L=core_result.L,
            d=core_result.d,
            epsilon=core_result.epsilon,
            core_fpt=core_result.value,
        )
    return FptResult(
        value=min(mono, core_result.value),
        case=FptCase.MIN_COMBINED,
        eta=core_result.eta,
        eta_sum=core_result.eta_sum,
        carry_free=core_result.carry_free,
        L=core_result.L,
        d=core_result.d,
        epsilon=core_result.epsilon,
        monomial_fpt=mono,
        core_fpt=core_result.value,
    )


def fpt_truncation(result: FptResult, p: int, e: int) -> Fraction:
    """e-th base-p truncation of the computed threshold."""
    return truncate(result.value, p, e)


def fpt_limit(g: Binomial) -> Fraction:
    """Large-p limit of the threshold (the log canonical threshold).

    The monomial part contributes min(1/a_i); the core contributes
    min(1, |eta|).  No carry analysis is involved.
    """
    parts = factor(g)
    candidates = []
    mono = monomial_fpt(parts.monomial_exponents)
    if mono is not None:
        candidates.append(mono)
    if not parts.core_is_unit:
        matrix = build(parts.core.a, parts.core.b)
        mp = maximal_point(matrix)
        if mp is None:
            raise RuntimeError("constant row reached core")
        candidates.append(min(ONE, mp.sum))
    if not candidates:
        raise ValueError("input does not vanish at the origin")
    return min(candidates)
