"""Brute-force Frobenius oracles.

nu(e) is the largest l such that f^l stays outside the ideal generated
by the p^e-th powers of the variables.  The engine predicts it as
p^e times the e-th truncation of the threshold; the two oracles below
recompute it independently:

  * nu_semigroup enumerates lattice pairs (k1, k2) subject to the row
    constraints a_i k1 + b_i k2 <= p^e - 1 and keeps those whose
    base-p addition is carry free, maximizing k1 + k2;
  * nu_naive raises f to successive powers with genuine sparse
    polynomial arithmetic over F_p, discarding monomials with any
    exponent >= p^e.

Both are exponential-in-e desk tools, so they enforce explicit
budgets rather than hard-coded limits.
"""

from __future__ import annotations

from dataclasses import dataclass

from .base_p import adds_without_carrying, scaled_truncation
from .engine import Binomial, FptResult
from .primes import is_prime

SEMIGROUP_BUDGET = 2**14
NAIVE_BUDGET = 256


class BudgetExceeded(Exception):
    """p^e is past the configured budget for an oracle."""


@dataclass(frozen=True)
class NuQuery:
    binomial: Binomial
    prime: int
    level: int

    def __post_init__(self) -> None:
        if not is_prime(self.prime):
            raise ValueError("p must be prime")
        if self.level < 1:
            raise ValueError("level must be at least 1")
        if not self.binomial.vanishes_at_origin():
            raise ValueError("input does not vanish at the origin")


@dataclass(frozen=True)
class VerificationReport:
    predicted_nu: int
    semigroup_nu: int
    naive_nu: int | None
    match: bool

    def to_json(self) -> dict:
        return {
            "predicted_nu": self.predicted_nu,
            "semigroup_nu": self.semigroup_nu,
            "naive_nu": self.naive_nu,
            "match": self.match,
        }


def nu_semigroup(query: NuQuery, *, budget: int = SEMIGROUP_BUDGET) -> int:
    """max{k1 + k2 : E(k1,k2) <= p^e - 1 rowwise, carry-free addition}."""
    p, e = query.prime, query.level
    q = p**e
    if q > budget:
        raise BudgetExceeded(f"p^e = {q} exceeds the semigroup budget {budget}")
    g = query.binomial
    rows = list(zip(g.a, g.b))
    cap = q - 1
    k1_max = min(cap // a for a, _ in rows if a > 0)
    b_rows = [(a, b) for a, b in rows if b > 0]
    best = 0
    if p == 2:
        def carry_free(x: int, y: int) -> bool:
            return x & y == 0
    else:
        def carry_free(x: int, y: int) -> bool:
            return adds_without_carrying(x, y, p)
    for k1 in range(k1_max + 1):
        k2_max = min((cap - a * k1) // b for a, b in b_rows)
        if k1 + k2_max <= best:
            continue
        for k2 in range(k2_max, max(best - k1, -1), -1):
            if carry_free(k1, k2):
                best = k1 + k2
                break
    return best


def nu_naive(query: NuQuery, *, budget: int = NAIVE_BUDGET) -> int:
    """Largest l with f^l nonzero after discarding exponents >= p^e.

    Powers are built incrementally in the quotient ring, as dictionaries
    mapping exponent tuples to nonzero residues mod p.  Once a power
    reduces to zero every later power does too, so the loop stops at the
    first zero.  Uses the supplied coefficients (defaults 1, 1).
    """
    p, e = query.prime, query.level
    q = p**e
    if q > budget:
        raise BudgetExceeded(f"p^e = {q} exceeds the naive budget {budget}")
    g = query.binomial
    c1 = 1 if g.coeff1 is None else g.coeff1 % p
    c2 = 1 if g.coeff2 is None else g.coeff2 % p
    if c1 == 0 or c2 == 0:
        raise ValueError("zero coefficient mod p")
    terms = ((g.a, c1), (g.b, c2))
    power: dict[tuple[int, ...], int] = {(0,) * len(g.variables): 1}
    hard_cap = len(g.variables) * (q - 1) + 1
    for level in range(1, hard_cap + 1):
        nxt: dict[tuple[int, ...], int] = {}
        for mono, coef in power.items():
            for exps, c in terms:
                prod = tuple(x + y for x, y in zip(mono, exps))
                if any(x >= q for x in prod):
                    continue
                val = (nxt.get(prod, 0) + coef * c) % p
                if val:
                    nxt[prod] = val
                elif prod in nxt:
                    del nxt[prod]
        if not nxt:
            return level - 1
        power = nxt
    raise RuntimeError("power iteration failed to terminate")


def nu_monomial(exponents: tuple[int, ...], prime: int, level: int, *, budget: int = SEMIGROUP_BUDGET) -> int:
    """Largest l with (x^a)^l outside the Frobenius power, by powering.

    The degenerate one-term case: no binomial coefficients arise, so
    the semigroup and naive methods coincide.  Kept as real iteration
    rather than a closed form so it stays an independent check.
    """
    if not is_prime(prime):
        raise ValueError("p must be prime")
    if level < 1:
        raise ValueError("level must be at least 1")
    if not any(exponents) or any(x < 0 for x in exponents):
        raise ValueError("monomial must be nonconstant with nonnegative exponents")
    q = prime**level
    if q > budget:
        raise BudgetExceeded(f"p^e = {q} exceeds the budget {budget}")
    power = tuple(0 for _ in exponents)
    count = 0
    while True:
        power = tuple(x + y for x, y in zip(power, exponents))
        if any(x >= q for x in power):
            return count
        count += 1


def verify(
    query: NuQuery,
    predicted: FptResult,
    *,
    semigroup_budget: int = SEMIGROUP_BUDGET,
    naive_budget: int = NAIVE_BUDGET,
) -> VerificationReport:
    """Compare the engine's predicted nu(e) against both oracles.

    The naive oracle is skipped (reported as None) when p^e is past its
    budget; the semigroup oracle always runs, so its budget still
    applies.
    """
    p, e = query.prime, query.level
    predicted_nu = scaled_truncation(predicted.value, p, e)
    semigroup = nu_semigroup(query, budget=semigroup_budget)
    naive: int | None = None
    if p**e <= naive_budget:
        naive = nu_naive(query, budget=naive_budget)
    match = predicted_nu == semigroup and (naive is None or naive == predicted_nu)
    return VerificationReport(predicted_nu, semigroup, naive, match)
