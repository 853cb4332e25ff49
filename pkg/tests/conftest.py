"""Shared deterministic generators for the randomized suites.

Each test builds its own random.Random with a fixed seed, so every
failure reproduces exactly; the helpers here only know how to draw
well-formed inputs.
"""

from fractions import Fraction
from random import Random

from binomial_fpt import Binomial, SplittingMatrix, build

SMALL_PRIMES = (2, 3, 5, 7, 11, 13)

VARIABLE_NAMES = ("x", "y", "z", "w")


def random_unit_fraction(rng: Random, max_den: int = 60) -> Fraction:
    """A rational in (0, 1] with denominator at most max_den."""
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(1, den), den)


def random_binomial(rng: Random, max_vars: int = 3, max_exp: int = 6) -> Binomial:
    """A valid binomial vanishing at the origin.

    Both exponent vectors are nonzero, the monomials are distinct, and
    every variable appears in at least one of them.
    """
    while True:
        n = rng.randint(1, max_vars)
        a = tuple(rng.randint(0, max_exp) for _ in range(n))
        b = tuple(rng.randint(0, max_exp) for _ in range(n))
        if a == b or not any(a) or not any(b):
            continue
        if any(ai == 0 and bi == 0 for ai, bi in zip(a, b)):
            continue
        return Binomial(variables=VARIABLE_NAMES[:n], a=a, b=b)


def random_core_matrix(rng: Random, max_rows: int = 4, max_exp: int = 9) -> SplittingMatrix:
    """A splitting matrix with no constant rows and a bounded polytope.

    No constant rows means the maximal point is a single vertex; both
    columns being nonzero somewhere keeps the polytope bounded.
    """
    while True:
        n = rng.randint(1, max_rows)
        rows = [(rng.randint(0, max_exp), rng.randint(0, max_exp)) for _ in range(n)]
        if any(a == b for a, b in rows):
            continue
        if not any(a for a, _ in rows) or not any(b for _, b in rows):
            continue
        return build(tuple(a for a, _ in rows), tuple(b for _, b in rows))


def random_axis_biased_matrix(rng: Random, max_exp: int = 9) -> SplittingMatrix:
    """Core matrices that often put the maximal coordinate sum above 1.

    Mixes plain random matrices with ones seeded by the axis rows
    (1, 0) and (0, n), which are exactly the shapes whose maximal
    point can exceed coordinate sum 1.
    """
    if rng.random() < 0.6:
        rows = [(1, 0), (0, rng.randint(1, max_exp))]
        if rng.random() < 0.5:
            rows = [(b, a) for a, b in rows]
        for _ in range(rng.randint(0, 2)):
            a, b = rng.randint(0, max_exp), rng.randint(0, max_exp)
            if a != b and (a, b) != (0, 0):
                rows.append((a, b))
        if not any(a for a, _ in rows) or not any(b for _, b in rows):
            return random_axis_biased_matrix(rng, max_exp)
        return build(tuple(a for a, _ in rows), tuple(b for _, b in rows))
    return random_core_matrix(rng, max_rows=3, max_exp=max_exp)
