"""End-to-end threshold computation: factoring, min rule, case dispatch."""

from fractions import Fraction
from random import Random

import pytest

from binomial_fpt import (
    Binomial,
    FptCase,
    NuQuery,
    Point2,
    build,
    contains_lower_interior,
    core_fpt,
    factor,
    fpt,
    fpt_limit,
    fpt_truncation,
    monomial_fpt,
    nu_naive,
    nu_semigroup,
    scaled_truncation,
    tail,
    truncate,
)

from conftest import random_binomial

COMP = Binomial(("x", "y"), (7, 2), (5, 6))


class TestFactor:
    def test_shared_variable_factored(self):
        g = Binomial(("x", "y", "z"), (3, 0, 4), (0, 3, 4))
        parts = factor(g)
        assert parts.monomial_variables == ("z",)
        assert parts.monomial_exponents == (4,)
        assert parts.core.a == (3, 0)
        assert parts.core.b == (0, 3)
        assert not parts.core_is_unit

    def test_nothing_shared(self):
        parts = factor(COMP)
        assert parts.monomial_exponents == ()
        assert parts.core == COMP

    def test_unit_core(self):
        g = Binomial(("x", "y"), (2, 0), (2, 1))
        parts = factor(g)
        assert parts.monomial_variables == ("x",)
        assert parts.monomial_exponents == (2,)
        assert parts.core_is_unit


class TestMonomialFpt:
    def test_examples(self):
        assert monomial_fpt((3, 5)) == Fraction(1, 5)
        assert monomial_fpt((1,)) == Fraction(1)
        assert monomial_fpt(()) is None
        assert monomial_fpt((0, 0)) is None


class TestCoreCases:
    def test_carry_free_p47(self):
        result = core_fpt(COMP, 47)
        assert result.value == Fraction(3, 16)
        assert result.case is FptCase.CARRY_FREE
        assert result.eta == (Fraction(1, 32), Fraction(5, 32))
        assert result.eta_sum == Fraction(3, 16)
        assert result.carry_free

    def test_truncated_p43(self):
        result = core_fpt(COMP, 43)
        assert result.value == Fraction(8, 43)
        assert result.case is FptCase.TRUNCATED
        assert (result.L, result.d) == (1, 1)
        assert result.epsilon is None

    def test_truncated_plus_epsilon_p37(self):
        result = core_fpt(COMP, 37)
        assert result.value == Fraction(1283, 6845)
        assert result.case is FptCase.TRUNCATED_PLUS_EPSILON
        assert (result.L, result.d) == (2, 2)
        assert result.epsilon == Fraction(3, 6845)
        assert result.value == Fraction(256, 1369) + Fraction(3, 6845)

    def test_standard_above_one(self):
        g = Binomial(("x", "y"), (1, 0), (0, 2))
        for p in (2, 5, 11):
            result = core_fpt(g, p)
            assert result.value == 1
            assert result.case is FptCase.STANDARD_GT1
            assert result.eta_sum == Fraction(3, 2)
        # a linear factor pins nu at p^e - 1
        assert nu_semigroup(NuQuery(g, 3, 2)) == 8

    def test_divisible_monomial_lands_carry_free(self):
        g = Binomial(("x",), (2,), (5,))
        for p in (2, 3, 7):
            result = core_fpt(g, p)
            assert result.case is FptCase.CARRY_FREE
            assert result.value == Fraction(1, 2)
            assert result.eta == (Fraction(1, 2), Fraction(0))


class TestMinRule:
    def test_monomial_wins(self):
        g = Binomial(("x", "y", "z"), (3, 0, 4), (0, 3, 4))
        for p in (5, 7, 13):
            result = fpt(g, p)
            assert result.value == Fraction(1, 4)
            assert result.case is FptCase.MIN_COMBINED
            assert result.monomial_fpt == Fraction(1, 4)
        # the core x^3 + y^3 is carry-free exactly when p = 1 mod 3
        assert fpt(g, 7).core_fpt == Fraction(2, 3)
        assert fpt(g, 13).core_fpt == Fraction(2, 3)
        assert fpt(g, 5).core_fpt == Fraction(3, 5)

    def test_unit_core_drops_out(self):
        result = fpt(Binomial(("x", "y"), (2, 0), (2, 1)), 5)
        assert result.value == Fraction(1, 2)
        assert result.case is FptCase.MONOMIAL_ONLY
        assert result.core_fpt is None

    def test_comp_p97(self):
        result = fpt(COMP, 97)
        assert result.value == Fraction(3, 16)
        assert result.case is FptCase.CARRY_FREE

    def test_non_vanishing_rejected(self):
        with pytest.raises(ValueError, match="does not vanish at the origin"):
            fpt(Binomial(("y",), (0,), (1,)), 5)


class TestTruncationAndLimit:
    def test_cross_prime_truncation(self):
        result_3_16 = fpt(COMP, 47)
        assert fpt_truncation(result_3_16, 43, 1) == Fraction(8, 43)

    def test_truncation_of_one(self):
        result = fpt(Binomial(("x", "y"), (1, 0), (0, 2)), 7)
        assert fpt_truncation(result, 7, 3) == Fraction(7**3 - 1, 7**3)

    def test_p37_level_two(self):
        result = fpt(COMP, 37)
        assert fpt_truncation(result, 37, 2) == Fraction(256, 1369)

    def test_limits(self):
        assert fpt_limit(COMP) == Fraction(3, 16)
        assert fpt_limit(Binomial(("x", "y"), (1, 0), (0, 2))) == 1
        assert fpt_limit(Binomial(("x", "y", "z"), (3, 0, 4), (0, 3, 4))) == Fraction(1, 4)

    def test_truncations_increase_and_converge(self):
        rng = Random(301)
        for _ in range(60):
            g = random_binomial(rng)
            p = rng.choice((2, 3, 5, 7, 11))
            result = fpt(g, p)
            last = Fraction(0)
            for e in range(1, 9):
                tr = fpt_truncation(result, p, e)
                assert tr >= last
                assert 0 < result.value - tr <= Fraction(1, p**e)
                last = tr


class TestPowerOfTwo:
    def test_power_of_two_prime_reaches_limit_with_carrying(self):
        # At p = 2 the eta digits carry at position 6, yet the epsilon
        # correction attains its upper bound (1/32 is a lattice point at
        # level d = 5), so the threshold still reaches 3/16 exactly.
        result = fpt(COMP, 2)
        assert result.value == Fraction(3, 16)
        assert result.case is FptCase.TRUNCATED_PLUS_EPSILON
        assert (result.L, result.d) == (5, 5)
        assert result.epsilon == Fraction(1, 32)
        assert result.epsilon == tail(result.eta_sum, 2, 5)
        assert not result.carry_free

        expected = [0, 0, 1, 2, 5, 11, 23, 47]
        for e, nu in enumerate(expected, start=1):
            assert scaled_truncation(result.value, 2, e) == nu
            assert nu_semigroup(NuQuery(COMP, 2, e)) == nu
            assert nu_naive(NuQuery(COMP, 2, e)) == nu


class TestResultShape:
    def test_value_range_and_diagnostics(self):
        rng = Random(302)
        for _ in range(150):
            g = random_binomial(rng)
            p = rng.choice((2, 3, 5, 7, 11, 13))
            result = fpt(g, p)
            assert 0 < result.value <= 1
            if result.eta is not None:
                assert result.eta_sum == result.eta.s1 + result.eta.s2
            if result.case is FptCase.CARRY_FREE:
                assert result.value == min(result.eta_sum, result.monomial_fpt or 1)
            if result.case is FptCase.TRUNCATED_PLUS_EPSILON:
                assert result.epsilon is not None and result.epsilon > 0

    def test_epsilon_bounds_and_equality_law(self):
        rng = Random(303)
        seen = 0
        for _ in range(400):
            g = random_binomial(rng)
            p = rng.choice((2, 3, 5, 7, 11))
            result = fpt(g, p)
            if result.case is not FptCase.TRUNCATED_PLUS_EPSILON or result.monomial_fpt is not None:
                continue
            seen += 1
            cap = tail(result.eta_sum, p, result.L)
            assert 0 < result.epsilon <= cap
            # the correction attains the tail exactly when the lattice
            # coordinate belongs to a candidate that is itself in the
            # lower interior (the ray through the other candidate may
            # run inside a face and must not count)
            matrix = build(g.a, g.b)
            step = Fraction(1, p**result.d)
            t1 = truncate(result.eta.s1, p, result.d)
            t2 = truncate(result.eta.s2, p, result.d)
            in_right = contains_lower_interior(matrix, Point2(t1 + step, t2))
            in_up = contains_lower_interior(matrix, Point2(t1, t2 + step))
            lattice = (
                in_right and (result.eta.s1 * p**result.d).denominator == 1
            ) or (in_up and (result.eta.s2 * p**result.d).denominator == 1)
            assert (result.epsilon == cap) == lattice
        assert seen > 20

    def test_symmetry(self):
        rng = Random(304)
        for _ in range(80):
            g = random_binomial(rng)
            p = rng.choice((3, 5, 7))
            base = fpt(g, p).value
            swapped = Binomial(g.variables, g.b, g.a)
            assert fpt(swapped, p).value == base
            order = list(range(len(g.variables)))
            rng.shuffle(order)
            permuted = Binomial(
                tuple(g.variables[i] for i in order),
                tuple(g.a[i] for i in order),
                tuple(g.b[i] for i in order),
            )
            assert fpt(permuted, p).value == base

    def test_master_property_sample(self):
        rng = Random(305)
        for _ in range(40):
            g = random_binomial(rng)
            p = rng.choice((2, 3, 5, 7))
            e = rng.choice((1, 2))
            result = fpt(g, p)
            predicted = p**e * fpt_truncation(result, p, e)
            assert predicted == nu_semigroup(NuQuery(g, p, e))
