"""Brute-force Frobenius-power oracles."""

from random import Random

import pytest

from binomial_fpt import (
    Binomial,
    BudgetExceeded,
    NuQuery,
    fpt,
    nu_monomial,
    nu_naive,
    nu_semigroup,
    verify,
)

from conftest import random_binomial

COMP = Binomial(("x", "y"), (7, 2), (5, 6))


class TestNuSemigroup:
    def test_comp_p43_level1(self):
        # fpt = 8/43 terminates in one digit, so the non-terminating
        # truncation ladder runs 7, 343, ... (never 8: f^8 needs
        # 40 + 2*k1 <= 42 and 48 - 4*k1 <= 42 at once)
        assert nu_semigroup(NuQuery(COMP, 43, 1)) == 7
        assert nu_semigroup(NuQuery(COMP, 43, 2)) == 343

    def test_linear_factor_reaches_cap(self):
        g = Binomial(("x", "y"), (1, 0), (0, 2))
        assert nu_semigroup(NuQuery(g, 3, 2)) == 8

    def test_squares_p3(self):
        g = Binomial(("x", "y"), (2, 0), (0, 2))
        assert nu_semigroup(NuQuery(g, 3, 1)) == 2

    def test_budget(self):
        with pytest.raises(BudgetExceeded, match="16384"):
            nu_semigroup(NuQuery(COMP, 131, 3))
        assert nu_semigroup(NuQuery(COMP, 131, 2), budget=131**2) >= 0


class TestNuNaive:
    def test_squares_p3(self):
        g = Binomial(("x", "y"), (2, 0), (0, 2))
        assert nu_naive(NuQuery(g, 3, 1)) == 2

    def test_cross_oracle_p2(self):
        q = NuQuery(COMP, 2, 2)
        assert nu_naive(q) == nu_semigroup(q)

    def test_budget(self):
        with pytest.raises(BudgetExceeded, match="naive budget"):
            nu_naive(NuQuery(COMP, 7, 4))

    def test_coefficients_cannot_cancel(self):
        rng = Random(401)
        for _ in range(40):
            g = random_binomial(rng, max_vars=2, max_exp=4)
            p = rng.choice((3, 5, 7))
            base = nu_naive(NuQuery(g, p, 1))
            for c1, c2 in ((1, p - 1), (p - 1, p - 1), (2 % p or 1, 1)):
                colored = Binomial(g.variables, g.a, g.b, c1, c2)
                assert nu_naive(NuQuery(colored, p, 1)) == base


class TestNuMonomial:
    def test_single_variable(self):
        assert nu_monomial((1,), 5, 1) == 4
        assert nu_monomial((1,), 5, 2) == 24

    def test_min_over_exponents(self):
        # x^3 y^5: the y budget binds first
        assert nu_monomial((3, 5), 7, 1) == (7 - 1) // 5

    def test_rejects_constant(self):
        with pytest.raises(ValueError):
            nu_monomial((0, 0), 5, 1)


class TestVerify:
    def test_comp_p43(self):
        report = verify(NuQuery(COMP, 43, 1), fpt(COMP, 43))
        assert report.predicted_nu == report.semigroup_nu == report.naive_nu == 7
        assert report.match

    def test_comp_p47(self):
        report = verify(NuQuery(COMP, 47, 1), fpt(COMP, 47))
        assert report.predicted_nu == report.semigroup_nu == report.naive_nu == 8
        assert report.match

    def test_monomial_times_unit(self):
        g = Binomial(("x", "y"), (2, 0), (2, 1))
        report = verify(NuQuery(g, 3, 2), fpt(g, 3))
        assert report.predicted_nu == report.semigroup_nu == report.naive_nu == 4
        assert report.match

    def test_naive_skipped_past_budget(self):
        report = verify(NuQuery(COMP, 43, 2), fpt(COMP, 43))
        assert report.naive_nu is None
        assert report.semigroup_nu == report.predicted_nu == 343
        assert report.match

    def test_json_shape(self):
        report = verify(NuQuery(COMP, 47, 1), fpt(COMP, 47))
        assert report.to_json() == {
            "predicted_nu": 8,
            "semigroup_nu": 8,
            "naive_nu": 8,
            "match": True,
        }


class TestOracleAgreement:
    def test_cross_oracle_equality(self):
        rng = Random(402)
        for _ in range(60):
            g = random_binomial(rng, max_vars=2, max_exp=5)
            p = rng.choice((2, 3, 5, 7, 11))
            e = 1 if p > 5 else rng.choice((1, 2))
            if p**e > 125:
                e = 1
            q = NuQuery(g, p, e)
            assert nu_semigroup(q) == nu_naive(q)

    def test_level_monotonicity(self):
        rng = Random(403)
        for _ in range(60):
            g = random_binomial(rng)
            p = rng.choice((2, 3, 5, 7))
            lower = nu_semigroup(NuQuery(g, p, 1))
            upper = nu_semigroup(NuQuery(g, p, 2))
            assert upper >= p * lower

    def test_invalid_queries_rejected(self):
        with pytest.raises(ValueError, match="prime"):
            NuQuery(COMP, 6, 1)
        with pytest.raises(ValueError, match="level"):
            NuQuery(COMP, 5, 0)
