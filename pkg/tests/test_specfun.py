"""Special-function layer: values against independent oracles, exact tables,
and the printed inequality grids."""

import math
from fractions import Fraction
from math import comb

import numpy as np
import pytest

from felog.specfun import (
    EULER_MASCHERONI,
    RationalTriangle,
    bernoulli_numbers,
    bernoulli_poly,
    bernoulli_poly_exact,
    beta_fn,
    bound_predicates,
    classical_series_coeffs,
    euler_poly,
    euler_poly_exact,
    gamma_fn,
    ln_gamma,
)


class TestLnGamma:
    def test_gamma_one_is_exact(self):
        assert ln_gamma(1.0) == 0.0

    def test_gamma_five_is_factorial(self):
        assert ln_gamma(5.0) == pytest.approx(math.log(24.0), abs=1e-14)

    def test_half_against_quadrature_oracle(self):
        # defining integral evaluated by adaptive quadrature, split at the
        # integrable endpoint singularity (the weight supplies t^(x-1));
        # independent of the series implementation under test
        from scipy.integrate import quad

        x = 0.5
        left, _ = quad(lambda t: math.exp(-t), 0.0, 1.0,
                       weight="alg", wvar=(x - 1.0, 0.0))
        right, _ = quad(lambda t: t ** (x - 1.0) * math.exp(-t), 1.0, np.inf)
        assert ln_gamma(0.5) == pytest.approx(math.log(left + right), abs=1e-12)
        assert ln_gamma(0.5) == pytest.approx(0.5723649429247001, abs=1e-13)

    def test_budget_on_stated_range(self):
        # |exp(ln_gamma) - Gamma| / Gamma <= 1e-13 on [1e-3, 170], i.e. the
        # log values agree absolutely to 1e-13. The reference must be
        # arbitrary precision: library implementations are themselves only
        # ulp-accurate, and one ulp of lnGamma(170) already exceeds 1e-13.
        mp = pytest.importorskip("mpmath")
        mp.mp.dps = 30
        rng = np.random.default_rng(7)
        xs = np.concatenate([
            np.geomspace(1e-3, 1.0, 150),
            np.linspace(1.0, 170.0, 400),
            rng.uniform(1e-3, 170.0, 150),
            [1e-3, 0.5, 1.0, 8.0, 170.0],
        ])
        worst = 0.0
        for x in xs:
            err = abs(mp.mpf(ln_gamma(float(x))) - mp.loggamma(mp.mpf(float(x))))
            worst = max(worst, float(err))
        assert worst <= 1e-13

    @pytest.mark.parametrize("bad", [0.0, -1.0, -0.5])
    def test_domain_error(self, bad):
        with pytest.raises(ValueError):
            ln_gamma(bad)


class TestBetaFn:
    def test_uniform_integrand(self):
        assert beta_fn(1.0, 1.0) == pytest.approx(1.0, rel=1e-14)

    def test_two_three(self):
        assert beta_fn(2.0, 3.0) == pytest.approx(1.0 / 12.0, rel=1e-12)

    def test_half_half_is_pi(self):
        assert beta_fn(0.5, 0.5) == pytest.approx(math.pi, rel=1e-12)

    def test_matches_log_gamma_combination(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            x, y = rng.uniform(0.1, 40.0, 2)
            expected = math.exp(ln_gamma(x) + ln_gamma(y) - ln_gamma(x + y))
            assert beta_fn(x, y) == pytest.approx(expected, rel=1e-12)

    def test_domain_error(self):
        with pytest.raises(ValueError):
            beta_fn(-1.0, 2.0)
        with pytest.raises(ValueError):
            beta_fn(1.0, 0.0)

    def test_stirling_asymptotic_at_50(self):
        # B(x,x) (2x)^(2x-1/2) / (sqrt(2 pi) x^(2x-1)) -> 1, within 1% at x=50
        x = 50.0
        log_ratio = (
            (ln_gamma(x) + ln_gamma(x) - ln_gamma(2 * x))
            + (2 * x - 0.5) * math.log(2 * x)
            - 0.5 * math.log(2 * math.pi)
            - (2 * x - 1.0) * math.log(x)
        )
        assert abs(math.exp(log_ratio) - 1.0) <= 0.01


class TestBernoulli:
    def test_table_matches_stated_values(self):
        b = bernoulli_numbers(8)
        assert b == [
            Fraction(1),
            Fraction(-1, 2),
            Fraction(1, 6),
            Fraction(0),
            Fraction(-1, 30),
            Fraction(0),
            Fraction(1, 42),
            Fraction(0),
            Fraction(-1, 30),
        ]

    def test_odd_entries_vanish(self):
        b = bernoulli_numbers(39)
        for s in range(3, 40, 2):
            assert b[s] == 0

    def test_poly_at_zero_recovers_numbers(self):
        b = bernoulli_numbers(40)
        for s in range(41):
            assert bernoulli_poly_exact(s, 0) == b[s]

    def test_negative_raises(self):
        with pytest.raises(ValueError):
            bernoulli_numbers(-1)


class TestRationalTriangle:
    def test_binomial_rows(self):
        tri = RationalTriangle.binomial(6)
        assert len(tri) == 7
        assert tri.row(4) == tuple(Fraction(comb(4, j)) for j in range(5))

    def test_bernoulli_rows_hold_poly_coeffs(self):
        tri = RationalTriangle.bernoulli(5)
        # row 2: B_2(x) = x^2 - x + 1/6
        assert tri.row(2) == (Fraction(1, 6), Fraction(-1), Fraction(1))

    def test_ragged_rows_rejected(self):
        with pytest.raises(ValueError):
            RationalTriangle(((Fraction(1), Fraction(2)),))


class TestPolynomials:
    def test_bernoulli_poly_degree_zero(self):
        for x in (-2.0, 0.0, 0.3, 7.5):
            assert bernoulli_poly(0, x) == 1.0

    def test_bernoulli_poly_linear_at_half(self):
        assert bernoulli_poly(1, 0.5) == 0.0

    def test_bernoulli_poly_b2_at_zero(self):
        assert bernoulli_poly(2, 0.0) == pytest.approx(1.0 / 6.0, abs=0.0)

    def test_euler_poly_degree_zero(self):
        for x in (-1.0, 0.0, 0.25, 3.0):
            assert euler_poly(0, x) == 1.0

    def test_euler_poly_linear_at_one(self):
        assert euler_poly(1, 1.0) == 0.5

    def test_euler_poly_cubic_at_one(self):
        assert euler_poly(3, 1.0) == -0.25

    def test_against_forward_difference_oracle(self):
        # independent representation from the generating function:
        # E_n(x) = sum_{k<=n} 2^-k sum_{j<=k} (-1)^j C(k,j) (x+j)^n
        def oracle(n, x):
            x = Fraction(x)
            total = Fraction(0)
            for k in range(n + 1):
                inner = Fraction(0)
                for j in range(k + 1):
                    inner += (-1) ** j * comb(k, j) * (x + j) ** n
                total += inner / Fraction(2) ** k
            return total

        for n in range(0, 16):
            for x in (Fraction(0), Fraction(1), Fraction(1, 2), Fraction(-2, 3)):
                assert euler_poly_exact(n, x) == oracle(n, x)

    def test_odd_values_at_one_alternate_and_evens_vanish(self):
        values = [euler_poly_exact(k, 1) for k in range(0, 42)]
        for k in range(1, 21):
            assert values[2 * k] == 0
        odd = values[1::2]
        for j, v in enumerate(odd):
            assert v != 0
            assert (v > 0) == (j % 2 == 0)

    def test_odd_index_trend_toward_negative_one(self):
        # |(-1)^((k+1)/2) pi^(k+1)/(4 k!) E_k(1) + 1| strictly decreasing for
        # odd k = 9..25 (limit value is cos(pi) = -1); expected magnitudes
        # confirmed against an arbitrary-precision evaluation beforehand
        gaps = []
        for k in range(9, 27, 2):
            d = (
                (-1) ** ((k + 1) // 2)
                * math.pi ** (k + 1)
                / (4.0 * math.factorial(k))
                * euler_poly(k, 1.0)
            )
            gaps.append(abs(d + 1.0))
        assert all(b < a for a, b in zip(gaps, gaps[1:]))
        assert gaps[0] == pytest.approx(1.7041363e-05, rel=1e-5)
        assert gaps[-1] == pytest.approx(3.9341247e-13, rel=1e-2)


class TestClassicalCoeffs:
    def test_first_values(self):
        u = classical_series_coeffs(5)
        assert u[0] == 0.5
        assert u[1] == 0.25
        assert u[2] == 0.0
        assert u[3] == -0.125
        assert u[5] == 0.25


class TestBoundPredicates:
    def test_beta_bound_example(self):
        flags = bound_predicates(x=2.0, y=3.0)
        assert flags.beta_bound is True  # 1/12 <= 1/6

    def test_gamma_unit_at_endpoint(self):
        flags = bound_predicates(x=1.0)
        assert flags.gamma_unit is True  # 2^0 <= Gamma(2) = 1 <= 1
        assert flags.gamma_envelope is None  # strict bound needs x > 1

    def test_gamma_envelope_at_two(self):
        flags = bound_predicates(x=2.0)
        assert flags.gamma_envelope is True
        # the numbers behind the flag: 2^(2-g)/e < 1 < 2^1.5/e
        lo = 2.0 ** (2.0 - EULER_MASCHERONI) / math.e
        hi = 2.0**1.5 / math.e
        assert lo < gamma_fn(2.0) < hi

    def test_grids_from_the_inequalities(self):
        pts = [1.01, 1.5, 2.0, 5.0, 10.0, 50.0]
        for x in pts:
            for y in pts:
                flags = bound_predicates(x=x, y=y)
                assert flags.beta_bound is True
                assert flags.gamma_envelope is True
        for x in (0.0, 0.25, 0.5, 0.75, 1.0):
            assert bound_predicates(x=x).gamma_unit is True

    def test_unit_bound_via_beta_argument(self):
        flags = bound_predicates(x=5.0, y=3.0, beta=0.5)
        assert flags.gamma_unit is True
        assert flags.beta_bound is True

    def test_out_of_every_domain(self):
        with pytest.raises(ValueError):
            bound_predicates(x=-3.0)


def test_euler_mascheroni_close_to_printed():
    assert abs(EULER_MASCHERONI - 0.577215) < 1e-6
