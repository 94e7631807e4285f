"""Special-function kernel against an independent multiprecision oracle."""

import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sharpineq.errors import DomainError
from sharpineq.special import (
    AccuracyBudget,
    bessel_j,
    digamma,
    gamma,
    log_gamma,
    sphere_area,
)

mp.mp.dps = 40

EULER_GAMMA = 0.5772156649015328606065120900824024


def lg_rel(got, ref):
    return abs(got - ref) / max(1.0, abs(ref))


class TestLogGamma:
    def test_known_values(self):
        assert gamma(1.0) == pytest.approx(1.0, rel=1e-14)
        assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)
        assert gamma(0.25) == pytest.approx(3.6256099082219083119, rel=1e-13)
        assert gamma(6.0) == pytest.approx(120.0, rel=1e-14)

    def test_oracle_sweep(self):
        rng = np.random.default_rng(2024)
        xs = np.concatenate([
            10.0 ** rng.uniform(-3, 4, 300),
            np.linspace(1e-3, 170.0, 150),
        ])
        for x in xs:
            ref = float(mp.loggamma(mp.mpf(float(x))))
            assert lg_rel(log_gamma(float(x)), ref) <= 1e-13
            if x <= 170.0:
                gref = float(mp.gamma(mp.mpf(float(x))))
                assert gamma(float(x)) == pytest.approx(gref, rel=1e-13)

    @settings(derandomize=True, max_examples=200)
    @given(st.floats(min_value=0.01, max_value=50.0,
                     allow_nan=False, allow_infinity=False))
    def test_recurrence(self, x):
        assert gamma(x + 1.0) == pytest.approx(x * gamma(x), rel=1e-12)

    def test_duplication(self):
        # Legendre: Gamma(2x) = 2^{2x-1} / sqrt(pi) Gamma(x) Gamma(x + 1/2)
        rng = np.random.default_rng(5)
        for x in rng.uniform(0.01, 20.0, 200):
            lhs = log_gamma(2.0 * x)
            rhs = (2.0 * x - 1.0) * math.log(2.0) - 0.5 * math.log(math.pi) \
                + log_gamma(x) + log_gamma(x + 0.5)
            assert lhs == pytest.approx(rhs, abs=1e-11 * max(1.0, abs(lhs)))

    def test_vectorized(self):
        xs = np.array([0.5, 1.0, 2.5, 10.0])
        out = log_gamma(xs)
        assert out.shape == xs.shape
        assert out[1] == pytest.approx(0.0, abs=1e-15)

    def test_domain(self):
        for bad in [0.0, -1.0, math.nan, math.inf]:
            with pytest.raises(DomainError):
                log_gamma(bad)

    def test_overflow_reported(self):
        with pytest.raises(OverflowError):
            gamma(200.0)
        # log form stays finite where the plain value cannot
        assert math.isfinite(log_gamma(200.0))


class TestDigamma:
    def test_known_values(self):
        assert digamma(1.0) == pytest.approx(-EULER_GAMMA, abs=1e-14)
        assert digamma(0.5) == pytest.approx(-EULER_GAMMA - 2.0 * math.log(2.0),
                                             abs=1e-14)

    def test_oracle_sweep(self):
        rng = np.random.default_rng(11)
        for x in 10.0 ** rng.uniform(-2, 4, 200):
            ref = float(mp.digamma(mp.mpf(float(x))))
            assert digamma(float(x)) == pytest.approx(ref, abs=1e-12)

    def test_recurrence(self):
        rng = np.random.default_rng(13)
        for x in rng.uniform(0.01, 30.0, 200):
            assert digamma(x + 1.0) == pytest.approx(digamma(x) + 1.0 / x,
                                                     abs=1e-12)


class TestBesselJ:
    def test_half_order_closed_form(self):
        # J_{1/2}(x) = sqrt(2/(pi x)) sin x, exercised across all branches
        xs = np.linspace(0.1, 40.0, 400)
        got = bessel_j(0.5, xs)
        ref = np.sqrt(2.0 / (math.pi * xs)) * np.sin(xs)
        env = np.sqrt(2.0 / (math.pi * xs))
        assert np.all(np.abs(got - ref) <= 1e-10 * np.maximum(np.abs(ref), env))

    def test_at_zero(self):
        assert bessel_j(0.0, 0.0) == 1.0
        assert bessel_j(1.5, 0.0) == 0.0

    def test_specific_value(self):
        assert bessel_j(0.5, 0.5 * math.pi) == pytest.approx(2.0 / math.pi,
                                                             rel=1e-12)

    def test_first_zero_of_j0(self):
        lo, hi = 2.0, 3.0
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            if bessel_j(0.0, mid) > 0:
                lo = mid
            else:
                hi = mid
        assert 0.5 * (lo + hi) == pytest.approx(2.404825557695773, abs=1e-12)

    @pytest.mark.parametrize("nu", [0.0, 0.5, 1.0, 1.5, 2.0, 3.0, 5.0, 7.0])
    def test_oracle_grid(self, nu):
        # envelope-relative: near zeros of J the plain relative error is
        # meaningless, so compare against max(|J|, envelope)
        xs = np.linspace(1e-6, 50.0 * (nu + 1.0), 300)
        got = bessel_j(nu, xs)
        for x, g in zip(xs, got):
            ref = float(mp.besselj(mp.mpf(nu), mp.mpf(float(x))))
            env = math.sqrt(2.0 / (math.pi * max(x, nu + 1.0)))
            assert abs(g - ref) <= 1e-10 * max(abs(ref), env)

    def test_cancellation_band(self):
        # just below the asymptotic crossover the ascending series loses
        # digits; the downward recurrence must take over transparently
        for nu in [2.0, 3.0, 5.0, 10.0]:
            x = 11.0 + 2.0 * nu
            ref = float(mp.besselj(mp.mpf(nu), mp.mpf(x)))
            assert bessel_j(nu, x) == pytest.approx(ref, abs=1e-11)

    def test_domain(self):
        with pytest.raises(DomainError):
            bessel_j(-1.0, 1.0)
        with pytest.raises(DomainError):
            bessel_j(1.0, -0.5)

    def test_shape_preserved(self):
        xs = np.linspace(0.0, 30.0, 7).reshape(7, 1)
        assert bessel_j(1.0, xs).shape == (7, 1)
        assert isinstance(bessel_j(1.0, 2.0), float)


class TestSphereArea:
    def test_closed_forms(self):
        assert sphere_area(1) == pytest.approx(2.0, rel=1e-14)
        assert sphere_area(2) == pytest.approx(2.0 * math.pi, rel=1e-14)
        assert sphere_area(3) == pytest.approx(4.0 * math.pi, rel=1e-14)
        assert sphere_area(4) == pytest.approx(2.0 * math.pi ** 2, rel=1e-14)

    def test_recursion(self):
        # S_{n+2} = (2 pi / n) S_n
        for n in range(1, 15):
            assert sphere_area(n + 2) == pytest.approx(
                2.0 * math.pi / n * sphere_area(n), rel=1e-13)

    def test_domain(self):
        with pytest.raises(DomainError):
            sphere_area(0)
        with pytest.raises(DomainError):
            sphere_area(2.0)


class TestAccuracyBudget:
    def test_validation(self):
        AccuracyBudget(target_rel_err=1e-10, max_terms=64)
        with pytest.raises(DomainError):
            AccuracyBudget(target_rel_err=1e-3)
        with pytest.raises(DomainError):
            AccuracyBudget(max_terms=4)
