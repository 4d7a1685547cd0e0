"""Special-function building blocks against frozen multiprecision values.

Reference numbers were computed with mpmath at 30+ significant digits and
are quoted to 17 digits; comparisons run at a few ulps above what float64
evaluation can honestly deliver.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from xiverify.specfun import (EULER_GAMMA, besselk0, besselk0_scaled,
                              digamma, gamma_fn, hyp1f1, hyp2f2_11, lngamma,
                              mobius_sieve, zeta, zeta_eta)


def _close(got, want, rel=1e-13, abs_tol=0.0):
    got, want = complex(got), complex(want)
    assert abs(got - want) <= max(abs_tol, rel * abs(want)), \
        "got %r want %r" % (got, want)


class TestLngamma:
    def test_known_complex_value(self):
        _close(lngamma(3.7 + 2.1j), 0.78534695807382239 + 2.5830129251152622j)

    def test_left_halfplane_value(self):
        # exercises the recurrence lift below Re z = 0.5
        _close(lngamma(-2.5 + 1.5j), -3.7175134511917918 - 7.7130655258341925j)

    def test_matches_stdlib_on_reals(self):
        for x in (0.5, 1.0, 2.5, 7.3, 41.0):
            _close(lngamma(x), math.lgamma(x), rel=1e-14)

    def test_gamma_half(self):
        _close(gamma_fn(0.5), math.sqrt(math.pi), rel=1e-14)

    def test_poles_raise(self):
        for bad in (0.0, -1.0, -7.0):
            with pytest.raises(ValueError):
                lngamma(bad)

    def test_array_shape_and_scalar_type(self):
        arr = lngamma(np.array([1.0, 2.0, 3.0]))
        assert arr.shape == (3,)
        assert not isinstance(lngamma(2.0 + 0j), np.ndarray)

    @settings(max_examples=60, deadline=None)
    @given(st.floats(0.05, 0.95), st.floats(-8.0, 8.0))
    def test_reflection(self, x, y):
        z = complex(x, y)
        lhs = np.exp(lngamma(z) + lngamma(1.0 - z))
        rhs = np.pi / np.sin(np.pi * z)
        _close(lhs, rhs, rel=1e-10)

    @settings(max_examples=60, deadline=None)
    @given(st.floats(0.1, 4.0), st.floats(-8.0, 8.0))
    def test_duplication(self, x, y):
        z = complex(x, y)
        lhs = lngamma(z) + lngamma(z + 0.5)
        rhs = (1.0 - 2.0 * z) * np.log(2.0) + 0.5 * np.log(np.pi) \
            + lngamma(2.0 * z)
        _close(np.exp(lhs - rhs), 1.0, rel=1e-10)


class TestDigamma:
    def test_small_argument(self):
        _close(digamma(0.3), -3.502524222200133)

    def test_complex_argument(self):
        _close(digamma(5.5 + 2.0j), 1.6846878228912377 + 0.37952403462929969j)

    def test_at_one(self):
        _close(digamma(1.0), -EULER_GAMMA, rel=1e-14)

    @settings(max_examples=60, deadline=None)
    @given(st.floats(0.01, 50.0))
    def test_recurrence(self, x):
        _close(digamma(x + 1.0), digamma(x) + 1.0 / x, rel=1e-11,
               abs_tol=1e-12)

    def test_pole_raises(self):
        with pytest.raises(ValueError):
            digamma(0.0)
        with pytest.raises(ValueError):
            digamma(-2.0)


class TestZeta:
    def test_basel(self):
        _close(zeta(2.0), math.pi ** 2 / 6.0, rel=1e-14)

    def test_even_integer(self):
        _close(zeta(4.0), math.pi ** 4 / 90.0, rel=1e-14)

    def test_critical_strip_value(self):
        _close(zeta(0.5 + 25.0j),
               0.0049845933640356754 - 0.014012301962583383j, rel=1e-11)

    def test_functional_equation_region(self):
        # Re s < 1/2 goes through the reflection; check against the frozen
        # value and against the alternating-series path, which needs no
        # reflection at Re s = 0.3
        want = 0.6756489981160233 + 0.25414478655467744j
        _close(zeta(0.3 + 5.0j), want, rel=1e-11)
        _close(zeta_eta(0.3 + 5.0j, 170), want, rel=1e-9)

    def test_negative_real_axis(self):
        _close(zeta(-3.7), 0.0025992549871493221, rel=1e-11)

    def test_near_pole_expansion(self):
        _close(zeta(1.0 + 5e-4), 2000.5772520716129, rel=1e-12)
        _close(zeta(1.0 + 1e-4 + 2e-4j),
               2000.5772229466314 - 3999.9999854370247j, rel=1e-12)

    def test_pole_raises(self):
        with pytest.raises(ValueError):
            zeta(1.0)

    @settings(max_examples=40, deadline=None)
    @given(st.floats(1.5, 6.0))
    def test_against_dirichlet_series(self, s):
        # independent route: 3000 direct terms plus the Euler-Maclaurin
        # tail of the remainder
        N = 3000
        n = np.arange(1.0, N + 1.0)
        direct = np.sum(n ** -s)
        tail = (N ** (1.0 - s) / (s - 1.0) - 0.5 * N ** -s
                + (s / 12.0) * N ** (-s - 1.0))
        _close(zeta(s), direct + tail, rel=1e-10)


class TestHyp1f1:
    def test_complex_a(self):
        _close(hyp1f1(0.25 - 1.5j, 0.5, 0.25),
               1.0327925889474725 - 0.84661266952995034j)

    def test_large_negative_a(self):
        # Kummer-switch territory: the direct series alternates violently
        _close(hyp1f1(-30.25, 0.5, 2.0), -2.7065110037195441, rel=1e-11)

    def test_large_imaginary_a(self):
        _close(hyp1f1(0.25 - 60.0j, 0.5, 0.25),
               93.851570667743259 + 97.929111541594068j, rel=1e-11)

    def test_at_zero(self):
        _close(hyp1f1(1.7, 0.5, 0.0), 1.0, rel=1e-15)

    def test_exponential_case(self):
        _close(hyp1f1(1.0, 1.0, 0.7), math.exp(0.7), rel=1e-14)

    def test_terminating_polynomial(self):
        x = 0.83
        want = 1.0 - 4.0 * x + (4.0 / 3.0) * x * x
        _close(hyp1f1(-2.0, 0.5, x), want, rel=1e-13)

    def test_bad_c_raises(self):
        with pytest.raises(ValueError):
            hyp1f1(1.0, 0.0, 0.5)
        with pytest.raises(ValueError):
            hyp1f1(1.0, -3.0, 0.5)

    @settings(max_examples=60, deadline=None)
    @given(st.floats(-10.0, 10.0), st.floats(-6.0, 6.0))
    def test_kummer_transformation(self, a, x):
        lhs = hyp1f1(a, 0.5, x)
        rhs = np.exp(x) * hyp1f1(0.5 - a, 0.5, -x)
        _close(lhs, rhs, rel=1e-9, abs_tol=1e-10)


class TestHyp2f2:
    def test_frozen_value(self):
        _close(hyp2f2_11(0.25), 1.0892002535044484)

    def test_at_zero(self):
        _close(hyp2f2_11(0.0), 1.0, rel=1e-15)

    def test_leading_series_term(self):
        # 2F2(1,1;3/2,2;z) = 1 + z/3 + O(z^2)
        z = 1e-5
        _close(hyp2f2_11(z), 1.0 + z / 3.0, rel=1e-9)


class TestBesselK0:
    def test_frozen_values(self):
        _close(besselk0(1.0), 0.42102443824070833)
        _close(besselk0(0.13), 2.1695034123504536)

    def test_scaled_large_argument(self):
        _close(besselk0_scaled(1000.0), 0.039628321600754217, rel=1e-14)

    def test_scaled_relation(self):
        _close(besselk0(5.0), besselk0_scaled(5.0) * math.exp(-5.0),
               rel=1e-14)

    def test_branch_seams(self):
        # series / continued fraction at 2, continued fraction /
        # asymptotic at 300; offsets small enough that the function's own
        # slope contributes < 1e-13 relative
        for seam in (2.0, 300.0):
            lo = besselk0_scaled(seam * (1.0 - 1e-13))
            hi = besselk0_scaled(seam * (1.0 + 1e-13))
            assert abs(lo - hi) <= 1e-12 * abs(hi)

    def test_nonpositive_raises(self):
        with pytest.raises(ValueError):
            besselk0(0.0)
        with pytest.raises(ValueError):
            besselk0_scaled(-1.0)

    @settings(max_examples=40, deadline=None)
    @given(st.floats(0.05, 30.0), st.floats(0.05, 30.0))
    def test_monotone_decreasing(self, a, b):
        lo, hi = min(a, b), max(a, b)
        if hi - lo > 1e-9:
            assert besselk0(lo) > besselk0(hi)


class TestMobius:
    def test_first_values(self):
        table = mobius_sieve(30)
        want = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]
        assert [table.mu(n) for n in range(1, 13)] == want

    def test_mertens_10k(self, mobius_100k):
        assert int(mobius_100k.values[1:10001].sum()) == -23

    def test_square_multiples_vanish(self, mobius_100k):
        for n in (4, 9, 25, 49, 121):
            for k in (1, 2, 3, 5):
                assert mobius_100k.mu(n * k) == 0

    @settings(max_examples=60, deadline=None)
    @given(st.integers(2, 300), st.integers(2, 300))
    def test_multiplicative_on_coprime_pairs(self, mobius_100k, m, n):
        if math.gcd(m, n) == 1:
            assert mobius_100k.mu(m * n) == mobius_100k.mu(m) * mobius_100k.mu(n)

    def test_out_of_range_raises(self, mobius_100k):
        with pytest.raises(ValueError):
            mobius_100k.mu(0)
        with pytest.raises(ValueError):
            mobius_100k.mu(100001)

    def test_euler_gamma_constant(self):
        assert EULER_GAMMA == pytest.approx(0.5772156649015329, abs=1e-16)
