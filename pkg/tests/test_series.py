import json
import math
import random

import pytest

from bohrlab import series as ser

from conftest import random_admissible_pair, random_blaschke_series


def closed_majorant(a, rho):
    # a + (1-a^2) rho / (1 - a rho), summed geometric series of the extremal family
    return a + (1.0 - a * a) * rho / (1.0 - a * rho)


def closed_quadratic(a, rho):
    return (1.0 - a * a) ** 2 * rho * rho / (1.0 - a * a * rho * rho)


def closed_area(a, rho):
    return (1.0 - a * a) ** 2 * rho * rho / (1.0 - a * a * rho * rho) ** 2


class TestCoeffSeries:
    def test_rejects_large_constant(self):
        with pytest.raises(ValueError):
            ser.CoeffSeries(0.0, (1.5,))

    def test_rejects_schwarz_pick_violation(self):
        with pytest.raises(ValueError, match="index 2"):
            ser.CoeffSeries(0.0, (0.5, 0.1, 0.9))

    def test_zero_mode_skips_bound(self):
        s = ser.CoeffSeries(0.0, (0.5, 0.1, 0.9), ser.TailMode.ZERO)
        assert s.n_trunc == 2

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            ser.CoeffSeries(0.0, ())

    def test_sp_bound(self):
        s = ser.CoeffSeries(0.2, (0.6, 0.3))
        assert s.sp_bound == pytest.approx(0.64)

    def test_shifted_round_trip(self):
        gamma = 0.3
        a_coeffs = [0.4, 0.2, 0.1j, -0.05]
        s = ser.from_shifted_coeffs(gamma, a_coeffs)
        back = s.shifted_coeffs()
        for orig, rec in zip(a_coeffs, back):
            assert abs(complex(orig) - rec) < 1e-14

    def test_shifted_bound_scales_with_gamma(self):
        # a_1 = 0.9 passes at gamma=0 but violates the shifted bound at gamma=0.5
        ser.from_shifted_coeffs(0.0, [0.0, 0.9])
        with pytest.raises(ValueError):
            ser.from_shifted_coeffs(0.5, [0.0, 0.9])

    def test_json_round_trip(self):
        s = ser.CoeffSeries(0.25, (0.3 + 0.1j, -0.2, 0.4j))
        blob = json.dumps(s.to_dict())
        back = ser.CoeffSeries.from_dict(json.loads(blob))
        assert back == s

    def test_truncation_cap(self):
        with pytest.raises(ValueError):
            ser.CoeffSeries(0.0, (0.0,) * (ser.N_TRUNC_CAP + 2))


class TestExtremalSeries:
    def test_coefficient_pattern(self):
        s = ser.extremal_series(0.0, 0.5)
        assert s.coeffs[0] == 0.5
        for n in range(1, 5):
            assert s.coeffs[n] == pytest.approx(-(0.5 ** (n - 1)) * 0.75)

    def test_attains_bound_at_first_index(self):
        s = ser.extremal_series(0.3, 0.7)
        assert abs(s.coeffs[1]) == pytest.approx(s.sp_bound)

    def test_a_zero_is_degree_one(self):
        s = ser.extremal_series(0.0, 0.0)
        assert s.coeffs == (0j, -1.0 + 0j)

    def test_rejects_a_out_of_range(self):
        for a in [-0.1, 1.0]:
            with pytest.raises(ValueError):
                ser.extremal_series(0.0, a)


class TestMajorant:
    def test_frozen_value(self):
        # oracle: a + (1-a^2) rho/(1 - a rho) at a=1/2, rho=1/3 gives 4/5
        s = ser.extremal_series(0.0, 0.5)
        got = ser.majorant(s, 1.0 / 3.0)
        assert got.certified
        assert got.value + got.tail >= 0.8 - 1e-15
        assert got.value == pytest.approx(0.8, abs=1e-12)

    @pytest.mark.parametrize("a", [0.0, 0.3, 0.5, 0.8, 0.95])
    @pytest.mark.parametrize("rho", [0.0, 0.2, 1.0 / 3.0, 0.6, 0.9])
    def test_matches_closed_form(self, a, rho):
        s = ser.extremal_series(0.0, a)
        got = ser.majorant(s, rho)
        assert got.value == pytest.approx(closed_majorant(a, rho), abs=1e-11)
        # the certificate is conservative (Schwarz-Pick rate) but always covers
        assert got.tail >= 0.0
        assert closed_majorant(a, rho) <= got.value + got.tail + 1e-11

    def test_rho_validation(self):
        s = ser.constant_series(0.0, 0.5)
        for rho in [-0.1, 1.0, 1.5]:
            with pytest.raises(ValueError):
                ser.majorant(s, rho)

    def test_tail_dominates_truncation_error(self):
        # truncate hard and confirm the certificate still covers the true value
        s = ser.CoeffSeries(0.0, ser.extremal_series(0.0, 0.6).coeffs[:4])
        got = ser.majorant(s, 0.7)
        assert got.value <= closed_majorant(0.6, 0.7) <= got.value + got.tail


class TestQuadraticSum:
    def test_frozen_value(self):
        # oracle: (1-a^2)^2 rho^2/(1-a^2 rho^2) at a=rho=1/2 gives 3/20
        s = ser.extremal_series(0.0, 0.5)
        got = ser.quadratic_sum(s, 0.5)
        assert got.value == pytest.approx(0.15, abs=1e-12)

    @pytest.mark.parametrize("a", [0.0, 0.4, 0.7, 0.9])
    @pytest.mark.parametrize("rho", [0.1, 0.5, 0.8])
    def test_matches_closed_form(self, a, rho):
        s = ser.extremal_series(0.0, a)
        got = ser.quadratic_sum(s, rho)
        assert got.value == pytest.approx(closed_quadratic(a, rho), abs=1e-11)

    def test_zero_mode_uncertified(self):
        s = ser.CoeffSeries(0.0, (0.0, 0.5), ser.TailMode.ZERO)
        got = ser.quadratic_sum(s, 0.5)
        assert not got.certified and got.tail == 0.0
        assert got.value == pytest.approx(0.0625)


class TestArea:
    def test_frozen_value(self):
        # oracle: (1-a^2)^2 rho^2/(1-a^2 rho^2)^2 at a=1/2, rho=1/5 = 0.0225/0.9801
        s = ser.extremal_series(0.0, 0.5)
        got = ser.area_analytic(s, 0.2)
        assert got.value == pytest.approx(0.022956841138659322, abs=1e-12)

    @pytest.mark.parametrize("a", [0.0, 0.3, 0.6, 0.9])
    @pytest.mark.parametrize("rho", [0.15, 0.4, 0.7])
    def test_matches_closed_form(self, a, rho):
        s = ser.extremal_series(0.0, a)
        got = ser.area_analytic(s, rho)
        assert got.value == pytest.approx(closed_area(a, rho), abs=1e-10)

    @pytest.mark.parametrize("a", [0.2, 0.5, 0.8])
    @pytest.mark.parametrize("rho", [0.2, 0.5, 0.8])
    def test_quadrature_agrees(self, a, rho):
        s = ser.extremal_series(0.0, a)
        coeff = ser.area_analytic(s, rho)
        quad = ser.area_quadrature(s, rho)
        # midpoint rule on a 512 x 256 polar grid: O(h^2) radial error
        assert quad == pytest.approx(coeff.value, abs=5e-5)

    def test_quadrature_random_series(self):
        rng = random.Random(42)
        for _ in range(5):
            s = random_blaschke_series(rng, 0.0)
            rho = rng.uniform(0.1, 0.8)
            assert ser.area_quadrature(s, rho) == pytest.approx(
                ser.area_analytic(s, rho).value, abs=5e-5
            )

    def test_quadrature_grid_validation(self):
        s = ser.constant_series(0.0, 0.1)
        with pytest.raises(ValueError):
            ser.area_quadrature(s, 0.5, grid=16)


class TestHarmonicPair:
    def test_gamma_mismatch(self):
        h = ser.constant_series(0.1, 0.2)
        g = ser.constant_series(0.2, 0.0)
        with pytest.raises(ValueError):
            ser.HarmonicPair(h, g, 0.5)

    def test_g_constant_must_vanish(self):
        h = ser.constant_series(0.0, 0.2)
        g = ser.constant_series(0.0, 0.1)
        with pytest.raises(ValueError):
            ser.HarmonicPair(h, g, 0.5)

    def test_k_range(self):
        h = ser.constant_series(0.0, 0.2)
        g = ser.constant_series(0.0, 0.0)
        with pytest.raises(ValueError):
            ser.HarmonicPair(h, g, 1.5)

    def test_json_round_trip(self):
        p = ser.extremal_pair(0.3, 0.5, 0.7)
        back = ser.HarmonicPair.from_dict(json.loads(json.dumps(p.to_dict())))
        assert back == p

    def test_make_pair_accepts_valid(self):
        rng = random.Random(3)
        raw = random_admissible_pair(rng, 0.0, 0.6)
        ser.make_pair(raw.h, raw.g, 0.6)

    def test_make_pair_rejects_bad_dilatation(self):
        h = ser.CoeffSeries(0.0, (0.0, 0.5), ser.TailMode.ZERO)
        g = ser.CoeffSeries(0.0, (0.0, 0.5), ser.TailMode.ZERO)
        with pytest.raises(ValueError, match="dilatation"):
            ser.make_pair(h, g, 0.5)


class TestHarmonicArea:
    def test_gamma_prefactor(self):
        # same transported data, different gamma: area scales by 1/(1-gamma)^2
        p0 = ser.extremal_pair(0.0, 0.5, 0.5)
        p1 = ser.extremal_pair(0.5, 0.5, 0.5)
        a0 = ser.area_harmonic(p0, 0.3).value
        a1 = ser.area_harmonic(p1, 0.3).value
        assert a1 == pytest.approx(4.0 * a0, rel=1e-12)

    def test_extremal_matches_analytic_scaling(self):
        # g = -k(h - h(0)) makes the harmonic area (1-k^2) times the analytic one
        k = 0.7
        p = ser.extremal_pair(0.0, 0.4, k)
        got = ser.area_harmonic(p, 0.5).value
        want = (1.0 - k * k) * ser.area_analytic(p.h, 0.5).value
        assert got == pytest.approx(want, rel=1e-12)

    def test_negative_area_raises(self):
        h = ser.CoeffSeries(0.0, (0.0, 0.1), ser.TailMode.ZERO)
        g = ser.CoeffSeries(0.0, (0.0, 0.9), ser.TailMode.ZERO)
        p = ser.HarmonicPair(h, g, 1.0)
        with pytest.raises(ValueError, match="sense-preserving"):
            ser.area_harmonic(p, 0.5)


class TestLemma:
    @pytest.mark.parametrize("gamma", [0.0, 0.3, 0.7])
    @pytest.mark.parametrize("k", [0.0, 0.5, 1.0])
    def test_random_pairs_pass(self, gamma, k):
        rng = random.Random(hash((gamma, k)) % (2**31))
        for _ in range(20):
            p = random_admissible_pair(rng, gamma, k)
            rho = rng.uniform(0.05, 0.95)
            rep = ser.check_lemma_quadratic(p, rho)
            assert rep.passed, rep

    def test_extremal_pair_attains(self):
        p = ser.extremal_pair(0.0, 0.5, 0.8)
        rep = ser.check_lemma_quadratic(p, 0.6)
        assert rep.passed
        assert rep.weighted_lhs == pytest.approx(rep.weighted_rhs, rel=1e-9)
        assert rep.plain_lhs == pytest.approx(rep.plain_rhs, rel=1e-9)


class TestUtilities:
    def test_multiply_series(self):
        got = ser.multiply_series([1, 1], [1, -1], 2)
        assert got == [1, 0, -1]

    def test_blaschke_is_schwarz_pick_valid(self):
        coeffs = ser.blaschke_factor_coeffs(0.5, 1.2, 10)
        ser.CoeffSeries(0.0, tuple(coeffs))

    def test_blaschke_unimodular_on_boundary(self):
        coeffs = ser.blaschke_factor_coeffs(0.6, 0.3, 2000)
        w = complex(math.cos(0.4), math.sin(0.4)) * 0.999
        val = ser._horner(coeffs, w)
        assert abs(abs(val) - abs((0.6 - w) / (1 - 0.6 * w))) < 1e-9
