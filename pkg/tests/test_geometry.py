import itertools
import math
from fractions import Fraction

import numpy as np
import pytest

from cohomrep import geometry as geo


@pytest.fixture(scope="module")
def rng():
    return np.random.default_rng(20240817)


class TestMetric:
    def test_euclidean_at_origin(self):
        M, N = geo.metric_at(np.zeros((3, 2)))
        assert np.allclose(M, np.eye(3)) and np.allclose(N, np.eye(2))

    def test_positive_definite_sampled(self, rng):
        for _ in range(100):
            p, n = rng.integers(1, 4), rng.integers(1, 4)
            Z = geo.random_point(rng, int(p), int(n))
            ev = np.linalg.eigvalsh(geo.metric_gram(Z))
            assert ev.min() > 0

    def test_invariance_under_G(self, rng):
        p, q, r = 2, 2, 1
        n = q + r
        for _ in range(25):
            Z = geo.random_point(rng, p, n)
            u = rng.normal(size=(n, p))
            g = geo.random_G_element(rng, p, n)
            a = geo.metric_value(Z, u, u)
            b = geo.metric_value(geo.act(g, Z, n), geo.pushforward(g, Z, u, n), geo.pushforward(g, Z, u, n))
            assert abs(a - b) < 1e-7 * max(1.0, abs(a))


class TestDistance:
    def test_radial_arctanh(self):
        for z in (0.2, -0.5, 0.9):
            assert abs(geo.distance_origin(np.array([[z]]))["exact"] - math.atanh(abs(z))) < 1e-12

    def test_zero(self):
        assert geo.distance_origin(np.zeros((2, 2)))["exact"] == 0.0

    def test_exp_round_trip(self, rng):
        for _ in range(10):
            Y = rng.normal(size=(3, 2)) * 0.5
            Z = geo.exp_origin(Y)
            assert abs(geo.distance_origin(Z)["exact"] - np.linalg.norm(Y)) < 1e-8

    def test_bounds_contain_exact(self, rng):
        for _ in range(100):
            Z = geo.random_point(rng, 2, 3)
            d = geo.distance_origin(Z)
            assert d["lower"] - 1e-9 <= d["exact"] <= d["upper"] + 1e-9


class TestBA:
    def test_closed_forms_agree(self, rng):
        for p, q, r in [(1, 1, 1), (2, 2, 1), (2, 2, 2), (3, 1, 1), (1, 3, 1)]:
            for _ in range(40):
                Z = geo.random_point(rng, p, q + r)
                res = geo.ba_ratio(Z, q)
                assert res["agree"] and res["amgm_holds"]
                assert res["ratio"] >= 1.0 - 1e-12

    def test_Z2_zero_gives_one(self):
        Z = np.zeros((3, 2))
        Z[0, 0] = 0.5
        assert abs(geo.ba_ratio(Z, 2)["ratio"] - 1.0) < 1e-12

    def test_Z1_zero(self, rng):
        Z = np.zeros((3, 2))
        Z[2] = [0.3, 0.2]
        want = 1.0 / math.exp(geo.log_det_one_minus_gram(Z[2:]))
        assert abs(geo.ba_ratio(Z, 2)["ratio"] - want) < 1e-12

    def test_near_boundary_stress(self, rng):
        # the inverse-based closed form conditions like 1/eps near the
        # boundary; allow the agreement tolerance to scale accordingly
        for eps in (1e-2, 1e-4):
            Z = geo.random_point(rng, 2, 3, near_boundary=eps)
            res = geo.ba_ratio(Z, 2)
            assert res["amgm_holds"]
            assert abs(res["log_ratio"] - res["alt_log_ratio"]) < 1e-12 / eps
            d = geo.distance_origin(Z)
            assert d["lower"] <= d["exact"] <= d["upper"]

    def test_gv_invariance(self, rng):
        p, q, r = 2, 2, 1
        for _ in range(25):
            Z = geo.random_point(rng, p, q + r)
            g = geo.random_GV_element(rng, p, q, r)
            a = geo.ba_ratio(Z, q)["log_ratio"]
            b = geo.ba_ratio(geo.act(g, Z, q + r), q)["log_ratio"]
            assert abs(a - b) < 1e-7 * max(1.0, abs(a))


class TestJacobi:
    def test_hyperbolic_tangent_block(self):
        spec = geo.jacobi_spectrum(np.array([[1.0]]), 1, 3, 1)
        assert spec["tangent"] == [-1.0] * 3
        assert spec["normal"] == [0.0]

    def test_exact_match_bracket(self, rng):
        for p, q, r in itertools.product((1, 2, 3), (1, 2, 3), (1, 2)):
            for _ in range(3):
                M = rng.normal(size=(r, p))
                M /= np.linalg.norm(M)
                spec = geo.jacobi_spectrum(M, p, q, r)
                T = geo.curvature_operator_matrix(M, p, q, r, "xv")
                P = geo.curvature_operator_matrix(M, p, q, r, "perp")
                assert np.allclose(np.sort(np.linalg.eigvalsh(0.5 * (T + T.T))),
                                   spec["tangent"], atol=1e-9)
                assert np.allclose(np.sort(np.linalg.eigvalsh(0.5 * (P + P.T))),
                                   spec["normal"], atol=1e-9)

    def test_exact_rational_spectra(self):
        lam = [Fraction(3, 5), Fraction(4, 5)]
        spec = geo.exact_jacobi_multiset(lam, 2, 2, 2)
        assert sorted(spec["normal"]) == sorted(
            [Fraction(0), Fraction(0), -Fraction(1, 25), -Fraction(49, 25)])

    def test_printed_lemma_divergence_documented(self):
        # the printed multiset omits the -(lam_i + lam_j)^2 modes; they are
        # forced by the bracket computation whenever min(p, r) >= 2
        lam = [Fraction(3, 5), Fraction(4, 5)]
        ex = geo.exact_jacobi_multiset(lam, 2, 2, 2)
        pr = geo.lemma_jacobi_multiset(lam, 2, 2, 2)
        assert ex["tangent"] == pr["tangent"]
        assert ex["normal"] != pr["normal"]
        # and they agree whenever min(p, r) = 1
        for p, q, r in [(1, 2, 2), (3, 2, 1), (1, 1, 1)]:
            lam2 = [Fraction(1)] + [Fraction(0)] * (max(r, p) - 1)
            assert geo.exact_jacobi_multiset(lam2, p, q, r) == geo.lemma_jacobi_multiset(lam2, p, q, r)


class TestVolume:
    def test_small_t_power(self):
        # f(t) ~ c t^{p-1} as t -> 0 for r = 1
        p, q = 3, 2
        t = 1e-4
        val = geo.volume_growth(t, p, q, 1)["value"]
        ref = (t / math.sinh(1.0)) ** (p - 1) / math.cosh(1.0) ** q
        assert abs(val / ref - 1.0) < 1e-6

    def test_p1_pure_cosh(self):
        for t in (0.5, 1.5):
            val = geo.volume_growth(t, 1, 4, 1)["value"]
            assert abs(val - (math.cosh(t) / math.cosh(1.0)) ** 4) < 1e-12

    def test_jacobi_product_matches(self):
        for t in (0.5, 1.2, 2.5):
            a = geo.volume_growth(t, 2, 2, 1)["value"]
            b = geo.volume_growth_from_jacobi(t, [1.0, 0.0], 2, 2, 1)
            assert abs(a - b) / a < 5e-3


class TestGamma:
    def test_trivial_values(self):
        assert abs(geo.gamma_integral_X(0, 1, 1) - 2.0) < 1e-12
        assert abs(geo.gamma_integral_X(0, 2, 1) - math.pi) < 1e-12
        assert abs(geo.gamma_integral_X(0, 1, 2) - math.pi) < 1e-12

    def test_recurrence_log_space(self):
        for s in range(0, 9):
            for n in range(2, 7):
                for p in range(1, 7):
                    lhs = geo.log_gamma_integral_X(s, p, n)
                    rhs = geo.log_gamma_integral_X(s + 1, p, n - 1) + geo.log_gamma_integral_X(s, p, 1)
                    assert abs(lhs - rhs) < 1e-12

    def test_quotient_convergence_guard(self):
        with pytest.raises(ValueError):
            geo.quotient_integral(3, 2, 2, 1)
        res = geo.quotient_integral(10, 2, 2, 1)
        assert res["coefficient"] > 0


class TestMonteCarlo:
    def test_deterministic(self):
        a = geo.mc_verify_integral(2, 1, 2, 50_000, seed=11)
        b = geo.mc_verify_integral(2, 1, 2, 50_000, seed=11)
        assert a == b

    def test_matches_closed_form(self):
        res = geo.mc_verify_integral(2, 1, 2, 200_000, seed=3)
        assert res["rel_error"] < 0.02 and res["within_3sigma"]

    def test_seed_ensemble_coverage(self):
        hits = sum(geo.mc_verify_integral(2, 1, 2, 100_000, seed=s)["within_3sigma"]
                   for s in range(20))
        assert hits >= 19


class TestHessian:
    def test_r1_profile(self, rng):
        devs = []
        for _ in range(4):
            Z = geo.random_point(rng, 2, 3) * 0.6
            if geo.distance_to_XV(Z, 2) < 0.05:
                continue
            devs.append(geo.hessian_numeric_check(Z, 2, h=1e-4)["max_deviation"])
        assert devs and max(devs) < 1e-3

    def test_log_ba_eigenvalues_unit_interval_r1(self, rng):
        for _ in range(6):
            Z = geo.random_point(rng, 2, 3) * 0.7
            ev = geo.hessian_eigenvalues(lambda W: geo.log_ba_half(W, 2), Z, 1e-4)
            assert ev.min() > -1e-5 and ev.max() < 1 + 1e-5

    def test_limit_profile(self):
        prof = geo.hessian_profile_distance(40.0, 2, 2)
        assert prof == sorted([1.0] * 2 + [0.0] * 2 + [0.0] + [1.0])
        prof = geo.hessian_profile_log_ba(40.0, 2, 2)
        assert sum(1 for v in prof if v > 0.999) == 2 + 2 * 1 - 1

    def test_r2_pointwise_bound_fails(self, rng):
        # for r >= 2 the pointwise [0,1] claim does not survive the bracket
        # corrections; record a converged counterexample
        Z = np.zeros((4, 2))
        Z[2:] = np.array([[0.62, 0.11], [0.07, 0.58]])
        ev = geo.hessian_eigenvalues(lambda W: geo.log_ba_half(W, 2), Z, 1e-4)
        assert ev.max() > 1.0 + 1e-3


class TestDX:
    def test_bound_arithmetic(self):
        eigs = [1.0] * 6 + [0.0] * 3
        assert geo.dx_bound(eigs, 2) == 2.0
        assert geo.dx_bound(eigs, 3) == 0.0
        assert geo.dx_bound(eigs, 0) == 6.0

    def test_threshold_record(self):
        th = geo.dx_threshold(2, 5, 1)
        assert th["limit_ones"] == 6
        assert th["threshold_qpr"] == 3.0
        assert th["threshold_pqr"] == 3.0
        th = geo.dx_threshold(2, 3, 2)
        assert th["threshold_qpr"] != th["threshold_pqr"]

    def test_counting_bound_monotone(self):
        vals = [geo.counting_bound(2, 2, 1, t) for t in (0.5, 1.0, 2.0)]
        assert vals[0] < vals[1] < vals[2]

    def test_poincare(self):
        thr = (2 + 5 + 1 - 1) * 1.0 / 2.0
        assert geo.poincare_converges(thr + 1, 2, 5, 1) is True
        assert geo.poincare_converges(thr - 0.5, 2, 5, 1) is False
        assert geo.poincare_converges(0, 2, 5, 0) is True


class TestPointZ:
    def test_cached_determinants(self):
        Z = np.zeros((3, 2))
        Z[2, 0] = 0.6
        pt = geo.PointZ(Z, q=2)
        assert abs(pt.B - 1.0) < 1e-12
        assert abs(pt.A - (1 - 0.36)) < 1e-12
        assert pt.B >= pt.A

    def test_rejects_boundary(self):
        with pytest.raises(ValueError):
            geo.PointZ(np.eye(2), q=1)
