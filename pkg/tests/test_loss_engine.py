import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hmeasure import (
    BETA22,
    BetaShape,
    PriorPair,
    ScoreDataset,
    baseline_loss,
    build_roc,
    cost_breakpoints,
    default_from_priors,
    empirical_cdfs,
    empirical_priors,
    expected_min_loss,
    from_mode,
    h_measure,
    loss_at,
    min_error_rate,
    min_loss_at_cost,
    reflect,
    upper_convex_hull,
)

from _oracles import beta_pdf, brute_min_loss, brute_operating_points, random_dataset_arrays, simpson

HALF = PriorPair(0.5, 0.5)
UNIFORM = BetaShape(1.0, 1.0)
score_lists = st.lists(st.integers(-6, 6), min_size=1, max_size=30)


def hull_of(d):
    return upper_convex_hull(build_roc(empirical_cdfs(d)))


def quadrature_loss(s0, s1, p, w, panels=100_000):
    pts = brute_operating_points(s0, s1)
    f0 = [q[1] for q in pts]
    f1 = [q[2] for q in pts]
    return simpson(
        lambda c: brute_min_loss(c, f0, f1, p.pi0, p.pi1) * beta_pdf(c, w.alpha, w.beta),
        0.0, 1.0, panels,
    )


class TestLossAt:
    def test_substitution(self):
        assert loss_at(0.5, (0.5, 0.0), HALF) == 0.125

    def test_free_class0_errors(self):
        assert loss_at(0.0, (0.3, 0.0), PriorPair(0.2, 0.8)) == 0.0

    def test_all_class0(self):
        assert loss_at(1.0, (1.0, 1.0), PriorPair(0.2, 0.8)) == 0.0


class TestMinLoss:
    def test_d1(self, d1):
        assert min_loss_at_cost(0.5, hull_of(d1), HALF) == 0.125

    def test_cost_extremes(self, rng):
        for _ in range(20):
            d = ScoreDataset.from_arrays(*random_dataset_arrays(rng))
            h = hull_of(d)
            p = empirical_priors(d)
            assert min_loss_at_cost(0.0, h, p) == 0.0
            assert min_loss_at_cost(1.0, h, p) == 0.0

    def test_hull_equals_all_points(self, rng):
        grid = np.linspace(0, 1, 2001)
        for _ in range(50):
            s0, s1 = random_dataset_arrays(rng)
            d = ScoreDataset.from_arrays(s0, s1)
            p = PriorPair.from_pi1(rng.uniform(0.05, 0.95))
            pts = brute_operating_points(s0, s1)
            brute = brute_min_loss(grid, [q[1] for q in pts], [q[2] for q in pts], p.pi0, p.pi1)
            np.testing.assert_allclose(min_loss_at_cost(grid, hull_of(d), p), brute, rtol=0, atol=1e-12)


class TestBreakpoints:
    def test_d1(self, d1):
        bp = cost_breakpoints(hull_of(d1), HALF)
        np.testing.assert_array_equal(bp.boundaries, [0.0, 0.5, 1.0])
        assert bp.vertex_for_interval == [(0.5, 0.0), (1.0, 0.5)]

    @pytest.mark.parametrize("pi1", [0.5, 0.3, 0.024])
    def test_diagonal(self, identical, pi1):
        p = PriorPair.from_pi1(pi1)
        bp = cost_breakpoints(hull_of(identical), p)
        np.testing.assert_allclose(bp.boundaries, [0.0, pi1, 1.0], atol=1e-15)
        assert bp.vertex_for_interval == [(0.0, 0.0), (1.0, 1.0)]

    def test_perfect(self, perfect):
        p = PriorPair(0.3, 0.7)
        h = hull_of(perfect)
        bp = cost_breakpoints(h, p)
        np.testing.assert_array_equal(bp.boundaries, [0.0, 1.0])
        assert bp.vertex_for_interval == [(1.0, 0.0)]
        assert np.all(min_loss_at_cost(np.linspace(0, 1, 11), h, p) == 0)

    def test_optimal_vertex_on_each_interval(self, rng):
        for _ in range(60):
            s0, s1 = random_dataset_arrays(rng)
            d = ScoreDataset.from_arrays(s0, s1)
            p = PriorPair.from_pi1(rng.uniform(0.01, 0.99))
            h = hull_of(d)
            bp = cost_breakpoints(h, p)
            assert bp.boundaries[0] == 0.0 and bp.boundaries[-1] == 1.0
            assert np.all(np.diff(bp.boundaries) > 0)
            for i in range(len(bp)):
                lo, hi = bp.boundaries[i], bp.boundaries[i + 1]
                for c in np.linspace(lo, hi, 5)[1:-1]:
                    here = loss_at(c, (bp.f0[i], bp.f1[i]), p)
                    assert here == pytest.approx(min_loss_at_cost(c, h, p), abs=1e-14)

    def test_switch_formula(self, rng):
        s0, s1 = random_dataset_arrays(rng, 50, 80, decimals=1)
        d = ScoreDataset.from_arrays(s0, s1)
        p = PriorPair(0.35, 0.65)
        bp = cost_breakpoints(hull_of(d), p)
        for i in range(1, len(bp)):
            d0 = bp.f0[i] - bp.f0[i - 1]
            d1 = bp.f1[i] - bp.f1[i - 1]
            # dropped zero-width intervals can merge several hull edges into one step
            assert bp.boundaries[i] == pytest.approx(p.pi1 * d1 / (p.pi0 * d0 + p.pi1 * d1), abs=1e-14)


class TestExpectedLoss:
    def test_d1_uniform(self, d1):
        assert expected_min_loss(hull_of(d1), HALF, UNIFORM) == pytest.approx(0.0625, abs=1e-15)

    def test_perfect_zero(self, perfect):
        for w in (UNIFORM, BETA22, BetaShape(1.2, 7.3)):
            assert expected_min_loss(hull_of(perfect), PriorPair(0.6, 0.4), w) == 0.0

    def test_d1_simpson(self, d1):
        w = BetaShape(1.5, 1.5)
        ref = quadrature_loss(d1.scores0, d1.scores1, HALF, w)
        assert expected_min_loss(hull_of(d1), HALF, w) == pytest.approx(ref, abs=1e-8)

    def test_random_simpson(self, rng):
        for _ in range(25):
            s0, s1 = random_dataset_arrays(rng)
            d = ScoreDataset.from_arrays(s0, s1)
            p = PriorPair.from_pi1(rng.uniform(0.02, 0.98))
            w = from_mode(rng.uniform(0.01, 0.99), rng.uniform(3, 50))
            ref = quadrature_loss(s0, s1, p, w)
            assert expected_min_loss(hull_of(d), p, w) == pytest.approx(ref, abs=1e-8)


class TestBaseline:
    def test_uniform(self):
        assert baseline_loss(HALF, UNIFORM) == pytest.approx(0.125, abs=1e-15)

    def test_beta22(self):
        assert baseline_loss(HALF, BETA22) == pytest.approx(0.15625, abs=1e-15)

    @settings(max_examples=100)
    @given(st.floats(0.001, 0.999), st.floats(0.2, 30), st.floats(0.2, 30))
    def test_positive(self, pi1, a, b):
        p = PriorPair.from_pi1(pi1)
        assert baseline_loss(p, BetaShape(a, b)) > 0

    @pytest.mark.parametrize("pi1, a, b", [(0.5, 2, 2), (0.3, 1.3, 1.7), (0.024, 1.024, 1.976), (0.8, 4, 9)])
    def test_simpson(self, pi1, a, b):
        p = PriorPair.from_pi1(pi1)
        ref = simpson(
            lambda c: np.minimum(c * p.pi0, (1 - c) * p.pi1) * beta_pdf(c, a, b), 0.0, 1.0
        )
        assert baseline_loss(p, BetaShape(a, b)) == pytest.approx(ref, abs=1e-9)


class TestHMeasure:
    def test_d1_uniform(self, d1):
        res = h_measure(d1, HALF, UNIFORM)
        assert res.h == pytest.approx(0.5, abs=1e-12)
        assert res.weight == UNIFORM

    def test_perfect(self, perfect):
        for w in (UNIFORM, BETA22, BetaShape(0.5, 3)):
            assert h_measure(perfect, empirical_priors(perfect), w).h == 1.0

    def test_identical(self, identical):
        for pi1 in (0.5, 0.1, 0.9):
            for w in (UNIFORM, BETA22, from_mode(0.3, 10)):
                assert h_measure(identical, PriorPair.from_pi1(pi1), w).h == pytest.approx(0.0, abs=1e-12)

    def test_deterministic(self, rng):
        d = ScoreDataset.from_arrays(*random_dataset_arrays(rng))
        p = empirical_priors(d)
        w = default_from_priors(p)
        assert h_measure(d, p, w).h == h_measure(d, p, w).h

    def test_bounds_and_consistency(self, rng):
        for _ in range(100):
            d = ScoreDataset.from_arrays(*random_dataset_arrays(rng))
            p = PriorPair.from_pi1(rng.uniform(0.01, 0.99))
            w = BetaShape(*rng.uniform(0.3, 20, 2))
            res = h_measure(d, p, w)
            assert 0.0 <= res.expected_min_loss <= res.baseline_loss * (1 + 1e-12)
            assert 0.0 <= res.h <= 1.0
            assert res.h == pytest.approx(1 - res.expected_min_loss / res.baseline_loss, abs=1e-12)

    @settings(max_examples=60, deadline=None)
    @given(score_lists, score_lists, st.sampled_from([np.exp, np.arctan, lambda x: 5 * x + 2]))
    def test_monotone_invariance(self, s0, s1, f):
        s0, s1 = np.array(s0, float) / 3, np.array(s1, float) / 3
        a = ScoreDataset.from_arrays(s0, s1)
        b = ScoreDataset.from_arrays(f(s0), f(s1))
        p = empirical_priors(a)
        w = default_from_priors(p)
        assert h_measure(a, p, w).h == h_measure(b, p, w).h

    def test_label_swap(self, rng):
        for _ in range(100):
            d = ScoreDataset.from_arrays(*random_dataset_arrays(rng))
            p = PriorPair.from_pi1(rng.uniform(0.01, 0.99))
            w = BetaShape(*rng.uniform(0.5, 12, 2))
            h = h_measure(d, p, w).h
            assert h_measure(d.swapped(), p.swapped(), reflect(w)).h == pytest.approx(h, abs=1e-10)

    def test_label_swap_default_weight(self, rng):
        for _ in range(50):
            d = ScoreDataset.from_arrays(*random_dataset_arrays(rng))
            p = empirical_priors(d)
            s = d.swapped()
            ps = empirical_priors(s)
            assert default_from_priors(ps) == reflect(default_from_priors(p))
            a = h_measure(d, p, default_from_priors(p)).h
            b = h_measure(s, ps, default_from_priors(ps)).h
            assert a == pytest.approx(b, abs=1e-10)


class TestErrorRateLink:
    def test_identity(self, rng):
        for _ in range(100):
            d = ScoreDataset.from_arrays(*random_dataset_arrays(rng))
            p = PriorPair.from_pi1(rng.uniform(0.01, 0.99))
            er, _ = min_error_rate(d, p)
            assert er == pytest.approx(2 * min_loss_at_cost(0.5, hull_of(d), p), abs=1e-12)
