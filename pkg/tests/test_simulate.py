"""Counter-based sampling, reproducibility, and the Monte-Carlo pipeline."""

import numpy as np
import pytest

from zonofit import (
    CHUNK,
    DeterministicBody,
    Disk,
    Ellipse,
    Fixed,
    IsotropicEllipse,
    IsotropicRectangle,
    IsotropicZonotope,
    LogNormal,
    Mixture,
    ParameterError,
    Zonotope,
    empirical_moments,
    estimate_process_moments,
    expected_perimeter,
    feret_sample_block,
    forward_zonotope_moments,
    k_s,
    pipeline_estimate,
    regular_subdivision,
    sample_shape,
    worker_count,
)


class TestDistributions:
    def test_fixed(self):
        d = Fixed([1.0, 2.0])
        assert d.draw_count == 0 and d.dim == 2
        np.testing.assert_array_equal(
            d.transform(np.zeros((3, 0))), [[1.0, 2.0]] * 3
        )
        with pytest.raises(ParameterError):
            Fixed([-1.0])

    def test_mixture_selects_by_cdf(self):
        d = Mixture([[1.0], [2.0], [3.0]], [0.2, 0.3, 0.5])
        assert d.draw_count == 1 and d.dim == 1
        u = np.array([[0.1], [0.25], [0.6], [0.9999]])
        np.testing.assert_array_equal(d.transform(u), [[1.0], [2.0], [3.0], [3.0]])

    def test_mixture_boundary_draw_clipped(self):
        d = Mixture([[1.0], [2.0]], [0.5, 0.5])
        np.testing.assert_array_equal(d.transform(np.array([[1.0]])), [[2.0]])

    def test_mixture_validation(self):
        with pytest.raises(ParameterError, match="weight"):
            Mixture([[1.0]], [0.5, 0.5])
        with pytest.raises(ParameterError, match="sum to 1"):
            Mixture([[1.0], [2.0]], [0.5, 0.6])
        with pytest.raises(ParameterError, match="nonnegative"):
            Mixture([[-1.0], [2.0]], [0.5, 0.5])

    def test_lognormal_inverse_cdf(self):
        d = LogNormal(2, mu=0.1, sigma=0.3)
        assert d.draw_count == 2 and d.dim == 2
        u = np.array([[0.5, 0.5]])
        np.testing.assert_allclose(d.transform(u), np.exp(0.1), atol=1e-12)
        big = d.transform(np.array([[0.99, 0.5]]))
        assert big[0, 0] > big[0, 1]

    def test_lognormal_validation(self):
        with pytest.raises(ParameterError):
            LogNormal(0)
        with pytest.raises(ParameterError):
            LogNormal(2, sigma=-0.1)


class TestModels:
    def test_word_budgets(self):
        assert DeterministicBody(Disk(1.0)).words_per_sample == 0
        assert IsotropicZonotope(4, Fixed([1.0] * 4)).words_per_sample == 1
        assert IsotropicZonotope(4, LogNormal(4)).words_per_sample == 5
        assert IsotropicRectangle(Mixture([[1.0, 2.0]], [1.0])).words_per_sample == 2
        assert IsotropicEllipse(LogNormal(2)).words_per_sample == 3

    def test_dimension_mismatch(self):
        with pytest.raises(ParameterError, match="components"):
            IsotropicZonotope(4, LogNormal(3))
        with pytest.raises(ParameterError, match="2-component"):
            IsotropicEllipse(LogNormal(3))

    def test_deterministic_rows_identical(self):
        h = feret_sample_block(DeterministicBody(Disk(2.0)), 3, seed=0, start=0, count=5)
        np.testing.assert_array_equal(h, np.full((5, 3), 4.0))

    def test_sample_one_matches_block(self):
        # The shape drawn for stream index k must reproduce the k-th row of
        # the Feret table (same uniforms, different evaluation path).
        grid = regular_subdivision(6)
        for model in (
            IsotropicZonotope(6, LogNormal(6, sigma=0.4)),
            IsotropicRectangle(Mixture([[1.0, 2.0], [2.0, 1.0]], [0.3, 0.7])),
            IsotropicEllipse(LogNormal(2)),
        ):
            h = feret_sample_block(model, 6, seed=11, start=0, count=4)
            for k in range(4):
                shape = sample_shape(model, k, seed=11)
                np.testing.assert_allclose(shape.feret(grid), h[k], atol=1e-12)

    def test_isotropic_rectangle_is_zonotope(self):
        shape = sample_shape(IsotropicRectangle(Fixed([1.0, 2.0])), 0, seed=3)
        assert isinstance(shape, Zonotope)
        np.testing.assert_array_equal(shape.alpha, [1.0, 2.0])

    def test_isotropic_ellipse_sample(self):
        shape = sample_shape(IsotropicEllipse(Fixed([3.0, 1.0])), 5, seed=9)
        assert isinstance(shape, Ellipse)
        assert shape.a == 3.0 and shape.b == 1.0
        assert 0.0 <= shape.phi < np.pi


class TestReproducibility:
    def test_same_seed_same_stream(self):
        model = IsotropicZonotope(4, LogNormal(4))
        a = feret_sample_block(model, 4, seed=42, start=0, count=100)
        b = feret_sample_block(model, 4, seed=42, start=0, count=100)
        np.testing.assert_array_equal(a, b)

    def test_different_seed_different_stream(self):
        model = IsotropicZonotope(4, LogNormal(4))
        a = feret_sample_block(model, 4, seed=1, start=0, count=10)
        b = feret_sample_block(model, 4, seed=2, start=0, count=10)
        assert np.abs(a - b).max() > 0.0

    def test_block_addressing_is_contiguous(self):
        # Reading [0, 50) in one call equals reading [0, 20) and [20, 50).
        model = IsotropicEllipse(LogNormal(2))
        whole = feret_sample_block(model, 3, seed=7, start=0, count=50)
        head = feret_sample_block(model, 3, seed=7, start=0, count=20)
        tail = feret_sample_block(model, 3, seed=7, start=20, count=30)
        np.testing.assert_array_equal(whole, np.vstack([head, tail]))

    def test_estimate_bitwise_across_thread_counts(self):
        model = IsotropicZonotope(3, LogNormal(3))
        samples = CHUNK + 7  # force an uneven chunk boundary
        r1 = estimate_process_moments(model, 3, samples, seed=5, threads=1)
        r4 = estimate_process_moments(model, 3, samples, seed=5, threads=4)
        np.testing.assert_array_equal(r1.moments.mean, r4.moments.mean)
        np.testing.assert_array_equal(r1.moments.second, r4.moments.second)
        np.testing.assert_array_equal(r1.moments.stderr_mean, r4.moments.stderr_mean)
        np.testing.assert_array_equal(
            r1.moments.stderr_second, r4.moments.stderr_second
        )

    def test_estimate_bitwise_across_runs(self):
        model = IsotropicRectangle(LogNormal(2))
        a = estimate_process_moments(model, 2, 500, seed=123)
        b = estimate_process_moments(model, 2, 500, seed=123)
        np.testing.assert_array_equal(a.moments.mean, b.moments.mean)
        np.testing.assert_array_equal(a.moments.second, b.moments.second)

    def test_worker_count_env(self, monkeypatch):
        monkeypatch.delenv("ZONOFIT_THREADS", raising=False)
        assert worker_count() == 1
        monkeypatch.setenv("ZONOFIT_THREADS", "6")
        assert worker_count() == 6
        assert worker_count(threads=2) == 2
        with pytest.raises(ParameterError):
            worker_count(0)

    def test_seed_validation(self):
        model = IsotropicZonotope(2, LogNormal(2))
        with pytest.raises(ParameterError, match="seed"):
            feret_sample_block(model, 2, seed=-1, start=0, count=4)
        with pytest.raises(ParameterError, match="stream index"):
            sample_shape(model, -1, seed=0)


class TestMomentEstimates:
    def test_empirical_matches_streaming_estimator(self):
        model = IsotropicZonotope(3, LogNormal(3))
        h = feret_sample_block(model, 3, seed=21, start=0, count=400)
        direct = empirical_moments(h, stationary=True)
        streamed = estimate_process_moments(model, 3, 400, seed=21).moments
        np.testing.assert_allclose(direct.mean, streamed.mean, atol=1e-12)
        np.testing.assert_allclose(direct.second, streamed.second, atol=1e-12)
        np.testing.assert_allclose(direct.stderr_mean, streamed.stderr_mean, atol=1e-12)

    def test_deterministic_model_zero_stderr(self):
        est = estimate_process_moments(DeterministicBody(Disk(1.0)), 4, 10, seed=0)
        np.testing.assert_array_equal(est.moments.stderr_mean, np.zeros(4))
        assert not est.moments.stationary

    def test_isotropic_square_mean_within_3_sigma(self):
        est = estimate_process_moments(
            IsotropicZonotope(2, Fixed([1.0, 1.0])), 2, 10_000, seed=99
        )
        m = est.moments
        assert np.all(np.abs(m.mean - 4.0 / np.pi) <= 3.0 * m.stderr_mean + 1e-12)
        assert np.all(
            np.abs(m.second - (np.pi + 2.0) / np.pi) <= 3.0 * m.stderr_second + 1e-12
        )

    def test_mixture_model_matches_forward_map(self):
        from zonofit import CentralFaceMoments

        n = 6
        atoms = np.array([np.full(n, 0.5), np.full(n, 1.5)])
        weights = [0.4, 0.6]
        model = IsotropicZonotope(n, Mixture(atoms, weights))
        est = estimate_process_moments(model, n, 20_000, seed=31)
        # all faces equal within a sample: E[alpha_i alpha_j] = E[s^2]
        s2 = 0.4 * 0.25 + 0.6 * 2.25
        mean_alpha = 0.4 * 0.5 + 0.6 * 1.5
        ref = forward_zonotope_moments(
            CentralFaceMoments(n, mean_alpha, np.full(n, s2))
        )
        m = est.moments
        assert np.all(np.abs(m.mean - ref.mean) <= 3.0 * m.stderr_mean + 1e-12)
        assert np.all(np.abs(m.second - ref.second) <= 3.0 * m.stderr_second + 1e-12)

    def test_empirical_validation(self):
        with pytest.raises(ParameterError, match="2 samples"):
            empirical_moments(np.ones((1, 3)))


class TestPipeline:
    def test_deterministic_disk_central_moments(self):
        # Disk of radius 1 through the full chain at n = 3: the central mean
        # is exactly pi/3 and v_alpha solves (4/3) = (k_s(0) + 2 k_s(pi/3)) v.
        c = pipeline_estimate(DeterministicBody(Disk(1.0)), 3, 10, seed=0)
        assert c.mean_alpha == pytest.approx(np.pi / 3.0, abs=1e-12)
        v_expected = (4.0 / 3.0) / (k_s(0.0) + 2.0 * k_s(np.pi / 3.0))
        assert v_expected == pytest.approx(1.0946947384989716, abs=1e-12)
        np.testing.assert_allclose(c.v_alpha, v_expected, atol=1e-10)
        assert not c.psd_repaired

    def test_perimeter_preserved_through_chain(self):
        # Cauchy's formula makes E[U] invariant under isotropization and
        # exactly representable by the recovered zonotope moments.
        c = pipeline_estimate(DeterministicBody(Disk(1.0)), 3, 10, seed=0)
        assert expected_perimeter(c) == pytest.approx(2.0 * np.pi, abs=1e-10)

    def test_stationary_model_skips_isotropization(self):
        model = IsotropicZonotope(2, Fixed([1.0, 1.0]))
        c = pipeline_estimate(model, 2, 5_000, seed=77)
        assert c.mean_alpha == pytest.approx(1.0, abs=0.05)
        np.testing.assert_allclose(c.v_alpha, [1.0, 1.0], atol=0.1)
