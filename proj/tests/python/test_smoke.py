import numpy as np
import pytest

import interp


def gaussian(n, d, seed):
    return np.random.default_rng(seed).standard_normal((n, d))


def test_min_l2_matches_pinv():
    A = gaussian(5, 12, 0)
    y = np.random.default_rng(1).standard_normal(5)
    alpha = interp.min_l2_interpolate(A, y)
    np.testing.assert_allclose(alpha, np.linalg.pinv(A) @ y, atol=1e-10)


def test_sparse_interpolators_fit_exactly():
    A = gaussian(8, 30, 2)
    y = np.random.default_rng(3).standard_normal(8)
    alpha, order = interp.omp(A, y)
    assert len(order) == 8
    np.testing.assert_allclose(A @ alpha, y, atol=1e-9)
    beta = interp.basis_pursuit(A, y)
    np.testing.assert_allclose(A @ beta, y, atol=1e-9)
    assert np.count_nonzero(beta) <= 8
    assert np.abs(beta).sum() <= np.abs(interp.min_l2_interpolate(A, y)).sum() + 1e-12


def test_hybrid_interpolates():
    A = gaussian(40, 120, 4)
    truth = np.zeros(120)
    truth[:3] = 1.0
    y = A @ truth + 0.1 * np.random.default_rng(5).standard_normal(40)
    alpha = interp.hybrid_lasso(A, y, 0.05)
    np.testing.assert_allclose(A @ alpha, y, atol=1e-9)


def test_uniform_weights_survival():
    w = np.ones(32)
    assert interp.survival(3, 8, 32, w) == pytest.approx(0.25)
    assert interp.contamination(0, 2, 4, np.ones(4)) == pytest.approx(0.5)


def test_bounds_and_errors():
    lo = interp.ideal_mse_lower_gaussian(100, 800)
    hi, flagged = interp.ideal_mse_upper_gaussian(100, 800)
    assert 0 < lo < hi and not flagged
    with pytest.raises(interp.InterpError):
        interp.min_norm_solve(np.ones((2, 3)), np.ones(3))


def test_run_experiment_is_deterministic():
    text = "scenario = threshold_regular_vs_random\ntrials = 2\n"
    first = interp.run_experiment(text)
    assert first == interp.run_experiment(text)
    assert first[0].startswith("# interp records schema 1")
