import numpy as np
import pytest

from fairlnc.errors import ValidationError
from fairlnc.metrics import reconstruction_score
from fairlnc.noise import NoiseSpec, inject, inject_balanced_bias, inject_positive_bias

RATES = [0.0, 0.1, 0.2, 0.3, 0.4, 0.5]


def population(n=10_000, seed=0):
    rng = np.random.default_rng(seed)
    return rng.integers(0, 2, n), rng.integers(0, 2, n)


def within_3_sigma(flipped, eligible, rate):
    n = int(eligible.sum())
    sigma = np.sqrt(rate * (1 - rate) / n)
    return abs(flipped[eligible].mean() - rate) <= 3 * sigma


def test_spec_validation():
    with pytest.raises(ValidationError):
        NoiseSpec("random", 0.1)
    with pytest.raises(ValidationError):
        NoiseSpec("positive_bias", 1.2)
    with pytest.raises(ValidationError):
        inject_positive_bias([0, 1], [1], NoiseSpec("positive_bias", 0.1))
    with pytest.raises(ValidationError):
        inject_positive_bias([0, 1], [1, 0], NoiseSpec("balanced_bias", 0.1))


def test_zero_rate_is_identity_and_returns_new_vector():
    y, g = population(100)
    for kind in ("positive_bias", "balanced_bias"):
        out = inject(y, g, NoiseSpec(kind, 0.0, 3))
        assert np.array_equal(out, y) and out is not y


def test_saturation():
    y, g = population(500)
    out = inject_positive_bias(y, g, NoiseSpec("positive_bias", 1.0))
    assert np.all(out[g == 1] == 1) and np.array_equal(out[g == 0], y[g == 0])
    out = inject_balanced_bias(y, g, NoiseSpec("balanced_bias", 1.0))
    assert np.array_equal(out, g)


def test_determinism():
    y, g = population(300)
    spec = NoiseSpec("balanced_bias", 0.3, seed=11)
    assert np.array_equal(inject(y, g, spec), inject(y, g, spec))


@pytest.mark.parametrize("rate", [0.1, 0.3, 0.4, 0.5])
def test_positive_bias_rate(rate):
    y, g = population()
    noisy = inject_positive_bias(y, g, NoiseSpec("positive_bias", rate, 5))
    assert within_3_sigma(noisy != y, (g == 1) & (y == 0), rate)


@pytest.mark.parametrize("rate", [0.1, 0.3, 0.5])
def test_balanced_bias_rate(rate):
    y, g = population()
    noisy = inject_balanced_bias(y, g, NoiseSpec("balanced_bias", rate, 5))
    assert within_3_sigma(noisy != y, (g == 1) & (y == 0), rate)
    assert within_3_sigma(noisy != y, (g == 0) & (y == 1), rate)


def test_flips_only_in_permitted_cells():
    for seed in range(10):
        y, g = population(2000, seed)
        for rate in RATES:
            pb = inject_positive_bias(y, g, NoiseSpec("positive_bias", rate, seed))
            assert np.array_equal(pb[g == 0], y[g == 0])
            assert not np.any((y == 1) & (pb == 0))
            bb = inject_balanced_bias(y, g, NoiseSpec("balanced_bias", rate, seed))
            assert not np.any((g == 1) & (y == 1) & (bb == 0))
            assert not np.any((g == 0) & (y == 0) & (bb == 1))


def test_positive_bias_monotone_in_rate():
    y, g = population(5000)
    means = []
    for rate in RATES:
        counts = [inject_positive_bias(y, g, NoiseSpec("positive_bias", rate, s))[g == 1].sum()
                  for s in range(10)]
        means.append(np.mean(counts))
    assert all(b >= a for a, b in zip(means, means[1:]))


def test_reconstruction_counts_realized_flips():
    y, g = population(1000)
    for kind in ("positive_bias", "balanced_bias"):
        for rate in RATES:
            noisy = inject(y, g, NoiseSpec(kind, rate, 7))
            flips = int(np.sum(noisy != y))
            assert reconstruction_score(y, noisy).value == 1 - flips / len(y)
