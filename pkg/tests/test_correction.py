import inspect

import numpy as np
import pytest

from conftest import blobs
from fairlnc.correction import (
    BE, CC, HLNC, METHODS, OBNC, PL, STC, classification_filter, cluster_label_weights,
    make_method,
)
from fairlnc.correction.base import vote_with_ties
from fairlnc.errors import CorrectionError
from fairlnc.learners import bagged_trees_fit
from fairlnc.metrics import reconstruction_score
from fairlnc.noise import NoiseSpec, inject_balanced_bias, inject_positive_bias

CAPS = {"BE": lambda m: m.max_rounds, "PL": lambda m: 1, "STC": lambda m: None,
        "CC": lambda m: len(m.k_values), "OBNC": lambda m: 1,
        "HLNC": lambda m: m.max_iterations}


def planted(n=400, rate=0.2, kind="balanced_bias", seed=0, separation=6.0):
    X, y = blobs(n, separation=separation, seed=seed)
    g = np.random.default_rng(seed + 100).integers(0, 2, n)
    inject = inject_balanced_bias if kind == "balanced_bias" else inject_positive_bias
    return X, y, inject(y, g, NoiseSpec(kind, rate, seed))


def check_result(res, observed, n):
    assert res.corrected.shape == (n,)
    assert set(np.unique(res.corrected)) <= {0, 1}
    assert np.array_equal(res.changed_mask, res.corrected != observed)


@pytest.mark.parametrize("method_id", list(METHODS))
def test_shape_termination_and_mask(method_id):
    method = METHODS[method_id]()
    rng = np.random.default_rng(0)
    y_const = rng.integers(0, 2, 40)
    y_const[:2] = [0, 1]
    X_sep, y_sep = blobs(120, separation=8.0)
    for X, y in ((np.ones((40, 3)), y_const), (X_sep, y_sep)):
        X_before, y_before = X.copy(), y.copy()
        res = method.correct(X, y)
        check_result(res, y, len(y))
        cap = CAPS[method_id](method)
        if method_id == "STC":
            cap = res.diagnostics["n_flagged"]
        assert res.iterations_used <= cap
        assert np.array_equal(X, X_before) and np.array_equal(y, y_before)


@pytest.mark.parametrize("method_id", list(METHODS))
def test_determinism(method_id):
    X, _, noisy = planted(200, seed=3)
    a = make_method({"id": method_id, "seed": 5}).correct(X, noisy)
    b = make_method({"id": method_id, "seed": 5}).correct(X, noisy)
    assert np.array_equal(a.corrected, b.corrected) and a.iterations_used == b.iterations_used


@pytest.mark.parametrize("method_id", list(METHODS))
def test_group_blind_interface(method_id):
    params = list(inspect.signature(METHODS[method_id]().correct).parameters)
    assert params == ["X", "y"]


@pytest.mark.parametrize("method_id", list(METHODS))
def test_planted_noise_is_partly_repaired(method_id):
    X, y, noisy = planted(400, rate=0.2, seed=1)
    res = make_method({"id": method_id, "seed": 1}).correct(X, noisy)
    assert reconstruction_score(res.corrected, y).value > reconstruction_score(noisy, y).value


def test_make_method_rejects_unknown():
    with pytest.raises(ValueError):
        make_method({"id": "XYZ"})
    assert make_method({"id": "CC", "k_values": [2, 4]}).k_values == (2, 4)


# BE

def test_be_clean_data_barely_changes():
    changed = []
    for seed in range(10):
        X, y = blobs(200, separation=8.0, seed=seed)
        changed.append(BE(seed=seed).correct(X, y).changed_mask.mean())
    assert np.mean(changed) <= 0.01


def test_be_flips_planted_point_in_first_round():
    X, y = blobs(200, separation=8.0)
    i = int(np.argmin(X[:, 0]))  # deepest point of the class-0 blob
    noisy = y.copy()
    noisy[i] = 1
    res = BE(max_rounds=1).correct(X, noisy)
    assert res.corrected[i] == 0 and res.iterations_used == 1


def test_be_zero_rounds_is_identity():
    X, y, noisy = planted(100)
    res = BE(max_rounds=0).correct(X, noisy)
    assert np.array_equal(res.corrected, noisy) and not res.changed_mask.any()


# PL

def test_pl_identity_when_models_agree():
    X, y = blobs(100, separation=12.0)
    assert not PL().correct(X, y).changed_mask.any()


def test_pl_restores_planted_flip():
    X, y = blobs(100, separation=8.0)
    noisy = y.copy()
    noisy[10] = 1 - noisy[10]
    assert PL().correct(X, noisy).corrected[10] == y[10]


def test_pl_even_split_keeps_observed():
    assert list(vote_with_ties(np.array([2, 2, 3]), np.array([2, 2, 1]),
                               np.array([0, 1, 0]))) == [0, 1, 1]


def test_pl_rejects_single_fold_and_lonely_class():
    X, y = blobs(20)
    with pytest.raises(CorrectionError):
        PL(n_folds=1).correct(X, y)
    y = np.zeros(20, dtype=int)
    y[0] = 1
    with pytest.raises(CorrectionError):
        PL().correct(X, y)


def test_pl_clean_data_changes_at_most_two_percent():
    rates = []
    for seed in range(10):
        X, y = blobs(300, separation=6.0, seed=seed)
        rates.append(PL(seed=seed).correct(X, y).changed_mask.mean())
    assert max(rates) <= 0.02


# STC and the classification filter

def test_filter_on_learnable_and_constant_data():
    X, y = blobs(100, separation=12.0)
    clean, noisy = classification_filter(X, y)
    assert len(noisy) == 0 and len(clean) == 100
    _, noisy = classification_filter(np.ones((100, 2)), y)
    assert 0.3 <= len(noisy) / 100 <= 0.7


def test_filter_flags_planted_point():
    hits = 0
    for seed in range(10):
        X, y = blobs(150, separation=6.0, seed=seed)
        i = int(np.argmax(X[:, 0]))
        y = y.copy()
        y[i] = 1 - y[i]
        hits += i in classification_filter(X, y, seed=seed)[1]
    assert hits / 10 >= 0.9


def test_stc_identity_when_filter_flags_nothing():
    X, y = blobs(100, separation=12.0)
    res = STC().correct(X, y)
    assert not res.changed_mask.any() and res.iterations_used == 0


def test_stc_full_fraction_processes_every_flagged_row():
    X, y, noisy = planted(200, rate=0.1)
    res = STC(correction_fraction=1.0).correct(X, noisy)
    assert res.iterations_used == res.diagnostics["n_flagged"] > 0
    assert res.changed_mask.sum() <= res.diagnostics["n_flagged"]


def test_stc_improves_reconstruction():
    X, y, noisy = planted(300, rate=0.1, separation=8.0)
    res = STC().correct(X, noisy)
    assert reconstruction_score(res.corrected, y).value > reconstruction_score(noisy, y).value


def test_stc_rejects_bad_fraction():
    X, y = blobs(20)
    with pytest.raises(CorrectionError):
        STC(correction_fraction=0).correct(X, y)


# CC

def test_cc_weights_pure_cluster():
    a = np.array([0, 0, 0, 1, 1])
    w = cluster_label_weights(a, np.array([1, 1, 1, 0, 1]), 2)
    assert np.allclose(w[0], [0.0, 0.6]) and np.allclose(w[3], [0.2, 0.2])
    # an even cluster keeps each member's observed label
    assert list(vote_with_ties(w[3:, 1], w[3:, 0], np.array([0, 1]))) == [0, 1]


def test_cc_pure_single_clustering_keeps_labels():
    X, y = blobs(60, separation=20.0)
    assert np.array_equal(CC(k_values=(2,)).correct(X, y).corrected, y)


def test_cc_restores_most_planted_flips():
    X, y, noisy = planted(400, rate=0.2, separation=8.0)
    res = CC(k_values=(2, 3, 4, 5)).correct(X, noisy)
    flipped = noisy != y
    assert np.mean(res.corrected[flipped] == y[flipped]) > 0.5


def test_cc_rejects_bad_k():
    X, y = blobs(10)
    with pytest.raises(CorrectionError):
        CC(k_values=(1, 2)).correct(X, y)
    with pytest.raises(CorrectionError):
        CC(k_values=(11,)).correct(X, y)


# OBNC

def test_obnc_identity_when_ensemble_agrees():
    X, y = blobs(100, separation=12.0)
    assert not OBNC().correct(X, y).changed_mask.any()


def test_obnc_full_fraction_matches_ensemble():
    X, y, noisy = planted(200, rate=0.3, separation=2.0)
    res = OBNC(seed=4).correct(X, noisy)
    v1, v0 = bagged_trees_fit(X, noisy, 11, 4, seed=4).votes(X)
    assert np.array_equal(res.corrected, (v1 > v0).astype(int))


def test_obnc_margins_are_ordered():
    for seed in range(10):
        X, _, noisy = planted(150, rate=0.3, seed=seed, separation=2.0)
        res = OBNC(relabel_fraction=0.5, seed=seed).correct(X, noisy)
        margins = np.array(res.diagnostics["ordered_margins"])
        assert np.all(np.diff(margins) <= 0)
        assert res.changed_mask.sum() == int(np.ceil(0.5 * res.diagnostics["n_suspects"]))


# HLNC

class NeverAgree(HLNC):
    def _label_low(self, X, labels, train, low):
        return np.zeros(len(low), dtype=int), np.ones(len(low), dtype=int)


def test_hlnc_identity_when_all_high_confidence():
    X, y = blobs(100, separation=12.0)
    res = HLNC().correct(X, y)
    assert res.iterations_used == 0 and not res.changed_mask.any()


def test_hlnc_disagreeing_models_leave_labels():
    X, y, noisy = planted(200, rate=0.3, separation=2.0)
    res = NeverAgree(max_iterations=4).correct(X, noisy)
    assert 1 <= res.iterations_used <= 4
    assert not res.changed_mask.any()


def test_hlnc_positive_bias_recovery():
    X, y, noisy = planted(400, rate=0.2, kind="positive_bias", separation=6.0)
    res = HLNC().correct(X, noisy)
    assert reconstruction_score(res.corrected, y).value > reconstruction_score(noisy, y).value


def test_hlnc_rejects_small_k():
    X, y = blobs(10)
    with pytest.raises(CorrectionError):
        HLNC(k=1).correct(X, y)
