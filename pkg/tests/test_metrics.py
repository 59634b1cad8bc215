import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fairlnc.errors import ValidationError
from fairlnc.metrics import (
    auc, dp_dif, eod_dif, eop_dif, evaluate, group_confusion, pe_dif, reconstruction_score,
    tpr_dif,
)


def pairwise_auc(scores, labels):
    pos = [s for s, y in zip(scores, labels) if y == 1]
    neg = [s for s, y in zip(scores, labels) if y == 0]
    total = sum(1.0 if p > q else 0.5 if p == q else 0.0 for p in pos for q in neg)
    return total / (len(pos) * len(neg))


def brute_rates(pred, labels, group):
    """Per-group rates counted row by row with plain Python."""
    out = {}
    for g in (0, 1):
        rows = [(p, y) for p, y, gg in zip(pred, labels, group) if gg == g]
        pos = [p for p, y in rows if y == 1]
        neg = [p for p, y in rows if y == 0]
        out[g] = {
            "pr": sum(p for p, _ in rows) / len(rows) if rows else None,
            "tpr": sum(pos) / len(pos) if pos else None,
            "fpr": sum(neg) / len(neg) if neg else None,
            "fnr": (len(pos) - sum(pos)) / len(pos) if pos else None,
        }
    return out


def gap(rates, key):
    a, b = rates[0][key], rates[1][key]
    return None if a is None or b is None else abs(a - b)


def test_reconstruction_examples():
    assert reconstruction_score([1, 0, 1], [1, 0, 1]).value == 1.0
    assert reconstruction_score([1, 0, 1], [0, 1, 0]).value == 0.0
    assert reconstruction_score([1, 1, 0, 0], [1, 0, 0, 1]).value == 0.5
    with pytest.raises(ValidationError):
        reconstruction_score([1, 0], [1])


def test_auc_examples():
    assert auc([0.1, 0.2, 0.8, 0.9], [0, 0, 1, 1]).value == 1.0
    assert auc([0.5] * 6, [0, 1] * 3).value == 0.5
    single = auc([0.1, 0.2], [1, 1])
    assert not single.well_defined and np.isnan(single.value)


def test_auc_matches_pairwise_oracle():
    rng = np.random.default_rng(1)
    for _ in range(50):
        labels = rng.integers(0, 2, 50)
        labels[:2] = [0, 1]
        scores = np.round(rng.random(50), 1)  # coarse grid forces ties
        assert abs(auc(scores, labels).value - pairwise_auc(scores, labels)) < 1e-12


def test_group_confusion_hand_table():
    pred = [1, 1, 0, 0, 1, 0, 1, 0]
    labels = [1, 0, 0, 1, 1, 1, 0, 0]
    group = [0, 0, 0, 0, 1, 1, 1, 1]
    cm = group_confusion(pred, labels, group)
    assert (cm.tp, cm.fp, cm.tn, cm.fn) == ((1, 1), (1, 1), (1, 1), (1, 1))
    cm = group_confusion(labels, labels, group)
    assert cm.fp == (0, 0) and cm.fn == (0, 0)
    flipped = 1 - np.asarray(labels)
    cm = group_confusion(flipped, labels, group)
    assert cm.tp == (0, 0) and cm.tn == (0, 0)
    with pytest.raises(ValidationError):
        group_confusion([1], [1, 0], [0, 1])


def test_dp_dif_examples():
    assert dp_dif([1, 0, 1, 0], [0, 0, 1, 1]).value == 0.0
    assert dp_dif([0, 0, 1, 1], [0, 0, 1, 1]).value == 1.0
    # 0.6 vs 0.35 positive rates over 20 rows per group
    pred = [1] * 12 + [0] * 8 + [1] * 7 + [0] * 13
    group = [0] * 20 + [1] * 20
    assert dp_dif(pred, group).value == pytest.approx(0.25, abs=1e-12)
    assert not dp_dif([1, 0], [1, 1]).well_defined


def test_eod_max_rule():
    # g=0: TPR 1.0, FPR 0.5; g=1: TPR 0.8, FPR 0.0
    labels = [1] * 5 + [0] * 2 + [1] * 5 + [0] * 2
    pred = [1] * 5 + [1, 0] + [1] * 4 + [0] + [0, 0]
    group = [0] * 7 + [1] * 7
    assert tpr_dif(pred, labels, group).value == pytest.approx(0.2)
    assert pe_dif(pred, labels, group).value == pytest.approx(0.5)
    assert eod_dif(pred, labels, group).value == pytest.approx(0.5)


def test_pe_and_eop_examples():
    labels = [0, 0, 1, 0, 0, 1]
    group = [0, 0, 0, 1, 1, 1]
    assert pe_dif(labels, labels, group).value == 0.0
    assert pe_dif([1, 1, 1, 0, 0, 1], labels, group).value == 1.0
    assert eop_dif(labels, labels, group).value == 0.0
    # FNR 0.4 vs 0.1 over ten positives per group
    labels = [1] * 20
    group = [0] * 10 + [1] * 10
    pred = [0] * 4 + [1] * 6 + [0] + [1] * 9
    assert eop_dif(pred, labels, group).value == pytest.approx(0.3)
    assert not pe_dif(pred, labels, group).well_defined
    assert not eod_dif(pred, labels, group).well_defined


def test_fairness_metrics_match_brute_force():
    rng = np.random.default_rng(2)
    for _ in range(100):
        n = int(rng.integers(4, 100))
        pred, labels, group = (rng.integers(0, 2, n) for _ in range(3))
        r = brute_rates(pred, labels, group)
        cases = [
            (dp_dif(pred, group), gap(r, "pr")),
            (pe_dif(pred, labels, group), gap(r, "fpr")),
            (eop_dif(pred, labels, group), gap(r, "fnr")),
            (tpr_dif(pred, labels, group), gap(r, "tpr")),
        ]
        t, f = gap(r, "tpr"), gap(r, "fpr")
        cases.append((eod_dif(pred, labels, group), None if t is None or f is None else max(t, f)))
        for got, want in cases:
            assert got.well_defined == (want is not None)
            if want is not None:
                assert got.value == want


def test_evaluate_returns_all_six():
    vals = evaluate([0.9, 0.2, 0.7, 0.4], [1, 0, 1, 0], [0, 0, 1, 1])
    assert [v.name for v in vals] == ["auc", "dp_dif", "eod_dif", "pe_dif", "eop_dif",
                                      "reconstruction"]
    assert vals[0].value == 1.0 and vals[-1].value == 1.0


binary = st.lists(st.tuples(st.integers(0, 1), st.integers(0, 1), st.integers(0, 1)),
                  min_size=1, max_size=60)


def _cols(rows):
    return [np.array(c) for c in zip(*rows)]


@settings(max_examples=200, deadline=None)
@given(binary)
def test_group_swap_symmetry(rows):
    pred, labels, group = _cols(rows)
    swapped = 1 - group
    for fn in (pe_dif, eop_dif, eod_dif, tpr_dif):
        a, b = fn(pred, labels, group), fn(pred, labels, swapped)
        assert a.well_defined == b.well_defined
        if a.well_defined:
            assert a.value == pytest.approx(b.value, abs=1e-15)
    a, b = dp_dif(pred, group), dp_dif(pred, swapped)
    assert a.well_defined == b.well_defined
    if a.well_defined:
        assert a.value == pytest.approx(b.value, abs=1e-15)


@settings(max_examples=200, deadline=None)
@given(binary)
def test_complement_and_dominance(rows):
    pred, labels, group = _cols(rows)
    t, e = tpr_dif(pred, labels, group), eop_dif(pred, labels, group)
    assert t.well_defined == e.well_defined
    if t.well_defined:
        assert e.value == pytest.approx(t.value, abs=1e-12)
    eod, pe = eod_dif(pred, labels, group), pe_dif(pred, labels, group)
    if eod.well_defined:
        assert eod.value >= pe.value and eod.value >= t.value
        assert 0.0 <= eod.value <= 1.0


@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(st.integers(-40, 40), st.integers(0, 1)), min_size=2, max_size=60),
       st.sampled_from([np.exp, lambda s: s ** 3, lambda s: 2 * s + 1, np.arctan]))
def test_auc_monotone_invariance(rows, transform):
    scores, labels = (np.array(c) for c in zip(*rows))
    scores = scores / 8.0  # a grid keeps every transform strictly monotone in floats
    a, b = auc(scores, labels), auc(transform(scores), labels)
    assert a.well_defined == b.well_defined
    if a.well_defined:
        assert a.value == pytest.approx(b.value, abs=1e-12)
        assert 0.0 <= a.value <= 1.0


def test_auc_on_all_small_label_patterns():
    scores = np.array([0.1, 0.4, 0.4, 0.9, 0.3])
    for labels in itertools.product([0, 1], repeat=5):
        if 0 < sum(labels) < 5:
            assert abs(auc(scores, labels).value - pairwise_auc(scores, labels)) < 1e-12
