"""Predictive-performance, fairness and label-reconstruction measures.

Group differences compare ``g=0`` against ``g=1`` inside an absolute value,
so they do not depend on which group is called protected. When a
conditioning cell is empty the metric is returned with
``well_defined=False`` and a NaN value.
"""
from dataclasses import dataclass

import numpy as np
from scipy.stats import rankdata

from .dataset import as_binary
from .errors import ValidationError

METRICS = ("auc", "dp_dif", "eod_dif", "pe_dif", "eop_dif", "reconstruction")


@dataclass(frozen=True)
class MetricValue:
    name: str
    value: float
    well_defined: bool = True

    @classmethod
    def undefined(cls, name):
        return cls(name, float("nan"), False)


def _check_lengths(*arrays):
    n = {len(a) for a in arrays}
    if len(n) != 1:
        raise ValidationError(f"length mismatch: {[len(a) for a in arrays]}")


def reconstruction_score(corrected, original):
    """Fraction of positions where ``corrected`` agrees with ``original``."""
    corrected, original = as_binary(corrected), as_binary(original)
    _check_lengths(corrected, original)
    if len(original) == 0:
        return MetricValue.undefined("reconstruction")
    # 1 - mismatches/N rather than mean(agreement): keeps the score exactly
    # equal to one minus the realized flip fraction
    mismatches = int(np.count_nonzero(corrected != original))
    return MetricValue("reconstruction", 1.0 - mismatches / len(original))


def auc(scores, labels):
    """Rank-based ROC AUC; tied scores count one half."""
    scores = np.asarray(scores, dtype=float)
    labels = as_binary(labels)
    _check_lengths(scores, labels)
    n_pos = int(labels.sum())
    n_neg = len(labels) - n_pos
    if n_pos == 0 or n_neg == 0:
        return MetricValue.undefined("auc")
    ranks = rankdata(scores, method="average")
    u = ranks[labels == 1].sum() - n_pos * (n_pos + 1) / 2.0
    return MetricValue("auc", float(u / (n_pos * n_neg)))


@dataclass(frozen=True)
class GroupConfusion:
    """Confusion counts per group; each field is a ``(g=0, g=1)`` pair."""

    tp: tuple
    fp: tuple
    tn: tuple
    fn: tuple

    def size(self, g):
        return self.tp[g] + self.fp[g] + self.tn[g] + self.fn[g]

    def positive_rate(self, g):
        n = self.size(g)
        return (self.tp[g] + self.fp[g]) / n if n else None

    def tpr(self, g):
        pos = self.tp[g] + self.fn[g]
        return self.tp[g] / pos if pos else None

    def fpr(self, g):
        neg = self.fp[g] + self.tn[g]
        return self.fp[g] / neg if neg else None

    def fnr(self, g):
        pos = self.tp[g] + self.fn[g]
        return self.fn[g] / pos if pos else None


def group_confusion(pred, labels, group):
    pred, labels, group = as_binary(pred, "pred"), as_binary(labels), as_binary(group, "group")
    _check_lengths(pred, labels, group)
    cells = {}
    for name, (p, y) in {"tp": (1, 1), "fp": (1, 0), "tn": (0, 0), "fn": (0, 1)}.items():
        hit = (pred == p) & (labels == y)
        cells[name] = tuple(int(np.sum(hit & (group == g))) for g in (0, 1))
    return GroupConfusion(**cells)


def _gap(name, rate_fn):
    r0, r1 = rate_fn(0), rate_fn(1)
    if r0 is None or r1 is None:
        return MetricValue.undefined(name)
    return MetricValue(name, abs(r0 - r1))


def dp_dif(pred, group):
    pred, group = as_binary(pred, "pred"), as_binary(group, "group")
    cm = group_confusion(pred, np.zeros_like(pred), group)
    return _gap("dp_dif", cm.positive_rate)


def tpr_dif(pred, labels, group):
    return _gap("tpr_dif", group_confusion(pred, labels, group).tpr)


def pe_dif(pred, labels, group):
    """Predictive-equality difference: gap in false positive rates."""
    return _gap("pe_dif", group_confusion(pred, labels, group).fpr)


def eop_dif(pred, labels, group):
    """Equal-opportunity difference: gap in false negative rates."""
    return _gap("eop_dif", group_confusion(pred, labels, group).fnr)


def eod_dif(pred, labels, group):
    """Equalized-odds difference: the larger of the TPR and FPR gaps."""
    cm = group_confusion(pred, labels, group)
    t, f = _gap("tpr_dif", cm.tpr), _gap("fpr_dif", cm.fpr)
    if not (t.well_defined and f.well_defined):
        return MetricValue.undefined("eod_dif")
    return MetricValue("eod_dif", max(t.value, f.value))


def evaluate(scores, labels, group, threshold=0.5):
    """All per-evaluation metrics for one model on one labelled test set.

    ``reconstruction`` here is the agreement between thresholded predictions
    and ``labels`` (i.e. accuracy).
    """
    scores = np.asarray(scores, dtype=float)
    pred = (scores >= threshold).astype(np.int64)
    return [
        auc(scores, labels),
        dp_dif(pred, group),
        eod_dif(pred, labels, group),
        pe_dif(pred, labels, group),
        eop_dif(pred, labels, group),
        reconstruction_score(pred, labels),
    ]
