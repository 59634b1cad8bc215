import numpy as np
from dataclasses import dataclass

from ..errors import CorrectionError, ValidationError
from ..learners.base import check_xy
from .base import CorrectionResult, Corrector, fit_or_constant, stratified_folds, take_fraction


def classification_filter(X, y, folds=5, seed=0):
    """Flag rows misclassified by a model trained on the other folds.

    Returns ``(clean_indices, noisy_indices)``.
    """
    if folds < 2:
        raise ValidationError("classification filter needs at least 2 folds")
    X, y = check_xy(X, y)
    fold = stratified_folds(y, folds, np.random.default_rng(seed))
    predicted = np.empty(len(y), dtype=np.int64)
    for f in range(folds):
        held = fold == f
        if held.any():
            predicted[held] = fit_or_constant(X[~held], y[~held], seed=seed).predict(X[held])
    noisy = predicted != y
    return np.flatnonzero(~noisy), np.flatnonzero(noisy)


@dataclass(frozen=True)
class STC(Corrector):
    """Self-training correction.

    After the classification filter, repeatedly fit on the clean set, relabel
    the noisy row the model most confidently believes mislabeled, and move it
    to the clean set, until ``ceil(correction_fraction * |noisy|)`` rows have
    been processed.
    """

    id = "STC"
    filter_folds: int = 5
    correction_fraction: float = 0.8
    seed: int = 0

    def _correct(self, X, y):
        if not 0 < self.correction_fraction <= 1:
            raise CorrectionError("STC: correction_fraction must lie in (0, 1]")
        clean, noisy = classification_filter(X, y, self.filter_folds, self.seed)
        if len(noisy) and not len(clean):
            raise CorrectionError("STC: the filter left no clean instances")
        current = y.copy()
        in_clean = np.zeros(len(y), dtype=bool)
        in_clean[clean] = True
        remaining = list(noisy)
        steps = take_fraction(len(noisy), self.correction_fraction)
        for _ in range(steps):
            model = fit_or_constant(X[in_clean], current[in_clean], seed=self.seed)
            rows = np.array(remaining)
            score = model.score(X[rows])
            wrong = np.where(current[rows] == 1, 1 - score, score)
            j = int(np.argmax(wrong))
            i = remaining.pop(j)
            current[i] = int(score[j] >= model.threshold)
            in_clean[i] = True
        return CorrectionResult.build(y, current, steps, n_flagged=len(noisy))
