"""Shared interface for label-noise correctors.

A corrector sees features and observed labels only; group membership is
never passed in, so no correction can read the sensitive attribute.
"""
import dataclasses
import math
from dataclasses import dataclass, field
from typing import ClassVar

import numpy as np

from ..errors import CorrectionError, DegenerateFitError, ValidationError
from ..learners import ConstantModel, logreg_fit
from ..learners.base import check_xy


@dataclass(frozen=True)
class CorrectionResult:
    corrected: np.ndarray
    changed_mask: np.ndarray
    iterations_used: int
    diagnostics: dict = field(default_factory=dict)

    @classmethod
    def build(cls, observed, corrected, iterations, **diagnostics):
        corrected = np.asarray(corrected, dtype=np.int64).copy()
        changed = corrected != np.asarray(observed)
        diagnostics.setdefault("n_changed", int(changed.sum()))
        return cls(corrected, changed, int(iterations), diagnostics)


class Corrector:
    """Subclasses are frozen dataclasses of hyperparameters implementing ``_correct``."""

    id: ClassVar[str] = ""

    def correct(self, X, y):
        X, y = check_xy(X, y)
        if len(y) == 0:
            raise ValidationError("cannot correct an empty label vector")
        try:
            return self._correct(X, y)
        except (DegenerateFitError, ValidationError) as exc:
            raise CorrectionError(f"{self.id}: {exc}") from exc

    def _correct(self, X, y):
        raise NotImplementedError

    def params(self):
        return dataclasses.asdict(self)

    def to_dict(self):
        return {"id": self.id, **self.params()}


def fit_or_constant(X, y, **hp):
    """Logistic regression, or a constant scorer when ``y`` has one class."""
    if len(np.unique(y)) < 2:
        return ConstantModel(float(y[0]) if len(y) else 0.5)
    return logreg_fit(X, y, **hp)


def stratified_folds(y, n_folds, rng):
    """Fold id per row; each class is shuffled and dealt round-robin."""
    folds = np.empty(len(y), dtype=np.int64)
    offset = 0
    for c in (0, 1):
        members = rng.permutation(np.flatnonzero(y == c))
        folds[members] = (np.arange(len(members)) + offset) % n_folds
        offset += len(members)
    return folds


def take_fraction(count, fraction):
    return min(count, math.ceil(fraction * count - 1e-9))


def vote_with_ties(ones, zeros, observed):
    """Majority label; ties keep the observed label."""
    return np.where(ones > zeros, 1, np.where(zeros > ones, 0, observed))
