"""Common surface of fitted models."""
from dataclasses import dataclass, field

import numpy as np

from ..errors import DegenerateFitError, ValidationError


class TrainedModel:
    """A fitted binary classifier.

    Subclasses implement :meth:`score`, returning ``P(y=1 | x)`` in ``[0, 1]``;
    a prediction is positive iff its score reaches ``threshold``.
    """

    threshold = 0.5
    descriptor: dict

    def score(self, X):
        raise NotImplementedError

    def predict(self, X):
        return (self.score(X) >= self.threshold).astype(np.int64)


@dataclass(frozen=True)
class ConstantModel(TrainedModel):
    """Scores every row with ``p``; stands in where a learner cannot be fit."""

    p: float
    threshold: float = 0.5
    descriptor: dict = field(default_factory=lambda: {"learner": "constant"})

    def score(self, X):
        return np.full(len(X), float(self.p))


def check_xy(X, y):
    X = np.asarray(X, dtype=float)
    y = np.asarray(y)
    if X.ndim != 2:
        raise ValidationError("X must be a 2-D matrix")
    if len(X) != len(y):
        raise ValidationError(f"length mismatch: X {len(X)}, y {len(y)}")
    if y.size and not np.isin(y, (0, 1)).all():
        raise ValidationError("labels must be 0/1")
    return X, y.astype(np.int64)


def require_two_classes(y):
    if len(np.unique(y)) < 2:
        raise DegenerateFitError("training labels contain a single class")
