import numpy as np
from dataclasses import dataclass

from ..errors import CorrectionError
from ..learners import logreg_fit
from .base import CorrectionResult, Corrector, stratified_folds, vote_with_ties


@dataclass(frozen=True)
class PL(Corrector):
    """Polishing labels: majority vote of models fit on every fold complement."""

    id = "PL"
    n_folds: int = 5
    seed: int = 0

    def _correct(self, X, y):
        if self.n_folds < 2:
            raise CorrectionError("PL: n_folds must be at least 2")
        folds = stratified_folds(y, self.n_folds, np.random.default_rng(self.seed))
        ones = np.zeros(len(y), dtype=np.int64)
        for f in range(self.n_folds):
            train = folds != f
            if len(np.unique(y[train])) < 2:
                raise CorrectionError(f"PL: fold complement {f} holds a single class")
            ones += logreg_fit(X[train], y[train], seed=self.seed).predict(X)
        corrected = vote_with_ties(ones, self.n_folds - ones, y)
        return CorrectionResult.build(y, corrected, 1, positive_votes=ones.tolist())
