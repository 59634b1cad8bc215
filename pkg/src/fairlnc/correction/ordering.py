import numpy as np
from dataclasses import dataclass

from ..errors import CorrectionError
from ..learners import bagged_trees_fit
from .base import CorrectionResult, Corrector, take_fraction


@dataclass(frozen=True)
class OBNC(Corrector):
    """Ordering-based correction driven by bagged-ensemble margins.

    Rows the ensemble misclassifies are ranked by ``|margin|`` (descending,
    ties by row order) and the top ``relabel_fraction`` of them take the
    ensemble's prediction.
    """

    id = "OBNC"
    n_trees: int = 11
    max_depth: int = 4
    relabel_fraction: float = 1.0
    seed: int = 0

    def _correct(self, X, y):
        if not 0 < self.relabel_fraction <= 1:
            raise CorrectionError("OBNC: relabel_fraction must lie in (0, 1]")
        ensemble = bagged_trees_fit(X, y, self.n_trees, self.max_depth, self.seed)
        v1, v0 = ensemble.votes(X)
        predicted = (v1 > v0).astype(np.int64)
        margin = np.abs(v1 - v0) / self.n_trees
        suspects = np.flatnonzero(predicted != y)
        ordered = suspects[np.argsort(-margin[suspects], kind="stable")]
        chosen = ordered[: take_fraction(len(ordered), self.relabel_fraction)]
        corrected = y.copy()
        corrected[chosen] = predicted[chosen]
        return CorrectionResult.build(
            y, corrected, 1,
            ordered_margins=margin[ordered].tolist(),
            n_suspects=len(suspects),
        )
