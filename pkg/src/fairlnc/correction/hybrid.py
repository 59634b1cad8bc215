import numpy as np
from dataclasses import dataclass

from ..errors import CorrectionError
from ..learners import cotrain_fit, kmeans, seeded_kmeans
from .base import CorrectionResult, Corrector


@dataclass(frozen=True)
class HLNC(Corrector):
    """Hybrid correction from high-/low-confidence partitioning.

    A row is high-confidence when its label equals the majority label of its
    k-means cluster. Each iteration, seeded k-means (one seed group per
    class) and co-training, both trained on the high-confidence rows, label
    the low-confidence rows; rows where they agree are relabeled and
    promoted. Stops when every row is high-confidence, a pass promotes
    nothing, or after ``max_iterations``.
    """

    id = "HLNC"
    k: int = 2
    max_iterations: int = 10
    cotrain_rounds: int = 10
    cotrain_growth: int = 2
    seed: int = 0

    def _correct(self, X, y):
        if self.k < 2:
            raise CorrectionError("HLNC: k must be at least 2")
        clustering = kmeans(X, min(self.k, len(y)), seed=self.seed)
        a = clustering.assignments
        ones = np.bincount(a[y == 1], minlength=clustering.k)
        zeros = np.bincount(a[y == 0], minlength=clustering.k)
        cluster_label = (ones >= zeros).astype(np.int64)
        high = y == cluster_label[a]
        current = y.copy()
        iterations, promoted = 0, []
        while (~high).any() and iterations < self.max_iterations:
            iterations += 1
            train = high.copy()
            for c in (0, 1):
                if not (train & (current == c)).any():
                    train |= current == c
            if len(np.unique(current[train])) < 2:
                raise CorrectionError("HLNC: a class has no instances to seed from")
            low = np.flatnonzero(~high)
            first, second = self._label_low(X, current, train, low)
            agree = first == second
            promoted.append(int(agree.sum()))
            if not agree.any():
                break
            current[low[agree]] = first[agree]
            high[low[agree]] = True
        return CorrectionResult.build(
            y, current, iterations,
            initial_high_confidence=int((y == cluster_label[a]).sum()),
            promoted_per_iteration=promoted,
        )

    def _label_low(self, X, labels, train, low):
        """Labels for rows ``low`` from seeded k-means and from co-training."""
        seeds = np.where(train, labels, -1)
        ssk = seeded_kmeans(X, 2, seeds, seed=self.seed)
        unlabeled = low[~train[low]]
        ct = cotrain_fit(X[train], labels[train], X[unlabeled], view_seed=self.seed,
                         rounds=self.cotrain_rounds, growth=self.cotrain_growth)
        return ssk.assignments[low], ct.predict(X[low])
