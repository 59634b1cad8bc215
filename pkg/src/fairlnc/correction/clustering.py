import numpy as np
from dataclasses import dataclass

from ..errors import CorrectionError
from ..learners import kmeans
from .base import CorrectionResult, Corrector, vote_with_ties


def cluster_label_weights(assignments, labels, k):
    """Per-row ``(w0, w1)`` weights from one clustering.

    Each member of cluster ``c`` receives, for label ``l``, the cluster's
    purity for ``l`` times the cluster's share of all rows. This is the one
    place to change the weighting scheme.
    """
    n = len(labels)
    size = np.bincount(assignments, minlength=k).astype(float)
    weights = np.zeros((k, 2))
    for lab in (0, 1):
        count = np.bincount(assignments[labels == lab], minlength=k)
        with np.errstate(invalid="ignore", divide="ignore"):
            weights[:, lab] = np.where(size > 0, (count / size) * (size / n), 0.0)
    return weights[assignments]


@dataclass(frozen=True)
class CC(Corrector):
    """Clustering-based correction over several cluster counts."""

    id = "CC"
    k_values: tuple = (2, 3, 5, 8, 13)
    seed: int = 0

    def _correct(self, X, y):
        bad = [k for k in self.k_values if not 2 <= k <= len(y)]
        if bad or not self.k_values:
            raise CorrectionError(f"CC: cluster counts {bad} outside [2, {len(y)}]")
        total = np.zeros((len(y), 2))
        for j, k in enumerate(self.k_values):
            clustering = kmeans(X, k, seed=self.seed + j)
            total += cluster_label_weights(clustering.assignments, y, k)
        corrected = vote_with_ties(total[:, 1], total[:, 0], y)
        return CorrectionResult.build(y, corrected, len(self.k_values))
