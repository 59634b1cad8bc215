import numpy as np
from dataclasses import dataclass

from ..learners import naive_bayes_fit
from .base import CorrectionResult, Corrector


def binary_entropy(p):
    p = np.clip(p, 1e-15, 1 - 1e-15)
    return -(p * np.log2(p) + (1 - p) * np.log2(1 - p))


def stratified_bootstrap(y, rng):
    return np.concatenate([
        rng.choice(np.flatnonzero(y == c), size=int(np.sum(y == c)), replace=True)
        for c in (0, 1)
    ])


@dataclass(frozen=True)
class BE(Corrector):
    """Bayesian entropy correction.

    Each round averages the posteriors of ``n_classifiers`` naive Bayes
    models fit on bootstrap resamples (class-stratified so both classes are
    present). Rows whose label disagrees with the ensemble are flipped when
    their entropy is at most the mean entropy of all disagreeing rows.
    Stops when nothing disagrees or after ``max_rounds`` rounds.
    """

    id = "BE"
    n_classifiers: int = 10
    max_rounds: int = 10
    seed: int = 0

    def _correct(self, X, y):
        rng = np.random.default_rng(self.seed)
        current = y.copy()
        flips, rounds = [], 0
        while rounds < self.max_rounds and len(np.unique(current)) == 2:
            rounds += 1
            posterior = np.zeros(len(y))
            for _ in range(self.n_classifiers):
                idx = stratified_bootstrap(current, rng)
                posterior += naive_bayes_fit(X[idx], current[idx]).score(X)
            posterior /= self.n_classifiers
            predicted = (posterior >= 0.5).astype(np.int64)
            disagree = predicted != current
            if not disagree.any():
                break
            entropy = binary_entropy(posterior)
            flip = disagree & (entropy <= entropy[disagree].mean())
            current[flip] = predicted[flip]
            flips.append(int(flip.sum()))
        return CorrectionResult.build(y, current, rounds, flips_per_round=flips)
