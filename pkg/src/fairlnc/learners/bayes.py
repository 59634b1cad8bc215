import numpy as np
from dataclasses import dataclass, field
from scipy.special import logsumexp

from ..errors import ValidationError
from .base import TrainedModel, check_xy, require_two_classes


@dataclass(frozen=True)
class GaussianNBModel(TrainedModel):
    log_prior: np.ndarray  # (2,)
    means: np.ndarray  # (2, F)
    variances: np.ndarray  # (2, F)
    threshold: float = 0.5
    descriptor: dict = field(default_factory=dict)

    def joint_log_likelihood(self, X):
        X = np.asarray(X, dtype=float)
        out = np.empty((len(X), 2))
        for c in (0, 1):
            var = self.variances[c]
            out[:, c] = (
                self.log_prior[c]
                - 0.5 * np.sum(np.log(2 * np.pi * var))
                - 0.5 * np.sum((X - self.means[c]) ** 2 / var, axis=1)
            )
        return out

    def score(self, X):
        jll = self.joint_log_likelihood(X)
        return np.exp(jll[:, 1] - logsumexp(jll, axis=1))


def naive_bayes_fit(X, y, smoothing=1e-9, threshold=0.5):
    """Gaussian naive Bayes with class priors from label frequencies.

    Every per-class variance is increased by ``smoothing`` times the largest
    feature variance (at least ``smoothing``), so constant features never
    divide by zero.
    """
    if smoothing <= 0:
        raise ValidationError("smoothing must be positive")
    X, y = check_xy(X, y)
    require_two_classes(y)
    floor = smoothing * max(float(X.var(axis=0).max(initial=0.0)), 1.0)
    means = np.stack([X[y == c].mean(axis=0) for c in (0, 1)])
    variances = np.stack([X[y == c].var(axis=0) for c in (0, 1)]) + floor
    counts = np.bincount(y, minlength=2)
    return GaussianNBModel(
        log_prior=np.log(counts / counts.sum()),
        means=means,
        variances=variances,
        threshold=threshold,
        descriptor={"learner": "naive_bayes", "smoothing": smoothing},
    )
