import numpy as np
from dataclasses import dataclass, field
from scipy.special import expit

from .base import TrainedModel, check_xy, require_two_classes


def standardizer(X):
    mean = X.mean(axis=0)
    scale = X.std(axis=0)
    scale[scale == 0] = 1.0
    return mean, scale


def loss_and_grad(w, b, X, y, l2):
    """Mean log-loss plus ``l2 / (2n) * ||w||^2`` and its gradient.

    The intercept ``b`` is not penalized.
    """
    n = len(y)
    z = X @ w + b
    loss = np.mean(np.logaddexp(0.0, z) - y * z) + l2 / (2 * n) * (w @ w)
    r = (expit(z) - y) / n
    return loss, X.T @ r + (l2 / n) * w, r.sum()


@dataclass(frozen=True)
class LogisticModel(TrainedModel):
    coef: np.ndarray
    intercept: float
    mean: np.ndarray
    scale: np.ndarray
    threshold: float = 0.5
    descriptor: dict = field(default_factory=dict)
    loss_history: tuple = ()

    def score(self, X):
        Z = (np.asarray(X, dtype=float) - self.mean) / self.scale
        return expit(Z @ self.coef + self.intercept)


def logreg_fit(X, y, l2=1.0, epochs=200, lr=0.1, seed=0, threshold=0.5):
    """Full-batch gradient descent on the L2-regularized log-loss.

    Features are standardized with training statistics kept in the model. A
    step that would increase the loss is rejected and the rate halved, so the
    recorded loss never increases. Full-batch descent from a zero start is
    deterministic; ``seed`` is recorded for uniformity with other learners.
    """
    X, y = check_xy(X, y)
    require_two_classes(y)
    mean, scale = standardizer(X)
    Z = (X - mean) / scale
    w, b = np.zeros(Z.shape[1]), 0.0
    loss, gw, gb = loss_and_grad(w, b, Z, y, l2)
    history = [loss]
    rate = lr
    for _ in range(epochs):
        while True:
            w_new, b_new = w - rate * gw, b - rate * gb
            new_loss, new_gw, new_gb = loss_and_grad(w_new, b_new, Z, y, l2)
            if new_loss <= loss or rate < 1e-12:
                break
            rate /= 2
        if new_loss > loss:
            break
        w, b, loss, gw, gb = w_new, b_new, new_loss, new_gw, new_gb
        history.append(loss)
    return LogisticModel(
        coef=w,
        intercept=float(b),
        mean=mean,
        scale=scale,
        threshold=threshold,
        descriptor={"learner": "logreg", "l2": l2, "epochs": epochs, "lr": lr, "seed": seed},
        loss_history=tuple(history),
    )
