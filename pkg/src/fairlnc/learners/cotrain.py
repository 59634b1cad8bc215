import numpy as np
from dataclasses import dataclass, field

from ..errors import ValidationError
from .base import TrainedModel, check_xy, require_two_classes
from .bayes import naive_bayes_fit


@dataclass(frozen=True)
class CoTrainModel(TrainedModel):
    views: tuple  # two index arrays into the feature columns
    models: tuple
    threshold: float = 0.5
    descriptor: dict = field(default_factory=dict)
    pool_sizes: tuple = ()  # (view 0, view 1) pool sizes after each round

    def score(self, X):
        X = np.asarray(X, dtype=float)
        return 0.5 * sum(m.score(X[:, v]) for m, v in zip(self.models, self.views))


def cotrain_fit(X, y, unlabeled, view_seed=0, rounds=10, growth=2, smoothing=1e-9,
                threshold=0.5):
    """Co-training with one Gaussian naive Bayes per random half of the features.

    Each round, each view's model pseudo-labels its ``growth`` most confident
    remaining unlabeled rows; those rows join the *other* view's pool.
    """
    X, y = check_xy(X, y)
    U = np.asarray(unlabeled, dtype=float).reshape(-1, X.shape[1])
    n_features = X.shape[1]
    if n_features < 2:
        raise ValidationError("co-training needs at least two features")
    require_two_classes(y)
    perm = np.random.default_rng(view_seed).permutation(n_features)
    views = (np.sort(perm[: n_features // 2]), np.sort(perm[n_features // 2:]))
    pools = [([], []), ([], [])]  # per view: (unlabeled rows, pseudo labels)
    remaining = np.arange(len(U))
    sizes = []

    def fit(v):
        rows, labels = pools[v]
        Xv = np.vstack([X[:, views[v]], U[rows][:, views[v]]])
        return naive_bayes_fit(Xv, np.concatenate([y, labels]).astype(np.int64), smoothing)

    for _ in range(rounds):
        if len(remaining) == 0:
            break
        for v in (0, 1):
            if len(remaining) == 0:
                break
            p = fit(v).score(U[remaining][:, views[v]])
            confidence = np.maximum(p, 1 - p)
            top = np.argsort(-confidence, kind="stable")[:growth]
            rows, labels = pools[1 - v]
            rows.extend(remaining[top].tolist())
            labels.extend((p[top] >= 0.5).astype(int).tolist())
            remaining = np.delete(remaining, top)
        sizes.append((len(y) + len(pools[0][0]), len(y) + len(pools[1][0])))
    return CoTrainModel(
        views=views,
        models=(fit(0), fit(1)),
        threshold=threshold,
        descriptor={"learner": "cotrain", "view_seed": view_seed, "rounds": rounds,
                    "growth": growth},
        pool_sizes=tuple(sizes),
    )
