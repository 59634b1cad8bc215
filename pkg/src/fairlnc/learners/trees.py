"""Gini decision trees and a bagged ensemble exposing vote counts."""
from dataclasses import dataclass, field

import numpy as np

from ..errors import ValidationError
from .base import TrainedModel, check_xy


def _gini(n1, n):
    p = n1 / n
    return 2 * p * (1 - p)


def _best_split(X, y):
    n = len(y)
    best = (_gini(y.sum(), n) - 1e-12, None, None)
    for f in range(X.shape[1]):
        order = np.argsort(X[:, f], kind="stable")
        xs, ys = X[order, f], y[order]
        n_left = np.arange(1, n)
        left1 = np.cumsum(ys)[:-1]
        right1 = ys.sum() - left1
        n_right = n - n_left
        imp = (n_left * _gini(left1, n_left) + n_right * _gini(right1, n_right)) / n
        imp[xs[1:] == xs[:-1]] = np.inf
        i = int(np.argmin(imp))
        if imp[i] < best[0]:
            best = (imp[i], f, 0.5 * (xs[i] + xs[i + 1]))
    return best[1], best[2]


def grow_tree(X, y, max_depth):
    """Return a nested-tuple tree: a leaf is ``p1``; a node is ``(f, t, left, right)``."""
    if max_depth == 0 or len(y) < 2 or y.min() == y.max():
        return float(y.mean())
    f, t = _best_split(X, y)
    if f is None:
        return float(y.mean())
    left = X[:, f] <= t
    return (f, t, grow_tree(X[left], y[left], max_depth - 1),
            grow_tree(X[~left], y[~left], max_depth - 1))


def tree_proba(tree, X):
    if not isinstance(tree, tuple):
        return np.full(len(X), tree)
    f, t, left, right = tree
    out = np.empty(len(X))
    mask = X[:, f] <= t
    out[mask] = tree_proba(left, X[mask])
    out[~mask] = tree_proba(right, X[~mask])
    return out


@dataclass(frozen=True)
class BaggedTrees(TrainedModel):
    trees: tuple
    threshold: float = 0.5
    descriptor: dict = field(default_factory=dict)

    @property
    def n_trees(self):
        return len(self.trees)

    def votes(self, X):
        """Per-row ``(votes_for_1, votes_for_0)``; a leaf votes 1 when its positive share exceeds one half."""
        X = np.asarray(X, dtype=float)
        v1 = np.zeros(len(X), dtype=np.int64)
        for tree in self.trees:
            v1 += tree_proba(tree, X) > 0.5
        return v1, self.n_trees - v1

    def score(self, X):
        return self.votes(X)[0] / self.n_trees


def bagged_trees_fit(X, y, n_trees=11, max_depth=4, seed=0, threshold=0.5):
    if n_trees < 1 or n_trees % 2 == 0:
        raise ValidationError("n_trees must be a positive odd number")
    X, y = check_xy(X, y)
    rng = np.random.default_rng(seed)
    trees = []
    for _ in range(n_trees):
        idx = rng.integers(0, len(y), len(y))
        trees.append(grow_tree(X[idx], y[idx], max_depth))
    return BaggedTrees(
        tuple(trees),
        threshold=threshold,
        descriptor={"learner": "bagged_trees", "n_trees": n_trees, "max_depth": max_depth,
                    "seed": seed},
    )
