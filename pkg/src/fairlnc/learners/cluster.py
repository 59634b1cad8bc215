"""Lloyd's k-means and its seeded (constrained) variant."""
from dataclasses import dataclass

import numpy as np

from ..errors import ValidationError


@dataclass(frozen=True)
class Clustering:
    assignments: np.ndarray
    centroids: np.ndarray
    k: int
    inertia: float
    n_iter: int
    inertia_history: tuple = ()


def sq_distances(X, centroids):
    # per-centroid loop keeps memory at N x F for wide data
    return np.stack([((X - c) ** 2).sum(axis=1) for c in centroids], axis=1)


def spread_init(X, k, rng):
    """Greedy farthest-point initialization from a random first centre."""
    chosen = [int(rng.integers(len(X)))]
    d = ((X - X[chosen[0]]) ** 2).sum(axis=1)
    for _ in range(k - 1):
        nxt = int(np.argmax(d))
        chosen.append(nxt)
        d = np.minimum(d, ((X - X[nxt]) ** 2).sum(axis=1))
    return X[chosen].copy()


def _update(X, assignments, centroids):
    new = centroids.copy()
    for j in range(len(centroids)):
        members = assignments == j
        if members.any():
            new[j] = X[members].mean(axis=0)
    return new


def kmeans(X, k, seed=0, max_iter=100):
    """Cluster the rows of ``X`` into ``k`` groups.

    Iterates until assignments stop changing or ``max_iter`` is reached. A
    cluster that empties is moved to the point farthest from its centre.
    """
    X = np.asarray(X, dtype=float)
    if k < 2:
        raise ValidationError("k must be at least 2")
    if k > len(X):
        raise ValidationError(f"k={k} exceeds the number of points ({len(X)})")
    centroids = spread_init(X, k, np.random.default_rng(seed))
    rows = np.arange(len(X))
    assignments, history = None, []
    for it in range(1, max_iter + 1):
        D = sq_distances(X, centroids)
        new = np.argmin(D, axis=1)
        for j in np.flatnonzero(np.bincount(new, minlength=k) == 0):
            own = D[rows, new]
            far = int(np.argmax(own))
            if own[far] == 0 or np.sum(new == new[far]) < 2:
                continue
            centroids[j] = X[far]
            D[:, j] = ((X - X[far]) ** 2).sum(axis=1)
            new[far] = j
        history.append(float(D[rows, new].sum()))
        if assignments is not None and np.array_equal(new, assignments):
            break
        assignments = new
        centroids = _update(X, assignments, centroids)
    return Clustering(assignments, centroids, k, history[-1], it, tuple(history))


def seeded_kmeans(X, k, seed_labels, seed=0, max_iter=100):
    """k-means whose centres start at the seed-group means.

    ``seed_labels[i]`` is the cluster of a seeded instance or ``-1``. Seeded
    instances keep their cluster throughout; only the others are reassigned.
    Deterministic; ``seed`` is accepted for interface uniformity.
    """
    X = np.asarray(X, dtype=float)
    seed_labels = np.asarray(seed_labels)
    if len(seed_labels) != len(X):
        raise ValidationError("seed_labels must have one entry per row")
    if k < 2:
        raise ValidationError("k must be at least 2")
    if ((seed_labels < -1) | (seed_labels >= k)).any():
        raise ValidationError("seed labels must be -1 or a cluster index below k")
    empty = [j for j in range(k) if not (seed_labels == j).any()]
    if empty:
        raise ValidationError(f"seed groups {empty} are empty")
    fixed = seed_labels >= 0
    centroids = np.stack([X[seed_labels == j].mean(axis=0) for j in range(k)])
    rows = np.arange(len(X))
    assignments, history = None, []
    for it in range(1, max_iter + 1):
        D = sq_distances(X, centroids)
        new = np.where(fixed, seed_labels, np.argmin(D, axis=1))
        history.append(float(D[rows, new].sum()))
        if assignments is not None and np.array_equal(new, assignments):
            break
        assignments = new
        centroids = _update(X, assignments, centroids)
        if fixed.all():
            break
    return Clustering(assignments, centroids, k, history[-1], it, tuple(history))
