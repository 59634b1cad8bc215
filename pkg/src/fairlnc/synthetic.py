"""Synthetic two-Gaussian datasets with a sensitive group.

Labels and group membership are independent fair coins. Class means sit at
``+/- separation / 2`` on the first axis; members of the protected group are
shifted by ``group_shift`` on the second axis, so the features carry a
proxy for the group.
"""
import numpy as np

from .dataset import Dataset


def two_gaussians(n=2000, separation=4.0, group_shift=1.0, n_features=2, seed=0,
                  name="two_gaussians"):
    if n_features < 2:
        raise ValueError("two_gaussians needs at least two features")
    rng = np.random.default_rng(seed)
    y = rng.integers(0, 2, n)
    g = rng.integers(0, 2, n)
    X = rng.normal(size=(n, n_features))
    X[:, 0] += (y - 0.5) * separation
    X[:, 1] += g * group_shift
    return Dataset(X, y, g, name=name)
