"""
The from-scratch learners
=========================

Logistic regression for the evaluated models, plus the learners the
correction methods are built on.
"""
import numpy as np

from fairlnc.learners import (
    bagged_trees_fit, cotrain_fit, kmeans, logreg_fit, naive_bayes_fit, seeded_kmeans,
)

rng = np.random.default_rng(2)
y = np.arange(400) % 2
X = rng.normal(size=(400, 4))
X[:, 0] += 3 * (y - 0.5)

# logistic regression: gradient descent with L2 and rate halving
lr = logreg_fit(X, y)
print("logreg accuracy", np.mean(lr.predict(X) == y), "final loss", round(lr.loss_history[-1], 4))

nb = naive_bayes_fit(X, y)
print("naive Bayes accuracy", np.mean(nb.predict(X) == y))

# vote counts behind the OBNC margins
trees = bagged_trees_fit(X, y, n_trees=11, max_depth=4, seed=0)
v1, v0 = trees.votes(X[:5])
print("votes for 1 / for 0:", list(zip(v1.tolist(), v0.tolist())))

# k-means and its seeded variant on two long strips
strip = np.arange(200) % 2
S = np.column_stack([np.repeat(np.linspace(-10, 10, 100), 2), strip + rng.normal(0, 0.05, 200)])
plain = kmeans(S, 2, seed=0)
seeds = np.where(np.abs(S[:, 0]) >= 8, strip, -1)
guided = seeded_kmeans(S, 2, seeds)
agree = np.mean(plain.assignments == strip)
print("plain k-means agreement", max(agree, 1 - agree))
print("seeded k-means agreement", np.mean(guided.assignments == strip))

# co-training: labelled rows plus a pool of unlabelled ones
ct = cotrain_fit(X[:100], y[:100], X[100:], rounds=5, growth=2)
print("co-training views", [v.tolist() for v in ct.views], "pool sizes", ct.pool_sizes[-1])
