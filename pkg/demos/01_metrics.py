"""
Fairness and performance metrics
================================

Scores from some classifier, true labels and a protected-group flag per row.
"""
import numpy as np

from fairlnc.metrics import auc, dp_dif, eod_dif, eop_dif, group_confusion, pe_dif

rng = np.random.default_rng(0)
n = 1000
group = rng.integers(0, 2, n)
labels = rng.integers(0, 2, n)

# a scorer that leans towards the protected group
scores = np.clip(0.5 * labels + 0.2 * group + rng.normal(0.15, 0.2, n), 0, 1)
pred = (scores >= 0.5).astype(int)

print("auc     ", round(auc(scores, labels).value, 3))
print("dp_dif  ", round(dp_dif(pred, group).value, 3))
print("eod_dif ", round(eod_dif(pred, labels, group).value, 3))
print("pe_dif  ", round(pe_dif(pred, labels, group).value, 3))
print("eop_dif ", round(eop_dif(pred, labels, group).value, 3))

# the counts the group differences are built from
cm = group_confusion(pred, labels, group)
for g in (0, 1):
    print(f"group {g}: TPR {cm.tpr(g):.3f}  FPR {cm.fpr(g):.3f}")

# an empty conditioning cell is flagged rather than reported as 0
only_positives = np.ones(n, dtype=int)
print(pe_dif(pred, only_positives, group))
