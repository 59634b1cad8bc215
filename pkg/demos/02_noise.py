"""
Injecting group-dependent label noise
=====================================

Positive bias hands protected rows a positive label; balanced bias also
pushes unprotected rows to the negative class.
"""
import numpy as np

from fairlnc.metrics import reconstruction_score
from fairlnc.noise import NoiseSpec, inject

rng = np.random.default_rng(1)
labels = rng.integers(0, 2, 10_000)
group = rng.integers(0, 2, 10_000)

for kind in ("positive_bias", "balanced_bias"):
    for rate in (0.1, 0.3, 0.5):
        noisy = inject(labels, group, NoiseSpec(kind, rate, seed=7))
        flipped = noisy != labels
        # flip rate among the rows the noise can actually change
        prot_neg = flipped[(group == 1) & (labels == 0)].mean()
        unprot_pos = flipped[(group == 0) & (labels == 1)].mean()
        r = reconstruction_score(noisy, labels).value
        print(f"{kind:14s} tau={rate}: protected negatives flipped {prot_neg:.3f}, "
              f"unprotected positives flipped {unprot_pos:.3f}, r={r:.4f}")

# positive rates per group drift apart as the rate grows
for rate in (0.0, 0.2, 0.4):
    noisy = inject(labels, group, NoiseSpec("balanced_bias", rate, seed=7))
    print(rate, [round(float(noisy[group == g].mean()), 3) for g in (0, 1)])
