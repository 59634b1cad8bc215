"""Group-dependent label noise that simulates discrimination.

Each injection call draws one uniform number per row, in row order, from a
generator seeded with ``spec.seed``; row ``i`` is hit when its draw is below
the rate. Draws are consumed for every row, so the realized corruption of a
row does not depend on the labels of other rows.
"""
from dataclasses import dataclass

import numpy as np

from .dataset import as_binary
from .errors import ValidationError

KINDS = ("positive_bias", "balanced_bias")


@dataclass(frozen=True)
class NoiseSpec:
    kind: str
    rate: float
    seed: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValidationError(f"unknown noise kind {self.kind!r}; expected one of {KINDS}")
        if not 0.0 <= self.rate <= 1.0:
            raise ValidationError(f"noise rate must lie in [0, 1], got {self.rate}")

    def to_dict(self):
        return {"kind": self.kind, "rate": self.rate, "seed": self.seed}


def _hits(labels, group, spec, kind):
    if spec.kind != kind:
        raise ValidationError(f"expected a {kind} spec, got {spec.kind}")
    y = as_binary(labels, "labels")
    g = as_binary(group, "group")
    if len(y) != len(g):
        raise ValidationError(f"length mismatch: labels {len(y)}, group {len(g)}")
    draws = np.random.default_rng(spec.seed).random(len(y))
    return y, g, draws < spec.rate


def inject_positive_bias(labels, group, spec):
    """Set each protected instance's label to 1 with probability ``spec.rate``."""
    y, g, hit = _hits(labels, group, spec, "positive_bias")
    return np.where(hit & (g == 1), 1, y)


def inject_balanced_bias(labels, group, spec):
    """With probability ``spec.rate`` set a label to 1 if protected, else to 0."""
    y, g, hit = _hits(labels, group, spec, "balanced_bias")
    return np.where(hit, g, y)


def inject(labels, group, spec):
    if spec.kind == "positive_bias":
        return inject_positive_bias(labels, group, spec)
    return inject_balanced_bias(labels, group, spec)
