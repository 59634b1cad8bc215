"""The six label-noise correction methods behind one interface."""
from .base import CorrectionResult, Corrector
from .bayesian_entropy import BE
from .clustering import CC, cluster_label_weights
from .hybrid import HLNC
from .ordering import OBNC
from .polishing import PL
from .self_training import STC, classification_filter

METHODS = {cls.id: cls for cls in (BE, PL, STC, CC, OBNC, HLNC)}


def make_method(spec):
    """Build a corrector from ``{"id": ..., **hyperparameters}``."""
    spec = dict(spec)
    try:
        cls = METHODS[spec.pop("id")]
    except KeyError as exc:
        raise ValueError(f"unknown correction method {exc}; expected one of {list(METHODS)}")
    if "k_values" in spec:
        spec["k_values"] = tuple(spec["k_values"])
    return cls(**spec)


__all__ = [
    "BE", "CC", "HLNC", "METHODS", "OBNC", "PL", "STC", "CorrectionResult", "Corrector",
    "classification_filter", "cluster_label_weights", "make_method",
]
