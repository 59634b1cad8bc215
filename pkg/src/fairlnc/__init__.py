"""Benchmark harness for label-noise correction as a fairness intervention."""
from .correction import METHODS, CorrectionResult, make_method
from .dataset import Dataset, DatasetConfig, DatasetSummary, load, load_local, split, summarize
from .experiment import ExperimentConfig, run_grid, run_single
from .metrics import auc, dp_dif, eod_dif, eop_dif, pe_dif, reconstruction_score
from .noise import NoiseSpec, inject, inject_balanced_bias, inject_positive_bias
from .report import emit_report

__version__ = "0.1.0"

__all__ = [
    "METHODS", "CorrectionResult", "Dataset", "DatasetConfig", "DatasetSummary",
    "ExperimentConfig", "NoiseSpec", "auc", "dp_dif", "emit_report", "eod_dif", "eop_dif",
    "inject", "inject_balanced_bias", "inject_positive_bias", "load", "load_local",
    "make_method", "pe_dif", "reconstruction_score", "run_grid", "run_single", "split",
    "summarize",
]
