"""Run the noise -> correction -> training -> evaluation pipeline over a grid.

Per cell (dataset, noise kind, rate, method, seed) the original data is
split, noise is injected independently into both halves, the noisy halves
are corrected, and logistic regression models are trained on the original
(M_o), noisy (M_n) and corrected (M_c) training labels. They are evaluated
on the noisy test set (scenario 1: M_n, M_c), the original test set
(scenario 2: M_o, M_n, M_c) and the corrected test set (scenario 3: M_c).
"""
from __future__ import annotations

import dataclasses
import hashlib
import json
import logging
import math
import os
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from itertools import product
from pathlib import Path

import numpy as np
import yaml

from . import registry
from .correction import Corrector, make_method
from .correction.base import fit_or_constant
from .dataset import DatasetConfig, load, split
from .errors import ConfigError
from .learners import logreg_fit
from .metrics import evaluate, reconstruction_score
from .noise import KINDS, NoiseSpec, inject

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
SCENARIOS = {1: "noisy", 2: "original", 3: "corrected"}
# (train source, test source) pairs, grouped by scenario
EVALUATIONS = (
    ("noisy", "noisy"), ("corrected", "noisy"),
    ("original", "original"), ("noisy", "original"), ("corrected", "original"),
    ("corrected", "corrected"),
)
RECORD_FIELDS = ("dataset", "method", "noise", "rate", "seed", "train_source",
                 "test_source", "metric", "value", "well_defined")


@dataclass(frozen=True)
class EvaluationRecord:
    dataset: str
    method: str
    noise: str
    rate: float
    seed: int
    train_source: str | None
    test_source: str | None
    metric: str
    value: float | None
    well_defined: bool
    error: str | None = None
    diagnostics: dict | None = None

    def to_dict(self):
        out = {k: getattr(self, k) for k in RECORD_FIELDS}
        if out["value"] is not None and not math.isfinite(out["value"]):
            out["value"] = None
        if self.error is not None:
            out["error"] = self.error
        if self.diagnostics:
            out["diagnostics"] = self.diagnostics
        return out


@dataclass(frozen=True)
class LearnerParams:
    l2: float = 1.0
    epochs: int = 200
    lr: float = 0.1
    threshold: float = 0.5

    def fit(self, X, y, seed=0, allow_constant=False):
        fit = fit_or_constant if allow_constant else logreg_fit
        return fit(X, y, l2=self.l2, epochs=self.epochs, lr=self.lr, seed=seed,
                   threshold=self.threshold)


def derive_seed(*parts):
    """Stable 63-bit seed from arbitrary JSON-serializable coordinates."""
    digest = hashlib.sha256(json.dumps(parts, sort_keys=True).encode()).digest()
    return int.from_bytes(digest[:8], "big") >> 1


def _scalar_diagnostics(diag):
    return {k: v for k, v in diag.items() if isinstance(v, (int, float)) and not isinstance(v, bool)}


def run_single(dataset, noise, method, split_seed, *, test_fraction=0.3, learner=None,
               record_seed=None, test_method=None):
    """Execute one grid cell and return its 37 records (or one failure record).

    ``noise.seed`` seeds the corruption; train and test halves use distinct
    seeds derived from it. ``test_method`` corrects the noisy test set for
    scenario 3 (defaults to ``method``).
    """
    learner = learner or LearnerParams()
    record_seed = split_seed if record_seed is None else record_seed
    base = dict(dataset=dataset.name, method=method.id, noise=noise.kind, rate=noise.rate,
                seed=record_seed)
    try:
        train_o, test_o = split(dataset, test_fraction, split_seed)
        views = {"original": (train_o.labels, test_o.labels)}
        noisy = []
        for part, d in (("train", train_o), ("test", test_o)):
            spec = NoiseSpec(noise.kind, noise.rate, derive_seed(noise.seed, part))
            noisy.append(inject(d.labels, d.group, spec))
            log.debug("%s %s flip mask: %s", dataset.name, part,
                      np.flatnonzero(noisy[-1] != d.labels).tolist())
        views["noisy"] = tuple(noisy)
        fixed_train = method.correct(train_o.features, views["noisy"][0])
        fixed_test = (test_method or method).correct(test_o.features, views["noisy"][1])
        views["corrected"] = (fixed_train.corrected, fixed_test.corrected)

        # only training labels reach the learner
        models = {
            "original": learner.fit(train_o.features, views["original"][0], split_seed),
            "noisy": learner.fit(train_o.features, views["noisy"][0], split_seed),
            "corrected": learner.fit(train_o.features, views["corrected"][0], split_seed,
                                     allow_constant=True),
        }
        records = []
        for train_src, test_src in EVALUATIONS:
            scores = models[train_src].score(test_o.features)
            for m in evaluate(scores, views[test_src][1], test_o.group, learner.threshold):
                records.append(EvaluationRecord(**base, train_source=train_src,
                                                test_source=test_src, metric=m.name,
                                                value=m.value, well_defined=m.well_defined))
        r = reconstruction_score(fixed_train.corrected, train_o.labels)
        diagnostics = {
            "iterations_used": fixed_train.iterations_used,
            **_scalar_diagnostics(fixed_train.diagnostics),
            "train_noise_flips": int(np.sum(views["noisy"][0] != train_o.labels)),
            "test_noise_flips": int(np.sum(views["noisy"][1] != test_o.labels)),
            "n_train": train_o.n,
        }
        records.append(EvaluationRecord(**base, train_source="corrected", test_source=None,
                                        metric="reconstruction", value=r.value,
                                        well_defined=r.well_defined, diagnostics=diagnostics))
        return records
    except Exception as exc:  # a failed cell must not abort the grid
        log.warning("cell %s failed: %s", base, exc)
        return [EvaluationRecord(**base, train_source=None, test_source=None, metric="error",
                                 value=None, well_defined=False,
                                 error=f"{type(exc).__name__}: {exc}")]


# -- configuration -------------------------------------------------------------


@dataclass(frozen=True)
class ExperimentConfig:
    datasets: tuple
    noise_kinds: tuple = KINDS
    rates: tuple = (0.1, 0.2, 0.3, 0.4, 0.5)
    methods: tuple = ()
    seeds: tuple = (0,)
    master_seed: int = 0
    test_fraction: float = 0.3
    learner: LearnerParams = field(default_factory=LearnerParams)
    output: str = "results.jsonl"
    test_correction: dict | None = None
    cache_dir: str | None = None

    def __post_init__(self):
        if not self.datasets:
            raise ConfigError("at least one dataset is required")
        if not self.methods:
            raise ConfigError("at least one correction method is required")
        if not self.seeds:
            raise ConfigError("at least one seed is required")
        for kind in self.noise_kinds:
            if kind not in KINDS:
                raise ConfigError(f"unknown noise kind {kind!r}; expected one of {KINDS}")
        for rate in self.rates:
            if not 0 <= rate <= 1:
                raise ConfigError(f"noise rate {rate} outside [0, 1]")
        if not 0 < self.test_fraction < 1:
            raise ConfigError("test_fraction must lie in (0, 1)")
        for m in self.methods:
            if not isinstance(m, Corrector):
                raise ConfigError(f"methods must be correctors, got {m!r}")

    @classmethod
    def from_dict(cls, data, base_dir="."):
        if not isinstance(data, dict):
            raise ConfigError("experiment config must be a mapping")
        data = dict(data)
        unknown = set(data) - {f.name for f in dataclasses.fields(cls)}
        if unknown:
            raise ConfigError(f"unknown experiment config fields: {sorted(unknown)}")
        base_dir = Path(base_dir)
        try:
            data["datasets"] = tuple(_dataset_config(d, base_dir) for d in data.get("datasets", ()))
            data["methods"] = tuple(make_method(m) for m in data.get("methods", ()))
            if data.get("test_correction") is not None:
                make_method(data["test_correction"])
            data["learner"] = LearnerParams(**data.get("learner", {}))
        except (TypeError, ValueError, KeyError) as exc:
            raise ConfigError(f"invalid experiment config: {exc}") from exc
        for key in ("noise_kinds", "rates", "seeds"):
            if key in data:
                data[key] = tuple(data[key])
        if "output" in data and not os.path.isabs(data["output"]):
            data["output"] = str(base_dir / data["output"])
        return cls(**data)

    @classmethod
    def from_file(cls, path):
        path = Path(path)
        try:
            data = yaml.safe_load(path.read_text())
        except (OSError, yaml.YAMLError) as exc:
            raise ConfigError(f"cannot read experiment config {path}: {exc}") from exc
        return cls.from_dict(data, base_dir=path.parent)

    def to_dict(self):
        return {
            "datasets": [d.to_dict() for d in self.datasets],
            "noise_kinds": list(self.noise_kinds),
            "rates": list(self.rates),
            "methods": [m.to_dict() for m in self.methods],
            "seeds": list(self.seeds),
            "master_seed": self.master_seed,
            "test_fraction": self.test_fraction,
            "learner": dataclasses.asdict(self.learner),
            "test_correction": self.test_correction,
        }

    def config_hash(self):
        blob = json.dumps(self.to_dict(), sort_keys=True, default=list).encode()
        return hashlib.sha256(blob).hexdigest()


def _dataset_config(entry, base_dir):
    if isinstance(entry, DatasetConfig):
        return entry
    if isinstance(entry, dict):
        return DatasetConfig.from_dict(entry, base_dir=base_dir)
    if isinstance(entry, str) and entry.endswith((".yaml", ".yml")):
        return DatasetConfig.from_file(base_dir / entry)
    if isinstance(entry, str):
        return registry.dataset_config(entry)
    raise ConfigError(f"cannot interpret dataset entry {entry!r}")


# -- grid --------------------------------------------------------------------------


def _run_cell(args):
    dataset, kind, rate, method, seed, cfg = args
    split_seed = derive_seed(cfg.master_seed, dataset.name, "split", seed)
    noise_seed = derive_seed(cfg.master_seed, dataset.name, kind, rate, seed)
    method = dataclasses.replace(
        method, seed=derive_seed(cfg.master_seed, dataset.name, kind, rate, seed, method.id,
                                 method.seed) % 2**32)
    test_method = make_method(cfg.test_correction) if cfg.test_correction else None
    if test_method is not None:
        test_method = dataclasses.replace(test_method, seed=method.seed)
    records = run_single(dataset, NoiseSpec(kind, rate, noise_seed), method, split_seed,
                         test_fraction=cfg.test_fraction, learner=cfg.learner,
                         record_seed=seed, test_method=test_method)
    return [r.to_dict() for r in records]


def record_key(rec):
    return (rec.get("dataset", ""), rec.get("noise", ""), rec.get("rate", 0.0),
            rec.get("method", ""), rec.get("seed", 0), rec.get("train_source") or "",
            rec.get("test_source") or "", rec.get("metric", ""))


def canonicalize(path):
    """Rewrite a results file with its records in canonical order."""
    path = Path(path)
    header, records = read_results(path)
    records.sort(key=record_key)
    tmp = path.with_suffix(path.suffix + ".tmp")
    with tmp.open("w") as fh:
        fh.write(json.dumps(header, sort_keys=True) + "\n")
        for rec in records:
            fh.write(json.dumps(rec, sort_keys=True) + "\n")
    os.replace(tmp, path)
    return path


def read_results(path):
    """Return ``(header, records)`` from a results file."""
    lines = Path(path).read_text().splitlines()
    if not lines:
        raise ConfigError(f"{path} is empty")
    try:
        header = json.loads(lines[0])
        records = [json.loads(line) for line in lines[1:] if line.strip()]
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path} is not a results file: {exc}") from exc
    if header.get("schema") != SCHEMA_VERSION:
        raise ConfigError(f"{path}: unsupported results schema {header.get('schema')!r}")
    return header, records


def grid_cells(config, datasets):
    return [
        (d, kind, rate, method, seed, config)
        for d, kind, rate, method, seed in product(
            datasets, config.noise_kinds, config.rates, config.methods, config.seeds)
    ]


def run_grid(config, jobs=1, progress=None):
    """Run every cell of ``config`` and return the results path.

    Records are appended to the output as cells finish, so an interrupted run
    keeps what it completed; at the end the file is rewritten in canonical
    order. Per-cell seeds depend only on the cell coordinates and
    ``master_seed``, never on scheduling.
    """
    out = Path(config.output)
    parent = out.parent
    while not parent.exists() and parent != parent.parent:
        parent = parent.parent
    if not os.access(parent, os.W_OK) or out.is_dir():
        raise ConfigError(f"cannot write results to {out}")
    datasets = [load(c, config.cache_dir) for c in config.datasets]
    cells = grid_cells(config, datasets)
    try:
        out.parent.mkdir(parents=True, exist_ok=True)
        fh = out.open("w")
    except OSError as exc:
        raise ConfigError(f"cannot write results to {out}: {exc}") from exc
    with fh:
        # hyperparameters of every method and of the learner live in the header
        header = {"schema": SCHEMA_VERSION, "config_hash": config.config_hash(),
                  "config": config.to_dict()}
        fh.write(json.dumps(header, sort_keys=True) + "\n")
        fh.flush()

        def write(records, done):
            for rec in records:
                fh.write(json.dumps(rec, sort_keys=True) + "\n")
            fh.flush()
            if progress:
                progress(done, len(cells), records)

        if jobs <= 1:
            for i, cell in enumerate(cells, start=1):
                write(_run_cell(cell), i)
        else:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                futures = [pool.submit(_run_cell, cell) for cell in cells]
                for i, fut in enumerate(as_completed(futures), start=1):
                    write(fut.result(), i)
    return canonicalize(out)
