"""Binary-classification datasets with a designated sensitive attribute.

Labels are always re-encoded so that the positive class is ``1`` and group
flags so that the protected group is ``1``. The sensitive column is consumed
into the group vector and never appears among the features.
"""
from __future__ import annotations

import csv
import math
import os
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Mapping

import numpy as np
import yaml

from ._arff import read_arff
from .errors import ConfigError, ParseError, SplitError, ValidationError

ENCODINGS = ("onehot", "ordinal")


def as_binary(values, name="labels"):
    """Return ``values`` as a read-only int64 vector, checking it is 0/1."""
    arr = np.asarray(values)
    if arr.ndim != 1:
        raise ValidationError(f"{name} must be one-dimensional")
    if arr.size and not np.isin(arr, (0, 1)).all():
        raise ValidationError(f"{name} must contain only 0 and 1")
    out = arr.astype(np.int64)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class Dataset:
    features: np.ndarray
    labels: np.ndarray
    group: np.ndarray
    name: str = "dataset"
    provenance: str = "original"
    feature_names: tuple = ()
    meta: Mapping = field(default_factory=dict, compare=False)

    def __post_init__(self):
        X = np.asarray(self.features, dtype=np.float64)
        if X.ndim == 1:
            X = X[:, None]
        if X.ndim != 2:
            raise ValidationError("features must be a 2-D matrix")
        y = as_binary(self.labels, "labels")
        g = as_binary(self.group, "group")
        if not (len(X) == len(y) == len(g)):
            raise ValidationError(
                f"length mismatch: features {len(X)}, labels {len(y)}, group {len(g)}"
            )
        if len(y) < 1:
            raise ValidationError("a dataset needs at least one instance")
        if not np.isfinite(X).all():
            raise ValidationError("features contain NaN or infinite values")
        X = X.copy() if X is self.features else X
        X.setflags(write=False)
        names = tuple(self.feature_names) or tuple(f"x{i}" for i in range(X.shape[1]))
        if len(names) != X.shape[1]:
            raise ValidationError("feature_names length does not match feature count")
        object.__setattr__(self, "features", X)
        object.__setattr__(self, "labels", y)
        object.__setattr__(self, "group", g)
        object.__setattr__(self, "feature_names", names)

    @property
    def n(self):
        return len(self.labels)

    @property
    def n_features(self):
        return self.features.shape[1]

    def with_labels(self, labels, provenance):
        return replace(self, labels=labels, provenance=provenance)

    def subset(self, index):
        index = np.asarray(index)
        return replace(
            self,
            features=self.features[index],
            labels=self.labels[index],
            group=self.group[index],
        )


@dataclass(frozen=True)
class DatasetConfig:
    """How to turn a raw table into a :class:`Dataset`.

    ``encoding`` maps categorical column names to ``"onehot"`` or
    ``"ordinal"``. In delimited files every column not listed there is parsed
    as numeric; in ARFF files nominal attributes default to ``"onehot"``.
    One-hot encoding of a two-level column yields a single 0/1 column.
    """

    name: str
    sensitive: str
    protected: str
    positive: str
    target: str | None = None
    path: str | None = None
    openml_id: int | None = None
    drop: tuple = ()
    encoding: Mapping = field(default_factory=dict)
    delimiter: str = ","
    na_values: tuple = ("",)

    def __post_init__(self):
        if (self.path is None) == (self.openml_id is None):
            raise ConfigError(f"{self.name}: exactly one of 'path' or 'openml_id' is required")
        if self.openml_id is not None and (
            not isinstance(self.openml_id, int) or self.openml_id <= 0
        ):
            raise ConfigError(f"{self.name}: openml_id must be a positive integer")
        for col, enc in dict(self.encoding).items():
            if enc not in ENCODINGS:
                raise ConfigError(f"{self.name}: unknown encoding {enc!r} for column {col!r}")
        object.__setattr__(self, "protected", str(self.protected))
        object.__setattr__(self, "positive", str(self.positive))
        object.__setattr__(self, "drop", tuple(self.drop))
        object.__setattr__(self, "na_values", tuple(str(v) for v in self.na_values))

    @classmethod
    def from_dict(cls, data, base_dir=None):
        if not isinstance(data, Mapping):
            raise ConfigError("dataset config must be a mapping")
        data = dict(data)
        data.pop("table1", None)
        data.pop("verified", None)
        data.pop("notes", None)
        unknown = set(data) - set(cls.__dataclass_fields__)
        if unknown:
            raise ConfigError(f"unknown dataset config fields: {sorted(unknown)}")
        missing = {"name", "sensitive", "protected", "positive"} - set(data)
        if missing:
            raise ConfigError(f"dataset config missing fields: {sorted(missing)}")
        if data.get("path") and base_dir is not None and not os.path.isabs(data["path"]):
            data["path"] = str(Path(base_dir) / data["path"])
        return cls(**data)

    @classmethod
    def from_file(cls, path):
        path = Path(path)
        try:
            data = yaml.safe_load(path.read_text())
        except (OSError, yaml.YAMLError) as exc:
            raise ConfigError(f"cannot read dataset config {path}: {exc}") from exc
        return cls.from_dict(data, base_dir=path.parent)

    def to_dict(self):
        out = {
            "name": self.name,
            "sensitive": self.sensitive,
            "protected": self.protected,
            "positive": self.positive,
        }
        for key in ("target", "path", "openml_id"):
            if getattr(self, key) is not None:
                out[key] = getattr(self, key)
        if self.drop:
            out["drop"] = list(self.drop)
        if self.encoding:
            out["encoding"] = dict(self.encoding)
        if self.delimiter != ",":
            out["delimiter"] = self.delimiter
        if self.na_values != ("",):
            out["na_values"] = list(self.na_values)
        return out


@dataclass(frozen=True)
class DatasetSummary:
    n_instances: int
    n_features: int
    frac_positive: float
    frac_protected: float
    frac_positive_protected: float
    frac_positive_unprotected: float

    def as_row(self):
        """Percentages rounded for display, in the column order of the source table."""
        pct = lambda v: round(100 * v) if not math.isnan(v) else float("nan")  # noqa: E731
        return {
            "instances": self.n_instances,
            "features": self.n_features,
            "positive_%": pct(self.frac_positive),
            "protected_%": pct(self.frac_protected),
            "positive_in_protected_%": pct(self.frac_positive_protected),
            "positive_in_unprotected_%": pct(self.frac_positive_unprotected),
        }


# -- loading ---------------------------------------------------------------


def _same_value(raw, wanted):
    if raw == wanted:
        return True
    try:
        return float(raw) == float(wanted)
    except ValueError:
        return False


def _read_table(path, config):
    """Return (columns, declared kinds/levels, rows of raw strings or None)."""
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"data file not found: {path}")
    text = path.read_text()
    if path.suffix.lower() == ".arff":
        attributes, rows = read_arff(text)
        columns = [a.name for a in attributes]
        kinds = {a.name: (a.kind, a.levels) for a in attributes}
        return columns, kinds, rows
    reader = csv.reader(text.splitlines(), delimiter=config.delimiter)
    try:
        header = [h.strip() for h in next(reader)]
    except StopIteration:
        raise ParseError("empty file") from None
    rows = []
    for i, cells in enumerate(reader, start=1):
        if not cells:
            continue
        if len(cells) != len(header):
            raise ParseError(f"expected {len(header)} values, got {len(cells)}", row=i)
        rows.append([None if c.strip() in config.na_values else c.strip() for c in cells])
    kinds = {c: (None, ()) for c in header}
    return header, kinds, rows


def _levels(column, kinds, values):
    declared = kinds[column][1]
    if declared:
        return list(declared)
    return sorted(set(values))


def load_local(path, config):
    """Load a delimited-text or ARFF file according to ``config``.

    Rows with a missing value in any used column are dropped; the count is
    stored in ``meta["dropped_rows"]``.
    """
    columns, kinds, rows = _read_table(path, config)
    target = config.target or columns[-1]
    for col in [target, config.sensitive, *config.drop, *config.encoding]:
        if col not in columns:
            raise ConfigError(f"{config.name}: column {col!r} not found in {path}")
    if config.sensitive == target:
        raise ConfigError(f"{config.name}: sensitive column cannot be the target")
    feature_cols = [c for c in columns if c not in (target, config.sensitive, *config.drop)]
    used = [columns.index(c) for c in (target, config.sensitive, *feature_cols)]
    kept = [(i, r) for i, r in enumerate(rows, start=1) if all(r[j] is not None for j in used)]
    dropped = len(rows) - len(kept)
    if not kept:
        raise ValidationError(f"{config.name}: no complete rows after dropping missing values")

    def column(name):
        j = columns.index(name)
        return [r[j] for _, r in kept]

    y_raw, g_raw = column(target), column(config.sensitive)
    for what, raw, wanted in (
        ("target", y_raw, config.positive),
        ("sensitive", g_raw, config.protected),
    ):
        distinct = sorted(set(raw))
        if len(distinct) > 2:
            raise ValidationError(
                f"{config.name}: {what} column is not binary (values: {distinct[:6]})"
            )
        if not any(_same_value(v, wanted) for v in distinct):
            raise ValidationError(
                f"{config.name}: value {wanted!r} not present in {what} column {distinct}"
            )
    labels = np.array([_same_value(v, config.positive) for v in y_raw], dtype=np.int64)
    group = np.array([_same_value(v, config.protected) for v in g_raw], dtype=np.int64)

    blocks, names = [], []
    for col in feature_cols:
        values = column(col)
        kind = kinds[col][0]
        encoding = config.encoding.get(col)
        if encoding is None and kind == "nominal":
            encoding = "onehot"
        if encoding is None:
            blocks.append(_numeric(values, col, kept)[:, None])
            names.append(col)
            continue
        levels = _levels(col, kinds, values)
        unknown = set(values) - set(levels)
        if unknown:
            bad = next(i for (i, _), v in zip(kept, values) if v in unknown)
            raise ParseError(f"undeclared nominal value {sorted(unknown)[0]!r}", row=bad, column=col)
        codes = np.array([levels.index(v) for v in values])
        if encoding == "ordinal":
            blocks.append(codes[:, None].astype(float))
            names.append(col)
        elif len(levels) <= 2:
            blocks.append((codes == len(levels) - 1).astype(float)[:, None])
            names.append(f"{col}={levels[-1]}")
        else:
            blocks.append((codes[:, None] == np.arange(len(levels))).astype(float))
            names.extend(f"{col}={lv}" for lv in levels)
    X = np.hstack(blocks) if blocks else np.zeros((len(kept), 0))
    return Dataset(
        X,
        labels,
        group,
        name=config.name,
        feature_names=tuple(names),
        meta={"dropped_rows": dropped, "source": str(path)},
    )


def _numeric(values, column, kept):
    out = np.empty(len(values))
    for k, (v, (row, _)) in enumerate(zip(values, kept)):
        try:
            out[k] = float(v)
        except ValueError:
            raise ParseError(f"cannot parse {v!r} as a number", row=row, column=column) from None
        if not math.isfinite(out[k]):
            raise ParseError(f"non-finite value {v!r}", row=row, column=column)
    return out


def load(config, cache_dir=None):
    """Load ``config`` from its local path or, for OpenML sources, via the cache."""
    if config.path is not None:
        return load_local(config.path, config)
    from .openml import default_cache_dir, fetch_openml

    path = fetch_openml(config.openml_id, cache_dir or default_cache_dir())
    return load_local(path, config)


def write_csv(d, path, sensitive="group", target="label"):
    """Write ``d`` as a delimited file and return a config that reloads it."""
    path = Path(path)
    with path.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow([*d.feature_names, sensitive, target])
        for x, g, y in zip(d.features, d.group, d.labels):
            w.writerow([*(repr(float(v)) for v in x), int(g), int(y)])
    return DatasetConfig(
        name=d.name, path=str(path), sensitive=sensitive, protected="1",
        target=target, positive="1",
    )


# -- splitting and summaries ---------------------------------------------------

CELL_NAMES = {(0, 0): "negative/unprotected", (0, 1): "negative/protected",
              (1, 0): "positive/unprotected", (1, 1): "positive/protected"}


def split_indices(labels, group, test_fraction, seed):
    """Stratified (label x group) train/test index split."""
    if not 0 < test_fraction < 1:
        raise ValidationError("test_fraction must lie strictly between 0 and 1")
    labels, group = np.asarray(labels), np.asarray(group)
    rng = np.random.default_rng(seed)
    train, test = [], []
    for (yv, gv), cell in CELL_NAMES.items():
        members = np.flatnonzero((labels == yv) & (group == gv))
        if len(members) < 2:
            raise SplitError(f"cell {cell} has {len(members)} member(s); at least 2 required")
        members = rng.permutation(members)
        n_test = min(max(int(math.floor(test_fraction * len(members) + 0.5)), 1), len(members) - 1)
        test.append(members[:n_test])
        train.append(members[n_test:])
    return np.sort(np.concatenate(train)), np.sort(np.concatenate(test))


def split(d, test_fraction=0.3, seed=0):
    tr, te = split_indices(d.labels, d.group, test_fraction, seed)
    return d.subset(tr), d.subset(te)


def _frac(num, den):
    return num / den if den else float("nan")


def summarize(d):
    y, g = d.labels, d.group
    prot = g == 1
    return DatasetSummary(
        n_instances=d.n,
        # the sensitive attribute counts as one feature column
        n_features=d.n_features + 1,
        frac_positive=_frac(y.sum(), d.n),
        frac_protected=_frac(prot.sum(), d.n),
        frac_positive_protected=_frac(y[prot].sum(), prot.sum()),
        frac_positive_unprotected=_frac(y[~prot].sum(), (~prot).sum()),
    )
