"""Plot-ready tables aggregated over seeds (and datasets) from a results file."""
import csv
import math
from collections import defaultdict
from pathlib import Path

import numpy as np

from .errors import ValidationError
from .experiment import SCENARIOS, read_results
from .metrics import METRICS

REPORT_KINDS = ("tradeoff", "reconstruction", "scenario3")


def mean_std(values):
    """Mean and sample standard deviation; the deviation of one value is 0."""
    if not values:
        return float("nan"), float("nan")
    arr = np.asarray(values, dtype=float)
    std = float(arr.std(ddof=1)) if len(arr) > 1 else 0.0
    return float(arr.mean()), std


def _collect(records, keep, key):
    """Group well-defined values of records passing ``keep`` by ``key(rec)``.

    Records repeated across method cells (the same baseline model) are
    counted once.
    """
    groups, seen = defaultdict(list), set()
    for rec in records:
        if not keep(rec) or not rec.get("well_defined") or rec.get("value") is None:
            continue
        ident = (rec["dataset"], rec["noise"], rec["rate"], rec["seed"], rec["train_source"],
                 rec["test_source"], rec["metric"], key(rec))
        if ident in seen:
            continue
        seen.add(ident)
        groups[key(rec)].append(rec["value"])
    return groups


def tradeoff_table(records, metric="pe_dif", scenarios=(1, 2)):
    rows = []
    for scenario in scenarios:
        test = SCENARIOS[scenario]
        for series in ("corrected", "noisy", "original"):
            if series == "original" and scenario != 2:
                continue

            def key(rec, series=series):
                method = rec["method"] if series == "corrected" else "none"
                return rec["noise"], method, rec["rate"]

            def keep(rec, series=series, test=test):
                return rec.get("train_source") == series and rec.get("test_source") == test

            aucs = _collect(records, lambda r: keep(r) and r["metric"] == "auc", key)
            vals = _collect(records, lambda r: keep(r) and r["metric"] == metric, key)
            for k in sorted(set(aucs) | set(vals)):
                noise, method, rate = k
                a_mean, a_std = mean_std(aucs.get(k, []))
                m_mean, m_std = mean_std(vals.get(k, []))
                rows.append({
                    "noise": noise, "scenario": scenario, "series": series, "method": method,
                    "rate": rate, "n": len(vals.get(k, [])),
                    "auc_mean": a_mean, "auc_std": a_std,
                    f"{metric}_mean": m_mean, f"{metric}_std": m_std,
                })
    return rows


def reconstruction_table(records):
    groups = _collect(
        records,
        lambda r: r.get("metric") == "reconstruction" and r.get("test_source") is None,
        lambda r: (r["noise"], r["method"], r["rate"]),
    )
    rows = []
    for (noise, method, rate), values in sorted(groups.items()):
        m, s = mean_std(values)
        rows.append({"noise": noise, "method": method, "rate": rate, "n": len(values),
                     "reconstruction_mean": m, "reconstruction_std": s})
    return rows


def scenario3_table(records, metric="auc"):
    def key(rec):
        return rec["noise"], rec["method"], rec["rate"]

    by_test = {
        test: _collect(
            records,
            lambda r, test=test: (r.get("train_source") == "corrected"
                                  and r.get("test_source") == test and r["metric"] == metric),
            key,
        )
        for test in ("original", "corrected")
    }
    rows = []
    for k in sorted(set(by_test["original"]) | set(by_test["corrected"])):
        noise, method, rate = k
        o_mean, o_std = mean_std(by_test["original"].get(k, []))
        c_mean, c_std = mean_std(by_test["corrected"].get(k, []))
        rows.append({"noise": noise, "method": method, "rate": rate, "metric": metric,
                     "n": len(by_test["original"].get(k, [])),
                     "original_test_mean": o_mean, "original_test_std": o_std,
                     "corrected_test_mean": c_mean, "corrected_test_std": c_std})
    return rows


def build_report(records, kind, metric=None, scenario=None):
    if kind not in REPORT_KINDS:
        raise ValidationError(f"unknown report kind {kind!r}; valid kinds: {', '.join(REPORT_KINDS)}")
    if metric is not None and metric not in METRICS:
        raise ValidationError(f"unknown metric {metric!r}; valid metrics: {', '.join(METRICS)}")
    if scenario is not None and scenario not in SCENARIOS:
        raise ValidationError(f"unknown scenario {scenario!r}; valid scenarios: 1, 2, 3")
    if kind == "tradeoff":
        if scenario == 3:
            raise ValidationError("trade-off tables cover scenarios 1 and 2")
        return tradeoff_table(records, metric or "pe_dif",
                              (scenario,) if scenario else (1, 2))
    if kind == "reconstruction":
        return reconstruction_table(records)
    return scenario3_table(records, metric or "auc")


def write_table(rows, path):
    path = Path(path)
    if not rows:
        path.write_text("")
        return path
    with path.open("w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=list(rows[0]))
        w.writeheader()
        for row in rows:
            w.writerow({k: ("" if isinstance(v, float) and math.isnan(v) else v)
                        for k, v in row.items()})
    return path


def emit_report(results_path, kind, metric=None, scenario=None, out=None):
    """Aggregate ``results_path`` into a delimited table and return its path."""
    build_report([], kind, metric, scenario)  # validate before reading
    _, records = read_results(results_path)
    rows = build_report(records, kind, metric, scenario)
    if out is None:
        suffix = f".{kind}" + (f".{metric}" if metric and kind != "reconstruction" else "")
        out = Path(results_path).with_suffix(suffix + ".csv")
    return write_table(rows, out)
