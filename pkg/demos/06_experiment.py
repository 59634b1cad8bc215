"""
Running an experiment grid and building report tables
=====================================================

One cell trains M_o, M_n and M_c and evaluates them in three test
scenarios. A grid repeats cells over noise kinds, rates, methods and seeds.
"""
import tempfile
from pathlib import Path

from fairlnc.correction import make_method
from fairlnc.dataset import write_csv
from fairlnc.experiment import ExperimentConfig, run_grid, run_single
from fairlnc.noise import NoiseSpec
from fairlnc.report import emit_report
from fairlnc.synthetic import two_gaussians

d = two_gaussians(n=600, seed=0)
records = run_single(d, NoiseSpec("balanced_bias", 0.3, seed=1), make_method({"id": "HLNC"}), 0)
print(len(records), "records")
for r in records:
    if r.metric == "pe_dif" or r.test_source is None:
        print(f"  train={r.train_source:9s} test={str(r.test_source):9s} {r.metric:14s} {r.value:.3f}")

tmp = Path(tempfile.mkdtemp())
config = ExperimentConfig(
    datasets=(write_csv(d, tmp / "gauss.csv"),),
    noise_kinds=("balanced_bias",),
    rates=(0.1, 0.3),
    methods=(make_method({"id": "CC"}), make_method({"id": "HLNC"})),
    seeds=(0, 1),
    output=str(tmp / "results.jsonl"),
)
results = run_grid(config, progress=lambda done, total, _: print(f"cell {done}/{total}"))

for kind in ("tradeoff", "reconstruction", "scenario3"):
    table = emit_report(results, kind)
    print(f"\n{table.name}")
    print(table.read_text())
