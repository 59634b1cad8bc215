"""Command-line entry point: ``fairlnc {fetch,summarize,run,report}``.

Exit codes: 0 success, 1 validation/config error, 2 runtime failure.
Progress goes to stderr; stdout carries short human-readable summaries.
"""
import argparse
import dataclasses
import sys
from pathlib import Path

from ._arff import read_arff
from .dataset import DatasetConfig, load, summarize
from .errors import ConfigError, FairLNCError, FetchError, ParseError, ValidationError
from .experiment import ExperimentConfig, read_results, run_grid
from .metrics import METRICS
from .openml import cached_path, default_cache_dir, fetch_openml
from .report import REPORT_KINDS, emit_report

OK, INVALID, FAILED = 0, 1, 2


def _err(msg):
    print(f"error: {msg}", file=sys.stderr)


def cmd_fetch(args):
    try:
        ids = [int(tok) for tok in args.ids.split(",") if tok.strip()]
        if not ids or any(i <= 0 for i in ids):
            raise ValueError
    except ValueError:
        _err(f"--ids must be a comma separated list of positive integers, got {args.ids!r}")
        return INVALID
    cache = Path(args.cache) if args.cache else default_cache_dir()
    failed = []
    for dataset_id in ids:
        warm = cached_path(dataset_id, cache).exists()
        try:
            path = fetch_openml(dataset_id, cache)
        except FetchError as exc:
            failed.append(dataset_id)
            print(f"{dataset_id}\tfailed\t{exc}")
            continue
        try:
            rows = f"n={len(read_arff(path.read_text())[1])}"
        except ParseError:
            rows = "n=?"
        print(f"{dataset_id}\t{'cached' if warm else 'fetched'}\t{rows}\t{path}")
    if failed:
        _err(f"failed ids: {','.join(map(str, failed))}")
        return FAILED
    return OK


def cmd_summarize(args):
    try:
        config = DatasetConfig.from_file(args.config)
        summary = summarize(load(config, args.cache))
    except FetchError as exc:
        _err(str(exc))
        return FAILED
    except (ConfigError, ValidationError, ParseError) as exc:
        _err(str(exc))
        return INVALID
    row = summary.as_row()
    print("\t".join(["dataset", *row]))
    print("\t".join([config.name, *(str(v) for v in row.values())]))
    return OK


def cmd_run(args):
    try:
        config = ExperimentConfig.from_file(args.config)
        overrides = {}
        if args.seed is not None:
            overrides["master_seed"] = args.seed
        if args.out is not None:
            overrides["output"] = args.out
        config = dataclasses.replace(config, **overrides)
    except (ConfigError, ValidationError) as exc:
        _err(str(exc))
        return INVALID

    failures = []

    def progress(done, total, records):
        failures.extend(r for r in records if r.get("metric") == "error")
        print(f"\r[{done}/{total}] cells", end="", file=sys.stderr, flush=True)

    try:
        path = run_grid(config, jobs=args.jobs, progress=progress)
    except (ConfigError, ValidationError, ParseError) as exc:
        _err(str(exc))
        return INVALID
    except FairLNCError as exc:
        _err(str(exc))
        return FAILED
    print(file=sys.stderr)
    _, records = read_results(path)
    cells = {(r["dataset"], r["noise"], r["rate"], r["method"], r["seed"]) for r in records}
    for rec in failures:
        _err(f"cell {rec['dataset']}/{rec['noise']}/{rec['rate']}/{rec['method']}/"
             f"{rec['seed']} failed: {rec['error']}")
    print(f"{len(cells) - len(failures)}/{len(cells)} cells succeeded; results: {path}")
    return OK if len(failures) < len(cells) else FAILED


def cmd_report(args):
    if not Path(args.results).is_file():
        _err(f"results file not found: {args.results}")
        return INVALID
    try:
        path = emit_report(args.results, args.kind, args.metric, args.scenario, args.out)
    except (ValidationError, ConfigError) as exc:
        _err(str(exc))
        return INVALID
    print(path)
    return OK


def build_parser():
    parser = argparse.ArgumentParser(prog="fairlnc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fetch", help="download OpenML datasets into the cache")
    p.add_argument("--ids", required=True, help="comma separated OpenML ids")
    p.add_argument("--cache", help="cache directory")
    p.set_defaults(func=cmd_fetch)

    p = sub.add_parser("summarize", help="print a dataset characterization row")
    p.add_argument("--config", required=True, help="dataset config file")
    p.add_argument("--cache", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_summarize)

    p = sub.add_parser("run", help="run an experiment grid")
    p.add_argument("--config", required=True, help="experiment config file")
    p.add_argument("--seed", type=int, help="override the master seed")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--out", help="override the results path")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("report", help="aggregate a results file into a table")
    p.add_argument("--results", required=True)
    p.add_argument("--kind", required=True, choices=REPORT_KINDS)
    p.add_argument("--metric", help=f"one of: {', '.join(METRICS)}")
    p.add_argument("--scenario", type=int, help=argparse.SUPPRESS)
    p.add_argument("--out")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INVALID if exc.code else OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
