"""Command line front end: ``geoprob run ...``."""

from __future__ import annotations

import argparse
import logging
import sys

from .emit import emit
from .errors import ConfigError, NonConvergence
from .runner import DEFAULT_SEED, DEFAULT_TRIALS, EXPERIMENTS, FORMATS, ExperimentConfig, run

EXIT_OK = 0
EXIT_IO = 1
EXIT_CONFIG = 2
EXIT_NONCONVERGENCE = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="geoprob", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="run experiments and emit a report")
    which = p.add_mutually_exclusive_group()
    which.add_argument("--method", help="comma-separated experiment names")
    which.add_argument("--all", action="store_true", help="run every registered experiment")
    which.add_argument("--list-methods", action="store_true", help="list experiment names and exit")
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", dest="fmt", choices=FORMATS, default="table")
    p.add_argument("--out", help="write the report here instead of stdout")
    return parser


def _list_methods() -> str:
    width = max(map(len, EXPERIMENTS))
    return "".join(f"{name:<{width}}  {e.kind:<9} {e.description}\n" for name, e in EXPERIMENTS.items())


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(asctime)s [%(levelname)s] %(message)s",
        datefmt="%H:%M:%S",
    )
    if args.list_methods:
        sys.stdout.write(_list_methods())
        return EXIT_OK
    if args.all:
        names = list(EXPERIMENTS)
    elif args.method:
        names = [m.strip() for m in args.method.split(",") if m.strip()]
    else:
        print("geoprob: error: one of --method, --all or --list-methods is required", file=sys.stderr)
        return EXIT_CONFIG

    config = ExperimentConfig(
        experiments=names,
        trials=args.trials,
        seed=args.seed,
        workers=args.workers,
        output_format=args.fmt,
        output_path=args.out,
    )
    try:
        report = run(config)
    except ConfigError as exc:
        print(f"geoprob: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except NonConvergence as exc:
        print(f"geoprob: sampler did not converge: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE

    data = emit(report, config.output_format)
    try:
        if config.output_path:
            with open(config.output_path, "wb") as fh:
                fh.write(data)
        else:
            sys.stdout.buffer.write(data)
            sys.stdout.flush()
    except OSError as exc:
        print(f"geoprob: cannot write report: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK
