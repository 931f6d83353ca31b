"""Command line front end.

Subcommands:
  check   run the identity suite against the configured metric
  eval    evaluate an expression against the configured metric
  invert  cross-check the inversion formula against the matrix inverse
  bench   time the core operations

All output is deterministic for a fixed config and seed.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .benchmark import format_benchmarks, run_benchmarks
from .config import ConfigError, parse_config
from .expressions import KindError, ParseError, evaluate, format_value, parse_expression
from .identities import format_report, run_identity_suite, suite_passed
from .metric import extend_inverse
from .products import invert_extension_via_formula
from .sampling import random_multiform


def _load_config(path: str):
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise SystemExit(f"error: cannot read config {path}: {exc.strerror}") from None
    try:
        return parse_config(text)
    except ConfigError as exc:
        raise SystemExit(f"error: {path}: {exc}") from None


def _cmd_check(args) -> int:
    cfg = _load_config(args.config)
    trials = args.trials if args.trials is not None else cfg.trials
    seed = args.seed if args.seed is not None else cfg.seed
    reports = run_identity_suite(
        cfg.dim, [cfg.extensor()], trials, seed, tolerance=cfg.tolerance
    )
    print(format_report(reports))
    failed = sum(1 for r in reports if not r.passed)
    print(f"check dim={cfg.dim} trials={trials} seed={seed} failed={failed}")
    return 0 if suite_passed(reports) else 1


def _cmd_eval(args) -> int:
    cfg = _load_config(args.config)
    try:
        node = parse_expression(args.expression)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        value = evaluate(node, cfg.extensor())
    except (KindError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(format_value(value))
    return 0


def _cmd_invert(args) -> int:
    cfg = _load_config(args.config)
    gamma = cfg.extensor()
    rng = np.random.default_rng(cfg.seed)
    worst = 0.0
    for _ in range(cfg.trials):
        phi = random_multiform(rng, cfg.dim)
        via_formula = invert_extension_via_formula(gamma, phi, variant=1)
        via_matrix = extend_inverse(gamma, phi)
        worst = max(worst, float(np.max(np.abs(via_formula.coeffs - via_matrix.coeffs))))
    status = "PASS" if worst < cfg.tolerance else "FAIL"
    print(f"invert dim={cfg.dim} trials={cfg.trials} max_abs_diff={worst:.6e} {status}")
    return 0 if status == "PASS" else 1


def _cmd_bench(args) -> int:
    cfg = _load_config(args.config)
    results = run_benchmarks(cfg.extensor(), seed=cfg.seed, runs=args.runs)
    print(format_benchmarks(results))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="extensor",
        description="Exterior algebra with duality contractions and metric extensors.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="run the identity suite")
    check.add_argument("--config", required=True, help="session config file")
    check.add_argument("--trials", type=int, default=None, help="override trials per identity")
    check.add_argument("--seed", type=int, default=None, help="override the base seed")
    check.set_defaults(run=_cmd_check)

    ev = sub.add_parser("eval", help="evaluate an expression")
    ev.add_argument("--config", required=True, help="session config file")
    ev.add_argument("expression", help="expression to evaluate")
    ev.set_defaults(run=_cmd_eval)

    inv = sub.add_parser("invert", help="check the inversion formula against the matrix inverse")
    inv.add_argument("--config", required=True, help="session config file")
    inv.set_defaults(run=_cmd_invert)

    bench = sub.add_parser("bench", help="time the core operations")
    bench.add_argument("--config", required=True, help="session config file")
    bench.add_argument("--runs", type=int, default=20, help="runs per operation (min 20)")
    bench.set_defaults(run=_cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.run(args)


if __name__ == "__main__":
    sys.exit(main())
