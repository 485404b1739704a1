"""Command-line driver: run a traversal, print the speed table, sweep orientations.

Exit codes: 0 on success, 1 on validation failure, 2 on I/O failure.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from pathlib import Path

from .config import ParseError, ValidationError, parse_config
from .fixtures import reference_config_path
from .geartrain import ConstraintViolation, UnreachableDemand
from .reports import emit_csv, summary_report, table1_report
from .sim import ConfigError, SimConfig, TraversalSummary, TraversalTrace, run

DEFAULT_MU_LIST = (0.0, 30.0, 60.0)


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad arguments; bad arguments are validation failures here
    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pipeclimber", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--config", required=True,
                       help="config file path, or 'reference' for the shipped fixture")
        p.add_argument("--mu", default=None,
                       help="orientation(s) in degrees, comma separated")
        p.add_argument("--dt", type=float, default=None, help="time step override, seconds")
        p.add_argument("--out", default="out", help="output directory for files")
        p.add_argument("--report", choices=("table1", "timings", "telemetry", "all"),
                       default="all", help="which reports to produce")

    run_p = sub.add_parser("run", help="simulate one traversal")
    common(run_p)
    run_p.set_defaults(func=_cmd_run)

    table_p = sub.add_parser("table1", help="print the track speed table")
    common(table_p)
    table_p.set_defaults(func=_cmd_table1)

    sweep_p = sub.add_parser("sweep", help="simulate several orientations concurrently")
    common(sweep_p)
    sweep_p.set_defaults(func=_cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ParseError, ValidationError, ConfigError, ConstraintViolation,
            UnreachableDemand, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


def _load_config(args) -> SimConfig:
    path = reference_config_path() if args.config == "reference" else Path(args.config)
    config = parse_config(path.read_text(encoding="utf-8"))
    if args.dt is not None:
        config = replace(config, dt_s=args.dt)
    return config


def _mu_values(args, fallback: tuple[float, ...]) -> list[float]:
    if args.mu is None:
        return [mu % 360.0 for mu in fallback]
    values = [part.strip() for part in str(args.mu).split(",") if part.strip()]
    if not values:
        raise ValueError("--mu given but holds no values")
    return [float(v) % 360.0 for v in values]


def _run_one(config: SimConfig, mu: float, out: Path,
             wants: str) -> tuple[str, TraversalTrace, TraversalSummary]:
    trace, summary = run(replace(config, initial_roll_deg=mu))
    if wants in ("telemetry", "all"):
        out.mkdir(parents=True, exist_ok=True)
        emit_csv(trace, out / f"telemetry_mu{mu:g}.csv")
    text = summary_report(summary)
    if wants in ("timings", "all"):
        out.mkdir(parents=True, exist_ok=True)
        (out / f"summary_mu{mu:g}.txt").write_text(text + "\n", encoding="utf-8")
    return text, trace, summary


def _cmd_run(args) -> int:
    config = _load_config(args)
    mu_list = _mu_values(args, (config.initial_roll_deg,))
    if len(mu_list) != 1:
        raise ValueError("run takes a single --mu value; use sweep for several")
    mu = mu_list[0]
    if args.report in ("table1", "all"):
        print(table1_report(config.network, config.robot, [mu]))
    text, _, _ = _run_one(config, mu, Path(args.out), args.report)
    if args.report in ("timings", "all"):
        print(text)
    if args.report in ("telemetry", "all"):
        print(f"telemetry written to {Path(args.out) / f'telemetry_mu{mu:g}.csv'}")
    return 0


def _cmd_table1(args) -> int:
    config = _load_config(args)
    mu_list = _mu_values(args, DEFAULT_MU_LIST)
    print(table1_report(config.network, config.robot, mu_list))
    return 0


def _cmd_sweep(args) -> int:
    config = _load_config(args)
    mu_list = _mu_values(args, DEFAULT_MU_LIST)
    out = Path(args.out)
    with ThreadPoolExecutor(max_workers=min(4, len(mu_list))) as pool:
        futures = [pool.submit(_run_one, config, mu, out, args.report) for mu in mu_list]
        results = [f.result() for f in futures]
    if args.report in ("table1", "all"):
        print(table1_report(config.network, config.robot, mu_list))
    for mu, (text, _, _) in zip(mu_list, results):
        print(f"--- mu = {mu:g} deg ---")
        if args.report in ("timings", "all"):
            print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
