"""Command-line entry point: ``acclimits <command> --config FILE --out DIR``.

Exit status is 0 on success, 1 when the configuration is invalid and 2
when the computation or writing the results fails.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import commands
from .config import ConfigError, parse_scenario, scenario_from_dict, scenario_to_dict
from .outputs import CSV_HEADER, read_trajectories, write_outputs, write_trajectories

COMMANDS = {
    "simulate": (commands.load_simulate, commands.run_simulate,
                 "run a platoon scenario and write trajectories and metrics"),
    "analyze-ss": (commands.load_analyze_ss, commands.run_analyze_ss,
                   "string-stability verdict and gain curve for one planner"),
    "overshoot": (commands.load_overshoot, commands.run_overshoot,
                  "predicted and simulated overshoot after a lead speed-up"),
    "safety": (commands.load_simulate, commands.run_safety,
               "simulate and report spacing, TTC and the required-gain interval"),
    "sweep": (commands.load_sweep, commands.run_sweep,
              "run a scenario over a parameter grid, optionally in parallel"),
    "fit-limits": (commands.load_fit_limits, commands.run_fit_limits,
                   "fit affine acceleration/deceleration limits to trajectory CSVs"),
}
PLOTTING = {"simulate", "safety"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="acclimits", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, _, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", required=True, type=Path, help="JSON document")
        p.add_argument("--out", required=True, type=Path, help="output directory")
        if name in PLOTTING:
            p.add_argument("--plot", action="store_true", help="also write plot.svg")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    load, execute, _ = COMMANDS[args.command]
    try:
        job = load(args.config)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        if args.command in PLOTTING:
            written = execute(job, args.out, plot=args.plot)
        else:
            written = execute(job, args.out)
    except Exception as exc:  # noqa: BLE001 - any failure past validation is a runtime error
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    for path in written:
        print(path)
    return 0


__all__ = [
    "CSV_HEADER",
    "ConfigError",
    "build_parser",
    "main",
    "parse_scenario",
    "read_trajectories",
    "scenario_from_dict",
    "scenario_to_dict",
    "write_outputs",
    "write_trajectories",
]
