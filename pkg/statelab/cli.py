"""
Command-line interface of the experiments runner.

Usage::

    statelab run <experiment> [--config FILE] [--seed U64] [--out DIR] [--preset NAME]
    statelab validate --config FILE
    statelab verify-manifest DIR

Exit codes: 0 success, 2 configuration error, 3 statistical criterion
failed, 4 internal error.
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__all__ = ["EXIT_OK", "EXIT_CONFIG", "EXIT_CRITERION", "EXIT_INTERNAL", "build_parser", "main"]

import argparse
import sys
import traceback
from pathlib import Path
from typing import List, Optional

from .config import OUTPUT_ROOT_ENV, PRESETS, ExperimentName, load_config, validate_file
from .errors import ConfigError
from .experiment import ExperimentRunner, verify_manifest
from .experiments import get_experiment
from .logger import ConsoleLogger, NullLogger
from .types import SimulationLogger

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_CRITERION = 3
EXIT_INTERNAL = 4


def _seed(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f"seed must be an unsigned 64-bit integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    """Argument parser of the ``statelab`` command."""
    parser = argparse.ArgumentParser(
        prog="statelab",
        description="Seeded experiments on packet geometry and random walks in state space",
        formatter_class=argparse.RawTextHelpFormatter,
        epilog=(
            "Exit codes: 0 success, 2 configuration error, 3 criterion failed, 4 internal error.\n"
            f"Default output root: ${OUTPUT_ROOT_ENV} or ./runs"
        ),
    )
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="run an experiment and write its artifacts")
    run.add_argument("experiment", choices=[e.value for e in ExperimentName])
    run.add_argument("--config", type=Path, default=None, help="TOML configuration file")
    run.add_argument("--seed", type=_seed, default=None, help="master seed (overrides the config)")
    run.add_argument("--out", type=Path, default=None, help="output directory")
    run.add_argument(
        "--preset", choices=PRESETS, default="default", help="preset applied before --config"
    )
    run.add_argument("--verbose", action="store_true", help="print every simulation event")

    check = commands.add_parser("validate", help="check a configuration file without running")
    check.add_argument("--config", type=Path, required=True, help="TOML configuration file")

    verify = commands.add_parser("verify-manifest", help="re-check the checksums of a run")
    verify.add_argument("directory", type=Path)
    return parser


def _run(args: argparse.Namespace) -> int:
    overrides = {
        "experiment": args.experiment,
        "master_seed": args.seed,
        "output_dir": str(args.out) if args.out is not None else None,
    }
    try:
        config = load_config(args.config, preset=args.preset, overrides=overrides)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        for line in exc.diagnostics:
            print(f"  {line}", file=sys.stderr)
        return EXIT_CONFIG

    logger: SimulationLogger = ConsoleLogger(verbose=True) if args.verbose else NullLogger()
    runner = ExperimentRunner(get_experiment(args.experiment), config, logger=logger)
    result = runner.run()
    print(result.summary())
    print(f"Artifacts: {runner.output_dir}")
    if not result.passed:
        names = ", ".join(c.name for c in result.failed_criteria)
        print(f"criterion failed: {names}", file=sys.stderr)
        return EXIT_CRITERION
    return EXIT_OK


def _validate(args: argparse.Namespace) -> int:
    diagnostics = validate_file(args.config)
    for diagnostic in diagnostics:
        print(diagnostic, file=sys.stderr)
    if any(d.level == "error" for d in diagnostics):
        return EXIT_CONFIG
    print(f"{args.config}: ok")
    return EXIT_OK


def _verify(args: argparse.Namespace) -> int:
    try:
        problems = verify_manifest(args.directory)
    except FileNotFoundError:
        print(f"error: no manifest in {args.directory}", file=sys.stderr)
        return EXIT_CONFIG
    for problem in problems:
        print(problem, file=sys.stderr)
    if problems:
        return EXIT_CRITERION
    print(f"{args.directory}: all checksums match")
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """
    Entry point of the ``statelab`` command.

    Args:
        argv: Arguments without the program name (defaults to ``sys.argv[1:]``)

    Returns:
        Process exit code
    """
    args = build_parser().parse_args(argv)
    handlers = {"run": _run, "validate": _validate, "verify-manifest": _verify}
    try:
        return handlers[args.command](args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except Exception:
        traceback.print_exc()
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
