"""Command-line entry point: spinphase toy | ising | afm | berry-loop."""

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import ValidationError

from src.config import get_settings
from src.config.logging_config import log_error, log_run_finished, log_run_start, setup_logging
from src.exceptions import ConfigurationError, NumericalError
from src.orchestrator.commands import COMMANDS

EXIT_CONFIG = 2
EXIT_NUMERICAL = 3


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--out", type=Path, help="Output file (default: stdout)")
    common.add_argument("--format", choices=["csv", "json"], help="Output format (default: csv)")
    common.add_argument("--config", type=Path, help="JSON file with parameter overrides")
    common.add_argument("--seed", type=int, help="Eigensolver seed")
    common.add_argument("--tol", type=float, help="Numerical tolerance")
    common.add_argument("--jobs", type=int, help="Worker processes (default: SPINPHASE_JOBS)")
    return common


def build_parser() -> argparse.ArgumentParser:
    """Argument parser; unset flags stay absent so config files can supply them."""
    parser = argparse.ArgumentParser(
        prog="spinphase",
        description="Concurrence and Berry phases of spin chains",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    common = _common_parser()

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return subparsers.add_parser(
            name, parents=[common], help=help_text, argument_default=argparse.SUPPRESS
        )

    toy = add("toy", "Two-spin model in a rotating field")
    toy.add_argument("--theta-steps", dest="theta_steps", type=int)
    toy.add_argument("--adiabatic", action="store_true", default=argparse.SUPPRESS)
    toy.add_argument("--ratio", type=float, help="omega0 / kB for --adiabatic")
    toy.add_argument("--adiabatic-steps", dest="adiabatic_steps", type=int)
    toy.add_argument("--field-scale", dest="field_scale", type=float)

    ising = add("ising", "Transverse XY chain: Berry phase and concurrence versus lambda")
    ising.add_argument("--lambda-min", dest="lambda_min", type=float)
    ising.add_argument("--lambda-max", dest="lambda_max", type=float)
    ising.add_argument("--lambda-steps", dest="lambda_steps", type=int)
    ising.add_argument("--modes", type=int, help="Odd N of the mode sum")
    ising.add_argument("--gamma", type=float, help="XY anisotropy")
    ising.add_argument(
        "--ed",
        action="store_true",
        default=argparse.SUPPRESS,
        help="Add exact-diagonalization columns",
    )
    ising.add_argument("--n", type=int, help="Ring length for --ed")

    afm = add("afm", "Heisenberg antiferromagnet: exact and finite-ring values")
    afm.add_argument("--n", type=int, nargs="*", help="Even ring lengths")

    loop = add("berry-loop", "Wilson-loop Berry phase of exact ground states")
    loop.add_argument("--n", type=int)
    loop.add_argument("--lambda", dest="lam", type=float)
    loop.add_argument("--steps", type=int)
    loop.add_argument("--gamma", type=float)
    return parser


def _load_config_file(path: Path) -> Dict[str, Any]:
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigurationError(f"cannot read config file {path}: {e}") from e
    if not isinstance(data, dict):
        raise ConfigurationError(f"config file {path} must hold a JSON object")
    if "lambda" in data:
        data["lam"] = data.pop("lambda")
    return data


def resolve_config(command: str, cli_values: Dict[str, Any]) -> Any:
    """Defaults < --config file < explicit flags."""
    config_cls, _ = COMMANDS[command]
    merged: Dict[str, Any] = {}
    config_path = cli_values.pop("config", None)
    if config_path is not None:
        merged.update(_load_config_file(config_path))
    merged.update(cli_values)
    return config_cls.model_validate(merged)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one subcommand.

    Returns:
        0 on success, 2 on configuration errors, 3 on numerical failures
    """
    settings = get_settings()
    setup_logging(settings)

    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else EXIT_CONFIG

    values = vars(args)
    command = values.pop("command")
    started = time.perf_counter()
    try:
        config = resolve_config(command, values)
        log_run_start(command, config.echo())
        _, handler = COMMANDS[command]
        code = handler(config)
    except NumericalError as e:
        log_error(e, {"command": command})
        code = EXIT_NUMERICAL
    except (ValidationError, ConfigurationError, ValueError) as e:
        log_error(e, {"command": command})
        code = EXIT_CONFIG
    log_run_finished(command, code, time.perf_counter() - started)
    return code


if __name__ == "__main__":
    sys.exit(main())
