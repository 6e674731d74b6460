"""Command-line interface: ``soglia check``, ``soglia threshold`` and ``soglia sweep``.

Exit status:
    check      0 RC detects distillability, 1 not detected, 2 usage/input error
    threshold  0 success, 2 error
    sweep      0 success, 2 error
"""
import argparse
import json
import logging
import math
import sys
from pathlib import Path
from typing import Optional, Sequence

from pydantic import ValidationError

from analysis.criterion import rc_check
from analysis.sweep import run_sweep
from analysis.threshold import bisection_threshold_oracle, threshold
from config import SogliaConfig, get_config, set_config
from errors import DimensionMismatchError, SogliaError
from states.depolarized import DepolarizedState
from states.schmidt import SchmidtVector
from states.storage import load_state, save_state

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NOT_DETECTED = 1
EXIT_ERROR = 2

_INPUT_ERRORS = (SogliaError, ValueError, ValidationError, OSError)


class UsageError(SogliaError, ValueError):
    """Invalid combination of command-line flags."""


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting, so ``main`` owns the exit code."""

    def error(self, message):
        raise UsageError(message)


def parse_coeffs(text: str) -> list[float]:
    """Parse ``"1,1,0"`` into floats.

    Raises:
        UsageError: On empty or non-numeric entries
    """
    try:
        values = [float(part) for part in text.split(",")]
    except ValueError:
        raise UsageError(f"Malformed --coeffs '{text}': expected comma-separated numbers")
    if not all(math.isfinite(v) for v in values):
        raise UsageError(f"Malformed --coeffs '{text}': values must be finite")
    return values


def _load_schmidt(args: argparse.Namespace) -> tuple[SchmidtVector, Optional[float]]:
    """Schmidt vector and p from --coeffs or --state, checked against --d.

    p is --p when given, else the state file's p (None if neither).
    """
    if (args.coeffs is None) == (args.state is None):
        raise UsageError("Give exactly one of --coeffs or --state")

    if args.state is not None:
        record = load_state(Path(args.state))
        schmidt = record.to_schmidt()
        p = args.p if args.p is not None else record.p
    else:
        schmidt = SchmidtVector.from_unnormalized(parse_coeffs(args.coeffs))
        p = args.p

    if args.d is not None and args.d != schmidt.d:
        raise DimensionMismatchError(f"--d {args.d} does not match {schmidt.d} coefficients")
    return schmidt, p


def _fmt(value: float, config: SogliaConfig) -> str:
    return config.float_format % value


def cmd_check(args: argparse.Namespace) -> int:
    """Run the RC negativity test and print the min eigenvalue and verdict."""
    config = get_config()
    schmidt, p = _load_schmidt(args)
    if p is None:
        raise UsageError("check needs --p (or a state file with \"p\")")
    state = DepolarizedState(schmidt=schmidt, p=p)

    verdict = rc_check(state, tol=args.tol, method=args.method, config=config)
    if args.save_state:
        save_state(state, Path(args.save_state))

    print(f"min_eigenvalue: {_fmt(verdict.min_eigenvalue, config)}")
    if verdict.distillable_by_rc:
        print("verdict: distillable (RC violated)")
        return EXIT_OK
    print("verdict: not detected by RC")
    return EXIT_NOT_DETECTED


def cmd_threshold(args: argparse.Namespace) -> int:
    """Print the minimum p at which RC detects distillability, or "none"."""
    config = get_config()
    schmidt, p = _load_schmidt(args)

    if args.method == "bisection":
        result = bisection_threshold_oracle(schmidt, config=config)
    else:
        result = threshold(schmidt, method=args.method, config=config)
    if args.save_state:
        save_state(DepolarizedState(schmidt=schmidt, p=p) if p is not None else schmidt, Path(args.save_state))

    if args.json:
        print(json.dumps(result.to_report()))
    elif result.present:
        print(_fmt(result.p_star, config))
    else:
        print("none")
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    """Run the d=3 sweep, write it, and print a summary."""
    config = get_config()
    result = run_sweep(
        Path(args.out),
        theta_steps=args.theta_steps,
        phi_steps=args.phi_steps,
        theta_range=(args.theta_min, args.theta_max),
        phi_range=(args.phi_min, args.phi_max),
        jobs=args.jobs,
        plot_script_path=Path(args.plot_script) if args.plot_script else None,
        config=config,
    )
    if not result.success:
        for error in result.errors:
            print(f"error: {error}", file=sys.stderr)
        return EXIT_ERROR

    summary = result.summary
    print(f"cells: {summary['cells']} (populated {summary['populated']}, absent {summary['absent']})")
    if summary["min_p_star"] is not None:
        print(
            f"min p_star: {_fmt(summary['min_p_star'], config)} at "
            f"theta={_fmt(summary['argmin_theta'], config)} phi={_fmt(summary['argmin_phi'], config)}"
        )
    else:
        print("min p_star: none")
    for family, count in sorted(summary["family_counts"].items()):
        print(f"family {family}: {count}")
    for path in result.saved_paths:
        print(f"wrote {path}")
    return EXIT_OK


def _add_state_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--d", type=int, help="Local dimension (checked against the coefficients)")
    parser.add_argument("--coeffs", help="Comma-separated Schmidt coefficients, normalized on input")
    parser.add_argument("--state", help="State JSON file {\"d\", \"p\", \"a\"}")
    parser.add_argument("--p", type=float, help="Pure-state weight in [0, 1]")
    parser.add_argument("--save-state", help="Write the normalized state to this JSON file")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="soglia", description="Reduction-criterion distillability of depolarized states")
    parser.add_argument("--config", help="dotenv-format file with SOGLIA_* settings")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    check = sub.add_parser("check", help="Test RC negativity of a depolarized state")
    _add_state_options(check)
    check.add_argument("--method", choices=["oracle", "charpoly", "cubic3x3"], default="oracle")
    check.add_argument("--tol", type=float, help="Negativity tolerance (default: SOGLIA_RC_TOL)")
    check.set_defaults(handler=cmd_check)

    thr = sub.add_parser("threshold", help="Minimum p at which RC detects distillability")
    _add_state_options(thr)
    thr.add_argument("--method", choices=["generic", "cubic3x3", "bisection"], default="generic")
    thr.add_argument("--json", action="store_true", help="Emit {\"p_star\", \"family\"} as JSON")
    thr.set_defaults(handler=cmd_threshold)

    sweep = sub.add_parser("sweep", help="Threshold over the d=3 (theta, phi) grid")
    sweep.add_argument("--theta-steps", type=int, help="theta grid nodes (default: SOGLIA_SWEEP_THETA_STEPS)")
    sweep.add_argument("--phi-steps", type=int, help="phi grid nodes (default: SOGLIA_SWEEP_PHI_STEPS)")
    sweep.add_argument("--theta-min", type=float, default=0.0)
    sweep.add_argument("--theta-max", type=float, default=math.pi / 2)
    sweep.add_argument("--phi-min", type=float, default=0.0)
    sweep.add_argument("--phi-max", type=float, default=math.pi / 2)
    sweep.add_argument("--out", required=True, help="Output file (.csv or .parquet)")
    sweep.add_argument("--plot-script", help="Also write a standalone plotting script here")
    sweep.add_argument("--jobs", type=int, help="Worker processes (default: SOGLIA_SWEEP_JOBS)")
    sweep.set_defaults(handler=cmd_sweep)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, configure logging and config, dispatch. Returns the exit status."""
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        if args.config:
            set_config(SogliaConfig.from_file(args.config))
            logger.debug(f"Using config from {args.config}")
        return args.handler(args)
    except _INPUT_ERRORS as e:
        message = " ".join(str(e).split()) or type(e).__name__
        print(f"error: {message}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
