import argparse
import logging
import sys
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from core.constants import DEFAULT_SEED, Direction
from parametrization.labels import FlagType
from pipelines.base import BaseRunner
from pipelines.explorer import (
    CoxeterRunner,
    FlagsRunner,
    HomExtRunner,
    MomentRunner,
    ParamRunner,
    RootsRunner,
    TubesRunner,
)
from pipelines.utils.file_io import parse_quiver_file, parse_rep_file
from pipelines.utils.report_utils import json_payload
from pipelines.verifier import Verifier
from quivers.quiver import scale_dims

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _dims(text: str) -> Tuple[int, ...]:
    try:
        values = tuple(int(value) for value in text.split(","))
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from err
    if any(value < 0 for value in values):
        raise argparse.ArgumentTypeError(f"dimension vector {text!r} has a negative entry")
    return values


def _params(text: str) -> List[Fraction]:
    try:
        return [Fraction(value) for value in text.split(",")]
    except (ValueError, ZeroDivisionError) as err:
        raise argparse.ArgumentTypeError(f"expected comma separated rationals, got {text!r}") from err


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the machine-readable report")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed of every randomized check")
    common.add_argument("--verbose", action="store_true", help="log at DEBUG and print progress")

    parser = argparse.ArgumentParser(
        prog="quiverlab",
        description="Exact representation theory of affine quivers of type A~_n.",
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    roots = subparsers.add_parser("roots", parents=[common], help="positive roots below a bound")
    roots.add_argument("--quiver", required=True)
    roots.add_argument("--bound", type=_dims, help="defaults to 2 delta")

    tubes = subparsers.add_parser("tubes", parents=[common], help="non-homogeneous tubes")
    tubes.add_argument("--quiver", required=True)

    param = subparsers.add_parser("param", parents=[common], help="the pairs (sigma, lambda) of a dimension")
    param.add_argument("--quiver", required=True)
    param.add_argument("--dim", type=_dims, required=True)
    param.add_argument("--params", type=_params, help="homogeneous parameters t1,t2,...")

    verify = subparsers.add_parser("verify", parents=[common], help="series and count identities")
    verify.add_argument("--quiver", required=True)
    verify.add_argument("--degree", type=_non_negative, required=True)
    verify.add_argument("--per-dim", action="store_true", help="add the per dimension vector table")
    verify.add_argument("--euler-samples", type=_non_negative, default=0)
    verify.add_argument("--artifact-dir", help="write the tables as CSV files")

    homext = subparsers.add_parser("homext", parents=[common], help="dim Hom, dim Ext and the Euler form")
    homext.add_argument("--a", required=True)
    homext.add_argument("--b", required=True)

    coxeter = subparsers.add_parser("coxeter", parents=[common], help="apply a Coxeter functor")
    coxeter.add_argument("--rep", required=True)
    coxeter.add_argument("--power", type=_non_negative, default=1)
    coxeter.add_argument("--direction", choices=[d.value for d in Direction], default=Direction.Plus.value)

    flags = subparsers.add_parser("flags", parents=[common], help="count x-stable flags over F_p")
    flags.add_argument("--rep", required=True)
    flags.add_argument("--type", dest="flag_type", type=FlagType.parse, required=True)
    flags.add_argument("--prime", type=int, required=True)

    moment = subparsers.add_parser("moment", parents=[common], help="moment map and nilpotency")
    moment.add_argument("--rep", required=True)
    return parser


def _runner(args: argparse.Namespace) -> Tuple[BaseRunner, Dict[str, Any]]:
    if args.subcommand == "roots":
        q = parse_quiver_file(args.quiver)
        bound = args.bound if args.bound is not None else scale_dims(q.delta, 2)
        return RootsRunner(q, bound), {"quiver": args.quiver, "bound": list(bound)}
    if args.subcommand == "tubes":
        return TubesRunner(parse_quiver_file(args.quiver)), {"quiver": args.quiver}
    if args.subcommand == "param":
        inputs = {"quiver": args.quiver, "dim": list(args.dim), "params": [str(t) for t in args.params or []]}
        return ParamRunner(parse_quiver_file(args.quiver), args.dim, args.params), inputs
    if args.subcommand == "verify":
        params = {
            "degree": args.degree,
            "per_dim": args.per_dim,
            "euler_samples": args.euler_samples,
            "seed": args.seed,
            "verbose": args.verbose and not args.json,
        }
        if args.artifact_dir:
            params["artifact_dir"] = args.artifact_dir
        inputs = {
            "quiver": args.quiver,
            "degree": args.degree,
            "per_dim": args.per_dim,
            "euler_samples": args.euler_samples,
            "seed": args.seed,
        }
        return Verifier(parse_quiver_file(args.quiver), params), inputs  # type: ignore[arg-type]
    if args.subcommand == "homext":
        return HomExtRunner(parse_rep_file(args.a), parse_rep_file(args.b)), {"a": args.a, "b": args.b}
    if args.subcommand == "coxeter":
        inputs = {"rep": args.rep, "power": args.power, "direction": args.direction}
        return CoxeterRunner(parse_rep_file(args.rep), args.power, args.direction), inputs
    if args.subcommand == "flags":
        inputs = {"rep": args.rep, "type": str(args.flag_type), "prime": args.prime}
        return FlagsRunner(parse_rep_file(args.rep), args.flag_type, args.prime), inputs
    return MomentRunner(parse_rep_file(args.rep)), {"rep": args.rep}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else EXIT_USAGE

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        runner, inputs = _runner(args)
        outcome = runner.run()
    except (ValueError, OSError) as err:
        print(f"quiverlab {args.subcommand}: {err}", file=sys.stderr)
        return EXIT_USAGE

    if args.json:
        print(json_payload(args.subcommand, inputs, outcome["results"], outcome["passed"]))
    else:
        print(outcome["text"])
    return EXIT_FAIL if outcome["passed"] is False else EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
