"""Command-line interface.

Each subcommand loads one graph (edge-list file or generator spec), reduces it
to its largest connected component, runs one experiment and prints a TSV
table on stdout. Logs go to stderr.

Exit codes: 0 ok, 1 invariant violation, 2 usage or input error,
3 budget refusal.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from pydantic import ValidationError

from hyperecc.config import Settings, get_settings
from hyperecc.errors import (
    BudgetExceededError,
    DisconnectedGraphError,
    EstimatorContractError,
    GeneratorSpecError,
    GraphParseError,
    MissingOracleError,
)
from hyperecc.harness import (
    RunConfig,
    cmd_distance_experiment,
    cmd_hyperbolicity,
    cmd_stats,
    cmd_tree_experiment,
    cmd_verify,
)
from hyperecc.logging import bind_run, clear_run, configure_logging, get_logger, timed

log = get_logger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

_GEN_HELP = (
    "generator spec: path:N, cycle:N, star:LEAVES, complete:N, tree:N, grid:RxC, "
    "random:N,P or block:BLOCKS[,MAX_CLIQUE]; random families use --seed "
    "(default HYPERECC_SEED=20180917)"
)


def _pair(text: str) -> tuple[int, int]:
    x, _, y = text.partition(",")
    try:
        a, b = int(x), int(y)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected X,Y, got {text!r}") from exc
    if a == b:
        raise argparse.ArgumentTypeError("the two vertices must differ")
    return a, b


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    source = common.add_mutually_exclusive_group()
    source.add_argument("--input", type=Path, help="edge-list file (.gz decompressed)")
    source.add_argument("--gen", help=_GEN_HELP)
    common.add_argument("--seed", type=int, help="seed for random generators")
    common.add_argument("--budget", type=int, help="oracle budget in n*m edge visits")
    common.add_argument("--force", action="store_true", help="ignore every budget guard")
    common.add_argument("--pretty", action="store_true", help="aligned text instead of TSV")
    common.add_argument("--start", type=int, default=0, help="start vertex for FP scans")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperecc",
        description="Eccentricity and distance approximation in hyperbolic graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common_flags()

    sub.add_parser("stats", parents=[common], help="n, m, center, rad, diam, delta4.")
    sub.add_parser("hyperbolicity", parents=[common], help="Four-point delta4 with witness.")

    trees = sub.add_parser("trees", parents=[common], help="Compare T1/T2/T3 and linear trees.")
    trees.add_argument("--out", type=Path, help="write per-vertex T1 estimates as TSV")

    dist = sub.add_parser("distances", parents=[common], help="Smallest admissible delta search.")
    dist.add_argument("--root", type=int, help="BFS root (default: T1 center)")
    dist.add_argument("--delta", type=int, help="evaluate this lambda only")
    dist.add_argument("--rho", type=int, help="run the estimated sweep with the (2,1) estimator")
    dist.add_argument("--sample", type=int, default=0, help="stats over K sources furthest from root")
    dist.add_argument("--out", type=Path, help="write the binary dhat dump")

    verify = sub.add_parser(
        "verify",
        parents=[common],
        help="Check every bound; without input runs the seeded default suite.",
    )
    verify.add_argument("--corrupt", type=_pair, help=argparse.SUPPRESS)
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        input=args.input,
        gen=args.gen,
        root=getattr(args, "root", None),
        start=args.start,
        delta=getattr(args, "delta", None),
        rho=getattr(args, "rho", None),
        sample=getattr(args, "sample", 0),
        seed=args.seed,
        budget=args.budget,
        force=args.force,
        pretty=args.pretty,
        out=getattr(args, "out", None),
    )


def run(args: argparse.Namespace, settings: Settings) -> int:
    config = _config(args)
    if config.command == "verify":
        report = cmd_verify(config, settings, corrupt=args.corrupt)
        if not report.ok:
            sys.stdout.write(report.table().render(config.pretty))
        log.info("verify.done", summary=report.summary())
        return EXIT_OK if report.ok else EXIT_VIOLATION
    if config.command == "stats":
        table = cmd_stats(config, settings)
    elif config.command == "hyperbolicity":
        table = cmd_hyperbolicity(config, settings)
    elif config.command == "trees":
        table = cmd_tree_experiment(config, settings)
    else:
        table = cmd_distance_experiment(config, settings)
    sys.stdout.write(table.render(config.pretty))
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    settings = get_settings()
    configure_logging(level=settings.log_level, json_logs=settings.log_json)
    clear_run()
    bind_run(command=args.command)

    try:
        with timed("run.finished"):
            code = run(args, settings)
    except BudgetExceededError as exc:
        log.error("run.budget_exceeded", error=str(exc), needed=exc.needed, budget=exc.budget)
        return EXIT_BUDGET
    except EstimatorContractError as exc:
        log.error("run.estimator_contract", error=str(exc))
        return EXIT_VIOLATION
    except (
        GraphParseError,
        DisconnectedGraphError,
        MissingOracleError,
        GeneratorSpecError,
        ValidationError,
        ValueError,
        OSError,
    ) as exc:
        log.error("run.bad_input", error=str(exc))
        return EXIT_USAGE
    return code


if __name__ == "__main__":
    raise SystemExit(main())
