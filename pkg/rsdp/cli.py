# This code is part of rsdp.
#
# (C) Copyright The rsdp Developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.
"""
Command-line interface.

Subcommands ``plan``, ``run``, ``gen-mdp``, ``compare-values`` and ``plot`` are thin shells over
the library. Exit codes: 0 on success, 1 on usage or validation errors, 2 on runtime errors.
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

from rsdp.exceptions import InvalidParameterError, RSDPError
from rsdp.experiments import (
    DEFAULT_RADIUS_SCALE,
    ExperimentConfig,
    aggregate,
    emit_csv,
    emit_plot,
    load_csv,
    run_experiment,
)
from rsdp.learners import (
    IOTA_MODES,
    LearnerConfig,
    check_value_chain,
    compare_planners,
    load_count_snapshot,
)
from rsdp.mdp import HardInstanceSpec, load_mdp, make_hard_mdp, make_risky_mdp, save_mdp
from rsdp.planning import DEFAULT_SUPPORT_CAP, rs_ddp_distributional, rs_ddp_scalar

logger = logging.getLogger(__name__)


class _UsageError(Exception):
    """Raised instead of exiting when arguments cannot be parsed."""

    def __init__(self, message: str, usage: str):
        super().__init__(message)
        self.usage = usage


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message, self.format_usage())


def _add_hard_spec_arguments(parser: argparse.ArgumentParser):
    group = parser.add_argument_group("hard instance")
    group.add_argument("--branching", type=int, default=2, help="number of actions A")
    group.add_argument("--depth", type=int, default=2, help="tree depth d")
    group.add_argument("--horizon", type=int, default=9, help="horizon H")
    group.add_argument("--waiting-horizon", type=int, default=None, help="defaults to H // 3")
    group.add_argument("--h-star", type=int, default=None, help="defaults to depth + 1")
    group.add_argument("--leaf-star", type=int, default=0)
    group.add_argument("--a-star", type=int, default=0)
    group.add_argument("--p", type=float, default=0.25)
    group.add_argument("--epsilon", type=float, default=0.0)


def _add_mdp_source(parser: argparse.ArgumentParser):
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--mdp", metavar="FILE", help="MDP JSON file")
    source.add_argument("--gen", choices=("risky", "hard"), help="built-in MDP generator")
    _add_hard_spec_arguments(parser)


def _hard_spec(args, beta: float = 1.0) -> HardInstanceSpec:
    return HardInstanceSpec(
        branching=args.branching,
        depth=args.depth,
        horizon=args.horizon,
        waiting_horizon=args.waiting_horizon,
        h_star=args.h_star,
        leaf_star=args.leaf_star,
        action_star=args.a_star,
        p=args.p,
        epsilon=args.epsilon,
        beta=beta,
    )


def _resolve_mdp(args, beta: float):
    if args.mdp is not None:
        return load_mdp(args.mdp)
    if args.gen == "risky":
        return make_risky_mdp()
    return make_hard_mdp(_hard_spec(args, beta))


def build_parser() -> argparse.ArgumentParser:
    """Argument parser of the ``rsdp`` command."""
    common = _ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="log progress at INFO level")

    parser = _ArgumentParser(
        prog="rsdp", description="Risk-sensitive distributional planning and learning."
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    plan = sub.add_parser("plan", parents=[common], help="optimal policy and value of an MDP")
    _add_mdp_source(plan)
    plan.add_argument("--beta", type=float, required=True)
    plan.add_argument(
        "--distributional", action="store_true", help="plan over full return distributions"
    )
    plan.add_argument("--support-cap", type=int, default=DEFAULT_SUPPORT_CAP)

    run = sub.add_parser("run", parents=[common], help="multi-seed regret experiment")
    _add_mdp_source(run)
    run.add_argument("--algos", required=True, help="comma-separated algorithm names")
    run.add_argument("--beta", type=float, required=True)
    run.add_argument("--delta", type=float, default=0.005)
    run.add_argument("--episodes", type=int, default=2000)
    run.add_argument("--seeds", type=int, default=10, help="number of seeds, 0..n-1")
    run.add_argument("--out", required=True, metavar="CSV")
    run.add_argument("--plot", metavar="SVG")
    run.add_argument("--support-cap", type=int, default=DEFAULT_SUPPORT_CAP)
    run.add_argument("--iota-mode", choices=IOTA_MODES, default="two-sided")
    run.add_argument(
        "--radius-scale",
        type=float,
        default=DEFAULT_RADIUS_SCALE,
        help="multiplier of the confidence radii; 1.0 keeps the high-probability radii",
    )
    run.add_argument("--threads", type=int, default=None, help="overrides RSDP_THREADS")
    run.add_argument(
        "--exact-radii", action="store_true", help="use the true model errors as radii"
    )

    gen = sub.add_parser("gen-mdp", parents=[common], help="write a generated MDP to JSON")
    gen.add_argument("kind", choices=("risky", "hard"))
    gen.add_argument("--out", required=True, metavar="FILE")
    _add_hard_spec_arguments(gen)

    compare = sub.add_parser(
        "compare-values", parents=[common], help="value ordering of learners on shared counts"
    )
    compare.add_argument("--counts", required=True, metavar="FILE")
    compare.add_argument("--beta", type=float, required=True)
    compare.add_argument("--delta", type=float, default=0.005)
    compare.add_argument("--episodes", type=int, default=2000)
    compare.add_argument("--iota-mode", choices=IOTA_MODES, default="two-sided")

    plot = sub.add_parser("plot", parents=[common], help="regret curves from a results CSV")
    plot.add_argument("--in", dest="input", required=True, metavar="CSV")
    plot.add_argument("--out", required=True, metavar="SVG")
    plot.add_argument("--title", default=None)

    return parser


def _print_json(data):
    print(json.dumps(data, indent=2))


def _cmd_plan(args) -> int:
    mdp = _resolve_mdp(args, args.beta)
    if args.distributional:
        result = rs_ddp_distributional(mdp, args.beta, support_cap=args.support_cap)
    else:
        result = rs_ddp_scalar(mdp, args.beta)
    _print_json(result.to_dict(mdp.initial_state))
    return 0


def _cmd_run(args) -> int:
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    if args.seeds < 1:
        raise InvalidParameterError("--seeds must be at least 1.")
    mdp = _resolve_mdp(args, args.beta)
    cfg = ExperimentConfig(
        algorithms=tuple(algos),
        beta=args.beta,
        delta=args.delta,
        num_episodes=args.episodes,
        seeds=tuple(range(args.seeds)),
        mdp_source=args.mdp or args.gen,
        support_cap=args.support_cap,
        iota_mode=args.iota_mode,
        radius_scale=args.radius_scale,
        max_workers=args.threads,
        exact_radii=args.exact_radii,
    )
    records = run_experiment(cfg, mdp=mdp)
    emit_csv(records, args.out)
    curves = aggregate(records)
    if args.plot:
        emit_plot(curves, args.plot)
    _print_json({algo: curve.final_mean for algo, curve in curves.items()})
    return 0


def _cmd_gen_mdp(args) -> int:
    mdp = make_risky_mdp() if args.kind == "risky" else make_hard_mdp(_hard_spec(args))
    save_mdp(mdp, args.out)
    return 0


def _cmd_compare_values(args) -> int:
    mdp, state = load_count_snapshot(args.counts)
    cfg = LearnerConfig.for_mdp(
        mdp, args.beta, args.delta, args.episodes, iota_mode=args.iota_mode
    )
    comparison = compare_planners(state, cfg, mdp)
    chain = check_value_chain(comparison)
    _print_json(
        {
            "beta": args.beta,
            "values": comparison.initial_values(),
            "chain": chain,
            "holds": all(chain.values()),
        }
    )
    return 0


def _cmd_plot(args) -> int:
    emit_plot(aggregate(load_csv(args.input)), args.out, title=args.title)
    return 0


_COMMANDS = {
    "plan": _cmd_plan,
    "run": _cmd_run,
    "gen-mdp": _cmd_gen_mdp,
    "compare-values": _cmd_compare_values,
    "plot": _cmd_plot,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point of the ``rsdp`` command.

    Args:
        argv: Arguments without the program name; defaults to ``sys.argv[1:]``.

    Returns:
        int: Exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as err:
        sys.stderr.write(err.usage)
        sys.stderr.write(f"rsdp: error: {err}\n")
        return 1

    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
    )

    try:
        return _COMMANDS[args.command](args)
    except InvalidParameterError as err:
        sys.stderr.write(f"rsdp: invalid input: {err}\n")
        return 1
    except (RSDPError, OSError) as err:
        sys.stderr.write(f"rsdp: error: {err}\n")
        return 2
