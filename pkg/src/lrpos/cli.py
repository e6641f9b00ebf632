"""Command-line interface: subcommands over the library.

Exit codes encode the mathematical verdict so pipelines can branch on
them: 0 positive / success, 1 not positive (or sweep disagreement),
2 usage or input error, 3 node budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import oracle, saturation
from .errors import BudgetExceeded, LRPosError
from .oracle import DEFAULT_NODE_BUDGET
from .partitions import Partition, parse_partition, weyl_dimension
from .polytope import build_lr_system, point_to_json
from .saturation import Route

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lrpos",
        description=(
            "Exact positivity and values of Littlewood-Richardson "
            "coefficients for GL_n."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_rank(p):
        p.add_argument(
            "--rank", "-n", type=int, default=None,
            help="ambient rank n (default: smallest rank the heights allow)",
        )

    def add_json(p):
        p.add_argument("--json", action="store_true", help="emit JSON")

    def add_budget(p):
        p.add_argument(
            "--budget", type=int, default=None,
            help=(
                "node budget for enumeration (default: LRPOS_BUDGET "
                f"or {DEFAULT_NODE_BUDGET})"
            ),
        )

    p = sub.add_parser("decide", help="decide positivity via exact LP feasibility")
    p.add_argument("alpha")
    p.add_argument("beta")
    p.add_argument("gamma")
    add_rank(p)
    add_json(p)
    p.add_argument(
        "--dump-lp", action="store_true",
        help="also emit the constraint system as JSON",
    )

    p = sub.add_parser("coeff", help="exact coefficient by enumeration")
    p.add_argument("alpha")
    p.add_argument("beta")
    p.add_argument("gamma")
    add_rank(p)
    add_budget(p)
    add_json(p)

    p = sub.add_parser("decompose", help="full tensor product decomposition")
    p.add_argument("alpha")
    p.add_argument("beta")
    add_rank(p)
    add_budget(p)
    add_json(p)

    p = sub.add_parser("witness", help="an integral witness filling, if any")
    p.add_argument("alpha")
    p.add_argument("beta")
    p.add_argument("gamma")
    add_rank(p)
    add_budget(p)
    add_json(p)

    p = sub.add_parser("dim", help="Weyl module dimension")
    p.add_argument("partition")
    p.add_argument("--rank", "-n", type=int, required=True)
    add_json(p)

    p = sub.add_parser("sweep", help="exhaustive cross-validation sweep")
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument(
        "--q", type=str, default="",
        help="comma-separated scaling factors to probe, e.g. 2,3",
    )
    add_budget(p)
    add_json(p)

    return parser


def _default_budget(value: int | None) -> int:
    if value is not None:
        return value
    raw = os.environ.get("LRPOS_BUDGET")
    if raw is None:
        return DEFAULT_NODE_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise LRPosError(f"LRPOS_BUDGET is not an integer: {raw!r}") from None


def _rank_for(args, *partitions: Partition) -> int:
    needed = max((p.height for p in partitions), default=0)
    rank = getattr(args, "rank", None)
    if rank is None:
        return needed
    if rank < needed:
        raise LRPosError(f"rank {rank} is below the tallest height {needed}")
    return rank


def _cmd_decide(args) -> int:
    alpha = parse_partition(args.alpha)
    beta = parse_partition(args.beta)
    gamma = parse_partition(args.gamma)
    rank = _rank_for(args, alpha, beta, gamma)
    decision = saturation.decide_positive(alpha, beta, gamma, rank)

    if args.json:
        doc = decision.to_json_dict()
        if args.dump_lp:
            doc["lp"] = build_lr_system(alpha, beta, gamma, rank).to_json_dict()
        print(json.dumps(doc, indent=2))
    else:
        if args.dump_lp:
            print(json.dumps(build_lr_system(alpha, beta, gamma, rank).to_json_dict()))
        if decision.positive:
            print("positive")
        elif decision.route is Route.TRIVIAL_REJECT:
            print(f"not positive (trivial: {decision.trivial_reason})")
        else:
            print("not positive (LP infeasible)")
        print(f"route: {decision.route.value}")
        if decision.rational_witness is not None:
            pairs = point_to_json(decision.rational_witness)
            print("witness: " + " ".join(f"{k}={v}" for k, v in pairs.items()))
    return EXIT_OK if decision.positive else EXIT_NEGATIVE


def _cmd_coeff(args) -> int:
    alpha = parse_partition(args.alpha)
    beta = parse_partition(args.beta)
    gamma = parse_partition(args.gamma)
    rank = _rank_for(args, alpha, beta, gamma)
    count = oracle.count_lr_tableaux(
        alpha, beta, gamma, rank, _default_budget(args.budget)
    )
    if args.json:
        print(json.dumps({
            "alpha": alpha.to_json(),
            "beta": beta.to_json(),
            "gamma": gamma.to_json(),
            "rank": rank,
            "coefficient": str(count),
        }, indent=2))
    else:
        print(count)
    return EXIT_OK


def _cmd_decompose(args) -> int:
    alpha = parse_partition(args.alpha)
    beta = parse_partition(args.beta)
    rank = args.rank if args.rank is not None else alpha.height + beta.height
    if rank < max(alpha.height, beta.height):
        raise LRPosError(f"rank {rank} is below the tallest height")
    decomposition = oracle.decompose_tensor(
        alpha, beta, rank, _default_budget(args.budget)
    )
    if args.json:
        print(json.dumps({
            "alpha": alpha.to_json(),
            "beta": beta.to_json(),
            "rank": rank,
            "decomposition": decomposition.to_json_list(),
        }, indent=2))
    else:
        for gamma, mult in decomposition.terms.items():
            print(f"{gamma}: {mult}")
    return EXIT_OK


def _cmd_witness(args) -> int:
    alpha = parse_partition(args.alpha)
    beta = parse_partition(args.beta)
    gamma = parse_partition(args.gamma)
    rank = _rank_for(args, alpha, beta, gamma)
    filling = oracle.integral_witness(
        alpha, beta, gamma, rank, _default_budget(args.budget)
    )
    if args.json:
        print(json.dumps({
            "alpha": alpha.to_json(),
            "beta": beta.to_json(),
            "gamma": gamma.to_json(),
            "rank": rank,
            "witness": None if filling is None else oracle.filling_to_json(filling),
        }, indent=2))
    else:
        if filling is None:
            print("none")
        else:
            nonzero = {k: v for k, v in sorted(filling.items()) if v}
            print(" ".join(f"{i}.{j}={v}" for (i, j), v in nonzero.items()) or "empty")
    return EXIT_OK if filling is not None else EXIT_NEGATIVE


def _cmd_dim(args) -> int:
    lam = parse_partition(args.partition)
    dim = weyl_dimension(lam, args.rank)
    if args.json:
        print(json.dumps({
            "partition": lam.to_json(),
            "rank": args.rank,
            "dimension": str(dim),
        }, indent=2))
    else:
        print(dim)
    return EXIT_OK


def _cmd_sweep(args) -> int:
    qs = tuple(int(tok) for tok in args.q.split(",") if tok.strip())
    report = saturation.sweep(
        args.max_size, args.max_n, qs, _default_budget(args.budget)
    )
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        print(f"instances: {report.instances}")
        print(f"lp positive: {report.lp_positive}")
        print(f"lp negative: {report.lp_negative}")
        print(f"oracle checked: {report.oracle_checked}")
        print(f"budget failures: {report.budget_failures}")
        print(f"disagreements: {len(report.disagreements)}")
        for item in report.disagreements:
            print(json.dumps(item))
    return EXIT_OK if not report.disagreements else EXIT_NEGATIVE


_COMMANDS = {
    "decide": _cmd_decide,
    "coeff": _cmd_coeff,
    "decompose": _cmd_decompose,
    "witness": _cmd_witness,
    "dim": _cmd_dim,
    "sweep": _cmd_sweep,
}


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:  # argparse has already written the diagnostic
        code = exc.code
        return code if isinstance(code, int) else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except LRPosError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
