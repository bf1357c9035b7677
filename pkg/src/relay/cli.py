"""Command-line entry point: ``relay generate|solve|validate|bench``.

Exit codes: 0 success, 1 validation failure, 2 infeasible instance,
3 oracle capacity exceeded, 4 unreadable input or bad parameters.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path
from typing import Sequence

from relay.bench import format_table, run_bench, to_csv
from relay.delivery_model import relax_instance, simulate_feasibility, validate_schedule
from relay.errors import (
    GraphError,
    InfeasibleInstanceError,
    OracleCapacityError,
    ParseError,
    RelayError,
)
from relay.instance_gen import (
    INSTANCE_SUFFIX,
    SOLUTION_SUFFIX,
    deserialize_result,
    gen_prop1,
    gen_prop2,
    gen_random,
    read_instance,
    serialize,
    write_result,
)
from relay.instance_gen.serialization import is_relaxed
from relay.solvers import exact_opt, greedy1, greedy_beta, matching_beta, matching_sweep, wk_beta

EXIT_OK, EXIT_INVALID, EXIT_INFEASIBLE, EXIT_CAPACITY, EXIT_PARSE = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse's default exit code 2 means "infeasible" here
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="relay", description="Min-range data delivery: generate, solve, validate, bench.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("generate", help="write a generated instance")
    gen.add_argument("family", choices=("prop1", "prop2", "random"))
    gen.add_argument("--W", type=int, help="path weight (prop1, prop2)")
    gen.add_argument("--k", type=int, help="number of agents")
    gen.add_argument("--epsilon-scale", type=int, default=1000)
    gen.add_argument("--n", type=int, default=8, help="vertices (random)")
    gen.add_argument("--extra-edges", type=int, default=0)
    gen.add_argument("--max-weight", type=int, default=5)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("-o", "--output", help="destination .ddi (default: stdout)")

    solve = sub.add_parser("solve", help="solve an instance")
    solve.add_argument("instance")
    solve.add_argument("--alg", required=True, choices=("greedy1", "greedy-beta", "matching", "exact"))
    solve.add_argument("--beta", type=int, help="grid spacing for greedy-beta / a single Matching_beta")
    solve.add_argument("--relax", action="store_true", help="solve on the unit relaxation")
    solve.add_argument("-o", "--output", help="destination .dds (default: next to the instance)")

    val = sub.add_parser("validate", help="check a solution against its instance")
    val.add_argument("instance")
    val.add_argument("solution")

    bench = sub.add_parser("bench", help="tabulate solver ranges and ratios")
    bench.add_argument("directory", nargs="?", help="directory of .ddi files")
    bench.add_argument("--prop1", type=_int_list, metavar="W,...", help="prop1 sweep, k = sqrt(W)")
    bench.add_argument("--prop2", type=_int_list, metavar="K,...", help="prop2 sweep, W = 10k")
    bench.add_argument("--epsilon-scale", type=int, default=1000)
    bench.add_argument("--random", type=int, default=0, metavar="N", help="N random instances")
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--no-exact", action="store_true", help="skip the exact oracle")
    bench.add_argument("--jobs", type=int, default=1)
    bench.add_argument("-o", "--output", help="CSV destination")
    return parser


def _cmd_generate(args: argparse.Namespace) -> int:
    if args.family in ("prop1", "prop2") and (args.W is None or args.k is None):
        raise GraphError(f"{args.family} needs --W and --k")
    if args.family == "prop1":
        inst = gen_prop1(args.W, args.k)
    elif args.family == "prop2":
        inst = gen_prop2(args.k, args.W, args.epsilon_scale)
    else:
        inst = gen_random(args.n, args.extra_edges, args.k or 3, args.max_weight, args.seed)
    text = serialize(inst)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_solve(args: argparse.Namespace) -> int:
    inst = read_instance(args.instance)
    if args.relax:
        inst = relax_instance(inst)
    if args.alg == "greedy1":
        result = greedy1(inst)
    elif args.alg == "greedy-beta":
        result = greedy_beta(inst, args.beta if args.beta is not None else wk_beta(inst))
    elif args.alg == "matching":
        result = matching_sweep(inst) if args.beta is None else matching_beta(inst, args.beta)
    else:
        result = exact_opt(inst)
    out = Path(args.output) if args.output else Path(args.instance).with_suffix(SOLUTION_SUFFIX)
    write_result(result, out, relaxed=args.relax)
    params = f" {result.parameters}" if result.parameters else ""
    print(f"{result.solver_name}{params} range={result.range} legs={len(result.schedule)} -> {out}")
    return EXIT_OK


def _cmd_validate(args: argparse.Namespace) -> int:
    inst = read_instance(args.instance)
    text = Path(args.solution).read_text(encoding="utf-8")
    if is_relaxed(text):
        inst = relax_instance(inst)
    result = deserialize_result(text, inst)
    report = validate_schedule(inst, result)
    print(report)
    if not report.ok:
        return EXIT_INVALID
    if inst.budgets is not None:
        try:
            suite = simulate_feasibility(inst, result)
        except RelayError as exc:
            print(f"feasibility suite failed: {exc}")
            return EXIT_INVALID
        energies = ", ".join(map(str, suite.final_energies))
        print(f"feasibility suite: {suite.steps} steps, final energies ({energies})")
    return EXIT_OK


def _bench_instances(args: argparse.Namespace):
    if args.directory:
        for f in sorted(Path(args.directory).glob(f"*{INSTANCE_SUFFIX}")):
            yield f.stem, read_instance(f)
    for W in args.prop1 or ():
        k = math.isqrt(W)
        if k * k != W:
            raise GraphError(f"prop1 sweep needs square W, got {W}")
        yield f"prop1-W{W}-k{k}", gen_prop1(W, k)
    for k in args.prop2 or ():
        yield f"prop2-k{k}-W{10 * k}", gen_prop2(k, 10 * k, args.epsilon_scale)
    for i in range(args.random):
        seed = args.seed * 100003 + i
        rng_n = 4 + seed % 9
        yield f"random-{seed}", gen_random(rng_n, seed % 4, 1 + seed % 5, 1 + seed % 6, seed)


def _cmd_bench(args: argparse.Namespace) -> int:
    instances = list(_bench_instances(args))
    if not instances:
        raise GraphError("nothing to benchmark: give a directory, --prop1, --prop2 or --random")
    rows = run_bench(instances, with_exact=not args.no_exact, jobs=args.jobs)
    if args.output:
        Path(args.output).write_text(to_csv(rows), encoding="utf-8")
    print(format_table(rows))
    return EXIT_OK


COMMANDS = {
    "generate": _cmd_generate,
    "solve": _cmd_solve,
    "validate": _cmd_validate,
    "bench": _cmd_bench,
}


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # --help, or a usage error
        return exc.code if isinstance(exc.code, int) else EXIT_PARSE
    try:
        return COMMANDS[args.command](args)
    except OracleCapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except InfeasibleInstanceError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (ParseError, GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except RelayError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
