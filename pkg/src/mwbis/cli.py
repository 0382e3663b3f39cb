"""Command-line front end.

    mwbis validate FILE
    mwbis generate FAMILY -p n=10 --seed 3 -o out.mwbis
    mwbis run SOLVER FILE [--oracle] [-k K] [--format csv]
    mwbis greedy FILE --algo mbf --check-claw 2
    mwbis bench SOLVER FILE... [--oracle] [--jobs N]
    mwbis reduce knapsack-to-star FILE [-o OUT]

Exit status is 0 on success, 2 when the input is invalid and 3 when a
solver refuses or fails.

CSV reports always have the columns in ``CSV_COLUMNS``. ``oracle`` is the
brute-force optimum (empty when not requested or above the oracle cap) and
``ratio_num/ratio_den`` is weight/oracle in lowest terms; an optimum of
zero with a zero-weight answer counts as ratio 1/1. Greedy solvers are
measured by cardinality, so their weight and oracle columns are in
milli-units of the unit-weight instance.
"""
from __future__ import annotations

import argparse
import csv
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .core import ORACLE_MAX_N, Instance, Solution, brute_force_mwbis, make_solution
from .errors import BadParams, IncompatibleSolver, MWBISError, ParseError, SolverError, ValidationError
from .generate import FAMILIES, generate
from .greedy import mbf, mwbrf, verify_claw_free
from .interval import IntervalInstance, solve_intervals
from .io import kind_of, parse, write_text
from .planar import LeveledPlanarInstance, ptas, solve_band_solution
from .reductions import KnapsackInstance, knapsack_to_star, solve_knapsack_dp
from .tree import RootedTree, root_tree, solve_cycle, solve_forest_instance, solve_tree

CSV_COLUMNS = ("solver", "instance", "n", "B", "weight", "budget", "micros", "oracle", "ratio_num", "ratio_den")
SOLVERS = ("brute", "tree", "forest", "cycle", "interval", "mbf", "mwbrf", "band", "ptas", "knapsack")

EXIT_OK, EXIT_INVALID, EXIT_SOLVER = 0, 2, 3


@dataclass(frozen=True)
class RunReport:
    solver: str
    instance: str
    n: int
    B: int
    weight: int
    budget: int
    micros: int
    vertices: tuple[int, ...] = ()
    oracle: int | None = None

    @property
    def ratio(self) -> Fraction | None:
        if self.oracle is None:
            return None
        if self.oracle == 0:
            return Fraction(1)
        return Fraction(self.weight, self.oracle)

    def row(self) -> list:
        r = self.ratio
        return [
            self.solver, self.instance, self.n, self.B, self.weight, self.budget, self.micros,
            "" if self.oracle is None else self.oracle,
            "" if r is None else r.numerator,
            "" if r is None else r.denominator,
        ]

    def summary(self) -> str:
        parts = [
            f"{self.solver} on {self.instance}: n={self.n} B={self.B}",
            f"weight={self.weight} budget={self.budget} time={self.micros}us",
            f"vertices={list(self.vertices)}",
        ]
        if self.oracle is not None:
            r = self.ratio
            parts.append(f"oracle={self.oracle} ratio={r.numerator}/{r.denominator}")
        return "\n".join(parts)


def as_graph(obj) -> Instance:
    if isinstance(obj, Instance):
        return obj
    if isinstance(obj, (RootedTree, LeveledPlanarInstance)):
        return obj.instance
    if isinstance(obj, IntervalInstance):
        return obj.graph()
    if isinstance(obj, KnapsackInstance):
        return knapsack_to_star(obj).instance
    raise IncompatibleSolver(f"no graph view of {type(obj).__name__}")


def _need(obj, types, solver):
    if not isinstance(obj, types):
        raise IncompatibleSolver(f"solver {solver!r} does not accept a {kind_of(obj)} instance")


def solve(solver: str, obj, k: int = 1, keep_scanning: bool = False) -> tuple[Instance, Solution]:
    """Run ``solver`` on a parsed instance; returns the graph it was scored on."""
    if solver == "brute":
        g = as_graph(obj)
        return g, brute_force_mwbis(g)
    if solver == "tree":
        _need(obj, (RootedTree, Instance, KnapsackInstance), solver)
        if isinstance(obj, KnapsackInstance):
            obj = knapsack_to_star(obj)
        tree = obj if isinstance(obj, RootedTree) else root_tree(obj, 0)
        if len(tree.postorder) != tree.instance.n:
            raise IncompatibleSolver("graph is not connected; use the forest solver")
        return tree.instance, solve_tree(tree)
    if solver == "forest":
        _need(obj, (RootedTree, Instance), solver)
        g = as_graph(obj)
        return g, solve_forest_instance(g)
    if solver == "cycle":
        _need(obj, Instance, solver)
        return obj, solve_cycle(obj)
    if solver == "interval":
        _need(obj, IntervalInstance, solver)
        return obj.graph(), solve_intervals(obj.interval_set(), obj.B)
    if solver == "knapsack":
        _need(obj, KnapsackInstance, solver)
        tree = knapsack_to_star(obj)
        return tree.instance, solve_tree(tree)
    if solver in ("mbf", "mwbrf"):
        _need(obj, (Instance, RootedTree, LeveledPlanarInstance, IntervalInstance), solver)
        g = as_graph(obj)
        if solver == "mbf":
            g = g.unweighted()
            return g, mbf(g, keep_scanning=keep_scanning).solution(g)
        return g, make_solution(g, mwbrf(g))
    if solver in ("band", "ptas"):
        _need(obj, LeveledPlanarInstance, solver)
        if solver == "band":
            return obj.instance, solve_band_solution(obj)
        return obj.instance, ptas(obj, k)
    raise IncompatibleSolver(f"unknown solver {solver!r}; choose from {', '.join(SOLVERS)}")


def oracle_for(solver: str, obj, scored: Instance) -> int | None:
    if solver == "knapsack":
        return solve_knapsack_dp(obj)
    if scored.n > ORACLE_MAX_N:
        return None
    return brute_force_mwbis(scored).total_weight


def run(solver: str, obj, name: str = "-", oracle: bool = False, k: int = 1, keep_scanning: bool = False) -> RunReport:
    t0 = time.perf_counter_ns()
    scored, sol = solve(solver, obj, k=k, keep_scanning=keep_scanning)
    micros = (time.perf_counter_ns() - t0) // 1000
    opt = oracle_for(solver, obj, scored) if oracle else None
    return RunReport(
        solver, name, scored.n, scored.B, sol.total_weight, sol.total_budget, micros, sol.vertices, opt
    )


def _emit(reports, fmt: str, out=None) -> None:
    out = sys.stdout if out is None else out
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in reports:
            w.writerow(r.row())
    else:
        print("\n\n".join(r.summary() for r in reports), file=out)


def _parse_params(pairs):
    params = {}
    for item in pairs or []:
        key, sep, value = item.partition("=")
        if not sep:
            raise BadParams(f"expected KEY=VALUE, got {item!r}")
        params[key] = value if key == "levels" else int(value) if value.lstrip("-").isdigit() else value
    return params


def cmd_validate(args) -> int:
    obj = parse(args.file, args.kind)
    kind = kind_of(obj)
    if isinstance(obj, (IntervalInstance, KnapsackInstance)):
        size = len(obj.intervals) if kind == "intervals" else len(obj.items)
        print(f"ok: {kind} with {size} records")
    else:
        g = as_graph(obj)
        print(f"ok: {kind} n={g.n} m={len(g.edges())} B={g.B}")
    return EXIT_OK


def cmd_generate(args) -> int:
    obj = generate(args.family, _parse_params(args.param), args.seed)
    text = write_text(obj)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_run(args) -> int:
    obj = parse(args.file, args.kind)
    report = run(args.solver, obj, Path(args.file).name, args.oracle, args.k, args.keep_scanning)
    _emit([report], args.format)
    return EXIT_OK


def cmd_greedy(args) -> int:
    obj = parse(args.file, args.kind)
    if args.check_claw is not None:
        if not verify_claw_free(as_graph(obj), args.check_claw):
            print(f"error: graph contains an induced K_1,{args.check_claw + 1}", file=sys.stderr)
            return EXIT_INVALID
        print(f"# verified {args.check_claw + 1}-claw-free", file=sys.stderr)
    report = run(args.algo, obj, Path(args.file).name, args.oracle, keep_scanning=args.keep_scanning)
    _emit([report], args.format)
    return EXIT_OK


def _bench_one(job):
    solver, path, oracle, k, kind = job
    return run(solver, parse(path, kind), Path(path).name, oracle, k)


def cmd_bench(args) -> int:
    jobs = [(args.solver, f, args.oracle, args.k, args.kind) for f in args.files]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            reports = list(pool.map(_bench_one, jobs))
    else:
        reports = [_bench_one(j) for j in jobs]
    # single writer, input order
    _emit(reports, "csv")
    return EXIT_OK


def cmd_reduce(args) -> int:
    obj = parse(args.file, "knapsack")
    text = write_text(knapsack_to_star(obj))
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mwbis", description="Maximum weight budgeted independent set solvers")
    sub = p.add_subparsers(dest="command", required=True)

    def add_kind(sp):
        sp.add_argument("--kind", choices=("graph", "tree", "intervals", "planar", "knapsack"),
                        help="file kind (inferred from the header by default)")

    sp = sub.add_parser("validate", help="parse and validate an instance file")
    sp.add_argument("file")
    add_kind(sp)
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("generate", help="write a seeded random or gadget instance")
    sp.add_argument("family", choices=FAMILIES)
    sp.add_argument("-p", "--param", action="append", metavar="KEY=VALUE")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("run", help="solve one instance")
    sp.add_argument("solver", choices=SOLVERS)
    sp.add_argument("file")
    sp.add_argument("--oracle", action="store_true", help="compare with brute force")
    sp.add_argument("-k", type=int, default=1, help="band width for ptas")
    sp.add_argument("--keep-scanning", action="store_true",
                    help="mbf extension: skip unaffordable vertices instead of stopping")
    sp.add_argument("--format", choices=("text", "csv"), default="text")
    add_kind(sp)
    sp.set_defaults(func=cmd_run)

    sp = sub.add_parser("greedy", help="run a greedy heuristic")
    sp.add_argument("file")
    sp.add_argument("--algo", choices=("mbf", "mwbrf"), default="mbf")
    sp.add_argument("--check-claw", type=int, metavar="D",
                    help="refuse unless the graph is (D+1)-claw-free")
    sp.add_argument("--keep-scanning", action="store_true")
    sp.add_argument("--oracle", action="store_true")
    sp.add_argument("--format", choices=("text", "csv"), default="text")
    add_kind(sp)
    sp.set_defaults(func=cmd_greedy)

    sp = sub.add_parser("bench", help="solve many files, CSV to stdout")
    sp.add_argument("solver", choices=SOLVERS)
    sp.add_argument("files", nargs="+")
    sp.add_argument("--oracle", action="store_true")
    sp.add_argument("-k", type=int, default=1)
    sp.add_argument("--jobs", type=int, default=1)
    add_kind(sp)
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("reduce", help="instance transformations")
    sp.add_argument("reduction", choices=("knapsack-to-star",))
    sp.add_argument("file")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_reduce)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValidationError, ParseError, BadParams, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except SolverError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except MWBISError as exc:  # pragma: no cover
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SOLVER


if __name__ == "__main__":
    sys.exit(main())
