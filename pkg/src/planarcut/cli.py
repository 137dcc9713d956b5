"""Command-line entry point: ``planarcut <subcommand> ...``."""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import math
import sys
import time
from typing import Sequence

from . import generators as gen
from .clustering import candidate_count, check_noncrossing, enumerate_clusterings, enumerate_structures
from .graph import GraphError
from .instance_io import (
    ParseError,
    ValidationError,
    instance_kind,
    read_cut,
    read_instance,
    serialize_instance,
    serialize_solution,
    write_text,
)
from .instances import MCCInstance, MinMCInstance
from .multicut import BudgetExceeded, SolverOptions, SolveStats, verify
from .mtc import CutSolution
from .oracle import OracleCapExceeded, brute_force, check_structure
from .pipeline import solve_raw

EXIT_OK, EXIT_INFEASIBLE, EXIT_PARSE, EXIT_VALIDATION, EXIT_BUDGET, EXIT_INTERNAL = 0, 1, 2, 3, 4, 5
FAMILIES = ("chain", "star", "grid", "outerplanar")


class UsageError(ValueError):
    pass


def _ints(text: str | None, name: str) -> list[int]:
    if text is None or text == "":
        return []
    try:
        vals = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"--{name} expects comma-separated integers, got {text!r}") from None
    return vals


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        write_text(path, text)


def _options(args) -> SolverOptions:
    if args.budget is not None and args.budget < 1:
        raise UsageError("--budget must be positive")
    if args.threads < 1:
        raise UsageError("--threads must be at least 1")
    return SolverOptions(noncrossing_prune=not args.no_prune, memoize=args.memoize,
                         budget=args.budget, workers=args.threads)


def _stats_text(stats: SolveStats) -> str:
    return json.dumps(stats.as_dict(), sort_keys=True) + "\n"


def _render_to(path: str, instance, solution: CutSolution | None) -> None:
    from .render import render_svg

    write_text(path, render_svg(instance, solution))


def cmd_solve(args) -> int:
    options = _options(args)
    instance = read_instance(args.instance)
    stats = SolveStats()
    t0 = time.perf_counter()
    res = solve_raw(instance, options, stats)
    stats.wall_time = time.perf_counter() - t0
    sol = res.solution
    _emit(serialize_solution(instance_kind(instance), sol, sol.components.component_of), args.out)
    if args.stats:
        _emit(_stats_text(stats), args.stats)
    if args.svg:
        _render_to(args.svg, instance, sol)
    return EXIT_OK


def cmd_oracle(args) -> int:
    instance = read_instance(args.instance)
    sol = brute_force(instance)
    _emit(serialize_solution(instance_kind(instance), sol, sol.components.component_of), args.out)
    if args.structure:
        report = check_structure(instance, sol)
        _emit(json.dumps(report.to_dict(), sort_keys=True) + "\n", args.structure)
    if args.svg:
        _render_to(args.svg, instance, sol)
    return EXIT_OK


def cmd_verify(args) -> int:
    instance = read_instance(args.instance)
    if args.cut is not None:
        cut = read_cut(args.cut)
    else:
        cut = _ints(args.edges, "edges")
    unknown = [e for e in cut if e not in instance.graph.edge]
    if unknown:
        raise ValidationError("cut", f"unknown edge id {unknown[0]}")
    check = verify(instance, cut)
    w = sum(instance.graph.edge[e].w for e in set(cut))
    out = {"feasible": check.feasible, "weight": w, "violations": list(check.violations)}
    _emit(json.dumps(out) + "\n", args.out)
    return EXIT_OK if check.feasible else EXIT_INFEASIBLE


def _generate(family: str, size: list[int], k: int, seed: int, weights: list[int],
              clusters: list[int], terminals: int | None):
    if family not in FAMILIES:
        raise UsageError(f"--family must be one of {', '.join(FAMILIES)}")
    if len(weights) not in (0, 2) or (weights and not 0 <= weights[0] <= weights[1]):
        raise UsageError("--weights expects LO,HI with 0 <= LO <= HI")
    wr = tuple(weights) if weights else (1, 1)
    if family in ("grid", "outerplanar") and len(size) != 2:
        raise UsageError(f"--size for {family} expects two integers (rows,cols or n,chords)")
    if k < 0:
        raise UsageError("--k must be nonnegative")
    spec = gen.GeneratorSpec(family, tuple(size), k, wr, seed)
    if clusters or terminals:
        if family in ("chain", "star"):
            raise UsageError("--clusters/--terminals need the grid or outerplanar family")
        base = gen.generate(dataclasses.replace(spec, k=0))
        if clusters:
            return gen.gen_mcc(base.graph, clusters, seed)
        return gen.gen_mtc(base.graph, terminals, seed)
    return gen.generate(spec)


def cmd_generate(args) -> int:
    try:
        inst = _generate(args.family, _ints(args.size, "size"), args.k, args.seed,
                         _ints(args.weights, "weights"), _ints(args.clusters, "clusters"), args.terminals)
    except ValueError as exc:
        if isinstance(exc, (UsageError, GraphError)):
            raise
        raise UsageError(str(exc)) from None
    _emit(serialize_instance(inst), args.out)
    if args.svg:
        _render_to(args.svg, inst, None)
    return EXIT_OK


def _grid_shape(n: int) -> tuple[int, int]:
    r = max(1, math.isqrt(n))
    return r, -(-n // r)


def loglog_slope(ns: Sequence[float], ts: Sequence[float]) -> float:
    """Least-squares slope of log(t) against log(n)."""
    xs = [math.log(n) for n in ns]
    ys = [math.log(max(t, 1e-9)) for t in ts]
    mx, my = sum(xs) / len(xs), sum(ys) / len(ys)
    den = sum((x - mx) ** 2 for x in xs)
    return sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / den if den else 0.0


def run_bench(family: str, k: int, sizes: Sequence[int], seed: int, options: SolverOptions,
              weights: tuple[int, int] = (1, 1)) -> list[dict]:
    rows = []
    for n in sizes:
        if family == "grid":
            inst = gen.gen_grid(*_grid_shape(n), k, seed, weights)
        elif family == "outerplanar":
            inst = gen.gen_outerplanar(n, n // 2, k, seed, weights)
        elif family == "chain":
            inst = gen.gen_chain(max(k, n // 2))
        else:
            inst = gen.gen_star(max(k, n // 2))
        stats = SolveStats()
        t0 = time.perf_counter()
        res = solve_raw(inst, options, stats)
        wall = time.perf_counter() - t0
        rows.append({"family": family, "n": inst.graph.vertex_count, "k": inst.k, "wall_time": wall,
                     "branches": stats.structures, "mtc_calls": stats.mtc_calls,
                     "weight": res.solution.total_weight})
    return rows


def cmd_bench(args) -> int:
    options = _options(args)
    sizes = _ints(args.sizes, "sizes")
    if not sizes or any(n < 2 for n in sizes):
        raise UsageError("--sizes expects integers >= 2")
    if args.family not in FAMILIES:
        raise UsageError(f"--family must be one of {', '.join(FAMILIES)}")
    weights = _ints(args.weights, "weights")
    rows = run_bench(args.family, args.k, sizes, args.seed, options, tuple(weights) if weights else (1, 1))
    buf = io.StringIO()
    fields = ["family", "n", "k", "wall_time", "branches", "mtc_calls", "weight"]
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow({**r, "wall_time": f"{r['wall_time']:.6f}"})
    _emit(buf.getvalue(), args.out)
    slope = loglog_slope([r["n"] for r in rows], [r["wall_time"] for r in rows]) if len(rows) > 1 else None
    if slope is not None:
        print(f"log-log slope {slope:.3f}", file=sys.stderr)
    if args.plot:
        from .render import plot_scaling

        plot_scaling(rows, args.plot, slope)
    return EXIT_OK


def cmd_render(args) -> int:
    instance = read_instance(args.instance)
    sol = None
    if args.cut:
        cut = read_cut(args.cut)
        unknown = [e for e in cut if e not in instance.graph.edge]
        if unknown:
            raise ValidationError("cut", f"unknown edge id {unknown[0]}")
        sol = CutSolution.from_cut(instance.graph, cut)
    if not args.svg:
        raise UsageError("render needs --svg PATH")
    _render_to(args.svg, instance, sol)
    return EXIT_OK


def cmd_stats(args) -> int:
    """Instance summary and enumeration sizes, without solving."""
    instance = read_instance(args.instance)
    g = instance.graph
    out: dict = {"kind": instance_kind(instance), "vertices": g.vertex_count, "edges": len(g.edges),
                 "faces": len(g.faces), "outer_walk_length": len(g.outer_walk),
                 "connected": g.is_connected(), "simple": g.is_simple()}
    if isinstance(instance, MinMCInstance):
        k = instance.k
        order = [v for v in g.boundary_vertices if v in set(instance.terminals)]
        cls = list(enumerate_clusterings(instance.pairs))
        kept = [c for c in cls if check_noncrossing(c, order)]
        out.update({"k": k, "clustering_candidates": candidate_count(k), "clusterings": len(cls),
                    "noncrossing_clusterings": len(kept),
                    "top_level_structures": sum(sum(1 for _ in enumerate_structures(c, order)) for c in kept)})
    elif isinstance(instance, MCCInstance):
        out["clusters"] = len(instance.clusters)
    else:
        out["terminals"] = len(instance.terminals)
    _emit(json.dumps(out, sort_keys=True) + "\n", args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="planarcut", description="Exact planar multicut with terminals on the outer face.")
    sub = p.add_subparsers(dest="command", required=True)

    def solver_flags(sp):
        sp.add_argument("--budget", type=int, default=None, help="cap on explored branches (default: none)")
        sp.add_argument("--threads", type=int, default=1, help="worker processes for the clustering loop")
        sp.add_argument("--no-prune", action="store_true", help="do not skip crossing clusterings")
        sp.add_argument("--memoize", action="store_true", help="cache recursive subproblems")
        sp.add_argument("--seed", type=int, default=0, help="accepted for uniformity; solving is deterministic")

    sp = sub.add_parser("solve", help="solve an instance file")
    sp.add_argument("--instance", required=True)
    sp.add_argument("--out", help="solution file (default: stdout)")
    sp.add_argument("--stats", help="write a stats record (JSON) to this path")
    sp.add_argument("--svg", help="also draw the solution")
    solver_flags(sp)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("oracle", help="exhaustive optimum (small instances only)")
    sp.add_argument("--instance", required=True)
    sp.add_argument("--out")
    sp.add_argument("--structure", help="write the dual cycle structure report here")
    sp.add_argument("--svg")
    solver_flags(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("verify", help="check whether a cut separates everything required")
    sp.add_argument("--instance", required=True)
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--cut", help="solution file or JSON list of edge ids")
    g.add_argument("--edges", help="comma-separated edge ids ('' for the empty cut)")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("generate", help="write a generated instance")
    sp.add_argument("--family", required=True)
    sp.add_argument("--size", default="", help="grid: ROWS,COLS; outerplanar: N,CHORDS")
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--weights", default="", help="LO,HI (default 1,1)")
    sp.add_argument("--clusters", default="", help="cluster sizes, e.g. 2,1,1 (multi-cluster instance)")
    sp.add_argument("--terminals", type=int, default=None, help="terminal count (multiterminal instance)")
    sp.add_argument("--out")
    sp.add_argument("--svg")
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("bench", help="time the solver over generated sizes, CSV output")
    sp.add_argument("--family", default="grid")
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--sizes", default="100,1000,10000")
    sp.add_argument("--weights", default="")
    sp.add_argument("--out")
    sp.add_argument("--plot", help="log-log plot (PNG or SVG)")
    solver_flags(sp)
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("render", help="draw an instance, optionally with a cut")
    sp.add_argument("--instance", required=True)
    sp.add_argument("--cut")
    sp.add_argument("--svg", required=True)
    sp.set_defaults(func=cmd_render)

    sp = sub.add_parser("stats", help="instance summary and enumeration sizes")
    sp.add_argument("--instance", required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_stats)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ValidationError, OracleCapExceeded) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except GraphError as exc:
        if str(exc).startswith("internal"):
            print(f"internal error: {exc}", file=sys.stderr)
            return EXIT_INTERNAL
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
