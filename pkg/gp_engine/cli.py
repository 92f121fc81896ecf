# Path and File Name : gp_engine/cli.py
# Author: gp_engine maintainers
# Details of functionality of this file: Command-line entry point for graph generation, solving, LP export, verification, DOT drawing and the benchmark table

"""
gp_engine command line

Usage:
    python3 -m gp_engine gen q3 [-o q3.txt] [--format graph6]
    python3 -m gp_engine solve --graph q3 --method bb [--json out.json]
    python3 -m gp_engine export-lp --graph cay:9:1,3,6,8 -o cay9.lp
    python3 -m gp_engine verify --graph c6 --set "0,2,4"
    python3 -m gp_engine bench table1 [--runs 10] [--fullerenes DIR]
    python3 -m gp_engine draw --graph q3 --set "0,3,5,6" -o q3.dot

Exit codes:
    0: Success (verify: set is in general position)
    1: verify found violating pairs; bench found an exact value differing from the table
    2: Error (usage, unknown graph spec, malformed set, missing file, integrity failure)
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence, Tuple

from . import __version__
from .bench.records import make_record, write_records_json
from .bench.table1 import bench_table1, best_of, run_jobs
from .config import Config
from .errors import GpEngineError, GraphSpecError, IntegrityError, ParameterError
from .exact.branch_and_bound import BranchAndBoundOptions, branch_and_bound_gp
from .exact.brute_force import brute_force_gp
from .exact.ilp import build_ilp, write_lp
from .graph import oracle_for
from .graph.core import Graph, VertexSet
from .graph.generators import GraphSpec, parse_spec
from .graph.intervals import violating_pairs
from .graph.serialization import EDGE_LIST, FORMATS, load_graph_file, to_dot, write_graph
from .heuristics.annealing import AcceptanceMode, SaParams, sa_solve
from .heuristics.fitness import FitnessParams
from .heuristics.genetic import GaParams, ga_solve
from .logging_config import setup_logging

logger = logging.getLogger("gp_engine.cli")


def resolve_graph(text: str) -> Tuple[Optional[GraphSpec], Graph]:
    """A spec string, or failing that, the path of an existing graph file."""
    try:
        spec = parse_spec(text)
    except GraphSpecError:
        if Path(text).is_file():
            return None, load_graph_file(Path(text))
        raise
    return spec, spec.build()


def parse_vertex_set(text: str, n: int) -> VertexSet:
    """Parse "v1,v2,..." (optionally in braces) into a VertexSet of width n."""
    body = text.strip()
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    if not body.strip():
        return VertexSet.empty(n)
    vertices = []
    for field in body.split(","):
        try:
            vertices.append(int(field.strip()))
        except ValueError:
            raise GraphSpecError(f"malformed set string {text!r}: {field.strip()!r} is not a vertex") from None
    if len(set(vertices)) != len(vertices):
        raise GraphSpecError(f"malformed set string {text!r}: repeated vertex")
    out_of_range = [v for v in vertices if not 0 <= v < n]
    if out_of_range:
        raise GraphSpecError(f"set string {text!r} names vertices outside 0..{n - 1}: {out_of_range}")
    return VertexSet.from_vertices(n, vertices)


def _emit(text: str, output: Optional[str], what: str) -> None:
    if output:
        output_path = Path(output)
        output_path.parent.mkdir(parents=True, exist_ok=True)
        with open(output_path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        print(f"{what} written to: {output_path}", file=sys.stderr)
    else:
        sys.stdout.write(text)


def cmd_gen(args, config: Config) -> int:
    _, g = resolve_graph(args.spec)
    _emit(write_graph(g, args.format), args.output, "Graph")
    return 0


def _or_default(value, default):
    return default if value is None else value


def _ga_params(args, seed: int) -> GaParams:
    return GaParams(population_size=_or_default(args.population_size, 20),
                    max_iterations=_or_default(args.max_iterations, 200), seed=seed)


def _sa_params(args, seed: int) -> SaParams:
    return SaParams(
        max_iterations=_or_default(args.max_iterations, 100),
        initial_temperature=args.initial_temperature,
        cooling_rate=args.cooling_rate,
        cooling_time=args.cooling_time,
        neighbor_count=args.neighbors,
        seed=seed,
        acceptance_mode=AcceptanceMode(args.acceptance),
        min_temperature=args.min_temperature,
    )


def cmd_solve(args, config: Config) -> int:
    spec, g = resolve_graph(args.graph)
    o = oracle_for(g)
    method = args.method
    fp = FitnessParams(args.big_m) if args.big_m is not None else None

    if method in ("bf", "bb"):
        if method == "bf":
            exact = brute_force_gp(o)
            params = {}
        else:
            symmetric = bool(spec and spec.vertex_transitive and not args.no_symmetry)
            exact = branch_and_bound_gp(o, BranchAndBoundOptions(
                time_limit=args.time_limit, vertex_transitive=symmetric))
            params = {"vertex_transitive": symmetric}
        results = [exact.as_solve_result()]
        certified = exact.optimal
        run_params = [params]
    else:
        if args.runs < 1:
            raise ParameterError(f"--runs must be >= 1, got {args.runs}")
        seeds = [args.seed + i for i in range(args.runs)]
        if method == "ga":
            param_sets = [_ga_params(args, s) for s in seeds]
            jobs = [lambda p=p: ga_solve(o, p, fp) for p in param_sets]
            run_params = [{"population_size": p.population_size, "max_iterations": p.max_iterations}
                          for p in param_sets]
        else:
            param_sets = [_sa_params(args, s) for s in seeds]
            jobs = [lambda p=p: sa_solve(o, p, fp) for p in param_sets]
            run_params = [{"initial_temperature": p.initial_temperature,
                           "max_iterations": p.max_iterations,
                           "cooling_rate": p.cooling_rate,
                           "cooling_time": p.effective_cooling_time,
                           "acceptance": p.acceptance_mode.value} for p in param_sets]
        results = run_jobs(jobs, config.threads)
        certified = False

    records = [make_record(g.name, o, r, p, certified_optimal=certified)
               for r, p in zip(results, run_params)]
    best = best_of(results)

    print(f"graph {g.name or args.graph} (n = {g.n})")
    if method in ("bf", "bb"):
        note = "optimal" if certified else "not proven optimal"
    elif len(results) > 1:
        note = f"best of {len(results)} runs, seed {best.seed}"
    else:
        note = f"seed {best.seed}"
    print(f"method {best.method.value}: size {best.size} ({note})")
    print(f"witness {best.best_set}")

    if args.json:
        write_records_json(records, Path(args.json), omit_timings=args.omit_timings)
    return 0


def cmd_export_lp(args, config: Config) -> int:
    _, g = resolve_graph(args.graph)
    model = build_ilp(oracle_for(g), big_m=args.big_m, name=g.name)
    _emit(write_lp(model), args.output, "LP model")
    return 0


def cmd_verify(args, config: Config) -> int:
    _, g = resolve_graph(args.graph)
    o = oracle_for(g)
    s = parse_vertex_set(args.set, g.n)
    found = violating_pairs(o, s)
    if not found:
        print(f"feasible: {s} is in general position (size {len(s)})")
        return 0
    print(f"infeasible: {len(found)} violating pair(s) in {s}")
    for violation in found:
        print(f"  pair {{{violation.u},{violation.v}}}: witnesses {violation.witnesses}")
    return 1


def cmd_draw(args, config: Config) -> int:
    _, g = resolve_graph(args.graph)
    s = parse_vertex_set(args.set, g.n)
    _emit(to_dot(g, s), args.output, "DOT drawing")
    return 0


def cmd_bench(args, config: Config) -> int:
    fullerene_dir = Path(args.fullerenes) if args.fullerenes else config.fullerene_dir
    report = bench_table1(
        args.runs,
        fullerene_dir,
        seed_base=args.seed_base,
        extended=args.extended,
        paper_isomers=args.paper_isomers,
        threads=config.threads,
        table_path=config.bench_table_path,
    )
    sys.stdout.write(report.format())
    if args.json:
        write_records_json(report.records, Path(args.json), omit_timings=args.omit_timings)
    return 1 if report.mismatches else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gp_engine",
        description="General position number solvers for connected graphs",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Graph specs:
    qN              hypercube Q_N
    cN, pN, kN      cycle, path, complete graph
    cay:N:c1,c2,..  circulant Cay(Z_N, {c1, c2, ...})
    rand:N:P:SEED   seeded random connected graph
    file:PATH[:FMT] edge-list or graph6 file (a bare existing path also works)
        """
    )
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest='command', required=True)

    gen = sub.add_parser('gen', help='Emit a graph as edge-list or graph6')
    gen.add_argument('spec', help='Graph spec')
    gen.add_argument('--output', '-o', help='Output file (default: stdout)')
    gen.add_argument('--format', choices=FORMATS, default=EDGE_LIST, help='Output format (default: edge-list)')
    gen.set_defaults(handler=cmd_gen)

    solve = sub.add_parser('solve', help='Compute or approximate gp(G)')
    solve.add_argument('--graph', required=True, help='Graph spec or file')
    solve.add_argument('--method', required=True, choices=('bf', 'bb', 'ga', 'sa'))
    solve.add_argument('--population-size', type=int, help='GA population size (default: 20)')
    solve.add_argument('--max-iterations', type=int, help='GA/SA iterations (default: GA 200, SA 100)')
    solve.add_argument('--initial-temperature', type=float, default=10.0, help='SA T_0 (default: 10)')
    solve.add_argument('--cooling-rate', type=float, default=0.9, help='SA rho (default: 0.9)')
    solve.add_argument('--cooling-time', type=int, help='SA iterations per cooling step (default: ceil(Maxit/20))')
    solve.add_argument('--neighbors', type=int, help='SA neighbours per iteration (default: max(10, ceil(n/4)))')
    solve.add_argument('--min-temperature', type=float, default=0.0, help='SA stops below this temperature')
    solve.add_argument('--acceptance', choices=[m.value for m in AcceptanceMode],
                       default=AcceptanceMode.STANDARD.value, help='SA acceptance rule')
    solve.add_argument('--big-m', type=int, help='Fitness penalty weight M (default: n + 1)')
    solve.add_argument('--time-limit', type=float, help='Branch and bound time limit in seconds')
    solve.add_argument('--no-symmetry', action='store_true',
                       help='Do not exploit vertex transitivity in branch and bound')
    solve.add_argument('--runs', type=int, default=1, help='GA/SA runs with seeds SEED..SEED+RUNS-1')
    solve.add_argument('--seed', type=int, default=0, help='Base seed (default: 0)')
    solve.add_argument('--json', help='Write run records to this file')
    solve.add_argument('--omit-timings', action='store_true', help='Write wall_time_ms as null')
    solve.set_defaults(handler=cmd_solve)

    export = sub.add_parser('export-lp', help='Export the ILP model in LP format')
    export.add_argument('--graph', required=True, help='Graph spec or file')
    export.add_argument('--output', '-o', help='Output file (default: stdout)')
    export.add_argument('--big-m', type=int, help='Constraint constant M (default: n)')
    export.set_defaults(handler=cmd_export_lp)

    verify = sub.add_parser('verify', help='Check a vertex set for general position')
    verify.add_argument('--graph', required=True, help='Graph spec or file')
    verify.add_argument('--set', required=True, help='Vertices, e.g. "0,2,4"')
    verify.set_defaults(handler=cmd_verify)

    bench = sub.add_parser('bench', help='Benchmark tables')
    bench_sub = bench.add_subparsers(dest='table', required=True)
    table1 = bench_sub.add_parser('table1', help='Hypercube, Cayley and fullerene instances')
    table1.add_argument('--runs', type=int, default=10, help='GA/SA seeds per instance (default: 10)')
    table1.add_argument('--seed-base', type=int, default=0, help='First seed (default: 0)')
    table1.add_argument('--json', help='Write run records to this file')
    table1.add_argument('--fullerenes', help='Directory with C42/C44/C46/C48 adjacency files')
    table1.add_argument('--extended', action='store_true', help='Also run the exact solver on Q_7')
    table1.add_argument('--paper-isomers', action='store_true',
                        help='Treat fullerene expected values as assertions')
    table1.add_argument('--omit-timings', action='store_true', help='Write wall_time_ms as null')
    table1.set_defaults(handler=cmd_bench)

    draw = sub.add_parser('draw', help='Render a graph and a highlighted set as DOT')
    draw.add_argument('--graph', required=True, help='Graph spec or file')
    draw.add_argument('--set', required=True, help='Vertices to highlight')
    draw.add_argument('--output', '-o', help='Output file (default: stdout)')
    draw.set_defaults(handler=cmd_draw)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main CLI entry point."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    try:
        config = Config.from_env()
        setup_logging(config)
        return args.handler(args, config)
    except IntegrityError as e:
        print(f"Integrity failure: {e}", file=sys.stderr)
        return 2
    except GpEngineError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 2


if __name__ == '__main__':
    sys.exit(main())
