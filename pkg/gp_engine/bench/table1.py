# Path and File Name : gp_engine/bench/table1.py
# Author: gp_engine maintainers
# Details of functionality of this file: Benchmark harness running BB, GA and SA over the instance table and comparing against expected general position numbers

"""
Benchmark Table Harness

Loads the instance table (bench/table1.yaml), runs the exact solver once
per instance and GA/SA over `runs` seeds (seed_base + i), and compares the
best sizes with the expected column. Jobs are independent and run on a
ThreadPoolExecutor capped by the configured thread count; records are
sorted before output, so results do not depend on scheduling.

Fullerene rows read adjacency files from a user-supplied directory and are
marked "skipped (no data)" when the file is missing.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import yaml

from ..config import DEFAULT_BENCH_TABLE
from ..errors import ConfigError, IntegrityError
from ..exact.branch_and_bound import BranchAndBoundOptions, branch_and_bound_gp
from ..graph import oracle_for
from ..graph.generators import parse_spec
from ..graph.intervals import IntervalOracle
from ..graph.serialization import load_graph_file
from ..heuristics.annealing import SaParams, sa_solve
from ..heuristics.genetic import GaParams, ga_solve
from ..results import SolveResult
from .records import RunRecord, make_record

logger = logging.getLogger("gp_engine.bench.table1")

METHODS = ("bb", "ga", "sa")
FULLERENE_SUFFIXES = (".g6", ".graph6", ".txt", ".edges")

STATUS_MATCH = "match"
STATUS_MISMATCH = "MISMATCH"
STATUS_ATTAINED = "attained"
STATUS_BELOW = "below expected"
STATUS_REPORTED = "reported"
STATUS_NO_DATA = "skipped (no data)"
STATUS_EXTENDED = "skipped (extended)"


@dataclass(frozen=True)
class BenchInstance:
    """One row of the instance table."""
    name: str
    spec: Optional[str]  # None for fullerene rows
    expected: Optional[int]
    methods: Tuple[str, ...] = METHODS
    ga: Dict[str, int] = field(default_factory=dict)
    sa: Dict[str, float] = field(default_factory=dict)
    extended: bool = False
    fullerene: bool = False


@dataclass
class BenchRow:
    """Comparison line for one instance."""
    name: str
    n: Optional[int]
    expected: Optional[int]
    asserted: bool
    exact: Optional[int] = None
    exact_note: str = "-"
    ga_best: Optional[int] = None
    sa_best: Optional[int] = None
    status: str = STATUS_REPORTED


@dataclass
class BenchReport:
    rows: List[BenchRow]
    records: List[RunRecord]

    @property
    def mismatches(self) -> List[BenchRow]:
        return [r for r in self.rows if r.status == STATUS_MISMATCH]

    def format(self) -> str:
        def cell(value: Optional[int]) -> str:
            return "-" if value is None else str(value)

        header = f"{'graph':<22} {'n':>4} {'expected':>8} {'BB':>4} {'GA':>4} {'SA':>4}  status"
        lines = [header, "-" * len(header)]
        for r in self.rows:
            expected = cell(r.expected) + ("" if r.asserted or r.expected is None else "?")
            status = r.status if r.exact_note in ("-", "optimal") else f"{r.status}; BB {r.exact_note}"
            lines.append(f"{r.name:<22} {cell(r.n):>4} {expected:>8} {cell(r.exact):>4} "
                         f"{cell(r.ga_best):>4} {cell(r.sa_best):>4}  {status}")
        return "\n".join(lines) + "\n"


def _load_entry(entry: Dict[str, Any], fullerene: bool, source: Path) -> BenchInstance:
    if not isinstance(entry, dict) or "name" not in entry:
        raise ConfigError(f"{source}: every instance needs a name, got {entry!r}")
    name = str(entry["name"])
    spec = entry.get("spec")
    if not fullerene and not spec:
        raise ConfigError(f"{source}: instance {name} has no spec")
    expected = entry.get("expected")
    if expected is not None and (not isinstance(expected, int) or expected < 1):
        raise ConfigError(f"{source}: instance {name} has invalid expected value {expected!r}")
    methods = tuple(entry.get("methods", METHODS))
    unknown = [m for m in methods if m not in METHODS]
    if unknown:
        raise ConfigError(f"{source}: instance {name} names unknown methods {unknown}")
    ga = dict(entry.get("ga") or {})
    sa = dict(entry.get("sa") or {})
    if "ga" in methods and not {"population_size", "max_iterations"} <= ga.keys():
        raise ConfigError(f"{source}: instance {name} needs ga.population_size and ga.max_iterations")
    if "sa" in methods and "max_iterations" not in sa:
        raise ConfigError(f"{source}: instance {name} needs sa.max_iterations")
    return BenchInstance(
        name=name,
        spec=str(spec) if spec else None,
        expected=expected,
        methods=methods,
        ga=ga,
        sa=sa,
        extended=bool(entry.get("extended", False)),
        fullerene=fullerene,
    )


def load_bench_table(table_path: Optional[Path] = None) -> List[BenchInstance]:
    """Read and validate the instance table."""
    table_path = Path(table_path or DEFAULT_BENCH_TABLE)
    try:
        with open(table_path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except OSError as e:
        raise ConfigError(f"cannot read benchmark table {table_path}: {e}") from e
    except yaml.YAMLError as e:
        raise ConfigError(f"benchmark table {table_path} is not valid YAML: {e}") from e

    if not isinstance(data, dict):
        raise ConfigError(f"benchmark table {table_path} must be a mapping")
    instances = [_load_entry(e, False, table_path) for e in data.get("instances") or []]
    instances += [_load_entry(e, True, table_path) for e in data.get("fullerenes") or []]
    logger.info(f"Loaded {len(instances)} benchmark instances from {table_path}")
    return instances


def find_fullerene_file(directory: Path, name: str) -> Optional[Path]:
    for suffix in FULLERENE_SUFFIXES:
        candidate = Path(directory) / f"{name}{suffix}"
        if candidate.is_file():
            return candidate
    return None


def run_jobs(jobs: Sequence[Callable[[], Any]], threads: int = 1) -> List[Any]:
    """Run zero-argument jobs, in order when threads == 1; results keep job order."""
    if threads <= 1 or len(jobs) <= 1:
        return [job() for job in jobs]
    with ThreadPoolExecutor(max_workers=threads, thread_name_prefix="gp-bench") as executor:
        return list(executor.map(lambda job: job(), jobs))


def best_of(results: Sequence[SolveResult]) -> Optional[SolveResult]:
    """Largest size; ties go to the earliest run."""
    return max(results, key=lambda r: r.size) if results else None


@dataclass
class _Prepared:
    instance: BenchInstance
    oracle: IntervalOracle
    vertex_transitive: bool


@dataclass(frozen=True)
class _Job:
    instance: str
    method: str
    params: Dict[str, Any]
    run: Callable[[], SolveResult]
    certified: bool = False


def _jobs_for(p: _Prepared, runs: int, seed_base: int, extended: bool) -> List[_Job]:
    inst, o = p.instance, p.oracle
    jobs: List[_Job] = []
    if "bb" in inst.methods and (extended or not inst.extended):
        options = BranchAndBoundOptions(vertex_transitive=p.vertex_transitive)
        jobs.append(_Job(inst.name, "bb", {"vertex_transitive": p.vertex_transitive},
                         lambda: branch_and_bound_gp(o, options).as_solve_result(), certified=True))
    for i in range(runs):
        seed = seed_base + i
        if "ga" in inst.methods:
            ga = GaParams(population_size=int(inst.ga["population_size"]),
                          max_iterations=int(inst.ga["max_iterations"]), seed=seed)
            jobs.append(_Job(inst.name, "ga",
                             {"population_size": ga.population_size, "max_iterations": ga.max_iterations},
                             lambda ga=ga: ga_solve(o, ga)))
        if "sa" in inst.methods:
            sa = SaParams(max_iterations=int(inst.sa["max_iterations"]),
                          initial_temperature=float(inst.sa.get("initial_temperature", 10.0)),
                          seed=seed)
            jobs.append(_Job(inst.name, "sa",
                             {"initial_temperature": sa.initial_temperature,
                              "max_iterations": sa.max_iterations,
                              "cooling_rate": sa.cooling_rate,
                              "cooling_time": sa.effective_cooling_time,
                              "acceptance": sa.acceptance_mode.value},
                             lambda sa=sa: sa_solve(o, sa)))
    return jobs


def _prepare(inst: BenchInstance, fullerene_dir: Optional[Path]) -> Optional[_Prepared]:
    if inst.fullerene:
        file_path = find_fullerene_file(fullerene_dir, inst.name)
        if file_path is None:
            logger.warning(f"No adjacency file for {inst.name} in {fullerene_dir}")
            return None
        g = load_graph_file(file_path).renamed(inst.name)
        return _Prepared(inst, oracle_for(g), vertex_transitive=False)
    spec = parse_spec(inst.spec)
    g = spec.build().renamed(inst.name)
    return _Prepared(inst, oracle_for(g), vertex_transitive=spec.vertex_transitive)


def _row_for(p: Optional[_Prepared], inst: BenchInstance, paper_isomers: bool,
             results: Dict[str, List[Tuple[_Job, SolveResult]]], extended: bool) -> BenchRow:
    asserted = inst.expected is not None and (paper_isomers or not inst.fullerene)
    row = BenchRow(name=inst.name, n=p.oracle.n if p else None,
                   expected=inst.expected, asserted=asserted)
    if p is None:
        row.status = STATUS_NO_DATA
        return row

    def best(method: str) -> Optional[int]:
        found = [r.size for _, r in results.get(method, [])]
        return max(found) if found else None

    row.ga_best, row.sa_best = best("ga"), best("sa")
    exact = results.get("bb", [])
    if exact:
        _, result = exact[0]
        row.exact = result.size
        row.exact_note = "optimal"
        for method, found in (("GA", row.ga_best), ("SA", row.sa_best)):
            if found is not None and found > row.exact:
                raise IntegrityError(
                    f"{method} found size {found} on {inst.name}, above the certified optimum {row.exact}")
    elif "bb" in inst.methods and inst.extended and not extended:
        row.exact_note = STATUS_EXTENDED

    if not asserted:
        row.status = STATUS_REPORTED
    elif row.exact is not None:
        row.status = STATUS_MATCH if row.exact == inst.expected else STATUS_MISMATCH
    else:
        heuristic = max((v for v in (row.ga_best, row.sa_best) if v is not None), default=None)
        row.status = STATUS_ATTAINED if heuristic == inst.expected else STATUS_BELOW
    return row


def bench_table1(runs: int = 10, fullerene_dir: Optional[Path] = None, *,
                 seed_base: int = 0, extended: bool = False, paper_isomers: bool = False,
                 threads: int = 1, table_path: Optional[Path] = None) -> BenchReport:
    """
    Run the benchmark table.

    Fullerene rows are included only when fullerene_dir is given; their
    expected values count as assertions only with paper_isomers.

    Raises:
        IntegrityError: a witness fails re-verification, or GA/SA beats the exact optimum.
    """
    if runs < 1:
        raise ConfigError(f"runs must be >= 1, got {runs}")
    instances = [i for i in load_bench_table(table_path)
                 if not i.fullerene or fullerene_dir is not None]

    prepared: Dict[str, Optional[_Prepared]] = {}
    jobs: List[_Job] = []
    for inst in instances:
        p = _prepare(inst, fullerene_dir)
        prepared[inst.name] = p
        if p is not None:
            jobs.extend(_jobs_for(p, runs, seed_base, extended))

    logger.info(f"Running {len(jobs)} benchmark jobs on {threads} thread(s)")
    outcomes = run_jobs([job.run for job in jobs], threads)

    by_instance: Dict[str, Dict[str, List[Tuple[_Job, SolveResult]]]] = {}
    records: List[RunRecord] = []
    for job, result in zip(jobs, outcomes):
        by_instance.setdefault(job.instance, {}).setdefault(job.method, []).append((job, result))
        records.append(make_record(job.instance, prepared[job.instance].oracle, result,
                                   job.params, certified_optimal=job.certified))

    rows = [_row_for(prepared[i.name], i, paper_isomers, by_instance.get(i.name, {}), extended)
            for i in instances]
    report = BenchReport(rows=rows, records=records)
    for row in report.mismatches:
        logger.error(f"{row.name}: exact value {row.exact} differs from expected {row.expected}")
    return report
