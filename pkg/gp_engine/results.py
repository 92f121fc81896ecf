# Path and File Name : gp_engine/results.py
# Author: gp_engine maintainers
# Details of functionality of this file: Result types shared by the exact solvers, the metaheuristics and the benchmark harness

"""
Solver result types.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .graph.core import VertexSet


class Method(Enum):
    """Solver tags as they appear in reports."""
    GA = "GA"
    SA = "SA"
    BB = "BB"
    BF = "BF"

    @property
    def certifies_optimum(self) -> bool:
        return self in (Method.BB, Method.BF)


@dataclass(frozen=True)
class SolveResult:
    """Outcome of one solver run; best_set is always a certified general position set."""
    method: Method
    best_set: VertexSet
    size: int
    raw_fitness: int
    feasible_before_repair: bool
    iterations_run: int
    seed: Optional[int]
    time: float  # seconds


@dataclass(frozen=True)
class ExactResult:
    """Outcome of an exact search; gp is certified when optimal is true."""
    method: Method
    gp: int
    witness: VertexSet
    nodes_explored: int
    time: float  # seconds
    optimal: bool = True

    def as_solve_result(self) -> SolveResult:
        return SolveResult(
            method=self.method,
            best_set=self.witness,
            size=self.gp,
            raw_fitness=self.gp,
            feasible_before_repair=True,
            iterations_run=self.nodes_explored,
            seed=None,
            time=self.time,
        )
