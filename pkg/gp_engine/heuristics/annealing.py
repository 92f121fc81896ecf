# Path and File Name : gp_engine/heuristics/annealing.py
# Author: gp_engine maintainers
# Details of functionality of this file: Simulated annealing over vertex sets with Metropolis acceptance and geometric cooling

"""
Simulated Annealing

The walk state S starts as a random 2-element set. Each iteration draws k
distinct positions, evaluates the k single-bit-flip neighbours of S and
moves S to the best one (ties: graph.core.witness_key). The incumbent takes S on
improvement, otherwise with the Metropolis rule:

    standard:       exp(-(incumbent_fitness - S_fitness) / T) > r
    paper-literal:  exp(-S_fitness) / T > r

The temperature after t iterations is T_0 * rho ** floor(t / cooling_time).
Standard mode reports the best state ever visited; paper-literal mode
reports the incumbent. Either is repaired before being reported.
"""

import logging
import math
import time
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Optional

import numpy as np

from ..errors import ParameterError
from ..graph.core import VertexSet, witness_key
from ..graph.intervals import IntervalOracle, count_violations_bits
from ..results import Method, SolveResult
from .fitness import (
    FitnessParams,
    fitness_bits,
    random_pair_bits,
    repair_bits,
    resolve_fitness_params,
)

logger = logging.getLogger("gp_engine.heuristics.annealing")

_FITNESS_CACHE_SIZE = 1 << 16
# exp() overflows above this exponent
_EXP_LIMIT = 700.0


class AcceptanceMode(Enum):
    STANDARD = "standard"
    PAPER_LITERAL = "paper-literal"


@dataclass(frozen=True)
class SaParams:
    max_iterations: int
    initial_temperature: float = 10.0
    cooling_rate: float = 0.9
    cooling_time: Optional[int] = None  # default ceil(max_iterations / 20)
    neighbor_count: Optional[int] = None  # default max(10, ceil(n / 4))
    seed: Optional[int] = None
    acceptance_mode: AcceptanceMode = AcceptanceMode.STANDARD
    min_temperature: float = 0.0

    def __post_init__(self):
        if self.max_iterations < 1:
            raise ParameterError(f"max iterations must be >= 1, got {self.max_iterations}")
        if not self.initial_temperature > 0:
            raise ParameterError(f"initial temperature must be > 0, got {self.initial_temperature}")
        if not 0 < self.cooling_rate < 1:
            raise ParameterError(f"cooling rate must lie in (0, 1), got {self.cooling_rate}")
        if self.cooling_time is not None and self.cooling_time < 1:
            raise ParameterError(f"cooling time must be >= 1, got {self.cooling_time}")
        if self.neighbor_count is not None and self.neighbor_count < 1:
            raise ParameterError(f"neighbor count must be >= 1, got {self.neighbor_count}")
        if self.min_temperature < 0:
            raise ParameterError(f"minimum temperature must be >= 0, got {self.min_temperature}")

    @property
    def effective_cooling_time(self) -> int:
        if self.cooling_time is not None:
            return self.cooling_time
        return math.ceil(self.max_iterations / 20)

    def effective_neighbor_count(self, n: int) -> int:
        k = self.neighbor_count if self.neighbor_count is not None else max(10, math.ceil(n / 4))
        return min(k, n)


def temperature_at(params: SaParams, t: int) -> float:
    """Temperature after t completed iterations."""
    return params.initial_temperature * params.cooling_rate ** (t // params.effective_cooling_time)


def _accepts(mode: AcceptanceMode, walk_fit: int, incumbent_fit: int,
             temperature: float, r: float) -> bool:
    if mode is AcceptanceMode.STANDARD:
        return math.exp(-(incumbent_fit - walk_fit) / temperature) > r
    exponent = -walk_fit
    if exponent > _EXP_LIMIT:
        return True
    return math.exp(exponent) / temperature > r


def sa_solve(o: IntervalOracle, params: SaParams,
             fp: Optional[FitnessParams] = None) -> SolveResult:
    """Run SA; deterministic given params.seed."""
    n = o.n
    fp = resolve_fitness_params(n, fp)
    big_m = fp.big_m
    k = params.effective_neighbor_count(n)
    rng = np.random.default_rng(params.seed)
    started = time.perf_counter()

    @lru_cache(maxsize=_FITNESS_CACHE_SIZE)
    def score(bits: int) -> int:
        return fitness_bits(o, bits, big_m)

    walk = random_pair_bits(n, rng)
    walk_fit = score(walk)
    incumbent, incumbent_fit = walk, walk_fit
    best, best_fit = walk, walk_fit
    temperature = params.initial_temperature
    iterations = 0

    for count in range(1, params.max_iterations + 1):
        positions = rng.choice(n, size=k, replace=False)
        neighbors = [walk ^ (1 << int(p)) for p in positions]
        walk = min(neighbors, key=lambda b: (-score(b), witness_key(b)))
        walk_fit = score(walk)

        if walk_fit > incumbent_fit:
            incumbent, incumbent_fit = walk, walk_fit
        else:
            r = rng.random()
            if _accepts(params.acceptance_mode, walk_fit, incumbent_fit, temperature, r):
                incumbent, incumbent_fit = walk, walk_fit
        if walk_fit > best_fit:
            best, best_fit = walk, walk_fit

        iterations = count
        cooled = temperature_at(params, count)
        if cooled != temperature:
            logger.debug(f"SA iteration {count}: temperature {cooled:.6g}")
        temperature = cooled
        if temperature < params.min_temperature:
            logger.debug(f"SA stopped at iteration {count}: temperature below {params.min_temperature}")
            break

    chosen = best if params.acceptance_mode is AcceptanceMode.STANDARD else incumbent
    violations = count_violations_bits(o, chosen)
    repaired = repair_bits(o, chosen)
    elapsed = time.perf_counter() - started
    logger.info(f"SA seed={params.seed}: size {repaired.bit_count()} "
                f"(raw fitness {score(chosen)}) in {elapsed:.3f}s")
    return SolveResult(
        method=Method.SA,
        best_set=VertexSet(n, repaired),
        size=repaired.bit_count(),
        raw_fitness=score(chosen),
        feasible_before_repair=violations == 0,
        iterations_run=iterations,
        seed=params.seed,
        time=elapsed,
    )
