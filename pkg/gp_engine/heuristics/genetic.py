# Path and File Name : gp_engine/heuristics/genetic.py
# Author: gp_engine maintainers
# Details of functionality of this file: Genetic algorithm with union crossover, swap mutation and merge-and-truncate survivor selection

"""
Genetic Algorithm

Per iteration, from a population of n_p individuals:
    1. floor(n_p / 2) parent pairs drawn uniformly, one union child each;
    2. n_p mutants, each a swap mutation of a uniformly drawn individual;
    3. parents, children and mutants merged, duplicates dropped, sorted by
       fitness descending (ties: graph.core.witness_key), truncated to n_p.
       When fewer than n_p distinct individuals remain, the sorted pool is
       repeated from its head until the population is n_p again.

The initial population is n_p uniformly random 2-element sets, all
feasible. Merge-and-truncate keeps the best individual, so the head of the
final population is the best fitness reached. It is repaired before being
reported. All random draws come from one numpy Generator in the order above.
"""

import logging
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, List, Optional, Sequence

import numpy as np

from ..errors import ParameterError
from ..graph.core import VertexSet, witness_key
from ..graph.intervals import IntervalOracle, count_violations_bits
from ..results import Method, SolveResult
from .fitness import (
    FitnessParams,
    fitness_bits,
    mutate_bits,
    random_pair_bits,
    repair_bits,
    resolve_fitness_params,
)

logger = logging.getLogger("gp_engine.heuristics.genetic")

_FITNESS_CACHE_SIZE = 1 << 16


@dataclass(frozen=True)
class GaParams:
    population_size: int
    max_iterations: int
    seed: Optional[int] = None

    def __post_init__(self):
        if self.population_size < 2:
            raise ParameterError(f"population size must be >= 2, got {self.population_size}")
        if self.max_iterations < 1:
            raise ParameterError(f"max iterations must be >= 1, got {self.max_iterations}")


def select_survivors(pool: Sequence[int], n_p: int,
                     rank: Callable[[int], tuple]) -> List[int]:
    """Distinct members of pool in rank order, cycled to exactly n_p entries."""
    distinct = sorted(set(pool), key=rank)
    if not distinct:
        raise ParameterError("survivor selection needs a non-empty pool")
    survivors = distinct[:n_p]
    while len(survivors) < n_p:
        survivors.extend(distinct[:n_p - len(survivors)])
    return survivors


def ga_solve(o: IntervalOracle, params: GaParams,
             fp: Optional[FitnessParams] = None,
             on_iteration: Optional[Callable[[int, List[int]], None]] = None) -> SolveResult:
    """
    Run the GA; deterministic given params.seed.

    on_iteration, when given, is called with (iteration, population bitmasks)
    after every survivor selection.
    """
    n = o.n
    fp = resolve_fitness_params(n, fp)
    big_m = fp.big_m
    n_p = params.population_size
    rng = np.random.default_rng(params.seed)
    started = time.perf_counter()

    @lru_cache(maxsize=_FITNESS_CACHE_SIZE)
    def score(bits: int) -> int:
        return fitness_bits(o, bits, big_m)

    @lru_cache(maxsize=_FITNESS_CACHE_SIZE)
    def rank(bits: int) -> tuple:
        return (-score(bits), witness_key(bits))

    population = sorted((random_pair_bits(n, rng) for _ in range(n_p)), key=rank)
    best_seen = score(population[0])

    for iteration in range(1, params.max_iterations + 1):
        children = []
        for _ in range(n_p // 2):
            i, j = rng.choice(n_p, size=2, replace=False)
            children.append(population[int(i)] | population[int(j)])
        mutants = []
        for _ in range(n_p):
            parent = population[int(rng.integers(n_p))]
            mutants.append(mutate_bits(parent, n, rng) if n >= 2 else parent)
        population = select_survivors(population + children + mutants, n_p, rank)
        if on_iteration is not None:
            on_iteration(iteration, list(population))

        head = score(population[0])
        if head > best_seen:
            best_seen = head
            logger.debug(f"GA iteration {iteration}: best fitness {head}")

    best = population[0]
    violations = count_violations_bits(o, best)
    repaired = repair_bits(o, best)
    elapsed = time.perf_counter() - started
    logger.info(f"GA seed={params.seed}: size {repaired.bit_count()} "
                f"(raw fitness {score(best)}) in {elapsed:.3f}s")
    return SolveResult(
        method=Method.GA,
        best_set=VertexSet(n, repaired),
        size=repaired.bit_count(),
        raw_fitness=score(best),
        feasible_before_repair=violations == 0,
        iterations_run=params.max_iterations,
        seed=params.seed,
        time=elapsed,
    )
