# Path and File Name : gp_engine/heuristics/fitness.py
# Author: gp_engine maintainers
# Details of functionality of this file: Penalized fitness, union crossover, swap mutation and feasibility repair shared by GA and SA

"""
Fitness and Operators

    Fitness(S) = |S| - M * f(S)

where f(S) counts violating pairs. With M > n a single removed violation
always outweighs any number of added vertices, so every feasible set
beats every infeasible one.

Operators work on raw integer bitsets internally; the public functions
take and return VertexSets.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..errors import ParameterError
from ..graph.core import VertexSet, bits_to_list
from ..graph.intervals import IntervalOracle, count_violations_bits

logger = logging.getLogger("gp_engine.heuristics.fitness")


@dataclass(frozen=True)
class FitnessParams:
    """Penalty weight M of the fitness function."""
    big_m: int

    @classmethod
    def default_for(cls, n: int) -> "FitnessParams":
        return cls(big_m=n + 1)

    def validate_for(self, n: int) -> None:
        if self.big_m <= n:
            raise ParameterError(f"penalty weight M must exceed n = {n}, got {self.big_m}")


def fitness_bits(o: IntervalOracle, bits: int, big_m: int) -> int:
    return bits.bit_count() - big_m * count_violations_bits(o, bits)


def fitness(o: IntervalOracle, s: VertexSet, p: FitnessParams) -> int:
    """|s| - M * count_violations(o, s)."""
    if s.n != o.n:
        raise ValueError(f"vertex set width {s.n} does not match oracle width {o.n}")
    p.validate_for(o.n)
    return fitness_bits(o, s.bits, p.big_m)


def crossover(a: VertexSet, b: VertexSet) -> VertexSet:
    """A vertex is in the child when it is in at least one parent."""
    return a.union(b)


def swap_bits(bits: int, i: int, j: int) -> int:
    """Exchange the bits at positions i and j."""
    if ((bits >> i) ^ (bits >> j)) & 1:
        bits ^= (1 << i) | (1 << j)
    return bits


def mutate_bits(bits: int, n: int, rng: np.random.Generator) -> int:
    i, j = rng.choice(n, size=2, replace=False)
    return swap_bits(bits, int(i), int(j))


def mutate(s: VertexSet, rng: np.random.Generator) -> VertexSet:
    """Swap the values of two distinct, uniformly drawn positions."""
    if s.n < 2:
        raise ValueError(f"mutation needs width >= 2, got {s.n}")
    return VertexSet(s.n, mutate_bits(s.bits, s.n, rng))


def random_pair_bits(n: int, rng: np.random.Generator) -> int:
    """A uniformly random 2-element set (a single vertex when n = 1); always feasible."""
    if n == 1:
        return 1
    i, j = rng.choice(n, size=2, replace=False)
    return (1 << int(i)) | (1 << int(j))


def repair_bits(o: IntervalOracle, bits: int) -> int:
    rows = o._rows
    while True:
        members = bits_to_list(bits)
        participation = {}
        for idx, u in enumerate(members):
            upper = rows[u]
            for v in members[idx + 1:]:
                hit = upper[v - u - 1] & bits
                if not hit:
                    continue
                participation[u] = participation.get(u, 0) + 1
                participation[v] = participation.get(v, 0) + 1
                for w in bits_to_list(hit):
                    participation[w] = participation.get(w, 0) + 1
        if not participation:
            return bits
        victim = max(participation, key=lambda v: (participation[v], v))
        bits &= ~(1 << victim)


def repair(o: IntervalOracle, s: VertexSet) -> VertexSet:
    """
    Drop vertices until s is in general position.

    Each round removes the member taking part in the most violating pairs
    (as an endpoint or as a witness); ties remove the highest index.
    """
    if s.n != o.n:
        raise ValueError(f"vertex set width {s.n} does not match oracle width {o.n}")
    return VertexSet(o.n, repair_bits(o, s.bits))


def resolve_fitness_params(n: int, fp: Optional[FitnessParams]) -> FitnessParams:
    fp = fp or FitnessParams.default_for(n)
    fp.validate_for(n)
    return fp
