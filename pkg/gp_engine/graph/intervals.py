# Path and File Name : gp_engine/graph/intervals.py
# Author: gp_engine maintainers
# Details of functionality of this file: Geodesic interval oracle and the general-position verification predicates

"""
Interval Oracle

For every unordered pair u < v the oracle stores, as a packed bitset, the
interior vertices of all shortest (u, v)-paths:

    w in I(u, v)  <=>  w not in {u, v} and d(u, w) + d(w, v) = d(u, v)

A vertex set S is in general position when no pair of S has an interval
meeting S. A violation is counted once per offending pair, however many
witnesses the pair has.
"""

import logging
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from .core import DistanceMatrix, Graph, VertexSet, bits_to_list

logger = logging.getLogger("gp_engine.graph.intervals")


class IntervalOracle:
    """Dense interval table over unordered pairs; immutable after construction."""

    def __init__(self, n: int, rows: Tuple[Tuple[int, ...], ...]):
        # rows[u][v - u - 1] is I(u, v) for v > u
        self.n = n
        self._rows = rows

    def interval(self, u: int, v: int) -> int:
        """Interval bitset of the pair {u, v}; either order, u != v."""
        if u == v:
            raise ValueError(f"interval of a vertex with itself is undefined (vertex {u})")
        if u > v:
            u, v = v, u
        return self._rows[u][v - u - 1]

    def interval_set(self, u: int, v: int) -> VertexSet:
        return VertexSet(self.n, self.interval(u, v))

    def row(self, u: int) -> List[int]:
        """Intervals I(u, v) for every v, with 0 on the diagonal."""
        out = [0] * self.n
        for v in range(u):
            out[v] = self._rows[v][u - v - 1]
        upper = self._rows[u]
        for offset, bits in enumerate(upper):
            out[u + 1 + offset] = bits
        return out

    def pairs(self):
        """Yield (u, v, interval bits) for every pair u < v."""
        for u, upper in enumerate(self._rows):
            for offset, bits in enumerate(upper):
                yield u, u + 1 + offset, bits

    def membership_counts(self) -> List[int]:
        """Per vertex, the number of pairs whose interval contains it."""
        counts = [0] * self.n
        for _, _, bits in self.pairs():
            for w in bits_to_list(bits):
                counts[w] += 1
        return counts

    def nonempty_pair_count(self) -> int:
        return sum(1 for _, _, bits in self.pairs() if bits)


@dataclass(frozen=True)
class Violation:
    """A violating pair u < v of a vertex set and the members inside its interval."""
    u: int
    v: int
    witnesses: VertexSet


def build_interval_oracle(g: Graph, d: DistanceMatrix) -> IntervalOracle:
    """Precompute I(u, v) for all pairs u < v from the distance matrix."""
    n = g.n
    dist = d.d
    rows = []
    for u in range(n - 1):
        du = dist[u]
        lower = dist[u + 1:]
        # mask[i, w]: w lies on a shortest (u, u+1+i)-path
        mask = (du[np.newaxis, :] + lower) == du[u + 1:, np.newaxis]
        mask[:, u] = False
        mask[np.arange(n - u - 1), np.arange(u + 1, n)] = False
        packed = np.packbits(mask, axis=1, bitorder="little")
        rows.append(tuple(int.from_bytes(r.tobytes(), "little") for r in packed))
    rows.append(())
    oracle = IntervalOracle(n, tuple(rows))
    logger.debug(f"Interval oracle for {g.name or '<unnamed>'}: "
                 f"{oracle.nonempty_pair_count()} nonempty of {n * (n - 1) // 2} pairs")
    return oracle


def count_violations_bits(o: IntervalOracle, bits: int) -> int:
    """count_violations on a raw bitset."""
    rows = o._rows
    members = bits_to_list(bits)
    count = 0
    for i, u in enumerate(members):
        upper = rows[u]
        base = u + 1
        for v in members[i + 1:]:
            if upper[v - base] & bits:
                count += 1
    return count


def count_violations(o: IntervalOracle, s: VertexSet) -> int:
    """Number of unordered pairs {u, v} of s whose interval meets s."""
    _check_width(o, s)
    return count_violations_bits(o, s.bits)


def is_general_position(o: IntervalOracle, s: VertexSet) -> bool:
    """True when no shortest path between two members has an inner vertex in s."""
    _check_width(o, s)
    rows = o._rows
    bits = s.bits
    members = s.members()
    for i, u in enumerate(members):
        upper = rows[u]
        base = u + 1
        for v in members[i + 1:]:
            if upper[v - base] & bits:
                return False
    return True


def violating_pairs(o: IntervalOracle, s: VertexSet) -> List[Violation]:
    """The violating pairs of s, ascending by (u, v), with their witnesses."""
    _check_width(o, s)
    bits = s.bits
    members = s.members()
    found = []
    for i, u in enumerate(members):
        for v in members[i + 1:]:
            hit = o.interval(u, v) & bits
            if hit:
                found.append(Violation(u, v, VertexSet(o.n, hit)))
    return found


def _check_width(o: IntervalOracle, s: VertexSet) -> None:
    if s.n != o.n:
        raise ValueError(f"vertex set width {s.n} does not match oracle width {o.n}")
