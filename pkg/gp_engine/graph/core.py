# Path and File Name : gp_engine/graph/core.py
# Author: gp_engine maintainers
# Details of functionality of this file: Graph, VertexSet and DistanceMatrix types, graph construction and all-pairs BFS distances

"""
Graph Core

Immutable simple connected graphs in index form, packed vertex sets and
the hop-count metric every solver works over.

Vertices are the indices 0..n-1. External labels (binary strings for
hypercubes, residues for circulants) only exist in generators and
serialization.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Sequence, Tuple

import numpy as np

from ..errors import GraphConstructionError

logger = logging.getLogger("gp_engine.graph.core")


@dataclass(frozen=True)
class Graph:
    """Simple connected undirected graph with sorted adjacency lists."""
    n: int
    adjacency: Tuple[Tuple[int, ...], ...]
    edge_count: int
    name: str = field(default="", compare=False)

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Yield every edge once as (u, v) with u < v, lexicographically."""
        for u in range(self.n):
            for v in self.adjacency[u]:
                if v > u:
                    yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def renamed(self, name: str) -> "Graph":
        return Graph(self.n, self.adjacency, self.edge_count, name)


@dataclass(frozen=True)
class VertexSet:
    """Packed bitset over the vertices 0..n-1 (bit i is vertex i)."""
    n: int
    bits: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex set width must be non-negative, got {self.n}")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bitset {self.bits:#x} has members outside 0..{self.n - 1}")

    @classmethod
    def empty(cls, n: int) -> "VertexSet":
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    @classmethod
    def from_vertices(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        bits = 0
        for v in vertices:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range 0..{n - 1}")
            bits |= 1 << v
        return cls(n, bits)

    def members(self) -> List[int]:
        """Members in ascending order."""
        return bits_to_list(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and (self.bits >> v) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return iter(self.members())

    def union(self, other: "VertexSet") -> "VertexSet":
        self._check_width(other)
        return VertexSet(self.n, self.bits | other.bits)

    def intersection(self, other: "VertexSet") -> "VertexSet":
        self._check_width(other)
        return VertexSet(self.n, self.bits & other.bits)

    def with_vertex(self, v: int) -> "VertexSet":
        return VertexSet(self.n, self.bits | (1 << v))

    def without_vertex(self, v: int) -> "VertexSet":
        return VertexSet(self.n, self.bits & ~(1 << v))

    def issubset(self, other: "VertexSet") -> bool:
        self._check_width(other)
        return self.bits & ~other.bits == 0

    def _check_width(self, other: "VertexSet") -> None:
        if self.n != other.n:
            raise ValueError(f"vertex set widths differ: {self.n} != {other.n}")

    def __str__(self) -> str:
        return "{" + ",".join(str(v) for v in self.members()) + "}"


def bits_to_list(bits: int) -> List[int]:
    """Indices of the set bits of a non-negative integer, ascending."""
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


def witness_key(bits: int) -> Tuple[int, ...]:
    """
    Tie order shared by every solver: sorted member lists compared
    lexicographically, so {0,3} precedes {1,2} and {0,1} precedes {0,1,2}.
    The smallest key wins a tie.
    """
    return tuple(bits_to_list(bits))


class DistanceMatrix:
    """All-pairs hop counts, read-only."""

    def __init__(self, d: np.ndarray):
        d = np.array(d, dtype=np.int32, copy=True)
        d.setflags(write=False)
        self.d = d

    @property
    def n(self) -> int:
        return int(self.d.shape[0])

    @property
    def diameter(self) -> int:
        return int(self.d.max()) if self.d.size else 0

    def __getitem__(self, key: Tuple[int, int]) -> int:
        u, v = key
        return int(self.d[u, v])

    def row(self, u: int) -> np.ndarray:
        return self.d[u]


def build_graph(n: int, edges: Iterable[Sequence[int]], name: str = "") -> Graph:
    """
    Build a simple connected graph on vertices 0..n-1.

    Raises:
        GraphConstructionError: on self-loops, duplicate edges, out-of-range
            endpoints, n < 1, or a disconnected edge set.
    """
    if n < 1:
        raise GraphConstructionError(f"vertex count must be >= 1, got {n}")

    neighbors: List[set] = [set() for _ in range(n)]
    edge_count = 0
    for edge in edges:
        u, v = int(edge[0]), int(edge[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphConstructionError(f"endpoint out of range 0..{n - 1}", edge=(u, v))
        if u == v:
            raise GraphConstructionError("self-loop", edge=(u, v))
        if v in neighbors[u]:
            raise GraphConstructionError("duplicate edge", edge=(u, v))
        neighbors[u].add(v)
        neighbors[v].add(u)
        edge_count += 1

    adjacency = tuple(tuple(sorted(nb)) for nb in neighbors)
    reached = _bfs_order(adjacency, 0)
    if len(reached) != n:
        seen = set(reached)
        missing = [v for v in range(n) if v not in seen]
        raise GraphConstructionError("graph is disconnected", component=missing)

    logger.debug(f"Built graph {name or '<unnamed>'}: n={n}, m={edge_count}")
    return Graph(n=n, adjacency=adjacency, edge_count=edge_count, name=name)


def _bfs_order(adjacency: Sequence[Sequence[int]], source: int) -> List[int]:
    seen = {source}
    order = [source]
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in adjacency[u]:
            if v not in seen:
                seen.add(v)
                order.append(v)
                queue.append(v)
    return order


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """Hop-count distances by one BFS per source vertex."""
    n = g.n
    d = np.full((n, n), -1, dtype=np.int32)
    for source in range(n):
        row = d[source]
        row[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            du = row[u] + 1
            for v in g.adjacency[u]:
                if row[v] < 0:
                    row[v] = du
                    queue.append(v)
    return DistanceMatrix(d)
