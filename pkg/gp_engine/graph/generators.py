# Path and File Name : gp_engine/graph/generators.py
# Author: gp_engine maintainers
# Details of functionality of this file: Benchmark graph families (hypercubes, circulants, cycles, paths, complete graphs, random connected graphs) and graph spec strings

"""
Graph Generators

Constructs the benchmark families through networkx and converts them to
index-form Graphs. Hypercube vertex i is its binary label, so i ~ j exactly
when i XOR j is a power of two; circulant vertex i is the residue i mod n.

Spec strings name instances on the command line:

    qN              hypercube Q_N
    cN, pN, kN      cycle, path, complete graph on N vertices
    cay:N:c1,c2,..  circulant Cay(Z_N, {c1, c2, ...})
    rand:N:P:SEED   seeded random connected graph
    file:PATH[:FMT] edge-list or graph6 file
"""

import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterable, Optional, Tuple

import networkx as nx
import numpy as np

from ..errors import GraphConstructionError, GraphSpecError
from .core import Graph, build_graph

logger = logging.getLogger("gp_engine.graph.generators")

MAX_HYPERCUBE_DIMENSION = 20


def graph_from_networkx(G: nx.Graph, name: str = "",
                        mapping: Optional[Dict] = None) -> Graph:
    """
    Convert a networkx graph to a Graph.

    Nodes are relabelled through mapping when given, otherwise by their
    sorted order.
    """
    if mapping is None:
        mapping = {node: i for i, node in enumerate(sorted(G.nodes()))}
    edges = [(mapping[a], mapping[b]) for a, b in G.edges()]
    return build_graph(G.number_of_nodes(), edges, name=name)


def hypercube(d: int) -> Graph:
    """Q_d on 2^d vertices labelled by their binary strings."""
    if not 1 <= d <= MAX_HYPERCUBE_DIMENSION:
        raise GraphConstructionError(
            f"hypercube dimension must be in 1..{MAX_HYPERCUBE_DIMENSION}, got {d}")
    G = nx.hypercube_graph(d)
    mapping = {node: int("".join(str(b) for b in node), 2) for node in G.nodes()}
    return graph_from_networkx(G, name=f"q{d}", mapping=mapping)


def circulant(n: int, conn: Iterable[int]) -> Graph:
    """Cay(Z_n, conn): i ~ j iff (j - i) mod n lies in the symmetric connection set."""
    connection = sorted(set(int(c) for c in conn))
    if n < 3:
        raise GraphConstructionError(f"circulant needs n >= 3, got {n}")
    if not connection:
        raise GraphConstructionError("circulant connection set is empty")
    if 0 in connection or any(c % n == 0 for c in connection):
        raise GraphConstructionError("circulant connection set contains 0")
    if any(not 0 < c < n for c in connection):
        raise GraphConstructionError(f"circulant connections must lie in 1..{n - 1}")
    members = set(connection)
    asymmetric = [c for c in connection if n - c not in members]
    if asymmetric:
        raise GraphConstructionError(
            f"circulant connection set is not closed under negation mod {n}: "
            f"missing {sorted(n - c for c in asymmetric)}")
    offsets = [c for c in connection if c <= n - c]
    G = nx.circulant_graph(n, offsets)
    name = f"cay:{n}:" + ",".join(str(c) for c in connection)
    return graph_from_networkx(G, name=name)


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphConstructionError(f"cycle needs n >= 3, got {n}")
    return graph_from_networkx(nx.cycle_graph(n), name=f"c{n}")


def path(n: int) -> Graph:
    if n < 1:
        raise GraphConstructionError(f"path needs n >= 1, got {n}")
    return graph_from_networkx(nx.path_graph(n), name=f"p{n}")


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphConstructionError(f"complete graph needs n >= 1, got {n}")
    return graph_from_networkx(nx.complete_graph(n), name=f"k{n}")


def random_connected(n: int, edge_probability: float, seed: int) -> Graph:
    """
    Seeded random connected graph.

    A random spanning tree (vertex i > 0 attaches to a uniformly chosen
    earlier vertex) plus every other pair independently with the given
    probability.
    """
    if n < 1:
        raise GraphConstructionError(f"random graph needs n >= 1, got {n}")
    if not 0.0 <= edge_probability <= 1.0:
        raise GraphConstructionError(f"edge probability must lie in [0, 1], got {edge_probability}")
    rng = np.random.default_rng(seed)
    tree = set()
    for v in range(1, n):
        tree.add((int(rng.integers(v)), v))
    edges = sorted(tree)
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in tree and rng.random() < edge_probability:
                edges.append((u, v))
    return build_graph(n, edges, name=f"rand:{n}:{edge_probability:g}:{seed}")


@dataclass(frozen=True)
class GraphSpec:
    """A named graph instance: family plus parameters."""
    family: str
    params: Tuple
    canonical_name: str

    @property
    def vertex_transitive(self) -> bool:
        return self.family in ("hypercube", "cycle", "complete", "circulant")

    def build(self) -> Graph:
        if self.family == "hypercube":
            return hypercube(*self.params)
        if self.family == "cycle":
            return cycle(*self.params)
        if self.family == "path":
            return path(*self.params)
        if self.family == "complete":
            return complete(*self.params)
        if self.family == "circulant":
            n, conn = self.params
            return circulant(n, conn)
        if self.family == "random":
            return random_connected(*self.params)
        if self.family == "file":
            from .serialization import load_graph_file
            file_path, fmt = self.params
            return load_graph_file(Path(file_path), fmt).renamed(self.canonical_name)
        raise GraphSpecError(f"unknown graph family {self.family!r}")


_SIMPLE_FAMILIES = {"q": "hypercube", "c": "cycle", "p": "path", "k": "complete"}
_SIMPLE_RE = re.compile(r"^([qcpk])(\d+)$")
_FORMATS = ("edge-list", "graph6")


def parse_spec(text: str) -> GraphSpec:
    """Parse a graph spec string (see module docstring)."""
    raw = text.strip()
    lowered = raw.lower()
    match = _SIMPLE_RE.match(lowered)
    if match:
        letter, number = match.groups()
        return GraphSpec(_SIMPLE_FAMILIES[letter], (int(number),), f"{letter}{int(number)}")

    if lowered.startswith("cay:"):
        parts = lowered.split(":")
        if len(parts) != 3:
            raise GraphSpecError(f"circulant spec must be cay:N:c1,c2,...; got {text!r}")
        try:
            n = int(parts[1])
            conn = tuple(sorted(set(int(c) for c in parts[2].split(",") if c.strip())))
        except ValueError:
            raise GraphSpecError(f"circulant spec has non-integer fields: {text!r}") from None
        name = f"cay:{n}:" + ",".join(str(c) for c in conn)
        return GraphSpec("circulant", (n, conn), name)

    if lowered.startswith("rand:"):
        parts = lowered.split(":")
        if len(parts) != 4:
            raise GraphSpecError(f"random spec must be rand:N:P:SEED; got {text!r}")
        try:
            n, p, seed = int(parts[1]), float(parts[2]), int(parts[3])
        except ValueError:
            raise GraphSpecError(f"random spec has malformed fields: {text!r}") from None
        return GraphSpec("random", (n, p, seed), f"rand:{n}:{p:g}:{seed}")

    if lowered.startswith("file:"):
        body = raw[len("file:"):]
        fmt = None
        head, sep, tail = body.rpartition(":")
        if sep and tail in _FORMATS:
            body, fmt = head, tail
        if not body:
            raise GraphSpecError(f"file spec is missing a path: {text!r}")
        return GraphSpec("file", (body, fmt), Path(body).stem)

    raise GraphSpecError(
        f"unknown graph spec {text!r}; expected qN, cN, pN, kN, cay:N:c1,..., "
        f"rand:N:P:SEED or file:PATH[:edge-list|graph6]")
