# Path and File Name : gp_engine/graph/serialization.py
# Author: gp_engine maintainers
# Details of functionality of this file: Edge-list and graph6 reading/writing and DOT rendering of highlighted vertex sets

"""
Graph Serialization

Edge-list format (ASCII, LF line endings):

    n m
    u v        (m lines, 0-based endpoints)

graph6 is the standard ASCII encoding, one graph per line, handled by
networkx. DOT output is deterministic: vertices ascending, edges in
lexicographic order, highlighted vertices filled.
"""

import logging
from pathlib import Path
from typing import Optional, Set, Tuple

import networkx as nx

from ..errors import GraphParseError
from .core import Graph, VertexSet, build_graph

logger = logging.getLogger("gp_engine.graph.serialization")

EDGE_LIST = "edge-list"
GRAPH6 = "graph6"
FORMATS = (EDGE_LIST, GRAPH6)
GRAPH6_HEADER = ">>graph6<<"


def parse_graph(text: str, format: str = EDGE_LIST, name: str = "") -> Graph:
    """
    Parse graph text in the named format.

    Raises:
        GraphParseError: malformed text, with the 1-based line number.
        GraphConstructionError: well-formed text describing a disconnected graph.
    """
    if format == EDGE_LIST:
        return _parse_edge_list(text, name)
    if format == GRAPH6:
        return _parse_graph6(text, name)
    raise GraphParseError(f"unknown graph format {format!r}; expected one of {', '.join(FORMATS)}")


def _parse_ints(line: str, count: int, line_no: int, what: str) -> Tuple[int, ...]:
    fields = line.split()
    if len(fields) != count:
        raise GraphParseError(f"expected {what}, got {line.strip()!r}", line=line_no)
    try:
        return tuple(int(f) for f in fields)
    except ValueError:
        raise GraphParseError(f"non-integer field in {line.strip()!r}", line=line_no) from None


def _parse_edge_list(text: str, name: str) -> Graph:
    lines = [(i + 1, raw.rstrip("\r")) for i, raw in enumerate(text.split("\n"))]
    content = [(no, line) for no, line in lines if line.strip()]
    if not content:
        raise GraphParseError("empty input, expected header 'n m'", line=1)

    header_no, header = content[0]
    n, m = _parse_ints(header, 2, header_no, "header 'n m'")
    if n < 1 or m < 0:
        raise GraphParseError(f"header needs n >= 1 and m >= 0, got n={n} m={m}", line=header_no)

    edges = []
    seen: Set[Tuple[int, int]] = set()
    for line_no, line in content[1:]:
        u, v = _parse_ints(line, 2, line_no, "edge 'u v'")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"edge {u}-{v} has an endpoint outside 0..{n - 1}", line=line_no)
        if u == v:
            raise GraphParseError(f"self-loop {u}-{v}", line=line_no)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphParseError(f"duplicate edge {u}-{v}", line=line_no)
        seen.add(key)
        edges.append((u, v))

    if len(edges) != m:
        last_line = content[-1][0]
        raise GraphParseError(f"header declares {m} edges but {len(edges)} were given", line=last_line)
    return build_graph(n, edges, name=name)


def _parse_graph6(text: str, name: str) -> Graph:
    from .generators import graph_from_networkx

    lines = [line.strip() for line in text.splitlines()]
    candidates = [(i + 1, line) for i, line in enumerate(lines) if line]
    if not candidates:
        raise GraphParseError("empty graph6 input", line=1)
    line_no, encoded = candidates[0]
    if encoded.startswith(GRAPH6_HEADER):
        encoded = encoded[len(GRAPH6_HEADER):].strip()
    try:
        G = nx.from_graph6_bytes(encoded.encode("ascii"))
    except (nx.NetworkXError, ValueError, UnicodeEncodeError) as e:
        raise GraphParseError(f"invalid graph6 string: {e}", line=line_no) from None
    return graph_from_networkx(G, name=name)


def write_graph(g: Graph, format: str = EDGE_LIST) -> str:
    """Serialize a graph; parse_graph(write_graph(g, f), f) == g."""
    if format == EDGE_LIST:
        lines = [f"{g.n} {g.edge_count}"]
        lines.extend(f"{u} {v}" for u, v in g.edges())
        return "\n".join(lines) + "\n"
    if format == GRAPH6:
        G = nx.Graph()
        G.add_nodes_from(range(g.n))
        G.add_edges_from(g.edges())
        return nx.to_graph6_bytes(G, header=False).decode("ascii")
    raise GraphParseError(f"unknown graph format {format!r}; expected one of {', '.join(FORMATS)}")


def infer_format(file_path: Path) -> str:
    return GRAPH6 if file_path.suffix.lower() in (".g6", ".graph6") else EDGE_LIST


def load_graph_file(file_path: Path, format: Optional[str] = None) -> Graph:
    """Read a graph file; format inferred from the suffix when not given."""
    file_path = Path(file_path)
    fmt = format or infer_format(file_path)
    if not file_path.exists():
        raise GraphParseError(f"graph file not found: {file_path}")
    with open(file_path, "rb") as f:
        raw = f.read()
    try:
        text = raw.decode("ascii")
    except UnicodeDecodeError as e:
        line = raw.count(b"\n", 0, e.start) + 1
        raise GraphParseError(f"non-ASCII byte 0x{raw[e.start]:02x} in {file_path}", line) from None
    g = parse_graph(text, fmt, name=file_path.stem)
    logger.info(f"Loaded {fmt} graph {file_path}: n={g.n}, m={g.edge_count}")
    return g


def to_dot(g: Graph, highlight: VertexSet) -> str:
    """DOT text with the highlighted vertices drawn as solid dots."""
    if highlight.n != g.n:
        raise ValueError(f"highlight width {highlight.n} does not match graph order {g.n}")
    title = (g.name or "G").replace("\\", "\\\\").replace('"', '\\"')
    lines = [f'graph "{title}" {{', "  node [shape=circle];"]
    for v in range(g.n):
        if v in highlight:
            lines.append(f"  {v} [style=filled, fillcolor=black, fontcolor=white];")
        else:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
