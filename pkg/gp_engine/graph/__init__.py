# Path and File Name : gp_engine/graph/__init__.py
# Author: gp_engine maintainers
# Details of functionality of this file: Graph package initialization

from .core import DistanceMatrix, Graph, VertexSet, all_pairs_distances, build_graph, witness_key
from .intervals import (
    IntervalOracle,
    Violation,
    build_interval_oracle,
    count_violations,
    is_general_position,
    violating_pairs,
)

__all__ = [
    'DistanceMatrix',
    'Graph',
    'VertexSet',
    'all_pairs_distances',
    'build_graph',
    'witness_key',
    'IntervalOracle',
    'Violation',
    'build_interval_oracle',
    'count_violations',
    'is_general_position',
    'violating_pairs',
    'oracle_for',
]


def oracle_for(g: Graph) -> IntervalOracle:
    """Distances and interval oracle of g in one call."""
    return build_interval_oracle(g, all_pairs_distances(g))
