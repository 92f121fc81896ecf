# Path and File Name : gp_engine/__init__.py
# Author: gp_engine maintainers
# Details of functionality of this file: Package initialization for the general position number solver suite

"""
gp_engine

Computes the general position number gp(G) of a connected graph: the
largest vertex set in which no member lies on a shortest path between two
others. Exact search (brute force, branch and bound), a genetic algorithm,
simulated annealing, an ILP export and a benchmark harness.
"""

__version__ = "1.0.0"
