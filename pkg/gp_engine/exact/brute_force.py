# Path and File Name : gp_engine/exact/brute_force.py
# Author: gp_engine maintainers
# Details of functionality of this file: Exhaustive general position search used as the independent exactness oracle

"""
Brute Force

Enumerates every general position set by recursive extension: a set is
only ever extended by vertices larger than its maximum, and an extension
is rejected as soon as it creates a violated pair. Sets are visited in
lexicographic order of their sorted member lists, and only a strictly
larger set replaces the incumbent, so the reported witness is the maximum
set that is smallest under graph.core.witness_key.
"""

import logging
import time

from ..errors import SolverLimitError
from ..graph.core import VertexSet
from ..graph.intervals import IntervalOracle
from ..results import ExactResult, Method

logger = logging.getLogger("gp_engine.exact.brute_force")

BRUTE_FORCE_MAX_N = 22


def brute_force_gp(o: IntervalOracle) -> ExactResult:
    """Exact gp(G) by exhaustive enumeration; refuses n > 22."""
    n = o.n
    if n > BRUTE_FORCE_MAX_N:
        raise SolverLimitError("brute_force_gp", n, BRUTE_FORCE_MAX_N)

    started = time.perf_counter()
    rows = [o.row(u) for u in range(n)]
    state = {"best_size": 0, "best_bits": 0, "nodes": 0}

    def extend(bits: int, members: list, covered: int, start: int) -> None:
        # covered: union of the intervals of all pairs in bits
        state["nodes"] += 1
        if len(members) > state["best_size"]:
            state["best_size"] = len(members)
            state["best_bits"] = bits
        for w in range(start, n):
            if (covered >> w) & 1:
                continue
            row_w = rows[w]
            if any(row_w[u] & bits for u in members):
                continue
            grown = covered
            for u in members:
                grown |= row_w[u]
            members.append(w)
            extend(bits | (1 << w), members, grown, w + 1)
            members.pop()

    extend(0, [], 0, 0)
    elapsed = time.perf_counter() - started
    logger.info(f"Brute force: gp={state['best_size']} over {state['nodes']} nodes in {elapsed:.3f}s")
    return ExactResult(
        method=Method.BF,
        gp=state["best_size"],
        witness=VertexSet(n, state["best_bits"]),
        nodes_explored=state["nodes"],
        time=elapsed,
    )
