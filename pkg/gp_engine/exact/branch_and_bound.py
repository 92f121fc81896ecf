# Path and File Name : gp_engine/exact/branch_and_bound.py
# Author: gp_engine maintainers
# Details of functionality of this file: Exact branch-and-bound search for a maximum general position set

"""
Branch and Bound

Depth-first include/exclude search over a static vertex order: most
frequently interior vertices first (number of pairs whose interval
contains the vertex, descending), ties by index. The search keeps the
partial set S, always in general position, and the candidate set C of
vertices that can each be added to S without creating a violation.
Subtrees with |S| + |C| <= best are pruned.

Adding w to S removes from C every candidate c such that
    - c lies inside I(w, u) for some u in S,
    - w lies inside I(c, u) for some u in S, or
    - I(w, c) meets S.

Sets are bitsets over order ranks, so the lowest set bit of C is always
the next vertex in branching order.
"""

import logging
import threading
import time
from dataclasses import dataclass
from typing import List, Optional, Sequence

from ..graph.core import VertexSet, bits_to_list
from ..graph.intervals import IntervalOracle
from ..results import ExactResult, Method

logger = logging.getLogger("gp_engine.exact.branch_and_bound")

_CHECK_EVERY = 1024


@dataclass
class BranchAndBoundOptions:
    """Search options."""
    time_limit: Optional[float] = None  # seconds
    cancel_event: Optional[threading.Event] = None
    # Skip the root exclude-branch of the first vertex; sound on vertex-transitive graphs.
    vertex_transitive: bool = False
    # Re-search in index order for the optimal witness smallest under witness_key.
    canonical_witness: bool = True


class _Stopped(Exception):
    pass


class _Found(Exception):
    pass


class _Search:
    """One search over a fixed vertex order."""

    def __init__(self, o: IntervalOracle, order: Sequence[int],
                 deadline: Optional[float], cancel_event: Optional[threading.Event]):
        n = o.n
        self.n = n
        self.order = list(order)
        self.deadline = deadline
        self.cancel_event = cancel_event
        rank = [0] * n
        for r, v in enumerate(self.order):
            rank[v] = r

        # inside[a][b]: I(a, b) in rank space; through[w][a]: all c with w inside I(c, a)
        inside = [[0] * n for _ in range(n)]
        through = [[0] * n for _ in range(n)]
        for u, v, bits in o.pairs():
            if not bits:
                continue
            a, b = rank[u], rank[v]
            ranked = 0
            for w in bits_to_list(bits):
                r = rank[w]
                ranked |= 1 << r
                through[r][a] |= 1 << b
                through[r][b] |= 1 << a
            inside[a][b] = ranked
            inside[b][a] = ranked
        self.inside = inside
        self.through = through

        self.nodes = 0
        self.best_size = 0
        self.best_bits = 0
        self.target: Optional[int] = None
        self.fix_first = False

    def maximize(self, fix_first: bool) -> None:
        self.fix_first = fix_first
        self.target = None
        self.best_size, self.best_bits = 0, 0
        self._expand(0, [], 0, (1 << self.n) - 1)

    def find_of_size(self, target: int, fix_first: bool) -> bool:
        """Stop at the first set of the target size in include-first order."""
        self.fix_first = fix_first
        self.target = target
        self.best_size, self.best_bits = target - 1, 0
        try:
            self._expand(0, [], 0, (1 << self.n) - 1)
        except _Found:
            return True
        return False

    def witness_vertices(self) -> List[int]:
        return sorted(self.order[r] for r in bits_to_list(self.best_bits))

    def _check_stop(self) -> None:
        if self.cancel_event is not None and self.cancel_event.is_set():
            raise _Stopped()
        if self.deadline is not None and time.perf_counter() > self.deadline:
            raise _Stopped()

    def _compatible(self, S: int, members: List[int], w: int, C: int) -> int:
        inside_w = self.inside[w]
        through_w = self.through[w]
        forbid = 0
        for u in members:
            forbid |= inside_w[u] | through_w[u]
        C &= ~forbid
        if S:
            x = C
            while x:
                low = x & -x
                x ^= low
                if inside_w[low.bit_length() - 1] & S:
                    C ^= low
        return C

    def _expand(self, S: int, members: List[int], size: int, C: int) -> None:
        self.nodes += 1
        if self.nodes % _CHECK_EVERY == 0:
            self._check_stop()
        if size > self.best_size:
            self.best_size, self.best_bits = size, S
            if self.target is not None:
                raise _Found()
            logger.debug(f"Incumbent {size} after {self.nodes} nodes")
        while C:
            if size + C.bit_count() <= self.best_size:
                return
            low = C & -C
            w = low.bit_length() - 1
            C ^= low
            reduced = self._compatible(S, members, w, C)
            members.append(w)
            self._expand(S | low, members, size + 1, reduced)
            members.pop()
            if self.fix_first and size == 0:
                return


def branching_order(o: IntervalOracle) -> List[int]:
    """Vertices by descending interval-membership count, ties by index."""
    counts = o.membership_counts()
    return sorted(range(o.n), key=lambda v: (-counts[v], v))


def branch_and_bound_gp(o: IntervalOracle,
                        config: Optional[BranchAndBoundOptions] = None) -> ExactResult:
    """
    Exact gp(G) by branch and bound.

    When cancelled or out of time, the best set found so far is returned
    with optimal=False.
    """
    options = config or BranchAndBoundOptions()
    started = time.perf_counter()
    deadline = started + options.time_limit if options.time_limit is not None else None

    search = _Search(o, branching_order(o), deadline, options.cancel_event)
    optimal = True
    try:
        search.maximize(fix_first=options.vertex_transitive)
    except _Stopped:
        optimal = False
        logger.warning(f"Branch and bound stopped early after {search.nodes} nodes; "
                       f"best so far {search.best_size}")
    gp = search.best_size
    witness = search.witness_vertices()
    nodes = search.nodes

    if optimal and options.canonical_witness and gp > 0:
        canonical = _Search(o, range(o.n), deadline, options.cancel_event)
        try:
            if canonical.find_of_size(gp, fix_first=options.vertex_transitive):
                witness = canonical.witness_vertices()
        except _Stopped:
            logger.warning("Canonical witness search stopped early; keeping first optimal witness")
        nodes += canonical.nodes

    elapsed = time.perf_counter() - started
    logger.info(f"Branch and bound: gp={gp} ({'optimal' if optimal else 'not proven'}) "
                f"over {nodes} nodes in {elapsed:.3f}s")
    return ExactResult(
        method=Method.BB,
        gp=gp,
        witness=VertexSet.from_vertices(o.n, witness),
        nodes_explored=nodes,
        time=elapsed,
        optimal=optimal,
    )
