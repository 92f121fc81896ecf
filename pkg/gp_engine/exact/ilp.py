# Path and File Name : gp_engine/exact/ilp.py
# Author: gp_engine maintainers
# Details of functionality of this file: Integer linear program for the general position number and its LP-format export

"""
ILP Model

One binary x_j per vertex, objective max sum x_j, and for every pair
u < v with a nonempty interval I(u, v) the big-M row

    sum_{l in I(u,v)} x_l + M x_u + M x_v <= 2M

With both endpoints selected the row forces the interval sum to zero;
otherwise it is vacuous as long as M >= |I(u, v)|. The default M is n.
Rows for adjacent pairs (empty interval) and the diagonal constrain
nothing and are omitted.

write_lp emits the CPLEX LP text format, byte-deterministic.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..errors import ParameterError, SolverLimitError
from ..graph.core import VertexSet, bits_to_list, witness_key
from ..graph.intervals import IntervalOracle

logger = logging.getLogger("gp_engine.exact.ilp")

ENUMERATION_MAX_N = 22
TERMS_PER_LINE = 16


@dataclass(frozen=True)
class IlpConstraint:
    """Row for the pair u < v over its interval vertices (ascending)."""
    u: int
    v: int
    interval: Tuple[int, ...]

    @property
    def name(self) -> str:
        return f"gp_{self.u}_{self.v}"


@dataclass(frozen=True)
class IlpModel:
    n: int
    big_m: int
    constraints: Tuple[IlpConstraint, ...]
    name: str = ""

    def __post_init__(self):
        widest = max((len(c.interval) for c in self.constraints), default=0)
        if self.big_m < widest:
            raise ParameterError(
                f"big-M {self.big_m} is below the largest interval size {widest}; "
                f"the row would cut feasible sets")
        for c in self.constraints:
            if not 0 <= c.u < c.v < self.n:
                raise ParameterError(f"constraint {c.name} has endpoints outside 0..{self.n - 1}")
            if any(not 0 <= j < self.n for j in c.interval):
                raise ParameterError(f"constraint {c.name} references a variable >= {self.n}")

    @property
    def rhs(self) -> int:
        return 2 * self.big_m

    def is_feasible(self, x: int) -> bool:
        """Whether the 0/1 assignment packed in x satisfies every row."""
        return _violated_row(self, x) is None


def build_ilp(o: IntervalOracle, big_m: Optional[int] = None, name: str = "") -> IlpModel:
    """Big-M model with one row per pair u < v whose interval is nonempty."""
    constraints = tuple(
        IlpConstraint(u, v, tuple(bits_to_list(bits)))
        for u, v, bits in o.pairs() if bits
    )
    model = IlpModel(n=o.n, big_m=o.n if big_m is None else int(big_m),
                     constraints=constraints, name=name)
    logger.debug(f"ILP for {name or '<unnamed>'}: {o.n} binaries, {len(constraints)} rows, M={model.big_m}")
    return model


def _expression_lines(label: str, terms: List[str]) -> List[str]:
    chunks = [terms[i:i + TERMS_PER_LINE] for i in range(0, len(terms), TERMS_PER_LINE)] or [[]]
    lines = [f" {label}: " + " + ".join(chunks[0])]
    for chunk in chunks[1:]:
        lines.append("    + " + " + ".join(chunk))
    return lines


def write_lp(m: IlpModel) -> str:
    """LP text: Maximize, Subject To (rows by (u, v)), Binary, End."""
    lines = [f"\\ general position model {m.name or 'G'}: n = {m.n}, M = {m.big_m}", "Maximize"]
    lines.extend(_expression_lines("obj", [f"x{j}" for j in range(m.n)]))
    lines.append("Subject To")
    for c in sorted(m.constraints, key=lambda c: (c.u, c.v)):
        terms = [f"x{j}" for j in c.interval]
        terms.append(f"{m.big_m} x{c.u}")
        terms.append(f"{m.big_m} x{c.v}")
        row = _expression_lines(c.name, terms)
        row[-1] += f" <= {m.rhs}"
        lines.extend(row)
    lines.append("Binary")
    lines.extend(f" x{j}" for j in range(m.n))
    lines.append("End")
    return "\n".join(lines) + "\n"


def _violated_row(m: IlpModel, x: int) -> Optional[IlpConstraint]:
    for c in m.constraints:
        lhs = sum((x >> j) & 1 for j in c.interval)
        lhs += m.big_m * (((x >> c.u) & 1) + ((x >> c.v) & 1))
        if lhs > m.rhs:
            return c
    return None


def ilp_optimum_by_enumeration(m: IlpModel) -> Tuple[int, VertexSet]:
    """
    Optimum of the model over all 2^n binary assignments.

    Returns the optimum value and the optimal assignment that is smallest
    under graph.core.witness_key.
    """
    if m.n > ENUMERATION_MAX_N:
        raise SolverLimitError("ilp_optimum_by_enumeration", m.n, ENUMERATION_MAX_N)
    rows = [(sum(1 << j for j in c.interval), c.u, c.v) for c in m.constraints]
    big_m, rhs = m.big_m, m.rhs
    best_value, best_key = -1, ()
    for x in range(1 << m.n):
        value = x.bit_count()
        if value < best_value:
            continue
        ok = True
        for mask, u, v in rows:
            if (x & mask).bit_count() + big_m * (((x >> u) & 1) + ((x >> v) & 1)) > rhs:
                ok = False
                break
        if not ok:
            continue
        key = witness_key(x)
        if value > best_value or key < best_key:
            best_value, best_key = value, key
    return best_value, VertexSet.from_vertices(m.n, best_key)
