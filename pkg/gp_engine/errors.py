# Path and File Name : gp_engine/errors.py
# Author: gp_engine maintainers
# Details of functionality of this file: Exception hierarchy shared by graph construction, solvers and the CLI

"""
Exception hierarchy for gp_engine.

Every error carries the structured fields it was raised with and composes
its own message, so callers can either print it or inspect the fields.
"""

from typing import Optional, Sequence, Tuple


class GpEngineError(Exception):
    """Base class for all gp_engine errors."""


class GraphConstructionError(GpEngineError):
    """Raised when an edge set does not describe a simple connected graph."""

    def __init__(self, reason: str,
                 edge: Optional[Tuple[int, int]] = None,
                 component: Optional[Sequence[int]] = None):
        self.reason = reason
        self.edge = edge
        self.component = tuple(component) if component is not None else None
        message = f"invalid graph: {reason}"
        if edge is not None:
            message += f" (edge {edge[0]}-{edge[1]})"
        if self.component is not None:
            shown = ", ".join(str(v) for v in self.component[:10])
            if len(self.component) > 10:
                shown += ", ..."
            message += f" (unreachable component: {shown})"
        super().__init__(message)


class GraphParseError(GpEngineError):
    """Raised when graph text is malformed; line is 1-based when known."""

    def __init__(self, reason: str, line: Optional[int] = None):
        self.reason = reason
        self.line = line
        message = f"parse error: {reason}"
        if line is not None:
            message += f" at line {line}"
        super().__init__(message)


class GraphSpecError(GpEngineError):
    """Raised for unknown graph spec strings or malformed vertex-set strings."""


class SolverLimitError(GpEngineError):
    """Raised when an exponential routine is asked to run above its size guard."""

    def __init__(self, routine: str, n: int, limit: int):
        self.routine = routine
        self.n = n
        self.limit = limit
        super().__init__(f"{routine} refuses n = {n}: limit is n <= {limit}")


class ParameterError(GpEngineError):
    """Raised for solver parameters outside their valid range."""


class IntegrityError(GpEngineError):
    """Raised when a reported witness fails re-verification or a heuristic beats a certified optimum."""


class ConfigError(GpEngineError):
    """Raised for invalid environment configuration."""
