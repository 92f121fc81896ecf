# Path and File Name : gp_engine/bench/records.py
# Author: gp_engine maintainers
# Details of functionality of this file: Run records and deterministic key-sorted JSON output of solver results

"""
Run Records

One RunRecord per solver run. Records are only created for witnesses that
re-verify as general position sets, and are written sorted by
(graph, method, seed) with sorted keys, so the JSON is byte-deterministic
apart from wall times (which --omit-timings writes as null).
"""

import json
import logging
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional

from .. import __version__
from ..errors import IntegrityError
from ..graph.intervals import IntervalOracle, is_general_position
from ..results import SolveResult

logger = logging.getLogger("gp_engine.bench.records")


@dataclass(frozen=True)
class RunRecord:
    """One benchmark table cell run."""
    graph: str
    n: int
    method: str
    size: int
    certified_optimal: bool
    params: Dict[str, Any] = field(default_factory=dict)
    seed: Optional[int] = None
    wall_time_ms: Optional[float] = None
    witness: List[int] = field(default_factory=list)

    def sort_key(self):
        return (self.graph, self.method, -1 if self.seed is None else self.seed)

    def to_dict(self, omit_timings: bool = False) -> Dict[str, Any]:
        data = asdict(self)
        if omit_timings:
            data["wall_time_ms"] = None
        return data


def make_record(graph_name: str, oracle: IntervalOracle, result: SolveResult,
                params: Dict[str, Any], certified_optimal: bool) -> RunRecord:
    """
    Build a record after re-verifying the witness.

    Raises:
        IntegrityError: the witness is not a general position set.
    """
    if not is_general_position(oracle, result.best_set):
        raise IntegrityError(
            f"{result.method.value} witness {result.best_set} on {graph_name} is not in general position")
    if certified_optimal and not result.method.certifies_optimum:
        raise IntegrityError(f"{result.method.value} results cannot be certified optimal")
    return RunRecord(
        graph=graph_name,
        n=oracle.n,
        method=result.method.value,
        size=result.size,
        certified_optimal=certified_optimal,
        params=dict(params),
        seed=result.seed,
        wall_time_ms=round(result.time * 1000.0, 3),
        witness=result.best_set.members(),
    )


def records_to_json(records: Iterable[RunRecord], omit_timings: bool = False) -> str:
    ordered = sorted(records, key=RunRecord.sort_key)
    document = {
        "artifact_version": __version__,
        "records": [r.to_dict(omit_timings) for r in ordered],
    }
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def write_records_json(records: Iterable[RunRecord], output_path: Path,
                       omit_timings: bool = False) -> None:
    output_path = Path(output_path)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    text = records_to_json(records, omit_timings)
    with open(output_path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
    logger.info(f"Wrote run records to {output_path}")
