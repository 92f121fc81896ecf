# Path and File Name : gp_engine/bench/__init__.py
# Author: gp_engine maintainers
# Details of functionality of this file: Benchmark harness package initialization

from .records import RunRecord, make_record, records_to_json, write_records_json
from .table1 import BenchInstance, BenchReport, BenchRow, bench_table1, best_of, load_bench_table, run_jobs

__all__ = [
    'RunRecord',
    'make_record',
    'records_to_json',
    'write_records_json',
    'BenchInstance',
    'BenchReport',
    'BenchRow',
    'bench_table1',
    'best_of',
    'load_bench_table',
    'run_jobs',
]
