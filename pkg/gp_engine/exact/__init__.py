# Path and File Name : gp_engine/exact/__init__.py
# Author: gp_engine maintainers
# Details of functionality of this file: Exact solver package initialization

from .branch_and_bound import BranchAndBoundOptions, branch_and_bound_gp
from .brute_force import BRUTE_FORCE_MAX_N, brute_force_gp
from .ilp import IlpConstraint, IlpModel, build_ilp, ilp_optimum_by_enumeration, write_lp

__all__ = [
    'BranchAndBoundOptions',
    'branch_and_bound_gp',
    'BRUTE_FORCE_MAX_N',
    'brute_force_gp',
    'IlpConstraint',
    'IlpModel',
    'build_ilp',
    'ilp_optimum_by_enumeration',
    'write_lp',
]
