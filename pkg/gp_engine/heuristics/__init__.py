# Path and File Name : gp_engine/heuristics/__init__.py
# Author: gp_engine maintainers
# Details of functionality of this file: Metaheuristics package initialization

from .annealing import AcceptanceMode, SaParams, sa_solve, temperature_at
from .fitness import FitnessParams, crossover, fitness, mutate, repair
from .genetic import GaParams, ga_solve

__all__ = [
    'AcceptanceMode',
    'SaParams',
    'sa_solve',
    'temperature_at',
    'FitnessParams',
    'crossover',
    'fitness',
    'mutate',
    'repair',
    'GaParams',
    'ga_solve',
]
