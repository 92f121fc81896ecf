# Path and File Name : gp_engine/tests/test_heuristics.py
# Author: gp_engine maintainers
# Details of functionality of this file: Fitness, operator, repair, GA and SA tests including seeded property suites and attainment checks

"""
Metaheuristic Tests

- operator laws (union crossover, popcount-preserving swap mutation)
- penalized fitness ordering and repair
- cooling schedule
- GA / SA determinism, feasibility and attainment of known values with
  the benchmark parameters (best of 10 seeds)
The larger attainment checks run only with GP_ENGINE_SLOW_TESTS=1.
"""

import os
import unittest

import numpy as np

from gp_engine.errors import ParameterError
from gp_engine.graph import count_violations, is_general_position, oracle_for
from gp_engine.graph.core import VertexSet, witness_key
from gp_engine.graph.generators import circulant, cycle, hypercube, path, random_connected
from gp_engine.heuristics import (
    AcceptanceMode,
    FitnessParams,
    GaParams,
    SaParams,
    crossover,
    fitness,
    ga_solve,
    mutate,
    repair,
    sa_solve,
    temperature_at,
)
from gp_engine.heuristics.genetic import select_survivors
from gp_engine.results import Method

SLOW = os.environ.get("GP_ENGINE_SLOW_TESTS") == "1"
CASES = 1000


class TestOperators(unittest.TestCase):
    """Crossover and mutation laws over random bitsets."""

    def setUp(self):
        self.rng = np.random.default_rng(314)

    def _random_set(self, n):
        return VertexSet(n, int(self.rng.integers(0, 1 << n)))

    def test_crossover_union_laws(self):
        for case in range(CASES):
            n = int(self.rng.integers(1, 40))
            a, b, c = self._random_set(n), self._random_set(n), self._random_set(n)
            child = crossover(a, b)
            with self.subTest(case=case):
                self.assertEqual(child, crossover(b, a))
                self.assertEqual(crossover(a, a), a)
                self.assertTrue(a.issubset(child) and b.issubset(child))
                self.assertEqual(crossover(crossover(a, b), c), crossover(a, crossover(b, c)))
                self.assertEqual(set(child.members()), set(a.members()) | set(b.members()))

    def test_mutate_preserves_popcount(self):
        for case in range(CASES):
            n = int(self.rng.integers(2, 40))
            s = self._random_set(n)
            mutant = mutate(s, self.rng)
            with self.subTest(case=case):
                self.assertEqual(len(mutant), len(s))
                self.assertIn((mutant.bits ^ s.bits).bit_count(), (0, 2))

    def test_mutate_needs_two_positions(self):
        with self.assertRaises(ValueError):
            mutate(VertexSet(1, 1), self.rng)


class TestFitness(unittest.TestCase):
    """Penalized fitness |S| - M f(S)."""

    def setUp(self):
        self.o = oracle_for(cycle(6))
        self.fp = FitnessParams.default_for(6)

    def test_feasible_set(self):
        self.assertEqual(fitness(self.o, VertexSet.from_vertices(6, [0, 2, 4]), self.fp), 3)

    def test_one_violation(self):
        """{0, 1, 3} has one violating pair: 3 - 7."""
        self.assertEqual(fitness(self.o, VertexSet.from_vertices(6, [0, 1, 3]), self.fp), -4)

    def test_feasible_beats_infeasible(self):
        rng = np.random.default_rng(99)
        for case in range(CASES):
            n = int(rng.integers(3, 12))
            o = oracle_for(random_connected(n, float(rng.uniform(0.1, 0.8)), seed=int(rng.integers(1 << 30))))
            fp = FitnessParams.default_for(n)
            a = VertexSet(n, int(rng.integers(1 << n)))
            b = VertexSet(n, int(rng.integers(1 << n)))
            fa, fb = fitness(o, a, fp), fitness(o, b, fp)
            with self.subTest(case=case):
                if is_general_position(o, a) and not is_general_position(o, b):
                    self.assertGreater(fa, fb)
                if is_general_position(o, a):
                    self.assertEqual(fa, len(a))

    def test_penalty_must_exceed_n(self):
        with self.assertRaises(ParameterError):
            fitness(self.o, VertexSet.empty(6), FitnessParams(6))


class TestRepair(unittest.TestCase):

    def test_path_drops_highest_tied_vertex(self):
        """All three vertices of P_3 take part once; the highest index goes."""
        o = oracle_for(path(3))
        self.assertEqual(repair(o, VertexSet.full(3)).members(), [0, 1])

    def test_most_involved_vertex_goes_first(self):
        """In P_4 both interior vertices take part in three violating pairs; 2 goes, then 3."""
        o = oracle_for(path(4))
        repaired = repair(o, VertexSet.full(4))
        self.assertTrue(is_general_position(o, repaired))
        self.assertEqual(repaired.members(), [0, 1])

    def test_feasible_sets_unchanged(self):
        o = oracle_for(hypercube(3))
        s = VertexSet.from_vertices(8, [0, 3, 5, 6])
        self.assertEqual(repair(o, s), s)

    def test_repair_property(self):
        rng = np.random.default_rng(2718)
        for case in range(CASES):
            n = int(rng.integers(2, 14))
            o = oracle_for(random_connected(n, float(rng.uniform(0.05, 0.6)), seed=int(rng.integers(1 << 30))))
            s = VertexSet(n, int(rng.integers(1 << n)))
            repaired = repair(o, s)
            with self.subTest(case=case):
                self.assertTrue(repaired.issubset(s))
                self.assertEqual(count_violations(o, repaired), 0)


class TestCoolingSchedule(unittest.TestCase):
    """temperature_at(t) = T_0 * rho ** floor(t / cooling_time)."""

    def test_schedule_formula(self):
        rng = np.random.default_rng(161803)
        for case in range(CASES):
            params = SaParams(
                max_iterations=int(rng.integers(1, 5000)),
                initial_temperature=float(rng.uniform(0.1, 100.0)),
                cooling_rate=float(rng.uniform(0.01, 0.99)),
                cooling_time=int(rng.integers(1, 200)) if rng.random() < 0.5 else None,
            )
            t = int(rng.integers(0, params.max_iterations + 1))
            expected = params.initial_temperature * params.cooling_rate ** (t // params.effective_cooling_time)
            with self.subTest(case=case):
                self.assertAlmostEqual(temperature_at(params, t), expected)
                self.assertLessEqual(temperature_at(params, t + 1), temperature_at(params, t))

    def test_default_cooling_time(self):
        self.assertEqual(SaParams(max_iterations=500).effective_cooling_time, 25)
        self.assertEqual(SaParams(max_iterations=10).effective_cooling_time, 1)
        self.assertEqual(SaParams(max_iterations=21).effective_cooling_time, 2)

    def test_default_neighbor_count(self):
        params = SaParams(max_iterations=10)
        self.assertEqual(params.effective_neighbor_count(8), 8)
        self.assertEqual(params.effective_neighbor_count(32), 10)
        self.assertEqual(params.effective_neighbor_count(128), 32)
        self.assertEqual(SaParams(max_iterations=10, neighbor_count=50).effective_neighbor_count(20), 20)

    def test_parameter_validation(self):
        with self.assertRaises(ParameterError):
            SaParams(max_iterations=0)
        with self.assertRaises(ParameterError):
            SaParams(max_iterations=10, cooling_rate=1.0)
        with self.assertRaises(ParameterError):
            SaParams(max_iterations=10, initial_temperature=0.0)
        with self.assertRaises(ParameterError):
            GaParams(population_size=1, max_iterations=10)
        with self.assertRaises(ParameterError):
            GaParams(population_size=10, max_iterations=0)


class TestGeneticAlgorithm(unittest.TestCase):

    def setUp(self):
        self.o = oracle_for(hypercube(4))

    def test_deterministic_in_seed(self):
        params = GaParams(population_size=20, max_iterations=50, seed=11)
        a, b = ga_solve(self.o, params), ga_solve(self.o, params)
        self.assertEqual(a.best_set, b.best_set)
        self.assertEqual(a.raw_fitness, b.raw_fitness)
        self.assertEqual(a.iterations_run, 50)

    def test_result_is_feasible(self):
        for seed in range(5):
            result = ga_solve(self.o, GaParams(population_size=10, max_iterations=20, seed=seed))
            self.assertEqual(result.method, Method.GA)
            self.assertTrue(is_general_position(self.o, result.best_set))
            self.assertEqual(result.size, len(result.best_set))
            self.assertLessEqual(result.size, 5)

    def test_custom_penalty(self):
        result = ga_solve(self.o, GaParams(population_size=10, max_iterations=20, seed=3), FitnessParams(100))
        self.assertTrue(is_general_position(self.o, result.best_set))
        with self.assertRaises(ParameterError):
            ga_solve(self.o, GaParams(population_size=10, max_iterations=20, seed=3), FitnessParams(16))

    def test_population_size_is_constant(self):
        """Every iteration ends with exactly n_p individuals, best first, distinct ones leading."""
        rng = np.random.default_rng(77)
        for case in range(40):
            n = int(rng.integers(2, 13))
            o = oracle_for(random_connected(n, float(rng.random()), seed=case))
            n_p = int(rng.integers(2, 30))
            seen = []

            def observe(iteration, population):
                seen.append(iteration)
                self.assertEqual(len(population), n_p)
                scores = [fitness(o, VertexSet(n, b), FitnessParams.default_for(n)) for b in population]
                distinct = len(set(population))
                self.assertEqual(scores[:distinct], sorted(scores[:distinct], reverse=True))
                self.assertEqual(len(set(population[:distinct])), distinct)

            with self.subTest(case=case, n=n, n_p=n_p):
                ga_solve(o, GaParams(population_size=n_p, max_iterations=15, seed=case), on_iteration=observe)
                self.assertEqual(seen, list(range(1, 16)))

    def test_survivors_are_distinct_then_padded(self):
        rank = lambda b: (-b.bit_count(), witness_key(b))
        self.assertEqual(select_survivors([3, 3, 1, 6, 3], 3, rank), [3, 6, 1])
        self.assertEqual(select_survivors([1, 1, 2], 5, rank), [1, 2, 1, 2, 1])


class TestSimulatedAnnealing(unittest.TestCase):

    def setUp(self):
        self.o = oracle_for(hypercube(4))

    def test_deterministic_in_seed(self):
        params = SaParams(max_iterations=60, seed=5)
        a, b = sa_solve(self.o, params), sa_solve(self.o, params)
        self.assertEqual(a.best_set, b.best_set)
        self.assertEqual(a.raw_fitness, b.raw_fitness)

    def test_both_acceptance_modes_feasible(self):
        for mode in AcceptanceMode:
            for seed in range(5):
                result = sa_solve(self.o, SaParams(max_iterations=40, seed=seed, acceptance_mode=mode))
                with self.subTest(mode=mode.value, seed=seed):
                    self.assertEqual(result.method, Method.SA)
                    self.assertTrue(is_general_position(self.o, result.best_set))
                    self.assertEqual(result.iterations_run, 40)

    def test_min_temperature_stops_early(self):
        """10 * 0.5^t drops below 1 at t = 4."""
        params = SaParams(max_iterations=100, initial_temperature=10.0, cooling_rate=0.5,
                          cooling_time=1, min_temperature=1.0, seed=0)
        self.assertEqual(sa_solve(self.o, params).iterations_run, 4)


def _best_of(solve, o, make_params, seeds=10):
    return max(solve(o, make_params(seed)).size for seed in range(seeds))


class TestAttainment(unittest.TestCase):
    """Known general position numbers with the benchmark parameters, best of 10 seeds."""

    def assertGa(self, g, expected, population_size, max_iterations):
        o = oracle_for(g)
        best = _best_of(ga_solve, o, lambda s: GaParams(population_size, max_iterations, seed=s))
        self.assertEqual(best, expected)

    def assertSa(self, g, expected, max_iterations):
        o = oracle_for(g)
        best = _best_of(sa_solve, o, lambda s: SaParams(max_iterations, initial_temperature=10.0, seed=s))
        self.assertEqual(best, expected)

    def test_ga_small_instances(self):
        self.assertGa(hypercube(3), 4, 10, 100)
        self.assertGa(hypercube(4), 5, 20, 200)
        self.assertGa(circulant(9, [1, 3, 6, 8]), 4, 10, 50)
        self.assertGa(circulant(9, [1, 2, 3, 6, 7, 8]), 4, 10, 50)

    def test_sa_q3(self):
        self.assertSa(hypercube(3), 4, 10)

    @unittest.skipUnless(SLOW, "set GP_ENGINE_SLOW_TESTS=1")
    def test_ga_larger_instances(self):
        self.assertGa(hypercube(5), 6, 20, 400)
        self.assertGa(circulant(20, [1, 3, 17, 19]), 7, 20, 250)

    @unittest.skipUnless(SLOW, "set GP_ENGINE_SLOW_TESTS=1")
    def test_sa_larger_instances(self):
        self.assertSa(circulant(9, [1, 3, 6, 8]), 4, 10)
        self.assertSa(circulant(9, [1, 2, 3, 6, 7, 8]), 4, 10)
        self.assertSa(hypercube(4), 5, 10)
        self.assertSa(hypercube(5), 6, 50)
        self.assertSa(circulant(20, [1, 3, 17, 19]), 7, 50)

    def _assert_q6(self, solve, make_params):
        o = oracle_for(hypercube(6))
        sizes = [solve(o, make_params(seed)).size for seed in range(30)]
        self.assertGreaterEqual(max(sizes[:10]), 7)
        self.assertEqual(max(sizes), 8)

    @unittest.skipUnless(SLOW, "set GP_ENGINE_SLOW_TESTS=1")
    def test_q6_relaxed_ga(self):
        """At least 7 over 10 seeds with the benchmark parameters; 8 within 30 seeds."""
        self._assert_q6(ga_solve, lambda s: GaParams(50, 4500, seed=s))

    @unittest.skipUnless(SLOW, "set GP_ENGINE_SLOW_TESTS=1")
    def test_q6_relaxed_sa(self):
        self._assert_q6(sa_solve, lambda s: SaParams(500, initial_temperature=10.0, seed=s))


if __name__ == '__main__':
    unittest.main()
