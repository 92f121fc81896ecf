# Path and File Name : gp_engine/tests/test_exact.py
# Author: gp_engine maintainers
# Details of functionality of this file: Brute force and branch-and-bound tests, including cross-checks against the ILP model

"""
Exact Solver Tests

- known general position numbers of small families
- brute force, branch and bound and exhaustive ILP evaluation agree on a
  fixed corpus of paths, cycles, complete graphs and random graphs
- benchmark hypercubes and circulants
- cancellation and time limits
Q_6 and Q_7 run only with GP_ENGINE_SLOW_TESTS=1.
"""

import os
import threading
import unittest

import numpy as np

from gp_engine.errors import SolverLimitError
from gp_engine.exact import (
    BranchAndBoundOptions,
    branch_and_bound_gp,
    brute_force_gp,
    build_ilp,
    ilp_optimum_by_enumeration,
)
from gp_engine.exact.branch_and_bound import branching_order
from gp_engine.graph import is_general_position, oracle_for
from gp_engine.graph.core import VertexSet, witness_key
from gp_engine.graph.generators import circulant, complete, cycle, hypercube, path, random_connected
from gp_engine.results import Method

SLOW = os.environ.get("GP_ENGINE_SLOW_TESTS") == "1"


def _corpus():
    graphs = []
    for n in range(1, 9):
        graphs.append(path(n))
        graphs.append(complete(n))
        if n >= 3:
            graphs.append(cycle(n))
    rng = np.random.default_rng(1729)
    for _ in range(100):
        n = int(rng.integers(2, 11))
        graphs.append(random_connected(n, float(rng.uniform(0.1, 0.7)), seed=int(rng.integers(1 << 30))))
    return graphs


class TestKnownValues(unittest.TestCase):
    """Closed-form general position numbers."""

    def test_paths(self):
        """gp(P_1) = 1, otherwise the two endpoints."""
        self.assertEqual(brute_force_gp(oracle_for(path(1))).gp, 1)
        for n in range(2, 9):
            self.assertEqual(brute_force_gp(oracle_for(path(n))).gp, 2)

    def test_cycles(self):
        """gp(C_4) = 2, gp(C_n) = 3 for n >= 5, gp(C_3) = 3."""
        self.assertEqual(brute_force_gp(oracle_for(cycle(3))).gp, 3)
        self.assertEqual(brute_force_gp(oracle_for(cycle(4))).gp, 2)
        for n in range(5, 12):
            self.assertEqual(brute_force_gp(oracle_for(cycle(n))).gp, 3)

    def test_complete_graphs(self):
        for n in range(1, 9):
            result = branch_and_bound_gp(oracle_for(complete(n)))
            self.assertEqual(result.gp, n)
            self.assertEqual(result.witness.members(), list(range(n)))


class TestBruteForce(unittest.TestCase):

    def test_q3_witness(self):
        o = oracle_for(hypercube(3))
        result = brute_force_gp(o)
        self.assertEqual(result.method, Method.BF)
        self.assertEqual(result.gp, 4)
        self.assertTrue(result.optimal)
        self.assertEqual(result.witness.members(), [0, 3, 5, 6])

    def test_size_guard(self):
        o = oracle_for(hypercube(5))
        with self.assertRaises(SolverLimitError) as ctx:
            brute_force_gp(o)
        self.assertEqual((ctx.exception.n, ctx.exception.limit), (32, 22))


class TestOracleEquivalence(unittest.TestCase):
    """Brute force, branch and bound and the ILP model agree everywhere on the corpus."""

    def test_corpus(self):
        for g in _corpus():
            o = oracle_for(g)
            bf = brute_force_gp(o)
            bb = branch_and_bound_gp(o)
            ilp_value, ilp_witness = ilp_optimum_by_enumeration(build_ilp(o))
            with self.subTest(graph=g.name, n=g.n):
                self.assertEqual(bb.gp, bf.gp)
                self.assertEqual(ilp_value, bf.gp)
                self.assertTrue(bb.optimal)
                self.assertTrue(is_general_position(o, bb.witness))
                self.assertEqual(len(bb.witness), bb.gp)

    def test_canonical_witness_matches_brute_force(self):
        """Both report the lexicographically smallest optimal set."""
        for g in _corpus():
            o = oracle_for(g)
            with self.subTest(graph=g.name):
                self.assertEqual(branch_and_bound_gp(o).witness, brute_force_gp(o).witness)

    def test_ilp_witness_is_lexicographically_smallest(self):
        for g in _corpus()[:30]:
            o = oracle_for(g)
            _, witness = ilp_optimum_by_enumeration(build_ilp(o))
            with self.subTest(graph=g.name):
                self.assertEqual(witness, brute_force_gp(o).witness)


class TestBranchAndBound(unittest.TestCase):
    """Benchmark instances and search options."""

    def assertGp(self, g, expected, vertex_transitive=True):
        o = oracle_for(g)
        result = branch_and_bound_gp(o, BranchAndBoundOptions(vertex_transitive=vertex_transitive))
        self.assertEqual(result.gp, expected)
        self.assertTrue(result.optimal)
        self.assertEqual(result.method, Method.BB)
        self.assertTrue(is_general_position(o, result.witness))
        self.assertEqual(len(result.witness), expected)
        return result

    def test_small_hypercubes(self):
        self.assertGp(hypercube(3), 4)
        self.assertGp(hypercube(4), 5)
        self.assertGp(hypercube(5), 6)

    def test_symmetry_does_not_change_value(self):
        for g in (hypercube(4), circulant(9, [1, 3, 6, 8]), cycle(9)):
            with self.subTest(graph=g.name):
                o = oracle_for(g)
                plain = branch_and_bound_gp(o, BranchAndBoundOptions(vertex_transitive=False))
                reduced = branch_and_bound_gp(o, BranchAndBoundOptions(vertex_transitive=True))
                self.assertEqual(plain.gp, reduced.gp)
                self.assertEqual(plain.witness, reduced.witness)

    def test_cayley_instances(self):
        self.assertGp(circulant(9, [1, 3, 6, 8]), 4)
        self.assertGp(circulant(9, [1, 2, 3, 6, 7, 8]), 4)
        self.assertGp(circulant(20, [1, 3, 17, 19]), 7)

    @unittest.skipUnless(SLOW, "set GP_ENGINE_SLOW_TESTS=1")
    def test_q6(self):
        self.assertGp(hypercube(6), 8)

    @unittest.skipUnless(SLOW, "set GP_ENGINE_SLOW_TESTS=1")
    def test_q7(self):
        self.assertGp(hypercube(7), 9)

    def test_branching_order(self):
        """Interior-heavy vertices first: the middle of P_5 leads."""
        self.assertEqual(branching_order(oracle_for(path(5))), [2, 1, 3, 0, 4])

    def test_cancel_before_start(self):
        """A set cancel event stops the search and the result is not proven optimal."""
        event = threading.Event()
        event.set()
        o = oracle_for(hypercube(6))
        result = branch_and_bound_gp(o, BranchAndBoundOptions(cancel_event=event))
        self.assertFalse(result.optimal)
        self.assertTrue(is_general_position(o, result.witness))
        self.assertEqual(len(result.witness), result.gp)

    def test_zero_time_limit(self):
        o = oracle_for(hypercube(6))
        result = branch_and_bound_gp(o, BranchAndBoundOptions(time_limit=0.0))
        self.assertFalse(result.optimal)
        self.assertTrue(is_general_position(o, result.witness))

    def test_as_solve_result(self):
        result = branch_and_bound_gp(oracle_for(cycle(6))).as_solve_result()
        self.assertEqual(result.size, 3)
        self.assertTrue(result.feasible_before_repair)
        self.assertIsNone(result.seed)


class TestTieOrder(unittest.TestCase):
    """Every exact routine reports the optimum that is smallest under witness_key."""

    def test_key_order(self):
        self.assertLess(witness_key(0b1001), witness_key(0b0110))
        self.assertLess(witness_key(0b0011), witness_key(0b0111))
        self.assertLess(witness_key(0b0011), witness_key(0b1100))

    def test_path_four(self):
        o = oracle_for(path(4))
        self.assertEqual(brute_force_gp(o).witness.members(), [0, 1])
        self.assertEqual(branch_and_bound_gp(o).witness.members(), [0, 1])
        self.assertEqual(ilp_optimum_by_enumeration(build_ilp(o))[1].members(), [0, 1])

    def test_witness_is_smallest_optimum(self):
        rng = np.random.default_rng(515)
        graphs = [cycle(6), path(5), hypercube(3)]
        graphs += [random_connected(int(rng.integers(2, 9)), float(rng.uniform(0.1, 0.7)), seed=s) for s in range(20)]
        for g in graphs:
            o = oracle_for(g)
            optima = [bits for bits in range(1 << g.n) if is_general_position(o, VertexSet(g.n, bits))]
            size = max(bits.bit_count() for bits in optima)
            expected = min((b for b in optima if b.bit_count() == size), key=witness_key)
            with self.subTest(graph=g.name):
                self.assertEqual(brute_force_gp(o).witness.bits, expected)
                self.assertEqual(branch_and_bound_gp(o).witness.bits, expected)
                self.assertEqual(ilp_optimum_by_enumeration(build_ilp(o))[1].bits, expected)


if __name__ == '__main__':
    unittest.main()
