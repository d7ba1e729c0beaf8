import networkx as nx
from django.test import SimpleTestCase, tag

from caterpillarapp.exceptions import (CensusViolation, NotFound,
                                       PreconditionViolated)
from caterpillarapp.large_n import (hamiltonian_path_with_forced,
                                    heavy_vertex_census, phase_one,
                                    phase_two, realize_large)
from caterpillarapp.structures import (DegreeMatrix, Exists, caterpillar_view,
                                       verify_realization)

from oracleapp.generators import random_matrix

from .factories import (assert_structural_bounds, bushy_matrix, disjoint_paths,
                        path_row)


class HeavyVertexCensusTest(SimpleTestCase):
    def test_paths_have_no_heavy_vertices(self):
        census = heavy_vertex_census(disjoint_paths(5, 400))
        self.assertEqual(census.heavy, ())
        self.assertEqual(census.medium, ())

    def test_one_heavy_column(self):
        m = bushy_matrix(5, 400, 292, 399)
        census = heavy_vertex_census(m)
        self.assertEqual(census.sums[399], 300)
        self.assertEqual(census.heavy, (399,))
        self.assertEqual(census.medium, (399,))

    def test_twelve_medium_columns_are_a_violation(self):
        with self.assertRaises(CensusViolation):
            heavy_vertex_census(DegreeMatrix.from_rows([(2,) * 12]))

    def test_common_leaves_are_rejected(self):
        with self.assertRaises(PreconditionViolated):
            heavy_vertex_census(DegreeMatrix.from_rows([(1, 1), (1, 1)]))


class HamiltonianPathWithForcedTest(SimpleTestCase):
    def test_complete_graph(self):
        self.assertEqual(hamiltonian_path_with_forced(nx.complete_graph(4), (0, 3)), [0, 1, 2, 3])

    def test_forced_edge_is_kept(self):
        F = nx.complete_graph(6)
        F.remove_edges_from([(0, 3), (1, 4), (2, 5)])
        path = hamiltonian_path_with_forced(F, (0, 1), forced=[(2, 4)])
        self.assertEqual((path[0], path[-1]), (0, 1))
        self.assertEqual(sorted(path), list(range(6)))
        self.assertTrue(all(F.has_edge(u, v) for u, v in zip(path, path[1:])))
        self.assertEqual(abs(path.index(2) - path.index(4)), 1)

    def test_rotation_repairs_the_initial_order(self):
        F = nx.complete_graph(8)
        F.remove_edges_from([(0, 1), (1, 2), (2, 3), (3, 4), (5, 6)])
        path = hamiltonian_path_with_forced(F, (0, 7))
        self.assertEqual((path[0], path[-1]), (0, 7))
        self.assertTrue(all(F.has_edge(u, v) for u, v in zip(path, path[1:])))

    def test_endpoints_joined_by_forced_edges(self):
        with self.assertRaises(NotFound):
            hamiltonian_path_with_forced(nx.complete_graph(4), (0, 1), forced=[(0, 2), (2, 1)])

    def test_forced_pair_must_be_an_edge(self):
        F = nx.complete_graph(4)
        F.remove_edge(1, 2)
        with self.assertRaises(NotFound):
            hamiltonian_path_with_forced(F, (0, 3), forced=[(1, 2)])


class PhaseOneTest(SimpleTestCase):
    def test_all_path_rows(self):
        m = disjoint_paths(5, 400)
        state = phase_one(m)
        self.assertEqual(state.steps, ())
        self.assertEqual(state.built, (1, 2, 3))
        self.assertEqual(state.unbuilt, (4, 5))
        for color in state.unbuilt:
            self.assertEqual(len(state.ends[color]), 2)

    def test_built_colors_have_the_most_leaves(self):
        many = [1] * 30 + [2] * 370
        many[399] = 30
        some = [2] * 400
        some[30:50] = [1] * 20
        some[398] = 20
        m = DegreeMatrix.from_rows([
            path_row(400, 100, 101), many, path_row(400, 102, 103), some, path_row(400, 104, 105),
        ])
        state = phase_one(m)
        self.assertEqual(state.built, (1, 2, 4))
        self.assertEqual(state.heavy, 399)

    def test_bushy_matrix(self):
        m = bushy_matrix(5, 400, 40, 399)
        state = phase_one(m)
        self.assertIn(1, state.built)
        self.assertEqual(state.heavy, 399)
        self.assertEqual(len(state.steps), 38)
        self.assertEqual(state.graph.degree(399), sum(m.column(399)))
        for color in state.built:
            caterpillar_view(state.graph, color)
        g = phase_two(state)
        self.assertTrue(verify_realization(g, m).ok)
        assert_structural_bounds(self, g, m)

    def test_bounds(self):
        with self.assertRaises(PreconditionViolated):
            phase_one(disjoint_paths(5, 300))
        with self.assertRaises(PreconditionViolated):
            phase_one(disjoint_paths(4, 400))


class RealizeLargeTest(SimpleTestCase):
    def test_all_paths(self):
        m = disjoint_paths(5, 400)
        outcome = realize_large(m)
        self.assertIsInstance(outcome, Exists)
        self.assertEqual(outcome.trace.base, 'large_n')
        assert_structural_bounds(self, outcome.graph, m)

    def test_forced_below_the_bound_is_noted(self):
        m = bushy_matrix(5, 200, 6, 199)
        outcome = realize_large(m, enforce_bounds=False)
        self.assertIn('size bounds not enforced', outcome.trace.notes)

    @tag('slow')
    def test_random_instances(self):
        for k, n in ((5, 400), (6, 450)):
            for seed in range(10):
                m = random_matrix(k, n, seed)
                with self.subTest(k=k, n=n, seed=seed):
                    census = heavy_vertex_census(m)
                    self.assertLessEqual(len(census.heavy), 1)
                    self.assertLessEqual(len(census.medium), 11)
                    outcome = realize_large(m)
                    self.assertTrue(verify_realization(outcome.graph, m).ok)
                    assert_structural_bounds(self, outcome.graph, m)
