import random

from django.test import SimpleTestCase, tag

from caterpillarapp.engine import (ReductionStep, extend_realization,
                                   find_reducible_column, fixture_lookup,
                                   realize_generic_conditional,
                                   realize_k_le_4, realize_single_caterpillar,
                                   reduce)
from caterpillarapp.exceptions import (AllRowsArePaths, InvalidStep,
                                       NotAFixture, NotATreeRow,
                                       PreconditionViolated)
from caterpillarapp.rainbow import RainbowMatching
from caterpillarapp.structures import (ColoredGraph, DegreeMatrix, Exists,
                                       Status, caterpillar_view,
                                       verify_realization)

from oracleapp.generators import random_matrix
from oracleapp.search import exhaustive_realize

from .factories import (TWIN_ROWS, assert_structural_bounds, bushy_matrix,
                        disjoint_paths, fixture, greedy_at_large_residuals,
                        sparse_leaf_matrix, surplus)

# 2x6 matrix whose last column reduces to the 2x5 matrix realized by REDUCED_GRAPH
ORIGINAL = DegreeMatrix.from_rows([(3, 1, 2, 2, 1, 1), (1, 2, 2, 1, 2, 2)])
REDUCED = DegreeMatrix.from_rows([(2, 1, 2, 2, 1), (1, 2, 2, 1, 2)])
REDUCED_GRAPH = ColoredGraph(5, [
    (1, 3, 1), (3, 0, 1), (0, 2, 1), (2, 4, 1),
    (0, 4, 2), (4, 1, 2), (1, 2, 2), (2, 3, 2),
])


class ReductionTest(SimpleTestCase):
    def test_lowest_reducible_column(self):
        self.assertEqual(find_reducible_column(ORIGINAL), ReductionStep(column=1, row=0, target=0))

    def test_avoided_columns_are_skipped_when_possible(self):
        self.assertEqual(find_reducible_column(ORIGINAL, avoid=[1]).column, 4)

    def test_all_path_rows_have_nothing_to_reduce(self):
        with self.assertRaises(AllRowsArePaths):
            find_reducible_column(fixture(1).degree_matrix())

    def test_reduce(self):
        self.assertEqual(reduce(ORIGINAL, ReductionStep(5, 0, 0)), REDUCED)

    def test_reduce_rejects_bad_steps(self):
        with self.assertRaises(InvalidStep):
            reduce(ORIGINAL, ReductionStep(2, 0, 0))
        with self.assertRaises(InvalidStep):
            reduce(ORIGINAL, ReductionStep(5, 0, 2))
        with self.assertRaises(InvalidStep):
            reduce(ORIGINAL, ReductionStep(5, 0, 5))

    def test_extend_moves_a_matching_edge_onto_the_new_vertex(self):
        self.assertTrue(verify_realization(REDUCED_GRAPH, REDUCED).ok)
        step = ReductionStep(5, 0, 0)
        matching = RainbowMatching(((2, (1, 2)),), avoid=0)
        g = extend_realization(REDUCED_GRAPH, step, matching)
        self.assertTrue(verify_realization(g, ORIGINAL).ok)
        self.assertEqual(g.color_of(5, 0), 1)
        self.assertEqual(caterpillar_view(g, 2).spine, (3, 2, 5, 1, 4, 0))

    def test_chains_shrink_until_every_row_is_a_path(self):
        rng = random.Random(8)
        for k in (2, 3, 4):
            for _ in range(10):
                current = random_matrix(k, rng.randint(2 * k, 40), seed=rng.randrange(10 ** 6))
                with self.subTest(rows=current.rows):
                    while not current.all_paths():
                        reduced = reduce(current, find_reducible_column(current))
                        self.assertEqual(reduced.n, current.n - 1)
                        self.assertEqual(surplus(reduced), surplus(current) - 1)
                        current = reduced

    def test_extend_checks_the_matching(self):
        step = ReductionStep(5, 0, 0)
        with self.assertRaises(InvalidStep):
            extend_realization(REDUCED_GRAPH, step, RainbowMatching(((2, (0, 4)),), avoid=1))
        with self.assertRaises(InvalidStep):
            extend_realization(REDUCED_GRAPH, step, RainbowMatching(((2, (2, 4)),), avoid=0))


class SingleCaterpillarTest(SimpleTestCase):
    def test_backbone_is_the_non_leaf_vertices(self):
        row = (1, 3, 2, 2, 1, 2, 2, 2, 1)
        g = realize_single_caterpillar(row)
        self.assertTrue(verify_realization(g, DegreeMatrix.from_rows([row])).ok)
        self.assertEqual(caterpillar_view(g, 1).backbone, (1, 2, 3, 5, 6, 7))

    def test_star_and_edge(self):
        self.assertEqual(len(realize_single_caterpillar((3, 1, 1, 1))), 3)
        self.assertEqual(len(realize_single_caterpillar((1, 1))), 1)

    def test_not_a_tree_row(self):
        with self.assertRaises(NotATreeRow):
            realize_single_caterpillar((2, 2, 2))


class FixtureLookupTest(SimpleTestCase):
    def test_each_fixture_finds_itself(self):
        for case in range(1, 15):
            m = fixture(case).degree_matrix()
            with self.subTest(case=case):
                self.assertTrue(verify_realization(fixture_lookup(m), m).ok)

    def test_permuted_case_fourteen(self):
        m = fixture(14).degree_matrix().permuted((2, 0, 3, 1), (9, 3, 0, 7, 1, 8, 2, 6, 4, 5))
        self.assertTrue(verify_realization(fixture_lookup(m), m).ok)

    def test_other_shapes_are_not_fixtures(self):
        with self.assertRaises(NotAFixture):
            fixture_lookup(disjoint_paths(3, 8))


class RealizeKLe4Test(SimpleTestCase):
    def test_case_seven(self):
        outcome = realize_k_le_4(fixture(7).degree_matrix())
        self.assertIsInstance(outcome, Exists)
        self.assertEqual(outcome.trace.base, 'fixture:7')

    def test_all_paths_use_walecki(self):
        outcome = realize_k_le_4(disjoint_paths(3, 6))
        self.assertEqual(outcome.trace.base, 'walecki')
        self.assertEqual(outcome.trace.steps, ())

    def test_reductions_are_traced(self):
        m = bushy_matrix(3, 12, 4, 11)
        outcome = realize_k_le_4(m)
        self.assertEqual(len(outcome.trace.steps), 2)
        self.assertEqual(len(outcome.trace.greedy), 2)
        self.assertTrue(verify_realization(outcome.graph, m).ok)

    def test_single_row(self):
        outcome = realize_k_le_4(DegreeMatrix.from_rows([(1, 2, 1)]))
        self.assertEqual(outcome.trace.base, 'single')

    def test_preconditions(self):
        with self.assertRaises(PreconditionViolated):
            realize_k_le_4(TWIN_ROWS)
        with self.assertRaises(PreconditionViolated):
            realize_k_le_4(disjoint_paths(5, 10))

    def test_random_instances(self):
        rng = random.Random(3)
        for k in (2, 3, 4):
            for _ in range(25):
                n = rng.randint(2 * k, 30)
                m = random_matrix(k, n, seed=rng.randrange(10 ** 6))
                with self.subTest(rows=m.rows):
                    outcome = realize_k_le_4(m)
                    self.assertTrue(verify_realization(outcome.graph, m).ok)
                    assert_structural_bounds(self, outcome.graph, m)
                    self.assertTrue(all(greedy_at_large_residuals(outcome.trace, m)))

    @tag('slow')
    def test_many_random_instances(self):
        rng = random.Random(5)
        for k in (2, 3, 4):
            for _ in range(500):
                m = random_matrix(k, rng.randint(2 * k, 100), seed=rng.randrange(10 ** 6))
                outcome = realize_k_le_4(m)
                self.assertTrue(verify_realization(outcome.graph, m).ok)
                assert_structural_bounds(self, outcome.graph, m)
                self.assertTrue(all(greedy_at_large_residuals(outcome.trace, m)))


class RealizeGenericConditionalTest(SimpleTestCase):
    def test_chain_ending_in_paths(self):
        m = bushy_matrix(5, 60, 3, 59)
        outcome = realize_generic_conditional(m)
        self.assertIsInstance(outcome, Exists)
        self.assertEqual(outcome.trace.base, 'walecki')
        self.assertEqual(len(outcome.trace.steps), 1)
        self.assertTrue(all(outcome.trace.greedy))

    def test_open_base_without_a_provider_is_unknown(self):
        m = bushy_matrix(5, 18, 3, 17)
        self.assertEqual(realize_generic_conditional(m).status, Status.unknown)
        self.assertEqual(realize_generic_conditional(m, lambda residual: None).status, Status.unknown)

    def test_provider_sees_the_residual_at_4k_minus_2(self):
        m = bushy_matrix(5, 20, 5, 19)
        seen = []

        def provider(residual):
            seen.append(residual)
            return None

        self.assertEqual(realize_generic_conditional(m, provider).status, Status.unknown)
        self.assertEqual([(r.k, r.n) for r in seen], [(5, 18)])

    def test_invalid_provided_base_is_unknown(self):
        m = bushy_matrix(5, 18, 3, 17)
        outcome = realize_generic_conditional(m, lambda residual: ColoredGraph(residual.n))
        self.assertEqual(outcome.status, Status.unknown)

    def test_provided_base_is_extended(self):
        m = bushy_matrix(2, 7, 4, 6)
        outcome = realize_generic_conditional(m, lambda residual: exhaustive_realize(residual).graph)
        self.assertIsInstance(outcome, Exists)
        self.assertEqual(outcome.trace.base, 'provided')
        self.assertEqual(len(outcome.trace.steps), 1)

    def test_random_chains_extend_greedily(self):
        rng = random.Random(6)
        for k in (5, 6, 7):
            for _ in range(8):
                extra = rng.randint(0, 8)
                n = 4 * k - 2 + extra + rng.randint(0, 10)
                m = sparse_leaf_matrix(k, n, extra, seed=rng.randrange(10 ** 6))
                with self.subTest(rows=m.rows):
                    outcome = realize_generic_conditional(m)
                    self.assertIsInstance(outcome, Exists)
                    self.assertEqual(outcome.trace.base, 'walecki')
                    self.assertEqual(len(outcome.trace.steps), extra)
                    self.assertTrue(all(outcome.trace.greedy))
                    self.assertTrue(verify_realization(outcome.graph, m).ok)
                    assert_structural_bounds(self, outcome.graph, m)
