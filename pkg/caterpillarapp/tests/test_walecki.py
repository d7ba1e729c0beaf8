import random

from django.test import SimpleTestCase, tag

from caterpillarapp.exceptions import PreconditionViolated
from caterpillarapp.structures import DegreeMatrix, color_subgraph, verify_realization
from caterpillarapp.walecki import walecki_pack, zigzag

from .factories import assert_structural_bounds, fixture, path_matrix


def random_path_matrix(k, n, rng):
    columns = rng.sample(range(n), 2 * k)
    return path_matrix(n, [(columns[2 * i], columns[2 * i + 1]) for i in range(k)])


class ZigzagTest(SimpleTestCase):
    def test_alternates_around_the_start(self):
        self.assertEqual(zigzag(0, 5), [0, 1, 4, 2, 3])
        self.assertEqual(zigzag(1, 4), [1, 2, 0, 3])


class WaleckiPackTest(SimpleTestCase):
    def test_single_edge(self):
        g = walecki_pack(DegreeMatrix.from_rows([(1, 1)]))
        self.assertEqual(color_subgraph(g, 1), frozenset({(0, 1)}))

    def test_two_paths_on_four_vertices(self):
        g = walecki_pack(DegreeMatrix.from_rows([(1, 2, 1, 2), (2, 1, 2, 1)]))
        self.assertEqual(color_subgraph(g, 1), frozenset({(0, 1), (1, 3), (2, 3)}))
        self.assertEqual(color_subgraph(g, 2), frozenset({(1, 2), (0, 2), (0, 3)}))

    def test_case_one(self):
        m = fixture(1).degree_matrix()
        self.assertTrue(verify_realization(walecki_pack(m), m).ok)

    def test_preconditions(self):
        with self.assertRaises(PreconditionViolated):
            walecki_pack(DegreeMatrix.from_rows([(1, 3, 1, 1)]))
        with self.assertRaises(PreconditionViolated):
            walecki_pack(path_matrix(4, [(0, 1), (1, 2)]))
        with self.assertRaises(PreconditionViolated):
            walecki_pack(path_matrix(5, [(0, 1), (2, 3), (4, 0)]))

    def test_canonical_leaf_placements(self):
        for k in range(1, 7):
            for n in range(max(2 * k, 2), 26):
                half = (n + 1) // 2
                m = path_matrix(n, [(i, half + i) for i in range(k)])
                with self.subTest(k=k, n=n):
                    self.assertTrue(verify_realization(walecki_pack(m), m).ok)

    def test_random_leaf_placements(self):
        rng = random.Random(7)
        for _ in range(200):
            k = rng.randint(1, 6)
            n = rng.randint(2 * k, 30)
            m = random_path_matrix(k, n, rng)
            with self.subTest(rows=m.rows):
                g = walecki_pack(m)
                self.assertTrue(verify_realization(g, m).ok)
                assert_structural_bounds(self, g, m)

    @tag('slow')
    def test_full_sweep(self):
        for k in range(1, 9):
            for n in range(2 * k, 41):
                half = (n + 1) // 2
                m = path_matrix(n, [(i, half + i) for i in range(k)])
                with self.subTest(k=k, n=n):
                    self.assertTrue(verify_realization(walecki_pack(m), m).ok)
        rng = random.Random(11)
        for _ in range(1000):
            k = rng.randint(1, 8)
            m = random_path_matrix(k, rng.randint(2 * k, 40), rng)
            self.assertTrue(verify_realization(walecki_pack(m), m).ok)
