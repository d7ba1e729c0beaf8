from django.test import SimpleTestCase

from caterpillarapp.exceptions import InfeasibleParameters

from oracleapp.generators import random_matrix


class RandomMatrixTest(SimpleTestCase):
    def test_n_equal_to_2k_gives_paths(self):
        for seed in range(5):
            self.assertTrue(random_matrix(4, 8, seed).all_paths())

    def test_same_seed_same_matrix(self):
        self.assertEqual(random_matrix(5, 40, 7), random_matrix(5, 40, 7))

    def test_infeasible_parameters(self):
        with self.assertRaises(InfeasibleParameters):
            random_matrix(3, 5, 0)
        with self.assertRaises(InfeasibleParameters):
            random_matrix(0, 5, 0)

    def test_tree_rows(self):
        for seed in range(20):
            m = random_matrix(3, 12, seed)
            self.assertTrue(m.is_tree_matrix())
            self.assertTrue(m.has_no_common_leaves())
            m = random_matrix(3, 5, seed, allow_common_leaves=True)
            self.assertTrue(m.is_tree_matrix())
