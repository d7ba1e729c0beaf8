import json

from django.test import SimpleTestCase
from rest_framework.exceptions import ValidationError

from caterpillarapp.exceptions import InvalidGraph, InvalidMatrix
from caterpillarapp.export import color_name, export_dot
from caterpillarapp.formats import (parse_adjacency_text, parse_matrix_text,
                                    read_graph, read_matrix,
                                    render_adjacency_text)
from caterpillarapp.serializers import (ColoredGraphSerializer,
                                        DegreeMatrixSerializer,
                                        OutcomeSerializer,
                                        TwoTreeConditionsSerializer)
from caterpillarapp.structures import (ColoredGraph, Exists, NotExists,
                                       Trace, Unknown, Witness)
from caterpillarapp.two_trees import check_two_tree_conditions

from .factories import TWIN_ROWS, fixture


class TextFormatTest(SimpleTestCase):
    def test_compact_and_spaced_rows(self):
        self.assertEqual(parse_matrix_text('12221222\n21222122').rows[1], (2, 1, 2, 2, 2, 1, 2, 2))
        self.assertEqual(parse_matrix_text('5 2 1 1 1 & 2\\\\\n').rows, ((5, 2, 1, 1, 1, 2),))

    def test_bad_rows(self):
        with self.assertRaises(InvalidMatrix):
            parse_matrix_text('1 x 1')
        with self.assertRaises(InvalidMatrix):
            parse_matrix_text('\n  \n')

    def test_adjacency_text(self):
        g = parse_adjacency_text('\n'.join(fixture(1).adjacency))
        self.assertEqual(len(g), 28)
        self.assertEqual(parse_adjacency_text(render_adjacency_text(g)), g)

    def test_adjacency_must_be_symmetric(self):
        with self.assertRaises(InvalidGraph):
            parse_adjacency_text('01\n20')
        with self.assertRaises(InvalidGraph):
            parse_adjacency_text('10\n00')


class JsonFormatTest(SimpleTestCase):
    def test_read_matrix(self):
        self.assertEqual(read_matrix('{"rows": [[1, 1], [1, 1]]}').k, 2)
        self.assertEqual(read_matrix('[[1, 2, 1]]').n, 3)

    def test_ragged_rows_fail_validation(self):
        serializer = DegreeMatrixSerializer(data={'rows': [[1, 1], [1, 2, 1]]})
        self.assertFalse(serializer.is_valid())
        self.assertIn('rows', serializer.errors)
        with self.assertRaises(ValidationError):
            read_matrix('{"rows": []}')

    def test_graph_round_trip(self):
        g = fixture(3).realization()
        data = ColoredGraphSerializer(g).data
        self.assertEqual(read_graph(json.dumps(data)), g)

    def test_graph_inside_realize_output(self):
        text = json.dumps({'status': 'exists', 'graph': {'n': 2, 'edges': [{'u': 0, 'v': 1, 'color': 1}]}})
        self.assertEqual(read_graph(text), ColoredGraph(2, [(0, 1, 1)]))

    def test_parallel_edges_fail_validation(self):
        serializer = ColoredGraphSerializer(data={'n': 2, 'edges': [
            {'u': 0, 'v': 1, 'color': 1}, {'u': 1, 'v': 0, 'color': 2},
        ]})
        self.assertFalse(serializer.is_valid())

    def test_outcomes(self):
        f = fixture(1)
        data = OutcomeSerializer(Exists(f.realization(), f.degree_matrix(), Trace(base='walecki'))).data
        self.assertEqual(data['status'], 'exists')
        self.assertEqual(len(data['graph']['edges']), 28)
        self.assertEqual(data['trace']['base'], 'walecki')

        data = OutcomeSerializer(NotExists(Witness('cond3', 'message', {'d_max': 10}))).data
        self.assertEqual(data['witness']['detail'], {'d_max': 10})
        self.assertEqual(OutcomeSerializer(Unknown('why')).data, {'status': 'unknown', 'reason': 'why'})

    def test_two_tree_conditions(self):
        data = TwoTreeConditionsSerializer(check_two_tree_conditions(TWIN_ROWS)).data
        self.assertFalse(data['ok'])
        self.assertFalse(data['cond3'])
        self.assertEqual(data['witness']['condition'], 'cond3')


class ExportDotTest(SimpleTestCase):
    def test_single_edge(self):
        dot = export_dot(ColoredGraph(2, [(0, 1, 1)]))
        self.assertIn('v1 -- v2', dot)
        self.assertIn(color_name(1), dot)

    def test_case_one(self):
        dot = export_dot(fixture(1).realization())
        self.assertEqual(dot.count(' -- '), 28)
        for color in range(1, 5):
            self.assertIn(color_name(color), dot)

    def test_isolated_vertices(self):
        dot = export_dot(ColoredGraph(3))
        for name in ('v1', 'v2', 'v3'):
            self.assertIn(name, dot)
        self.assertNotIn(' -- ', dot)

    def test_output_is_deterministic(self):
        g = fixture(5).realization()
        self.assertEqual(export_dot(g), export_dot(g))
