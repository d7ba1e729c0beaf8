from caterpillarapp.formats import read_graph, read_matrix
from caterpillarapp.management.base import CaterpillarCommand, input_errors
from caterpillarapp.serializers import VerificationReportSerializer
from caterpillarapp.structures import verify_realization


class Command(CaterpillarCommand):
    help = "Check that a colored graph is a caterpillar realization of a matrix"

    def add_arguments(self, parser):
        parser.add_argument('matrix', help='degree matrix file')
        parser.add_argument('graph', nargs='?', default='-',
                            help='graph file or realize output, "-" for stdin')
        parser.add_argument('-o', '--output', default='-', help='output file, "-" for stdout')

    def handle(self, *args, **options):
        with input_errors():
            m = read_matrix(self.read_text(options['matrix'], options))
            g = read_graph(self.read_text(options['graph'], options))
            report = verify_realization(g, m)
        self.write_json(VerificationReportSerializer(report).data, options['output'])
        self.finish(0 if report.ok else 1)
