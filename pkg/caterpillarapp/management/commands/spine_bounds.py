from caterpillarapp.exceptions import BoundViolated
from caterpillarapp.formats import read_graph, read_matrix
from caterpillarapp.management.base import CaterpillarCommand, input_errors
from caterpillarapp.rainbow import check_spine_bounds
from caterpillarapp.serializers import SpineReportSerializer


class Command(CaterpillarCommand):
    help = "Check the spine-length lower bounds of a realization"

    def add_arguments(self, parser):
        parser.add_argument('matrix', help='degree matrix file')
        parser.add_argument('graph', nargs='?', default='-',
                            help='graph file or realize output, "-" for stdin')
        parser.add_argument('-o', '--output', default='-', help='output file, "-" for stdout')

    def handle(self, *args, **options):
        try:
            with input_errors():
                m = read_matrix(self.read_text(options['matrix'], options))
                g = read_graph(self.read_text(options['graph'], options))
                report = check_spine_bounds(g, m)
        except BoundViolated as error:
            self.write_json({'ok': False, 'violation': str(error)}, options['output'])
            self.finish(1)
            return
        data = dict(SpineReportSerializer(report).data)
        data['ok'] = True
        self.write_json(data, options['output'])
