from caterpillarapp.formats import read_matrix
from caterpillarapp.graphicality import column_sums, eg_prefix_check, erdos_gallai
from caterpillarapp.management.base import CaterpillarCommand, input_errors
from caterpillarapp.serializers import EGReportSerializer


class Command(CaterpillarCommand):
    help = "Test the column sums of a matrix (or a plain sequence) with Erdős–Gallai"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--sequence', nargs='+', type=int,
                            help='check this degree sequence instead of reading a matrix')
        parser.add_argument('--s-max', type=int,
                            help='also report the prefix check for s < S_MAX (default 2k for a matrix)')

    def handle(self, *args, **options):
        s_max = options['s_max']
        if options['sequence']:
            sequence = options['sequence']
        else:
            with input_errors():
                m = read_matrix(self.read_text(options['input'], options))
            sequence = column_sums(m)
            s_max = s_max or 2 * m.k

        report = erdos_gallai(sequence)
        data = dict(EGReportSerializer(report).data)
        data['sequence'] = list(sequence)
        if s_max:
            data['s_max'] = s_max
            data['prefix_ok'] = eg_prefix_check(sequence, s_max)
        self.write_json(data, options['output'])
        self.finish(0 if report.graphical else 1)
