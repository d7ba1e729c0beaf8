from caterpillarapp.formats import read_matrix
from caterpillarapp.graphicality import column_sums
from caterpillarapp.management.base import CaterpillarCommand, input_errors
from caterpillarapp.serializers import ValidationReportSerializer
from caterpillarapp.structures import validate_matrix


class Command(CaterpillarCommand):
    help = "Validate a degree matrix and list the constructors that apply to it"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--no-common-leaves', action='store_true',
                            help='treat common leaf columns as an error')

    def handle(self, *args, **options):
        with input_errors():
            m = read_matrix(self.read_text(options['input'], options))
        report = validate_matrix(m, require_no_common_leaves=options['no_common_leaves'])
        data = dict(ValidationReportSerializer(report).data)
        data['column_sums'] = column_sums(m)
        self.write_json(data, options['output'])
        self.finish(0 if report.ok else 1)
