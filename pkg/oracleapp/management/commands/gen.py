from caterpillarapp.management.base import CaterpillarCommand, input_errors
from caterpillarapp.serializers import DegreeMatrixSerializer

from oracleapp.generators import random_matrix


class Command(CaterpillarCommand):
    help = "Generate a random tree degree matrix"

    def add_arguments(self, parser):
        parser.add_argument('k', type=int)
        parser.add_argument('n', type=int)
        parser.add_argument('--seed', type=int, default=0)
        parser.add_argument('--allow-common-leaves', action='store_true')
        parser.add_argument('-o', '--output', default='-', help='output file, "-" for stdout')

    def handle(self, *args, **options):
        with input_errors():
            m = random_matrix(options['k'], options['n'], options['seed'],
                              allow_common_leaves=options['allow_common_leaves'])
        self.write_json(DegreeMatrixSerializer(m).data, options['output'])
