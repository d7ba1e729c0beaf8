from caterpillarapp.formats import read_matrix
from caterpillarapp.management.base import CaterpillarCommand, input_errors
from caterpillarapp.serializers import OutcomeSerializer

from oracleapp.search import SearchLimits, exhaustive_realize


class Command(CaterpillarCommand):
    help = "Decide a small matrix by exhaustive search"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--max-nodes', type=int, help='search node budget')
        parser.add_argument('--time-budget', type=float, help='search time budget in seconds')
        parser.add_argument('--no-symmetry', action='store_true',
                            help='do not prune twin leaves of the first color')

    def handle(self, *args, **options):
        with input_errors():
            m = read_matrix(self.read_text(options['input'], options))
        limits = SearchLimits.from_settings(
            max_nodes=options['max_nodes'],
            time_budget=options['time_budget'],
            symmetry=False if options['no_symmetry'] else None,
        )
        outcome = exhaustive_realize(m, limits)
        self.write_json(OutcomeSerializer(outcome).data, options['output'])
        self.finish_outcome(outcome)
