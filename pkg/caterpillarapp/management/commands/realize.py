import logging

from caterpillarapp import dispatch
from caterpillarapp.export import export_dot
from caterpillarapp.formats import read_matrix
from caterpillarapp.management.base import CaterpillarCommand, input_errors
from caterpillarapp.serializers import OutcomeSerializer
from caterpillarapp.structures import Exists, Unknown, verify_realization

logger = logging.getLogger(__name__)


class Command(CaterpillarCommand):
    help = "Find edge-disjoint caterpillar realizations of a tree degree matrix"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--large', action='store_true',
                            help='use the large-n construction even below its proved range')
        parser.add_argument('--no-oracle', action='store_true',
                            help='never fall back to the exhaustive search')
        parser.add_argument('--dot', metavar='PATH', help='also write the realization as DOT')

    def handle(self, *args, **options):
        with input_errors():
            m = read_matrix(self.read_text(options['input'], options))
            outcome = dispatch.realize(m, force_large=options['large'],
                                       use_oracle=not options['no_oracle'])

        if isinstance(outcome, Exists):
            report = verify_realization(outcome.graph, m)
            if not report.ok:
                logger.error('refusing to emit an invalid realization: %s', report.violation)
                outcome = Unknown(f'realization failed verification: {report.violation}')
            elif options['dot']:
                self.write_text(export_dot(outcome.graph), options['dot'])

        self.write_json(OutcomeSerializer(outcome).data, options['output'])
        self.finish_outcome(outcome)
