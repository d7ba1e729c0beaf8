import json

from django.core.management.base import BaseCommand

from caterpillarapp.management.base import input_errors

from oracleapp.enumeration import enumerate_matrices


class Command(BaseCommand):
    help = "List tree degree matrices up to row and column permutation, one JSON line each"

    def add_arguments(self, parser):
        parser.add_argument('k', type=int)
        parser.add_argument('n', type=int)
        parser.add_argument('--allow-common-leaves', action='store_true')
        parser.add_argument('--count', action='store_true', help='print only the number of classes')

    def handle(self, *args, **options):
        with input_errors():
            matrices = enumerate_matrices(options['k'], options['n'],
                                          require_no_common_leaves=not options['allow_common_leaves'])
        if options['count']:
            self.stdout.write(str(len(matrices)))
            return
        for m in matrices:
            self.stdout.write(json.dumps({'rows': [list(row) for row in m.rows]}))
