from caterpillarapp.formats import read_matrix
from caterpillarapp.management.base import CaterpillarCommand, input_errors
from caterpillarapp.serializers import TwoTreeConditionsSerializer
from caterpillarapp.two_trees import check_two_tree_conditions


class Command(CaterpillarCommand):
    help = "Check the three conditions for two edge-disjoint caterpillars"

    def handle(self, *args, **options):
        with input_errors():
            m = read_matrix(self.read_text(options['input'], options))
            conditions = check_two_tree_conditions(m)
        self.write_json(TwoTreeConditionsSerializer(conditions).data, options['output'])
        if not conditions.ok:
            self.stderr.write(conditions.witness().message)
        self.finish(0 if conditions.ok else 1)
