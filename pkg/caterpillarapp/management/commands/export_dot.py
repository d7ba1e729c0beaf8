from caterpillarapp.export import export_dot
from caterpillarapp.formats import read_graph
from caterpillarapp.management.base import CaterpillarCommand, input_errors


class Command(CaterpillarCommand):
    help = "Write a colored graph as a DOT document"

    def handle(self, *args, **options):
        with input_errors():
            g = read_graph(self.read_text(options['input'], options))
        self.write_text(export_dot(g), options['output'])
