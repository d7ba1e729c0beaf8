import json
import sys
from contextlib import contextmanager

from django.core.management.base import BaseCommand, CommandError

from caterpillarapp.dispatch import EXIT_CODES, INPUT_ERROR
from caterpillarapp.exceptions import CaterpillarError, LemmaViolation
from caterpillarapp.formats import INPUT_ERRORS


def dump_json(data) -> str:
    """Returns JSON with sorted keys so identical input gives identical output."""

    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False)


@contextmanager
def input_errors():
    """Turns malformed input into a CommandError with the input-error exit code."""

    try:
        yield
    except LemmaViolation:
        raise
    except (CaterpillarError,) + INPUT_ERRORS as error:
        raise CommandError(f'{type(error).__name__}: {error}', returncode=INPUT_ERROR)
    except OSError as error:
        raise CommandError(str(error), returncode=INPUT_ERROR)


class CaterpillarCommand(BaseCommand):
    """Reads one input document (path or stdin) and writes text to a path or stdout."""

    stealth_options = ('stdin',)

    def add_arguments(self, parser):
        parser.add_argument('input', nargs='?', default='-', help='input file, "-" for stdin')
        parser.add_argument('-o', '--output', default='-', help='output file, "-" for stdout')

    def read_text(self, path: str, options: dict) -> str:
        if path == '-':
            return (options.get('stdin') or sys.stdin).read()
        with input_errors(), open(path, encoding='utf-8') as f:
            return f.read()

    def write_text(self, text: str, path: str):
        if path == '-':
            self.stdout.write(text)
            return
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text + '\n')

    def write_json(self, data, path: str):
        self.write_text(dump_json(data), path)

    def finish(self, code: int):
        if code:
            sys.exit(code)

    def finish_outcome(self, outcome):
        self.finish(EXIT_CODES[outcome.status])
