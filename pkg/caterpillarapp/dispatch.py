"""Routes a degree matrix to the constructor that covers it."""
import logging
from typing import Optional

from django.conf import settings

from .engine import (realize_generic_conditional, realize_k_le_4,
                     realize_single_caterpillar)
from .exceptions import LemmaViolation, PreconditionViolated
from .large_n import realize_large
from .structures import (ColoredGraph, DegreeMatrix, Exists, NotExists,
                         RealizationOutcome, Status, Trace, Unknown, Witness,
                         large_n_bound)
from .two_trees import realize_two

logger = logging.getLogger(__name__)

EXIT_CODES = {
    Status.exists: 0,
    Status.not_exists: 1,
    Status.unknown: 2,
}
INPUT_ERROR = 3


def exit_code(outcome: RealizationOutcome) -> int:
    return EXIT_CODES[outcome.status]


def _oracle_base(residual: DegreeMatrix) -> Optional[ColoredGraph]:
    from oracleapp.search import exhaustive_realize

    if residual.n > settings.ORACLE_BASE_MAX_N:
        return None
    outcome = exhaustive_realize(residual)
    return outcome.graph if isinstance(outcome, Exists) else None


def route(m: DegreeMatrix, force_large: bool = False) -> str:
    """Names the constructor realize() will use."""
    if m.k == 1:
        return 'single'
    if m.k == 2:
        return 'two_trees'
    if force_large:
        return 'large_n'
    if not m.has_no_common_leaves():
        return 'oracle'
    if m.k <= 4:
        return 'k_le_4'
    if m.n >= large_n_bound(m.k):
        return 'large_n'
    return 'generic'


def realize(m: DegreeMatrix, force_large: bool = False, use_oracle: bool = True) -> RealizationOutcome:
    if force_large and m.k < 5:
        raise PreconditionViolated(f'--large needs at least 5 rows, got {m.k}')
    bad_rows = [i + 1 for i in range(m.k) if not m.is_tree_row(i)]
    if bad_rows and m.k != 2:
        return NotExists(Witness('tree-row', f'rows {bad_rows} are not tree degree sequences',
                                 {'rows': bad_rows}))

    name = route(m, force_large)
    logger.info('realizing a %dx%d matrix via %s', m.k, m.n, name)
    try:
        if name == 'single':
            return Exists(realize_single_caterpillar(m.rows[0]), m, Trace(base='single'))
        if name == 'two_trees':
            return realize_two(m)
        if name == 'k_le_4':
            return realize_k_le_4(m)
        if name == 'large_n':
            return realize_large(m, enforce_bounds=m.n >= large_n_bound(m.k))
        if name == 'generic':
            return realize_generic_conditional(m, _oracle_base if use_oracle else None)
        if use_oracle and m.n <= settings.ORACLE_BASE_MAX_N:
            from oracleapp.search import exhaustive_realize

            return exhaustive_realize(m)
        return Unknown(f'{m.k} rows with common leaves on {m.n} vertices: no construction applies')
    except LemmaViolation as error:
        logger.warning('construction failed a proved step: %s', error)
        return Unknown(f'construction failed: {error}')
