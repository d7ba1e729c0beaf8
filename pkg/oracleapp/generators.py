import logging
import random

from caterpillarapp.exceptions import InfeasibleParameters
from caterpillarapp.structures import DegreeMatrix

logger = logging.getLogger(__name__)


def random_matrix(k: int, n: int, seed: int, allow_common_leaves: bool = False) -> DegreeMatrix:
    """Returns a random tree degree matrix; the same seed gives the same matrix."""
    if k < 1 or n < 2:
        raise InfeasibleParameters(f'need k >= 1 and n >= 2, got k={k}, n={n}')
    if not allow_common_leaves and n < 2 * k:
        raise InfeasibleParameters(f'{k} rows without common leaves need n >= {2 * k}, got {n}')
    rng = random.Random(seed)

    if allow_common_leaves:
        counts = [2 + rng.randint(0, max(n - 3, 0)) for _ in range(k)]
        leaf_sets = [rng.sample(range(n), count) for count in counts]
    else:
        # every row keeps two leaves; the spare columns are shared out in random order
        counts = [2] * k
        budget = n - 2 * k
        for i in rng.sample(range(k), k):
            extra = rng.randint(0, min(budget, max(n - 3, 0)))
            counts[i] += extra
            budget -= extra
        columns = rng.sample(range(n), sum(counts))
        leaf_sets, start = [], 0
        for count in counts:
            leaf_sets.append(columns[start:start + count])
            start += count

    rows = []
    for leaves in leaf_sets:
        row = [1 if j in leaves else 2 for j in range(n)]
        inner = [j for j in range(n) if row[j] == 2]
        for _ in range(len(leaves) - 2):
            row[rng.choice(inner)] += 1
        rows.append(row)
    logger.debug('random %dx%d matrix with leaf counts %s (seed %d)', k, n, [len(s) for s in leaf_sets], seed)
    return DegreeMatrix.from_rows(rows)
