"""Tree degree matrices up to row and column permutation."""
from __future__ import annotations

import logging
from typing import Iterator, List, Sequence, Tuple

from caterpillarapp.exceptions import BudgetExceeded
from caterpillarapp.structures import DegreeMatrix, canonical_form

logger = logging.getLogger(__name__)

MAX_CELLS = 48


def _column_classes(rows: Sequence[Sequence[int]], n: int) -> List[Tuple[int, int]]:
    """Returns (start, stop) runs of equal columns; columns are kept grouped."""
    if not rows:
        return [(0, n)]
    classes = []
    start = 0
    for j in range(1, n + 1):
        if j == n or any(row[j] != row[start] for row in rows):
            classes.append((start, j))
            start = j
    return classes


def _nonincreasing(length: int, total: int, high: int, low: int) -> Iterator[Tuple[int, ...]]:
    """Nonincreasing tuples of the given length and sum with entries in low..high."""
    if length == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(high, total - low * (length - 1)), low - 1, -1):
        if first * length < total:
            break
        for rest in _nonincreasing(length - 1, total - first, first, low):
            yield (first,) + rest


def _rows(rows: List[Tuple[int, ...]], n: int, no_common_leaves: bool) -> Iterator[Tuple[int, ...]]:
    """Next rows that keep every class of equal columns sorted."""
    classes = _column_classes(rows, n)
    total = 2 * n - 2

    def fill(index: int, remaining: int) -> Iterator[Tuple[int, ...]]:
        if index == len(classes):
            if remaining == 0:
                yield ()
            return
        start, stop = classes[index]
        length = stop - start
        later = sum(b - a for a, b in classes[index + 1:])
        low = 2 if no_common_leaves and any(row[start] == 1 for row in rows) else 1
        for used in range(low * length, remaining - later + 1):
            for part in _nonincreasing(length, used, n - 1, low):
                for tail in fill(index + 1, remaining - used):
                    yield part + tail

    yield from fill(0, total)


def enumerate_matrices(k: int, n: int, require_no_common_leaves: bool = True) -> List[DegreeMatrix]:
    if k < 1 or n < 2:
        raise BudgetExceeded(f'need k >= 1 and n >= 2, got k={k}, n={n}')
    if k * n > MAX_CELLS:
        raise BudgetExceeded(f'k*n = {k * n} exceeds the enumeration budget {MAX_CELLS}')

    found = {}

    def extend(rows: List[Tuple[int, ...]]):
        if len(rows) == k:
            matrix = DegreeMatrix(tuple(rows))
            found.setdefault(canonical_form(matrix).matrix.rows, None)
            return
        for row in _rows(rows, n, require_no_common_leaves):
            extend(rows + [row])

    extend([])
    logger.info('enumerated %d classes of %dx%d tree matrices', len(found), k, n)
    return [DegreeMatrix(rows) for rows in sorted(found)]
