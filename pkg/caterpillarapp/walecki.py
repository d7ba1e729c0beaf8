"""Edge-disjoint Hamiltonian paths for matrices whose rows are all path rows."""
from __future__ import annotations

import logging
from typing import List

from .exceptions import PreconditionViolated
from .structures import ColoredGraph, DegreeMatrix

logger = logging.getLogger(__name__)


def zigzag(start: int, n: int) -> List[int]:
    """Returns positions start, start+1, start-1, start+2, start-2, ... mod n."""
    order = [start]
    offset = 1
    while len(order) < n:
        order.append((start + offset) % n)
        if len(order) < n:
            order.append((start - offset) % n)
        offset += 1
    return order


def walecki_pack(m: DegreeMatrix) -> ColoredGraph:
    for i in range(m.k):
        if not m.is_path_row(i):
            raise PreconditionViolated(f'row {i + 1} is not a path degree sequence')
    if not m.has_no_common_leaves():
        raise PreconditionViolated('matrix has common leaves')
    if m.n < 2 * m.k:
        raise PreconditionViolated(f'{m.k} path rows need at least {2 * m.k} vertices')

    n = m.n
    if n == 2:
        return ColoredGraph(2, [(0, 1, 1)])

    # row i ends at positions i and ceil(n/2) + i
    half = (n + 1) // 2
    column_at = [None] * n
    for i in range(m.k):
        first, second = m.leaves(i)
        column_at[i] = first
        column_at[half + i] = second
    placed = {c for c in column_at if c is not None}
    free = iter(j for j in range(n) if j not in placed)
    column_at = [c if c is not None else next(free) for c in column_at]

    edges = []
    for i in range(m.k):
        order = [column_at[p] for p in zigzag(i, n)]
        edges.extend((u, v, i + 1) for u, v in zip(order, order[1:]))
    logger.debug('walecki packing of %d paths on %d vertices', m.k, n)
    return ColoredGraph(n, edges)
