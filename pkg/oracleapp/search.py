"""Exhaustive caterpillar packing search for small matrices."""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from django.conf import settings

from caterpillarapp.structures import (ColoredGraph, DegreeMatrix, Exists,
                                       NotExists, Pair, RealizationOutcome,
                                       Trace, Unknown, Witness, pair)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchLimits:
    max_nodes: int
    time_budget: float
    # twin leaves of the first color are attached in backbone order
    symmetry: bool = True

    @classmethod
    def from_settings(cls, **overrides) -> SearchLimits:
        """Budgets from ORACLE_MAX_NODES and REALIZER_TIME_BUDGET unless overridden."""
        values = {
            'max_nodes': settings.ORACLE_MAX_NODES,
            'time_budget': settings.REALIZER_TIME_BUDGET,
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)


class _BudgetExhausted(Exception):
    pass


class _Search:
    def __init__(self, m: DegreeMatrix, limits: SearchLimits):
        self.m = m
        self.limits = limits
        self.nodes = 0
        self.deadline = time.monotonic() + limits.time_budget
        self.used: Set[Pair] = set()
        self.free_degree = [m.n - 1] * m.n
        # twin_of[j]: lowest column equal to column j, None for that column itself
        first_seen: Dict[Tuple[int, ...], int] = {}
        self.twin_of: List[Optional[int]] = []
        for j in range(m.n):
            column = m.column(j)
            self.twin_of.append(first_seen.get(column))
            first_seen.setdefault(column, j)

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.limits.max_nodes or (
                self.nodes % 256 == 0 and time.monotonic() > self.deadline):
            raise _BudgetExhausted

    def _backbones(self, backbone: Sequence[int]) -> Iterator[List[int]]:
        """Hamiltonian paths over the backbone in unused pairs, each listed once."""
        if len(backbone) == 1:
            yield list(backbone)
            return
        stack = [[start] for start in reversed(backbone)]
        while stack:
            path = stack.pop()
            if len(path) == len(backbone):
                if path[0] < path[-1]:
                    yield path
                continue
            for y in reversed(backbone):
                if y not in path and pair(path[-1], y) not in self.used:
                    stack.append(path + [y])

    def _leg_assignments(self, row: Sequence[int], path: List[int], leaves: List[int],
                         twins: bool) -> Iterator[List[Pair]]:
        position = {b: t for t, b in enumerate(path)}
        capacity = {}
        for t, b in enumerate(path):
            if len(path) == 1:
                capacity[b] = row[b]
            else:
                capacity[b] = row[b] - (1 if t in (0, len(path) - 1) else 2)
        if any(c < 0 for c in capacity.values()):
            return
        chosen: Dict[int, int] = {}

        def assign(index: int) -> Iterator[List[Pair]]:
            if index == len(leaves):
                yield [pair(b, x) for x, b in chosen.items()]
                return
            x = leaves[index]
            floor = 0
            if twins and self.twin_of[x] is not None:
                twin = max((y for y in chosen if self.twin_of[y] == self.twin_of[x] or y == self.twin_of[x]),
                           default=None)
                if twin is not None:
                    floor = position[chosen[twin]]
            for b in path[floor:]:
                if capacity[b] and pair(x, b) not in self.used:
                    capacity[b] -= 1
                    chosen[x] = b
                    yield from assign(index + 1)
                    del chosen[x]
                    capacity[b] += 1

        yield from assign(0)

    def _caterpillars(self, i: int) -> Iterator[List[Pair]]:
        row = self.m.rows[i]
        n = self.m.n
        if n == 2:
            if (0, 1) not in self.used:
                yield [(0, 1)]
            return
        backbone = [x for x in range(n) if row[x] >= 2]
        leaves = [x for x in range(n) if row[x] == 1]
        twins = self.limits.symmetry and i == 0
        for path in self._backbones(backbone):
            spine = [pair(a, b) for a, b in zip(path, path[1:])]
            for legs in self._leg_assignments(row, path, leaves, twins):
                yield spine + legs

    def _feasible(self, i: int) -> bool:
        rows = self.m.rows
        return all(
            self.free_degree[x] >= sum(rows[r][x] for r in range(i + 1, self.m.k))
            for x in range(self.m.n)
        )

    def run(self, i: int = 0) -> Optional[List[List[Pair]]]:
        if i == self.m.k:
            return []
        for edges in self._caterpillars(i):
            self._tick()
            self.used.update(edges)
            for u, v in edges:
                self.free_degree[u] -= 1
                self.free_degree[v] -= 1
            rest = self.run(i + 1) if self._feasible(i) else None
            for u, v in edges:
                self.free_degree[u] += 1
                self.free_degree[v] += 1
            self.used.difference_update(edges)
            if rest is not None:
                return [edges] + rest
        return None


def exhaustive_realize(m: DegreeMatrix, limits: Optional[SearchLimits] = None) -> RealizationOutcome:
    limits = limits or SearchLimits.from_settings()
    bad_rows = [i + 1 for i in range(m.k) if not m.is_tree_row(i)]
    if bad_rows:
        return NotExists(Witness('tree-row', f'rows {bad_rows} are not tree degree sequences',
                                 {'rows': bad_rows}))

    search = _Search(m, limits)
    started = time.monotonic()
    try:
        found = search.run()
    except _BudgetExhausted:
        logger.warning('oracle gave up on a %dx%d matrix after %d nodes', m.k, m.n, search.nodes)
        return Unknown(f'search budget exhausted after {search.nodes} nodes')
    elapsed = time.monotonic() - started
    logger.info('oracle: %dx%d matrix, %d nodes, %.2fs, %s',
                m.k, m.n, search.nodes, elapsed, 'found' if found is not None else 'none')

    if found is None:
        return NotExists(Witness('exhaustive', 'no caterpillar realization exists',
                                 {'nodes': search.nodes}))
    graph = ColoredGraph(m.n, (
        (u, v, color) for color, edges in enumerate(found, start=1) for u, v in edges
    ))
    return Exists(graph, m, Trace(base='oracle', notes=(f'{search.nodes} nodes',)))
