"""Inductive realization engine: reducible columns, reduce/extend steps and drivers."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from .small_cases import canonical_fixtures
from .exceptions import (AllRowsArePaths, InvalidStep, LemmaViolation,
                         NotAFixture, NotATreeRow, NotFound,
                         PreconditionViolated)
from .rainbow import RainbowMatching, find_rainbow_avoiding
from .structures import (ColoredGraph, DegreeMatrix, Exists,
                         RealizationOutcome, Trace, Unknown, canonical_form,
                         caterpillar_view, verify_realization)
from .walecki import walecki_pack

logger = logging.getLogger(__name__)

BaseProvider = Callable[[DegreeMatrix], Optional[ColoredGraph]]


@dataclass(frozen=True)
class ReductionStep:
    column: int
    row: int
    target: int

    @property
    def reduced_target(self) -> int:
        """Index of the target column once the removed column is gone."""
        return self.target if self.target < self.column else self.target - 1

    def as_dict(self) -> dict:
        return {'column': self.column, 'row': self.row, 'target': self.target}


def find_reducible_column(m: DegreeMatrix, avoid: Iterable[int] = ()) -> ReductionStep:
    """Returns the lowest reducible column, skipping ``avoid`` unless nothing else qualifies."""
    if m.all_paths():
        raise AllRowsArePaths('every row is a path degree sequence')
    avoid = set(avoid)
    fallback = None
    for column in range(m.n):
        entries = m.column(column)
        if sum(entries) != 2 * m.k - 1 or entries.count(1) != 1:
            continue
        row = entries.index(1)
        if m.is_path_row(row):
            continue
        target = next(j for j, d in enumerate(m.rows[row]) if d > 2)
        step = ReductionStep(column, row, target)
        if column not in avoid:
            return step
        fallback = fallback or step
    if fallback is not None:
        return fallback
    raise LemmaViolation('a non-path row exists but no column is reducible')


def reduce(m: DegreeMatrix, step: ReductionStep) -> DegreeMatrix:
    if not (0 <= step.column < m.n and 0 <= step.target < m.n and 0 <= step.row < m.k):
        raise InvalidStep(f'{step} is outside the matrix')
    if step.column == step.target:
        raise InvalidStep('removed column and target column coincide')
    expected = tuple(1 if i == step.row else 2 for i in range(m.k))
    if m.column(step.column) != expected:
        raise InvalidStep(f'column {step.column + 1} is not all 2s with a single 1 in row {step.row + 1}')
    if m.rows[step.row][step.target] <= 2:
        raise InvalidStep(f'entry ({step.row + 1}, {step.target + 1}) is not larger than 2')

    reduced = m.decremented([(step.row, step.target)]).without_columns([step.column])
    if not reduced.is_tree_matrix() or not reduced.has_no_common_leaves():
        raise LemmaViolation('reduction left the class of tree matrices without common leaves')
    return reduced


def extend_realization(g_prime: ColoredGraph, step: ReductionStep,
                       matching: RainbowMatching) -> ColoredGraph:
    k = max(g_prime.max_color(), step.row + 1)
    leaf_color = step.row + 1
    if matching.avoid != step.reduced_target:
        raise InvalidStep('matching does not avoid the target vertex')
    if len(matching.edges) != k - 1 or set(matching.colors) != set(range(1, k + 1)) - {leaf_color}:
        raise InvalidStep('matching must use every color except the leaf color exactly once')
    for color, (u, w) in matching.edges:
        if g_prime.color_of(u, w) != color:
            raise InvalidStep(f'({u}, {w}) is not an edge of color {color}')

    new = step.column
    mapping = {x: x if x < new else x + 1 for x in range(g_prime.n)}
    remove = [(mapping[u], mapping[w]) for _, (u, w) in matching.edges]
    add = [(new, step.target, leaf_color)]
    for color, (u, w) in matching.edges:
        add.append((new, mapping[u], color))
        add.append((new, mapping[w], color))
    return g_prime.relabel(mapping, g_prime.n + 1).replace(remove=remove, add=add)


def realize_single_caterpillar(row: Sequence[int]) -> ColoredGraph:
    n = len(row)
    if n < 2 or any(d < 1 for d in row) or sum(row) != 2 * n - 2:
        raise NotATreeRow(f'{tuple(row)} is not a tree degree sequence')
    if n == 2:
        return ColoredGraph(2, [(0, 1, 1)])

    backbone = [x for x in range(n) if row[x] >= 2]
    leaves = iter(x for x in range(n) if row[x] == 1)
    edges = [(a, b, 1) for a, b in zip(backbone, backbone[1:])]
    last = len(backbone) - 1
    for position, b in enumerate(backbone):
        if last == 0:
            count = row[b]
        else:
            count = row[b] - (1 if position in (0, last) else 2)
        edges.extend((b, next(leaves), 1) for _ in range(count))
    return ColoredGraph(n, edges)


def _match_fixture(m: DegreeMatrix) -> Tuple[int, ColoredGraph]:
    if m.k != 4 or m.n not in (8, 9, 10):
        raise NotAFixture(f'fixtures cover 4x8, 4x9 and 4x10 matrices, not {m.k}x{m.n}')
    form = canonical_form(m)
    for stored_form, fixture in canonical_fixtures():
        if stored_form.matrix != form.matrix:
            continue
        # stored column stored_form.col_perm[b] plays the role of our column form.col_perm[b]
        vertices = {stored_form.col_perm[b]: form.col_perm[b] for b in range(m.n)}
        colors = {stored_form.row_perm[a] + 1: form.row_perm[a] + 1 for a in range(m.k)}
        graph = fixture.realization().relabel(vertices, m.n, recolor=colors)
        return fixture.case, graph
    raise NotAFixture('matrix does not match any stored class')


def fixture_lookup(m: DegreeMatrix) -> ColoredGraph:
    return _match_fixture(m)[1]


def _replay(graph: ColoredGraph, steps: Sequence[ReductionStep], k: int) -> Tuple[ColoredGraph, List[bool]]:
    """Extends a realization of the last matrix of a chain back to the first one."""
    greedy = []
    for step in reversed(steps):
        spines = [
            (color, caterpillar_view(graph, color).spine)
            for color in range(1, k + 1) if color != step.row + 1
        ]
        try:
            matching = find_rainbow_avoiding(spines, step.reduced_target, k - 1)
        except NotFound as error:
            raise LemmaViolation(f'extension at column {step.column + 1} failed: {error}')
        greedy.append(matching.greedy)
        graph = extend_realization(graph, step, matching)
    greedy.reverse()
    return graph, greedy


def _check_eligible(m: DegreeMatrix):
    if not m.is_tree_matrix():
        raise PreconditionViolated('every row must be a tree degree sequence')
    if not m.has_no_common_leaves():
        raise PreconditionViolated('matrix has common leaves')


def realize_k_le_4(m: DegreeMatrix) -> RealizationOutcome:
    if not 1 <= m.k <= 4:
        raise PreconditionViolated(f'expected 1 to 4 rows, got {m.k}')
    _check_eligible(m)
    if m.k == 1:
        return Exists(realize_single_caterpillar(m.rows[0]), m, Trace(base='single'))

    steps = []
    current = m
    while True:
        if current.all_paths():
            base, graph = 'walecki', walecki_pack(current)
            break
        if m.k == 4 and current.n <= 10:
            case, graph = _match_fixture(current)
            base = f'fixture:{case}'
            break
        step = find_reducible_column(current)
        logger.debug('reduce %dx%d: %s', current.k, current.n, step)
        steps.append(step)
        current = reduce(current, step)

    graph, greedy = _replay(graph, steps, m.k)
    return Exists(graph, m, Trace(base, tuple(steps), tuple(greedy)))


def realize_generic_conditional(m: DegreeMatrix,
                                base_provider: Optional[BaseProvider] = None) -> RealizationOutcome:
    _check_eligible(m)
    k = m.k
    floor = 4 * k - 2
    steps = []
    current = m
    while True:
        if current.all_paths():
            base, graph = 'walecki', walecki_pack(current)
            break
        if current.n <= floor:
            graph = base_provider(current) if base_provider is not None else None
            if graph is None:
                return Unknown(
                    f'no construction is known for the {current.k}x{current.n} residual matrix '
                    f'(non-path rows at n <= 4k-2 = {floor})'
                )
            report = verify_realization(graph, current)
            if not report.ok:
                return Unknown(f'base provider returned an invalid realization: {report.violation}')
            base = 'provided'
            break
        step = find_reducible_column(current)
        steps.append(step)
        current = reduce(current, step)

    graph, greedy = _replay(graph, steps, k)
    trace = Trace(base, tuple(steps), tuple(greedy))
    if not all(greedy):
        # extensions above 4k-2 vertices are covered by the greedy argument
        logger.warning('greedy rainbow search needed backtracking for a %dx%d matrix', k, m.n)
        trace = trace.with_note('greedy rainbow search backtracked')
    return Exists(graph, m, trace)
