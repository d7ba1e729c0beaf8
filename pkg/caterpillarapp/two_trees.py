"""Two edge-disjoint caterpillars: the characterization and the construction behind it.

A 2 x n degree matrix has a caterpillar realization exactly when

1. both rows are tree degree sequences,
2. the column sums are graphical,
3. d_max <= |S| + 4, where d_max is the largest column sum and S the set of
   columns holding a 1 in some row.

The constructor peels off columns with sum 2 (leaves of both trees) until
the residual matrix has no common leaves or consists of two paths.
"""
from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
from networkx.algorithms import bipartite

from .engine import realize_k_le_4
from .exceptions import InvalidGraph, LemmaViolation, NotFound, WrongRowCount
from .graphicality import EGReport, column_sums, erdos_gallai
from .large_n import hamiltonian_path_with_forced
from .structures import (ColoredGraph, DegreeMatrix, Exists, NotExists,
                         RealizationOutcome, Trace, Witness, caterpillar_view,
                         pair, verify_realization)
from .walecki import walecki_pack

logger = logging.getLogger(__name__)

# non-path first row, path second row, n <= 6; the reduction decrements
# row 1 of the first column and row 2 of the second column
ONE_PATH_TABLE = (
    ((3, 2, 1, 1, 1), (1, 2, 2, 2, 1)),
    ((3, 2, 2, 1, 1, 1), (1, 2, 2, 2, 2, 1)),
    ((3, 2, 2, 1, 1, 1), (2, 2, 1, 2, 2, 1)),
    ((3, 2, 2, 1, 1, 1), (2, 2, 2, 2, 1, 1)),
    ((4, 2, 1, 1, 1, 1), (1, 2, 2, 2, 2, 1)),
)

HUB = 'hub'

# one entry per column of sum 2: (color 1 neighbour, color 2 neighbour) of the
# re-inserted vertex; integers index the chosen all-2 columns
HUB_PATTERNS = {
    1: ((HUB, 0),),
    2: ((HUB, 0), (1, HUB)),
    3: ((HUB, 0), (HUB, 1), (2, HUB)),
    4: ((HUB, 0), (HUB, 1), (2, HUB), (3, HUB)),
}

MAX_ATTEMPTS = 16
EXHAUSTIVE_PATHS_MAX_N = 12


@dataclass(frozen=True)
class TwoTreeConditions:
    cond1: bool
    cond2: bool
    cond3: bool
    d_max: int
    s: Tuple[int, ...]
    row_sums: Tuple[int, int]
    graphicality: EGReport

    @property
    def ok(self) -> bool:
        return self.cond1 and self.cond2 and self.cond3

    def witness(self) -> Optional[Witness]:
        """Returns the first failing condition, or None."""
        if not self.cond1:
            return Witness('cond1', f'condition 1: row sums {self.row_sums} are not both tree sums',
                           {'row_sums': list(self.row_sums)})
        if not self.cond2:
            eg = self.graphicality
            if not eg.parity_ok:
                message = 'condition 2: column sums have odd total'
            else:
                message = (f'condition 2: column sums are not graphical '
                           f'(s={eg.first_violation_s}: {eg.lhs} > {eg.rhs})')
            return Witness('cond2', message, {'first_violation_s': eg.first_violation_s})
        if not self.cond3:
            return Witness('cond3', f'condition 3: d_max={self.d_max} > |S|+4={len(self.s) + 4}',
                           {'d_max': self.d_max, 'S': len(self.s)})
        return None


def check_two_tree_conditions(m: DegreeMatrix) -> TwoTreeConditions:
    if m.k != 2:
        raise WrongRowCount(f'expected 2 rows, got {m.k}')
    sums = column_sums(m)
    s = tuple(j for j in range(m.n) if min(m.column(j)) == 1)
    d_max = max(sums)
    eg = erdos_gallai(sums)
    return TwoTreeConditions(
        cond1=m.is_tree_matrix(),
        cond2=eg.graphical,
        cond3=d_max <= len(s) + 4,
        d_max=d_max,
        s=s,
        row_sums=(sum(m.rows[0]), sum(m.rows[1])),
        graphicality=eg,
    )


def cond3_slack(g: ColoredGraph, m: DegreeMatrix) -> Tuple[int, ...]:
    """Per vertex: leaf neighbours in the realization minus (d1 + d2 - 4); never negative."""
    slack = []
    for j in range(m.n):
        leaves = sum(
            1 for u, v, c in g.edges()
            if j in (u, v) and m.rows[c - 1][v if u == j else u] == 1
        )
        slack.append(leaves - (m.column_sum(j) - 4))
    return tuple(slack)


def _exhaustive_paths(n: int, ends1: Tuple[int, int], ends2: Tuple[int, int]) -> ColoredGraph:
    def paths(start, stop, banned):
        stack = [(start, [start])]
        while stack:
            x, path = stack.pop()
            if len(path) == n:
                if x == stop:
                    yield path
                continue
            for y in range(n - 1, -1, -1):
                if y in path or pair(x, y) in banned or (y == stop and len(path) < n - 1):
                    continue
                stack.append((y, path + [y]))

    for first in paths(ends1[0], ends1[1], frozenset()):
        used = frozenset(pair(u, v) for u, v in zip(first, first[1:]))
        second = next(paths(ends2[0], ends2[1], used), None)
        if second is not None:
            return ColoredGraph(n, _path_edges(first, 1) + _path_edges(second, 2))
    raise NotFound(f'no two edge-disjoint Hamiltonian paths with ends {ends1} and {ends2}')


def _path_edges(path: Sequence[int], color: int) -> List[Tuple[int, int, int]]:
    return [(u, v, color) for u, v in zip(path, path[1:])]


def two_hamiltonian_paths(n: int, endpoints1: Tuple[int, int],
                          endpoints2: Tuple[int, int]) -> ColoredGraph:
    """Returns edge-disjoint Hamiltonian paths, color 1 between endpoints1, color 2 between endpoints2."""
    if n < 3:
        raise NotFound('two edge-disjoint spanning paths need at least 3 vertices')
    a, b = endpoints1
    if set(endpoints1).isdisjoint(endpoints2):
        rows = [[1 if j in ends else 2 for j in range(n)] for ends in (endpoints1, endpoints2)]
        return walecki_pack(DegreeMatrix.from_rows(rows))

    first = [a] + [x for x in range(n) if x not in endpoints1] + [b]
    used = {pair(u, v) for u, v in zip(first, first[1:])}
    F = nx.complete_graph(n)
    F.remove_edges_from(used)
    try:
        second = hamiltonian_path_with_forced(F, endpoints2)
        return ColoredGraph(n, _path_edges(first, 1) + _path_edges(second, 2))
    except NotFound:
        if n > EXHAUSTIVE_PATHS_MAX_N:
            raise
    logger.debug('rotation failed for two paths on %d vertices, searching exhaustively', n)
    return _exhaustive_paths(n, endpoints1, endpoints2)


def _column_order(m: DegreeMatrix, first: int = 0) -> List[int]:
    """Columns by decreasing sum, ties by (row first, other row) descending."""
    other = 1 - first
    return sorted(range(m.n), key=lambda j: (-m.column_sum(j), -m.rows[first][j], -m.rows[other][j], j))


def _reposition_color(g: ColoredGraph, color: int, marked: Sequence[int]) -> ColoredGraph:
    """Moves the marked leaves of one color next to distinct backbone ends."""
    if not marked:
        return g
    if len(marked) > 2:
        raise NotFound(f'{len(marked)} leaves of color {color} cannot all sit at backbone ends')
    view = caterpillar_view(g, color)
    if not view.backbone:
        raise NotFound(f'color {color} has no backbone')
    taken = {pair(u, v) for u, v, c in g.edges() if c != color}
    old_legs = [(b, x) for b, attached in view.legs.items() for x in attached]
    leaves = [x for _, x in old_legs]
    ends = view.ends

    for placement in itertools.permutations(ends, len(marked)):
        if any(pair(x, end) in taken for x, end in zip(marked, placement)):
            continue
        capacity = {b: len(view.legs[b]) for b in view.backbone}
        for end in placement:
            capacity[end] -= 1
        if any(c < 0 for c in capacity.values()):
            continue
        rest = [x for x in leaves if x not in marked]
        graph = nx.Graph()
        graph.add_nodes_from(('leaf', x) for x in rest)
        for b, count in capacity.items():
            for t in range(count):
                graph.add_node(('slot', b, t))
                graph.add_edges_from(
                    (('leaf', x), ('slot', b, t)) for x in rest if pair(x, b) not in taken
                )
        matching = bipartite.hopcroft_karp_matching(graph, top_nodes=[('leaf', x) for x in rest])
        if any(('leaf', x) not in matching for x in rest):
            continue
        new_legs = [(end, x, color) for x, end in zip(marked, placement)]
        new_legs += [(matching[('leaf', x)][1], x, color) for x in rest]
        return g.replace(remove=[(b, x) for b, x in old_legs], add=new_legs)
    raise NotFound(f'cannot move leaves {list(marked)} of color {color} to backbone ends')


def _attach(sub: ColoredGraph, m: DegreeMatrix, removed: Sequence[int],
            attachments: Sequence[Tuple[int, int]]) -> ColoredGraph:
    """Re-inserts removed columns; removed[t] gets a color 1 edge to attachments[t][0] and a color 2 edge to attachments[t][1]."""
    kept = [j for j in range(m.n) if j not in removed]
    graph = sub.relabel(dict(enumerate(kept)), m.n)
    marked: Dict[int, List[int]] = {1: [], 2: []}
    for targets in attachments:
        for color, x in zip((1, 2), targets):
            if graph.degree(x, color) == 1 and x not in marked[color]:
                marked[color].append(x)

    if marked[1] or marked[2]:
        for order in ((1, 2), (2, 1)):
            try:
                moved = graph
                for color in order:
                    moved = _reposition_color(moved, color, marked[color])
                graph = moved
                break
            except NotFound:
                continue
        else:
            raise NotFound('marked leaves cannot be moved to backbone ends')

    add = []
    for v, (a, b) in zip(removed, attachments):
        add.extend([(v, a, 1), (v, b, 2)])
    return graph.replace(add=add)


def _verified(graph: ColoredGraph, m: DegreeMatrix) -> ColoredGraph:
    report = verify_realization(graph, m)
    if not report.ok:
        raise NotFound(report.violation)
    return graph


def _dedupe(pairs) -> Iterator[Tuple[int, int]]:
    seen = set()
    for candidate in pairs:
        if candidate not in seen:
            seen.add(candidate)
            yield candidate


def _split_candidates(m: DegreeMatrix) -> Iterator[Tuple[int, int]]:
    """(row 1 column, row 2 column) choices when entries above 2 sit in distinct columns."""
    frame = 0 if m.rows[0][_column_order(m, 0)[0]] > 2 else 1
    order = _column_order(m, frame)
    p, q = m.rows[frame], m.rows[1 - frame]
    c1, c2 = order[0], order[1]

    preferred = []
    for j1, j2 in ((c1, c2), (c2, c1)):
        if p[j1] > 2 and q[j2] > 2:
            preferred.append((j1, j2))
    if not preferred:
        j2 = next((j for j in order if q[j] > 2 and j != c1), None)
        if j2 is not None:
            preferred.append((c1, j2))
    if frame:
        preferred = [(b, a) for a, b in preferred]

    order = _column_order(m)
    rest = (
        (a, b) for a in order for b in order
        if a != b and m.rows[0][a] > 2 and m.rows[1][b] > 2
    )
    return _dedupe(itertools.chain(preferred, rest))


def _table_choice(m: DegreeMatrix, q: int) -> Optional[Tuple[int, int]]:
    """Marked columns when the matrix is one of the small one-path cases."""
    columns = Counter((m.rows[q][j], m.rows[1 - q][j]) for j in range(m.n))
    for top, bottom in ONE_PATH_TABLE:
        if len(top) != m.n or Counter(zip(top, bottom)) != columns:
            continue
        x = next(j for j in range(m.n) if (m.rows[q][j], m.rows[1 - q][j]) == (top[0], bottom[0]))
        y = next(j for j in range(m.n) if j != x and (m.rows[q][j], m.rows[1 - q][j]) == (top[1], bottom[1]))
        return x, y
    return None


def _one_path_candidates(m: DegreeMatrix) -> Iterator[Tuple[int, int]]:
    """Choices when exactly one row is a path; q is the non-path row."""
    q = 0 if m.is_path_row(1) else 1
    p = 1 - q
    order = _column_order(m, q)
    rows_q, rows_p = m.rows[q], m.rows[p]

    preferred = []
    if m.n <= 6:
        choice = _table_choice(m, q)
        if choice is not None:
            preferred.append(choice)
    c1, c2 = order[0], order[1]
    if rows_p[c2] == 1:
        preferred.append((c2, c1))
    else:
        preferred.append((c1, c2))
    rest = itertools.chain(
        ((x, y) for x in order for y in order if x != y and rows_q[x] > 2 and rows_p[y] == 2),
        ((x, y) for x in order for y in order if x != y and rows_q[x] >= 2 and rows_p[y] >= 2),
    )
    for x, y in _dedupe(itertools.chain(preferred, rest)):
        yield (x, y) if q == 0 else (y, x)


def _peel(m: DegreeMatrix, candidates: Iterator[Tuple[int, int]], notes: List[str]):
    """Removes one sum-2 column, decrements (row 1, a) and (row 2, b), recurses and re-inserts."""
    removed = m.common_leaf_columns()[0]
    for attempt, (a, b) in enumerate(itertools.islice(
            ((a, b) for a, b in candidates if m.rows[0][a] >= 2 and m.rows[1][b] >= 2), MAX_ATTEMPTS)):
        residual = m.decremented([(0, a), (1, b)]).without_columns([removed])
        if not check_two_tree_conditions(residual).ok:
            continue
        if attempt:
            logger.warning('two-row reduction fell back to choice %d (%d, %d)', attempt, a, b)
        try:
            sub, base = _realize(residual, notes)
            return _verified(_attach(sub, m, [removed], [(a, b)]), m), base
        except (NotFound, LemmaViolation, InvalidGraph) as error:
            logger.warning('two-row reduction (%d, %d) failed: %s', a, b, error)
    raise LemmaViolation(f'no admissible sum-2 column reduction for\n{m}')


def _single_hub(m: DegreeMatrix, hub: int):
    """Only the hub column has entries above 2: remove every sum-2 column at once."""
    removed = list(m.common_leaf_columns())
    pattern = HUB_PATTERNS.get(len(removed))
    if pattern is None:
        raise LemmaViolation(f'{len(removed)} columns with sum 2 around a single hub')
    twos = [j for j in _column_order(m) if m.column(j) == (2, 2)]

    attempts = 0
    for chosen in itertools.islice(itertools.permutations(twos, len(removed)), MAX_ATTEMPTS):
        for mirrored in (False, True):
            resolve = {HUB: hub, **dict(enumerate(chosen))}
            attachments = [(resolve[x], resolve[y]) for x, y in pattern]
            if mirrored:
                attachments = [(y, x) for x, y in attachments]
            cells = [cell for x, y in attachments for cell in ((0, x), (1, y))]
            residual = m.decremented(cells).without_columns(removed)
            if not residual.is_tree_matrix() or not residual.has_no_common_leaves():
                continue
            for swapped in (False, True):
                attempts += 1
                try:
                    if swapped:
                        flipped = DegreeMatrix(residual.rows[::-1])
                        sub = realize_k_le_4(flipped).graph.relabel(
                            {x: x for x in range(residual.n)}, residual.n, recolor={1: 2, 2: 1})
                    else:
                        sub = realize_k_le_4(residual).graph
                    return _verified(_attach(sub, m, removed, attachments), m), 'k_le_4'
                except (NotFound, InvalidGraph) as error:
                    logger.warning('single hub attempt %d failed: %s', attempts, error)
    raise LemmaViolation(f'no single hub reduction for\n{m}')


def _realize(m: DegreeMatrix, notes: List[str]) -> Tuple[ColoredGraph, str]:
    if m.has_no_common_leaves():
        return realize_k_le_4(m).graph, 'k_le_4'
    if m.all_paths():
        return two_hamiltonian_paths(m.n, m.leaves(0), m.leaves(1)), 'two_paths'

    big1 = [j for j in range(m.n) if m.rows[0][j] > 2]
    big2 = [j for j in range(m.n) if m.rows[1][j] > 2]
    if big1 and big2 and not (big1 == big2 and len(big1) == 1):
        notes.append('split')
        return _peel(m, _split_candidates(m), notes)
    if big1 and big2:
        notes.append('single_hub')
        return _single_hub(m, big1[0])
    notes.append('one_path')
    return _peel(m, _one_path_candidates(m), notes)


def realize_two(m: DegreeMatrix) -> RealizationOutcome:
    conditions = check_two_tree_conditions(m)
    witness = conditions.witness()
    if witness is not None:
        return NotExists(witness)
    notes: List[str] = []
    try:
        graph, base = _realize(m, notes)
    except NotFound as error:
        raise LemmaViolation(f'two-row construction failed: {error}')
    return Exists(graph, m, Trace(base=base, notes=tuple(notes)))

