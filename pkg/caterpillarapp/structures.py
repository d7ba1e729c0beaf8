"""Degree matrices, edge-colored graphs and caterpillar views.

Vertices are 0-based everywhere inside the package; colors are 1-based and
color ``c`` realizes row ``c - 1`` of a degree matrix.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import (TYPE_CHECKING, Any, ClassVar, Dict, FrozenSet, Iterable,
                    List, Mapping, NamedTuple, Optional, Sequence, Tuple)

import networkx as nx
from django.db import models

from .exceptions import (ColorOutOfRange, DimensionMismatch, InvalidGraph,
                         InvalidMatrix, LemmaViolation, NotACaterpillar,
                         NotATree, ParallelEdge)

if TYPE_CHECKING:
    from .engine import ReductionStep

Pair = Tuple[int, int]


def pair(u: int, v: int) -> Pair:
    """Returns the unordered pair (u, v) in canonical order."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class DegreeMatrix:
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        if not rows or not rows[0]:
            raise InvalidMatrix('a degree matrix needs at least one row and one column')
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise InvalidMatrix('rows have different lengths')
        if any(x < 0 for row in rows for x in row):
            raise InvalidMatrix('entries must be non-negative')
        object.__setattr__(self, 'rows', rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> DegreeMatrix:
        return cls(tuple(tuple(row) for row in rows))

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(row[j] for row in self.rows)

    def column_sum(self, j: int) -> int:
        return sum(row[j] for row in self.rows)

    def leaves(self, i: int) -> Tuple[int, ...]:
        return tuple(j for j, d in enumerate(self.rows[i]) if d == 1)

    def is_tree_row(self, i: int) -> bool:
        row = self.rows[i]
        return all(d > 0 for d in row) and sum(row) == 2 * self.n - 2

    def is_path_row(self, i: int) -> bool:
        return self.is_tree_row(i) and self.rows[i].count(1) == 2

    def is_tree_matrix(self) -> bool:
        return all(self.is_tree_row(i) for i in range(self.k))

    def all_paths(self) -> bool:
        return all(self.is_path_row(i) for i in range(self.k))

    def common_leaf_columns(self) -> Tuple[int, ...]:
        return tuple(j for j in range(self.n) if self.column(j).count(1) > 1)

    def has_no_common_leaves(self) -> bool:
        return not self.common_leaf_columns()

    def permuted(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> DegreeMatrix:
        """Row a of the result is row row_perm[a], column b is column col_perm[b]."""
        return DegreeMatrix(tuple(
            tuple(self.rows[r][c] for c in col_perm) for r in row_perm
        ))

    def without_columns(self, columns: Iterable[int]) -> DegreeMatrix:
        dropped = set(columns)
        keep = [j for j in range(self.n) if j not in dropped]
        return DegreeMatrix(tuple(tuple(row[j] for j in keep) for row in self.rows))

    def decremented(self, cells: Iterable[Tuple[int, int]]) -> DegreeMatrix:
        rows = [list(row) for row in self.rows]
        for i, j in cells:
            rows[i][j] -= 1
        return DegreeMatrix.from_rows(rows)

    def __str__(self):
        sep = '' if all(x < 10 for row in self.rows for x in row) else ' '
        return '\n'.join(sep.join(str(x) for x in row) for row in self.rows)


class Edge(NamedTuple):
    u: int
    v: int
    color: int


class ColoredGraph:
    """Simple graph on vertices 0..n-1 where every edge carries one color.

    Instances are never changed after construction; ``replace`` and
    ``relabel`` build new graphs.
    """

    __slots__ = ('_n', '_colors')

    def __init__(self, n: int, edges: Iterable[Tuple[int, int, int]] = ()):
        if n < 0:
            raise InvalidGraph('vertex count must be non-negative')
        self._n = n
        self._colors: Dict[Pair, int] = {}
        for u, v, color in edges:
            self._insert(u, v, color)

    def _insert(self, u: int, v: int, color: int):
        if u == v:
            raise InvalidGraph(f'self-loop at vertex {u}')
        if not (0 <= u < self._n and 0 <= v < self._n):
            raise InvalidGraph(f'edge ({u}, {v}) outside vertex range 0..{self._n - 1}')
        if color < 1:
            raise ColorOutOfRange(f'color {color} must be at least 1')
        key = pair(u, v)
        if key in self._colors:
            raise ParallelEdge(f'pair {key} already carries color {self._colors[key]}')
        self._colors[key] = color

    @property
    def n(self) -> int:
        return self._n

    def edges(self) -> List[Edge]:
        return [Edge(u, v, c) for (u, v), c in sorted(self._colors.items())]

    def pairs(self) -> FrozenSet[Pair]:
        return frozenset(self._colors)

    def has_edge(self, u: int, v: int) -> bool:
        return pair(u, v) in self._colors

    def color_of(self, u: int, v: int) -> Optional[int]:
        return self._colors.get(pair(u, v))

    def max_color(self) -> int:
        return max(self._colors.values(), default=0)

    def degree(self, vertex: int, color: Optional[int] = None) -> int:
        return sum(
            1 for (u, v), c in self._colors.items()
            if vertex in (u, v) and (color is None or c == color)
        )

    def replace(self, remove: Iterable[Tuple[int, int]] = (),
                add: Iterable[Tuple[int, int, int]] = (),
                n: Optional[int] = None) -> ColoredGraph:
        colors = dict(self._colors)
        for u, v in remove:
            if colors.pop(pair(u, v), None) is None:
                raise InvalidGraph(f'cannot remove missing edge ({u}, {v})')
        graph = ColoredGraph(self._n if n is None else n)
        for (u, v), c in colors.items():
            graph._insert(u, v, c)
        for u, v, c in add:
            graph._insert(u, v, c)
        return graph

    def relabel(self, mapping: Mapping[int, int], n: int,
                recolor: Optional[Mapping[int, int]] = None) -> ColoredGraph:
        recolor = recolor or {}
        return ColoredGraph(n, (
            (mapping[u], mapping[v], recolor.get(c, c))
            for (u, v), c in self._colors.items()
        ))

    def to_networkx(self, color: Optional[int] = None) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self._n))
        for (u, v), c in sorted(self._colors.items()):
            if color is None or c == color:
                graph.add_edge(u, v, color=c)
        return graph

    def __len__(self):
        return len(self._colors)

    def __eq__(self, other):
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return self._n == other._n and self._colors == other._colors

    def __hash__(self):
        return hash((self._n, frozenset(self._colors.items())))

    def __repr__(self):
        return f'ColoredGraph(n={self._n}, edges={len(self._colors)})'


def color_subgraph(g: ColoredGraph, color: int, k: Optional[int] = None) -> FrozenSet[Pair]:
    """Returns the vertex pairs carrying the given color."""
    if color < 1 or (k is not None and color > k):
        raise ColorOutOfRange(f'color {color} is outside 1..{k if k is not None else "k"}')
    return frozenset((e.u, e.v) for e in g.edges() if e.color == color)


@dataclass(frozen=True)
class CaterpillarView:
    color: int
    backbone: Tuple[int, ...]
    legs: Mapping[int, Tuple[int, ...]]
    spine: Tuple[int, ...]

    @property
    def leaves(self) -> Tuple[int, ...]:
        if not self.backbone:
            return self.spine
        return tuple(sorted(x for attached in self.legs.values() for x in attached))

    @property
    def ends(self) -> Tuple[int, ...]:
        if not self.backbone:
            return ()
        return (self.backbone[0], self.backbone[-1])

    def edge_pairs(self) -> FrozenSet[Pair]:
        """Rebuilds the color class from the view."""
        if not self.backbone:
            return frozenset({pair(*self.spine)})
        edges = {pair(a, b) for a, b in zip(self.backbone, self.backbone[1:])}
        edges.update(pair(b, x) for b, attached in self.legs.items() for x in attached)
        return frozenset(edges)


def caterpillar_view(g: ColoredGraph, color: int) -> CaterpillarView:
    edges = color_subgraph(g, color)
    if not edges:
        raise NotATree(f'color {color} has no edges')
    tree = nx.Graph(edges)
    if not nx.is_tree(tree):
        raise NotATree(f'color {color} is not a tree')
    if tree.number_of_nodes() == 2:
        u, v = sorted(tree)
        return CaterpillarView(color, (), {}, (u, v))

    inner = tree.subgraph(x for x in tree if tree.degree(x) > 1)
    if any(d > 2 for _, d in inner.degree()):
        raise NotACaterpillar(f'non-leaf vertices of color {color} do not form a path')
    if len(inner) == 1:
        backbone = tuple(inner)
    else:
        start = min(x for x, d in inner.degree() if d == 1)
        backbone = tuple(nx.dfs_preorder_nodes(inner, start))

    legs = {
        b: tuple(sorted(x for x in tree[b] if tree.degree(x) == 1))
        for b in backbone
    }
    first = legs[backbone[0]][0]
    if len(backbone) == 1:
        last = legs[backbone[0]][1]
    else:
        last = legs[backbone[-1]][0]
    return CaterpillarView(color, backbone, legs, (first,) + backbone + (last,))


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    violation: Optional[str] = None
    color: Optional[int] = None


def verify_realization(g: ColoredGraph, m: DegreeMatrix) -> VerificationReport:
    if g.n != m.n:
        raise DimensionMismatch(f'graph has {g.n} vertices, matrix has {m.n} columns')
    if g.max_color() > m.k:
        raise DimensionMismatch(f'graph uses color {g.max_color()}, matrix has {m.k} rows')

    for i, row in enumerate(m.rows):
        color = i + 1
        nx_graph = g.to_networkx(color)
        for vertex, expected in enumerate(row):
            if nx_graph.degree(vertex) != expected:
                return VerificationReport(
                    False,
                    f'vertex {vertex + 1} has degree {nx_graph.degree(vertex)} in color {color}, '
                    f'expected {expected}',
                    color,
                )
        if nx_graph.number_of_edges() != m.n - 1:
            return VerificationReport(False, f'color {color} has {nx_graph.number_of_edges()} edges', color)
        if not nx.is_connected(nx_graph):
            return VerificationReport(False, f'color {color} is disconnected', color)
        try:
            caterpillar_view(g, color)
        except (NotATree, NotACaterpillar) as error:
            return VerificationReport(False, str(error), color)
    return VerificationReport(True)


@dataclass(frozen=True)
class ValidationReport:
    tree_rows: Tuple[bool, ...]
    path_rows: Tuple[bool, ...]
    common_leaf_columns: Tuple[int, ...]
    eligible: Mapping[str, bool]
    ok: bool

    @property
    def is_tree_matrix(self) -> bool:
        return all(self.tree_rows)


def large_n_bound(k: int) -> int:
    return max(22 * k - 11, 396)


def validate_matrix(m: DegreeMatrix, require_no_common_leaves: bool = False) -> ValidationReport:
    tree_rows = tuple(m.is_tree_row(i) for i in range(m.k))
    path_rows = tuple(m.is_path_row(i) for i in range(m.k))
    common = m.common_leaf_columns()
    tree = all(tree_rows)
    no_common = not common
    eligible = {
        'single_caterpillar': tree and m.k == 1,
        'walecki': all(path_rows) and no_common and m.n >= 2 * m.k,
        'two_trees': m.k == 2,
        'k_le_4': tree and no_common and m.k <= 4,
        'generic_conditional': tree and no_common,
        'large_n': tree and no_common and m.k >= 5 and m.n >= large_n_bound(m.k),
    }
    ok = tree and (no_common or not require_no_common_leaves)
    return ValidationReport(tree_rows, path_rows, common, eligible, ok)


@dataclass(frozen=True)
class CanonicalForm:
    matrix: DegreeMatrix
    row_perm: Tuple[int, ...]
    col_perm: Tuple[int, ...]


def canonical_form(m: DegreeMatrix) -> CanonicalForm:
    """Lexicographically smallest row-major matrix over row and column permutations.

    With the row order fixed, sorting the column vectors gives the smallest
    arrangement, so only the k! row orders are searched.
    """
    best = None
    for row_perm in itertools.permutations(range(m.k)):
        cols = sorted(range(m.n), key=lambda j: (tuple(m.rows[r][j] for r in row_perm), j))
        candidate = tuple(tuple(m.rows[r][j] for j in cols) for r in row_perm)
        if best is None or candidate < best[0]:
            best = (candidate, row_perm, tuple(cols))
    rows, row_perm, col_perm = best
    return CanonicalForm(DegreeMatrix(rows), tuple(row_perm), col_perm)


class Status(models.TextChoices):
    exists = 'exists'
    not_exists = 'not_exists'
    unknown = 'unknown'


@dataclass(frozen=True)
class Trace:
    base: str = ''
    steps: Tuple['ReductionStep', ...] = ()
    greedy: Tuple[bool, ...] = ()
    notes: Tuple[str, ...] = ()

    def with_note(self, note: str) -> Trace:
        return Trace(self.base, self.steps, self.greedy, self.notes + (note,))


@dataclass(frozen=True)
class Witness:
    condition: str
    message: str
    detail: Mapping[str, Any] = field(default_factory=dict)


class RealizationOutcome:
    status: ClassVar[str]


@dataclass(frozen=True)
class Exists(RealizationOutcome):
    graph: ColoredGraph
    matrix: DegreeMatrix
    trace: Trace = Trace()
    status: ClassVar[str] = Status.exists

    def __post_init__(self):
        report = verify_realization(self.graph, self.matrix)
        if not report.ok:
            raise LemmaViolation(f'construction produced an invalid realization: {report.violation}')


@dataclass(frozen=True)
class NotExists(RealizationOutcome):
    witness: Witness
    status: ClassVar[str] = Status.not_exists


@dataclass(frozen=True)
class Unknown(RealizationOutcome):
    reason: str
    status: ClassVar[str] = Status.unknown
