"""Direct construction for many vertices.

Phase one builds every leg, the three caterpillars with the most leaves and
all edges of the heaviest vertex by replaying a reduction chain. Phase two
adds the remaining backbones one by one as Hamiltonian paths in the
complement of what is already placed, after capping the few vertices whose
complement degree is small.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx
from networkx.utils import UnionFind

from .engine import ReductionStep, find_reducible_column, reduce
from .exceptions import (BoundViolated, CensusViolation, LemmaViolation,
                         NotFound, PreconditionViolated)
from .rainbow import find_rainbow_avoiding
from .structures import (ColoredGraph, DegreeMatrix, Exists, Pair,
                         RealizationOutcome, Trace, caterpillar_view,
                         large_n_bound, pair)
from .walecki import walecki_pack

logger = logging.getLogger(__name__)

BUILT_COLORS = 3


@dataclass(frozen=True)
class HeavyVertexCensus:
    heavy: Tuple[int, ...]
    medium: Tuple[int, ...]
    sums: Tuple[int, ...]


def heavy_vertex_census(m: DegreeMatrix) -> HeavyVertexCensus:
    """Lists columns with sum >= 2n/3 (heavy) and >= n/6 (medium, heavy included)."""
    if not m.has_no_common_leaves():
        raise PreconditionViolated('census needs a matrix without common leaves')
    k, n = m.k, m.n
    sums = tuple(m.column_sum(j) for j in range(n))
    heavy = tuple(j for j, s in enumerate(sums) if 3 * s >= 2 * n)
    medium = tuple(j for j, s in enumerate(sums) if 6 * s >= n)
    if n >= 6 * k - 5 and len(heavy) > 1:
        raise CensusViolation(f'{len(heavy)} columns have sum at least 2n/3 = {2 * n / 3:.1f}')
    if n >= 22 * k - 11 and len(medium) > 11:
        raise CensusViolation(f'{len(medium)} columns have sum at least n/6 = {n / 6:.1f}')
    return HeavyVertexCensus(heavy, medium, sums)


@dataclass
class PhaseState:
    matrix: DegreeMatrix
    graph: ColoredGraph
    heavy: int
    built: Tuple[int, ...]
    path_degree: Dict[int, Dict[int, int]]
    ends: Dict[int, Tuple[int, int]]
    capping: Dict[int, FrozenSet[Pair]]
    steps: Tuple[ReductionStep, ...] = ()
    greedy: Tuple[bool, ...] = ()
    enforce_bounds: bool = True
    census: Optional[HeavyVertexCensus] = None

    @property
    def unbuilt(self) -> Tuple[int, ...]:
        return tuple(c for c in range(1, self.matrix.k + 1) if c not in self.built)

    def remaining(self, color: int, vertex: int) -> int:
        """Degree still missing at a vertex in a color."""
        return self.matrix.rows[color - 1][vertex] - self.graph.degree(vertex, color)

    def check_invariants(self):
        for color in self.unbuilt:
            degrees = self.path_degree[color]
            if any(d not in (1, 2) for d in degrees.values()):
                raise LemmaViolation(f'color {color} has backbone degrees outside 1..2')
            if len(self.ends[color]) != 2:
                raise LemmaViolation(f'color {color} does not have exactly two end vertices')
            if self.heavy in degrees:
                capped = sum(1 for edge in self.capping[color] if self.heavy in edge)
                if capped != degrees[self.heavy]:
                    raise LemmaViolation(f'heavy vertex is not fully capped in color {color}')
            for x in degrees:
                if x != self.heavy and self.remaining(color, x) < 0:
                    raise LemmaViolation(f'vertex {x} exceeds its degree in color {color}')


def _shortest_backbones(m: DegreeMatrix) -> Tuple[int, ...]:
    """Colors of the rows with the most leaves, ties to the lower row."""
    ranked = sorted(range(m.k), key=lambda i: (-len(m.leaves(i)), i))
    return tuple(sorted(i + 1 for i in ranked[:BUILT_COLORS]))


def _reduction_chain(m: DegreeMatrix, heavy: int) -> Tuple[List[ReductionStep], ColoredGraph]:
    """Reduces to an all-path matrix, keeping original vertex labels in the steps."""
    labels = list(range(m.n))
    steps = []
    current = m
    while not current.all_paths():
        avoid = (labels.index(heavy),) if heavy in labels else ()
        step = find_reducible_column(current, avoid=avoid)
        steps.append(ReductionStep(labels[step.column], step.row, labels[step.target]))
        current = reduce(current, step)
        del labels[step.column]
    base = walecki_pack(current)
    return steps, base.relabel(dict(enumerate(labels)), m.n)


def phase_one(m: DegreeMatrix, enforce_bounds: bool = True) -> PhaseState:
    k, n = m.k, m.n
    if k < 5:
        raise PreconditionViolated(f'the direct construction needs at least 5 rows, got {k}')
    if enforce_bounds and n < large_n_bound(k):
        raise PreconditionViolated(f'n = {n} is below max(22k-11, 396) = {large_n_bound(k)}')
    if not m.is_tree_matrix() or not m.has_no_common_leaves():
        raise PreconditionViolated('expected a tree degree matrix without common leaves')

    census = heavy_vertex_census(m)
    heavy = max(range(n), key=lambda j: (census.sums[j], -j))
    built = _shortest_backbones(m)
    leaves = {c: frozenset(m.leaves(c - 1)) for c in range(1, k + 1)}

    steps, base = _reduction_chain(m, heavy)
    logger.debug('phase one: %d reductions, heavy vertex %d, built colors %s', len(steps), heavy, built)
    graph = ColoredGraph(n, (
        e for e in base.edges()
        if e.color in built or heavy in (e.u, e.v) or e.u in leaves[e.color] or e.v in leaves[e.color]
    ))

    greedy = []
    for step in reversed(steps):
        x, leaf_color = step.column, step.row + 1
        graph = graph.replace(add=[(x, step.target, leaf_color)])
        colors = [c for c in built if c != leaf_color]
        spines = [(c, caterpillar_view(graph, c).spine) for c in colors]
        try:
            matching = find_rainbow_avoiding(spines, step.target, len(colors))
        except NotFound as error:
            raise LemmaViolation(f'no rainbow matching while inserting vertex {x}: {error}')
        greedy.append(matching.greedy)
        add = []
        for color, (u, w) in matching.edges:
            add.extend([(x, u, color), (x, w, color)])
        graph = graph.replace(remove=[edge for _, edge in matching.edges], add=add)
    greedy.reverse()

    path_degree, ends, capping = {}, {}, {}
    for color in range(1, k + 1):
        if color in built:
            continue
        row = m.rows[color - 1]
        legs = {x: 0 for x in range(n)}
        cap = set()
        for u, v, c in graph.edges():
            if c != color:
                continue
            if u in leaves[color] or v in leaves[color]:
                legs[u] += 1
                legs[v] += 1
            else:
                cap.add(pair(u, v))
        path_degree[color] = {x: row[x] - legs[x] for x in range(n) if row[x] >= 2}
        ends[color] = tuple(sorted(x for x, d in path_degree[color].items() if d == 1))
        capping[color] = frozenset(cap)

    state = PhaseState(
        matrix=m, graph=graph, heavy=heavy, built=built, path_degree=path_degree,
        ends=ends, capping=capping, steps=tuple(steps), greedy=tuple(greedy),
        enforce_bounds=enforce_bounds, census=census,
    )
    state.check_invariants()
    return state


def _forced_blocks(vertices: Sequence[int], forced: Iterable[Pair]) -> List[List[int]]:
    """Splits the vertices into paths of forced edges; unforced vertices are single blocks."""
    graph = nx.Graph()
    graph.add_nodes_from(vertices)
    graph.add_edges_from(forced)
    if any(d > 2 for _, d in graph.degree()) or not nx.is_forest(graph):
        raise NotFound('forced edges do not form vertex-disjoint paths')
    blocks = []
    for component in nx.connected_components(graph):
        start = min(x for x in component if graph.degree(x) <= 1)
        blocks.append(list(nx.dfs_preorder_nodes(graph.subgraph(component), start)))
    return sorted(blocks, key=min)


def _rotation_partner(F: nx.Graph, sequence: List[int], t: int, protected: Set[Pair]):
    u1, u2 = sequence[t], sequence[t + 1]
    for s in range(len(sequence) - 1):
        if s == t:
            continue
        w1, w2 = sequence[s], sequence[s + 1]
        if pair(w1, w2) in protected:
            continue
        if F.has_edge(u1, w1) and F.has_edge(u2, w2):
            return s
    return None


def hamiltonian_path_with_forced(F: nx.Graph, endpoints: Tuple[int, int],
                                 forced: Iterable[Tuple[int, int]] = ()) -> List[int]:
    """Returns a Hamiltonian path of F from endpoints[0] to endpoints[1] using every forced edge.

    Starts from any arrangement with forced pairs adjacent and repairs
    consecutive non-edges by reversing arcs.
    """
    a, b = endpoints
    if a == b or a not in F or b not in F:
        raise NotFound(f'invalid endpoints {endpoints}')
    forced = {pair(u, v) for u, v in forced}
    missing = [edge for edge in forced if not F.has_edge(*edge)]
    if missing:
        raise NotFound(f'forced pairs {sorted(missing)} are not edges')

    blocks = _forced_blocks(sorted(F), forced)
    first = next(block for block in blocks if a in block)
    last = next(block for block in blocks if b in block)
    if first is last:
        if len(blocks) == 1 and {first[0], first[-1]} == {a, b}:
            return first if first[0] == a else first[::-1]
        raise NotFound('endpoints are joined by forced edges')
    if a not in (first[0], first[-1]) or b not in (last[0], last[-1]):
        raise NotFound('an endpoint lies inside a forced path')
    if first[0] != a:
        first.reverse()
    if last[-1] != b:
        last.reverse()
    sequence = first + [x for block in blocks if block is not first and block is not last for x in block] + last

    while True:
        bad = [t for t in range(len(sequence) - 1) if not F.has_edge(sequence[t], sequence[t + 1])]
        if not bad:
            return sequence
        for t in bad:
            s = _rotation_partner(F, sequence, t, forced)
            if s is not None:
                break
        else:
            raise NotFound(f'rotation stuck with {len(bad)} non-adjacent consecutive pairs')
        if s > t:
            sequence[t + 1:s + 1] = sequence[t + 1:s + 1][::-1]
        else:
            sequence[s + 1:t + 1] = sequence[s + 1:t + 1][::-1]


def _complement_on(graph: ColoredGraph, vertices: Sequence[int], keep: FrozenSet[Pair]) -> nx.Graph:
    used = graph.pairs() - keep
    F = nx.Graph()
    F.add_nodes_from(vertices)
    F.add_edges_from(e for e in itertools.combinations(vertices, 2) if pair(*e) not in used)
    return F


def _caps(F: nx.Graph, state: PhaseState, color: int, medium: Iterable[int]) -> Set[Pair]:
    """Forced edges: the heavy vertex's capping edges plus caps around medium vertices."""
    a, b = state.ends[color]
    degrees = state.path_degree[color]
    forced = set(state.capping[color])
    forced_degree = {x: 0 for x in F}
    components = UnionFind(F.nodes)
    for u, v in forced:
        forced_degree[u] += 1
        forced_degree[v] += 1
        components.union(u, v)

    medium = [w for w in sorted(medium) if w in F and w != state.heavy]
    for w in medium:
        endpoint_used = False
        for u in sorted(F[w]):
            if forced_degree[w] >= degrees[w]:
                break
            if u == state.heavy or u in medium or forced_degree[u]:
                continue
            if u in (a, b) and endpoint_used:
                continue
            if {components[u], components[w]} == {components[a], components[b]}:
                continue
            forced.add(pair(w, u))
            forced_degree[w] += 1
            forced_degree[u] += 1
            components.union(u, w)
            endpoint_used = endpoint_used or u in (a, b)
        if forced_degree[w] < degrees[w]:
            raise LemmaViolation(f'could not cap vertex {w} in color {color}')
    return forced


def phase_two(state: PhaseState) -> ColoredGraph:
    n = state.matrix.n
    graph = state.graph
    medium = state.census.medium
    for color in sorted(state.unbuilt, key=lambda c: (len(state.path_degree[c]), c)):
        backbone = sorted(state.path_degree[color])
        size = len(backbone)
        if 4 * size <= 3 * n:
            if state.enforce_bounds:
                raise BoundViolated(f'backbone of color {color} has {size} <= 3n/4 vertices')
            logger.warning('backbone of color %d has only %d of %d vertices', color, size, n)

        F = _complement_on(graph, backbone, state.capping[color])
        forced = _caps(F, state, color, medium)
        logger.debug('phase two: color %d, %d backbone vertices, %d forced edges', color, size, len(forced))
        try:
            path = hamiltonian_path_with_forced(F, state.ends[color], forced)
        except NotFound as error:
            raise LemmaViolation(f'no backbone for color {color}: {error}')
        new = [(u, v, color) for u, v in zip(path, path[1:]) if pair(u, v) not in state.capping[color]]
        graph = graph.replace(add=new)
    return graph


def realize_large(m: DegreeMatrix, enforce_bounds: bool = True) -> RealizationOutcome:
    state = phase_one(m, enforce_bounds=enforce_bounds)
    graph = phase_two(state)
    trace = Trace('large_n', state.steps, state.greedy)
    if not enforce_bounds:
        trace = trace.with_note('size bounds not enforced')
    return Exists(graph, m, trace)

