"""Rainbow matchings inside caterpillar spines and the spine-length bounds."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .exceptions import BoundViolated, InvalidStep, NotFound
from .structures import ColoredGraph, DegreeMatrix, Pair, caterpillar_view

logger = logging.getLogger(__name__)

Spine = Tuple[int, Sequence[int]]


@dataclass(frozen=True)
class RainbowMatching:
    edges: Tuple[Tuple[int, Pair], ...]
    avoid: int
    greedy: bool = True

    def __post_init__(self):
        colors = [color for color, _ in self.edges]
        if len(set(colors)) != len(colors):
            raise InvalidStep('rainbow matching repeats a color')
        touched = [x for _, edge in self.edges for x in edge]
        if len(set(touched)) != len(touched):
            raise InvalidStep('rainbow matching edges share a vertex')
        if self.avoid in touched:
            raise InvalidStep(f'rainbow matching touches avoided vertex {self.avoid}')

    @property
    def colors(self) -> Tuple[int, ...]:
        return tuple(color for color, _ in self.edges)


def _spine_edges(sequence: Sequence[int]) -> List[Pair]:
    return list(zip(sequence, sequence[1:]))


def _greedy(spines: List[Spine], avoid: int, size: int) -> Optional[List[Tuple[int, Pair]]]:
    skips = len(spines) - size
    used = {avoid}
    chosen = []
    for color, sequence in spines:
        if len(chosen) == size:
            break
        edge = next(
            (e for e in _spine_edges(sequence) if e[0] not in used and e[1] not in used),
            None,
        )
        if edge is None:
            if skips == 0:
                return None
            skips -= 1
            continue
        used.update(edge)
        chosen.append((color, edge))
    return chosen if len(chosen) == size else None


def _exhaustive(spines: List[Spine], avoid: int, size: int) -> Optional[List[Tuple[int, Pair]]]:
    candidates = [(color, _spine_edges(sequence)) for color, sequence in spines]

    def search(index: int, used: set, chosen: list):
        if len(chosen) == size:
            return list(chosen)
        if len(candidates) - index < size - len(chosen):
            return None
        color, edges = candidates[index]
        for edge in edges:
            if edge[0] in used or edge[1] in used:
                continue
            chosen.append((color, edge))
            found = search(index + 1, used | set(edge), chosen)
            if found is not None:
                return found
            chosen.pop()
        return search(index + 1, used, chosen)

    return search(0, {avoid}, [])


def find_rainbow_avoiding(spines: Sequence[Spine], avoid: int, size: int) -> RainbowMatching:
    if size > len(spines):
        raise NotFound(f'need {size} colors but only {len(spines)} spines were given')
    if size == 0:
        return RainbowMatching((), avoid)
    ordered = sorted(spines, key=lambda spine: (len(spine[1]), spine[0]))
    chosen = _greedy(ordered, avoid, size)
    if chosen is not None:
        return RainbowMatching(tuple(chosen), avoid, greedy=True)

    logger.debug('greedy rainbow search failed around vertex %d, searching exhaustively', avoid)
    chosen = _exhaustive(ordered, avoid, size)
    if chosen is None:
        raise NotFound(f'no rainbow matching of size {size} avoids vertex {avoid}')
    return RainbowMatching(tuple(chosen), avoid, greedy=False)


@dataclass(frozen=True)
class SpineReport:
    lengths: Mapping[int, int]
    binding: Tuple[str, ...]


def length_lower_bound(n: int, k: int, position: int) -> int:
    """Returns the least possible edge count of the position-th shortest spine.

    Leaf counting: a spine of L edges leaves n - L + 1 leaves, the shorter
    spines have at least as many, and every other color keeps two.
    """
    return n + 1 - (n - 2 * (k - position)) // position


def check_spine_bounds(g: ColoredGraph, m: DegreeMatrix) -> SpineReport:
    lengths: Dict[int, int] = {
        i + 1: len(caterpillar_view(g, i + 1).spine) - 1 for i in range(m.k)
    }
    k, n = m.k, m.n
    ordered = sorted(lengths.values())
    binding = []

    for color, length in lengths.items():
        if length < 2 * k - 1:
            raise BoundViolated(f'spine of color {color} has {length} < {2 * k - 1} edges')
    if min(ordered) == 2 * k - 1:
        binding.append('every spine has at least 2k-1 edges')

    if k >= 4 and n >= 2 * k + 2:
        if ordered[k - 2] < 2 * k + 1:
            raise BoundViolated(f'some {k - 1} colors have all spines shorter than {2 * k + 1} edges')
        if ordered[k - 2] == 2 * k + 1:
            binding.append('any k-1 colors contain a spine of 2k+1 edges')

    for position in range(1, k):
        bound = length_lower_bound(n, k, position)
        if ordered[position - 1] < bound:
            raise BoundViolated(
                f'spine number {position} by length has {ordered[position - 1]} < {bound} edges'
            )
        if ordered[position - 1] == bound:
            binding.append(f'spine number {position} by length is at its lower bound {bound}')
    return SpineReport(lengths, tuple(binding))
