"""Erdős–Gallai graphicality, its bounded-prefix variant and a Havel–Hakimi oracle."""
from __future__ import annotations

import bisect
from dataclasses import dataclass
from itertools import accumulate
from typing import List, Optional, Sequence

import networkx as nx

from .structures import DegreeMatrix


@dataclass(frozen=True)
class EGReport:
    graphical: bool
    parity_ok: bool
    first_violation_s: Optional[int] = None
    lhs: Optional[int] = None
    rhs: Optional[int] = None


def _violations(seq: Sequence[int], s_max: Optional[int] = None):
    """Yields (s, lhs, rhs) for each violated inequality, s 1-based."""
    f = sorted(seq, reverse=True)
    n = len(f)
    prefix = list(accumulate(f))
    ascending = f[::-1]
    # suffix[t] = sum of the t smallest entries
    suffix = [0] + list(accumulate(ascending))
    last = n if s_max is None else min(n, s_max - 1)
    for s in range(1, last + 1):
        lhs = prefix[s - 1]
        # entries after position s: the n - s smallest; those >= s contribute s each
        tail = n - s
        small = min(bisect.bisect_left(ascending, s), tail)
        rhs = s * (s - 1) + suffix[small] + s * (tail - small)
        if lhs > rhs:
            yield s, lhs, rhs


def erdos_gallai(seq: Sequence[int]) -> EGReport:
    if sum(seq) % 2:
        return EGReport(graphical=False, parity_ok=False)
    for s, lhs, rhs in _violations(seq):
        return EGReport(False, True, s, lhs, rhs)
    return EGReport(graphical=True, parity_ok=True)


def eg_prefix_check(seq: Sequence[int], s_max: int) -> bool:
    """Checks the Erdős–Gallai inequalities only for s < s_max."""
    return next(_violations(seq, s_max), None) is None


def havel_hakimi(seq: Sequence[int]) -> bool:
    return nx.is_valid_degree_sequence_havel_hakimi(list(seq))


def column_sums(m: DegreeMatrix) -> List[int]:
    return [m.column_sum(j) for j in range(m.n)]
