"""Text formats: matrix rows and adjacency matrices as written in the small-case tables.

A row is either whitespace (or ``&``) separated integers, or a single run of
digits such as ``12221222``. LaTeX row terminators (``\\\\``) are ignored.
"""
from __future__ import annotations

import json
from typing import List

from rest_framework.exceptions import ValidationError

from .exceptions import InvalidGraph, InvalidMatrix
from .structures import ColoredGraph, DegreeMatrix


def _parse_row(line: str) -> List[int]:
    tokens = line.replace('\\\\', ' ').replace('&', ' ').split()
    try:
        if len(tokens) == 1 and len(tokens[0]) > 1:
            return [int(ch) for ch in tokens[0]]
        return [int(token) for token in tokens]
    except ValueError:
        raise InvalidMatrix(f'cannot read row {line.strip()!r}')


def _parse_rows(text: str) -> List[List[int]]:
    return [_parse_row(line) for line in text.splitlines() if line.strip()]


def parse_matrix_text(text: str) -> DegreeMatrix:
    rows = _parse_rows(text)
    if not rows:
        raise InvalidMatrix('no rows found')
    return DegreeMatrix.from_rows(rows)


def parse_adjacency_text(text: str) -> ColoredGraph:
    rows = _parse_rows(text)
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise InvalidGraph('adjacency matrix must be square')
    edges = []
    for u in range(n):
        if rows[u][u]:
            raise InvalidGraph(f'diagonal entry at vertex {u + 1} must be 0')
        for v in range(u + 1, n):
            if rows[u][v] != rows[v][u]:
                raise InvalidGraph(f'adjacency matrix is not symmetric at ({u + 1}, {v + 1})')
            if rows[u][v]:
                edges.append((u, v, rows[u][v]))
    return ColoredGraph(n, edges)


def render_adjacency_text(g: ColoredGraph) -> str:
    table = [[0] * g.n for _ in range(g.n)]
    for u, v, color in g.edges():
        table[u][v] = table[v][u] = color
    return '\n'.join(' '.join(str(x) for x in row) for row in table)


def _looks_like_json(text: str) -> bool:
    return text.lstrip().startswith(('{', '['))


def read_matrix(text: str) -> DegreeMatrix:
    """Reads a degree matrix from JSON (``{"rows": ...}``) or from row text."""
    from .serializers import DegreeMatrixSerializer

    if not _looks_like_json(text):
        return parse_matrix_text(text)
    data = json.loads(text)
    if isinstance(data, list):
        data = {'rows': data}
    serializer = DegreeMatrixSerializer(data=data)
    serializer.is_valid(raise_exception=True)
    return serializer.save()


def read_graph(text: str) -> ColoredGraph:
    """Reads a colored graph from JSON (``{"n": ..., "edges": ...}``) or adjacency text."""
    from .serializers import ColoredGraphSerializer

    if not _looks_like_json(text):
        return parse_adjacency_text(text)
    data = json.loads(text)
    if 'graph' in data and isinstance(data['graph'], dict):
        data = data['graph']
    serializer = ColoredGraphSerializer(data=data)
    serializer.is_valid(raise_exception=True)
    return serializer.save()


INPUT_ERRORS = (InvalidMatrix, InvalidGraph, ValidationError, json.JSONDecodeError, ValueError)
