"""The fourteen 4-row tree degree matrices on 8 to 10 vertices without common leaves.

Each entry holds one matrix per class (up to row and column permutations)
together with an edge-disjoint caterpillar realization written as an
adjacency matrix where entry i marks an edge of color i.
"""
from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple, Tuple

from .formats import parse_adjacency_text, parse_matrix_text
from .structures import CanonicalForm, ColoredGraph, DegreeMatrix, canonical_form


class Fixture(NamedTuple):
    case: int
    matrix: Tuple[str, ...]
    adjacency: Tuple[str, ...]

    def degree_matrix(self) -> DegreeMatrix:
        return parse_matrix_text('\n'.join(self.matrix))

    def realization(self) -> ColoredGraph:
        return parse_adjacency_text('\n'.join(self.adjacency))


FIXTURES = (
    Fixture(
        case=1,
        matrix=(
            '12221222',
            '21222122',
            '22122212',
            '22212221',
        ),
        adjacency=(
            '01223344',
            '10233441',
            '22034411',
            '23304112',
            '33440122',
            '34411023',
            '44112203',
            '41122330',
        ),
    ),
    Fixture(
        case=2,
        matrix=(
            '122221222',
            '212222122',
            '221222212',
            '222122221',
        ),
        adjacency=(
            '012233440',
            '102334401',
            '220344011',
            '233040112',
            '334401122',
            '344010223',
            '440112033',
            '401122304',
            '011223340',
        ),
    ),
    Fixture(
        case=3,
        matrix=(
            '132212221',
            '212221222',
            '221222122',
            '222122212',
        ),
        adjacency=(
            '010233442',
            '102334411',
            '020344112',
            '233001124',
            '334001224',
            '344110203',
            '441122030',
            '411220303',
            '212443030',
        ),
    ),
    Fixture(
        case=4,
        matrix=(
            '1222212222',
            '2122221222',
            '2212222122',
            '2221222212',
        ),
        adjacency=(
            '0122334400',
            '1023344001',
            '2203440011',
            '2330400112',
            '3344001122',
            '3440001223',
            '4400110233',
            '4001122034',
            '0011223304',
            '0112233440',
        ),
    ),
    Fixture(
        case=5,
        matrix=(
            '1322212221',
            '2122221222',
            '2212222122',
            '2221222212',
        ),
        adjacency=(
            '0102334402',
            '1023344011',
            '0203440112',
            '2330001124',
            '3340011224',
            '3440102230',
            '4401120033',
            '4011220043',
            '0112233400',
            '2124403300',
        ),
    ),
    Fixture(
        case=6,
        matrix=(
            '1222312221',
            '2122221222',
            '2212222122',
            '2221222212',
        ),
        adjacency=(
            '0102334402',
            '1020344013',
            '0203440112',
            '2030401123',
            '3344011221',
            '3440102230',
            '4401120330',
            '4011223004',
            '0112233004',
            '2323100440',
        ),
    ),
    Fixture(
        case=7,
        matrix=(
            '1422122211',
            '2122212222',
            '2212221222',
            '2221222122',
        ),
        adjacency=(
            '0100334422',
            '1023344111',
            '0203041124',
            '0330011242',
            '3300012244',
            '3441102030',
            '4411220003',
            '4112200033',
            '2124430300',
            '2142403300',
        ),
    ),
    Fixture(
        case=8,
        matrix=(
            '1322132211',
            '2122212222',
            '2212221222',
            '2221222122',
        ),
        adjacency=(
            '0102034423',
            '1003344112',
            '0003441122',
            '2330011204',
            '0340012243',
            '3441102031',
            '4411220300',
            '4112203030',
            '2120430304',
            '3224310040',
        ),
    ),
    Fixture(
        case=9,
        matrix=(
            '1332122211',
            '2122212222',
            '2212221222',
            '2221222122',
        ),
        adjacency=(
            '0100334422',
            '1023304114',
            '0203441121',
            '0330011242',
            '3340012240',
            '3041102034',
            '4411220003',
            '4112200033',
            '2124430300',
            '2412043300',
        ),
    ),
    Fixture(
        case=10,
        matrix=(
            '1322122212',
            '2122212222',
            '2312221221',
            '2221222122',
        ),
        adjacency=(
            '0102334024',
            '1023344113',
            '0203441120',
            '2330001241',
            '3340010242',
            '3440102031',
            '4411020302',
            '0112203034',
            '2124430300',
            '4301212400',
        ),
    ),
    Fixture(
        case=11,
        matrix=(
            '1322122212',
            '3122212221',
            '2212221222',
            '2221222122',
        ),
        adjacency=(
            '0102334422',
            '1023344110',
            '0203041124',
            '2330001241',
            '3300012244',
            '3440102031',
            '4411220003',
            '4112200033',
            '2124430300',
            '2041413300',
        ),
    ),
    Fixture(
        case=12,
        matrix=(
            '1322122212',
            '2132212221',
            '2212221222',
            '2221222122',
        ),
        adjacency=(
            '0002334421',
            '0023344111',
            '0203441122',
            '2330011204',
            '3340012240',
            '3441102030',
            '4411220003',
            '4112200033',
            '2120430304',
            '1124003340',
        ),
    ),
    Fixture(
        case=13,
        matrix=(
            '1322122212',
            '2122212222',
            '2212231221',
            '2221222122',
        ),
        adjacency=(
            '0002334421',
            '0023344111',
            '0203441120',
            '2330011204',
            '3340010242',
            '3441102033',
            '4411020302',
            '4112203030',
            '2120430304',
            '1104232040',
        ),
    ),
    Fixture(
        case=14,
        matrix=(
            '1322122212',
            '2122212222',
            '2213221221',
            '2221222122',
        ),
        adjacency=(
            '0002334421',
            '0023344111',
            '0203401124',
            '2330011243',
            '3340010242',
            '3401102034',
            '4411020302',
            '4112203030',
            '2124430300',
            '1143242000',
        ),
    ),
)


@lru_cache(maxsize=None)
def canonical_fixtures() -> Tuple[Tuple[CanonicalForm, Fixture], ...]:
    return tuple((canonical_form(f.degree_matrix()), f) for f in FIXTURES)
