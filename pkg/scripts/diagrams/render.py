"""
ASCII rendering of diagrams (display only, never parsed back).

Layout, one column per point:

     1 2 3      top point numbers
     a a b      block letter of each top point
     |X  |      strands: '|' k to k', '\\' k to (k+1)', '/' (k+1) to k', 'X' both
     a a b      block letter of each bottom point
     1'2'3'     bottom point numbers

Ramified pairs add a row of '~' under top letters joined only by a tie.
"""

import string
from typing import List

from .diagram import Diagram
from .ramified import RamifiedPair


def _letter(index: int) -> str:
    letters = string.ascii_lowercase
    return letters[index % len(letters)]


def _strand_row(diagram: Diagram) -> str:
    n = diagram.n
    same = diagram.partition.same_block
    cells: List[str] = []
    for k in range(1, n + 1):
        cells.append('|' if same(k, n + k) else ' ')
        if k < n:
            down = same(k, n + k + 1)
            up = same(k + 1, n + k)
            cells.append('X' if down and up else '\\' if down else '/' if up else ' ')
    return ''.join(cells)


def render(diagram: Diagram) -> str:
    """
    Render a diagram as five text rows.

    Example:
        print(render(generator('s_i', (1,), 2)))
    """
    n = diagram.n
    labels = diagram.partition.labels
    top_numbers = ' '.join(str(k % 10) for k in range(1, n + 1))
    top_letters = ' '.join(_letter(labels[k - 1]) for k in range(1, n + 1))
    bottom_letters = ' '.join(_letter(labels[n + k - 1]) for k in range(1, n + 1))
    bottom_numbers = ' '.join(str(k % 10) for k in range(1, n + 1))
    return '\n'.join([top_numbers, top_letters, _strand_row(diagram), bottom_letters, bottom_numbers])


def render_ramified(pair: RamifiedPair) -> str:
    """Fine diagram with tie marks from the coarse one."""
    n = pair.n
    fine, coarse = pair.fine.partition, pair.coarse.partition
    marks = []
    for k in range(1, n + 1):
        marks.append(' ')
        if k < n:
            tied = coarse.same_block(k, k + 1) and not fine.same_block(k, k + 1)
            marks.append('~' if tied else ' ')
    rows = render(pair.fine).split('\n')
    rows.insert(2, ''.join(marks))
    return '\n'.join(row.rstrip() for row in rows)
