"""Row-order builders shared by the test modules.

Hand-written examples read best with the top row first, while
:meth:`Tableau.from_rows` takes the bottom row first (French convention);
these helpers bridge the two.
"""

from __future__ import annotations

from prymbn.core import Tableau, square_shape, staircase_shape


def stair(rows_top_down: list[list[int]]) -> Tableau:
    """Staircase tableau from rows written top-down."""
    rows = list(reversed(rows_top_down))
    return Tableau.from_rows(rows, staircase_shape(len(rows)))


def square(rows_top_down: list[list[int]]) -> Tableau:
    """Square tableau from rows written top-down."""
    rows = list(reversed(rows_top_down))
    return Tableau.from_rows(rows, square_shape(len(rows) - 1))
