"""The exit gate: one pytest line per acceptance row.

Each row of :data:`prymbn.selftest.ROWS` re-derives a published pin or
sweeps an exhaustive family with its own time budget; a row raises
``AssertionError`` with a precise message on any disagreement.  Running
``pytest -v tests/test_acceptance.py`` therefore prints one pass/fail line
per criterion.  The negative control (narrowing the determinant's support
box) gets its own line: a correct build must *detect* the narrowed box.
"""

from __future__ import annotations

import pytest

from prymbn.selftest import ROWS, RunContext

_IDS = [f"{row.ident}-{row.title.replace(' ', '-').replace(',', '')}" for row in ROWS]


@pytest.mark.parametrize("row", ROWS, ids=_IDS)
def test_acceptance_row(row):
    detail = row.run(RunContext())
    assert detail and detail != "skipped by instance filter"


def test_negative_control_narrowed_support_box():
    row = next(row for row in ROWS if row.ident == "R2b")
    detail = row.run(RunContext(narrow_alpha=True))
    assert "negative control" in detail
