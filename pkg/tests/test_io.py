"""Unit tests for the JSON schemas of shapes, tableaux, and divisors."""

from __future__ import annotations

import json
from fractions import Fraction

import pytest

from prymbn.core import (
    InvalidInputError,
    PrymParams,
    canonical_boxes,
    explicit_shape,
    is_tableau,
    square_shape,
    staircase_shape,
)
from prymbn.dimension import minimal_witness
from prymbn.divisors import make_folded_chain, tableau_to_divisor
from prymbn.io import (
    SCHEMA_VERSION,
    divisor_entries_from_json,
    divisor_to_json,
    shape_from_json,
    shape_to_json,
    tableau_from_json,
    tableau_to_json,
)

from helpers import square, stair


def test_schema_version_is_an_integer():
    assert isinstance(SCHEMA_VERSION, int) and SCHEMA_VERSION >= 1


# --------------------------------------------------------------------------
# Shapes


@pytest.mark.parametrize(
    "shape",
    [staircase_shape(3), square_shape(2), explicit_shape([(1, 1), (2, 1), (5, 7)])],
    ids=["staircase", "square", "explicit"],
)
def test_shape_round_trip(shape):
    data = shape_to_json(shape)
    assert shape_from_json(json.loads(json.dumps(data))) == shape
    assert data["boxes"] == [[x, y] for x, y in canonical_boxes(shape)]


def test_shape_kind_alias_and_defaults():
    assert shape_from_json({"kind": "triangle", "r": 3}) == staircase_shape(3)
    assert shape_from_json({"boxes": [[1, 1], [1, 2]]}) == explicit_shape(
        [(1, 1), (1, 2)]
    )


def test_shape_from_json_validation():
    with pytest.raises(InvalidInputError, match="must be an object"):
        shape_from_json([1, 2])
    with pytest.raises(InvalidInputError, match="unknown shape kind"):
        shape_from_json({"kind": "hexagon", "r": 2})
    with pytest.raises(InvalidInputError, match="integer r >= 1"):
        shape_from_json({"kind": "staircase"})
    with pytest.raises(InvalidInputError, match="non-empty boxes"):
        shape_from_json({"kind": "explicit"})
    with pytest.raises(InvalidInputError, match="positive integers"):
        shape_from_json({"boxes": [[0, 1]]})
    with pytest.raises(InvalidInputError, match="positive integers"):
        shape_from_json({"boxes": [[1, 2, 3]]})
    with pytest.raises(InvalidInputError, match="duplicates"):
        shape_from_json({"boxes": [[1, 1], [1, 1]]})
    with pytest.raises(InvalidInputError, match="disagrees"):
        shape_from_json({"kind": "staircase", "r": 2, "boxes": [[1, 1], [9, 9]]})


# --------------------------------------------------------------------------
# Tableaux


def test_tableau_round_trip_canonical_order():
    t = minimal_witness(PrymParams(7, 3, 4))
    data = tableau_to_json(t)
    boxes = [(x, y) for x, y, _ in data["entries"]]
    assert boxes == list(canonical_boxes(t.shape))
    assert tableau_from_json(json.loads(json.dumps(data))) == t


def test_tableau_round_trip_repeated_symbols():
    t = stair([[3], [2, 4], [1, 2, 4]])
    assert tableau_from_json(tableau_to_json(t)) == t


def test_tableau_from_json_validation():
    shape = shape_to_json(staircase_shape(2))
    with pytest.raises(InvalidInputError, match="must be an object"):
        tableau_from_json("nope")
    with pytest.raises(InvalidInputError, match="shape and entries"):
        tableau_from_json({"shape": shape})
    with pytest.raises(InvalidInputError, match=r"\[x, y, symbol\]"):
        tableau_from_json({"shape": shape, "entries": [[1, 1]]})
    with pytest.raises(InvalidInputError, match="duplicate entry"):
        tableau_from_json(
            {"shape": shape, "entries": [[1, 1, 1], [1, 1, 2], [2, 1, 2], [1, 2, 2]]}
        )
    with pytest.raises(InvalidInputError, match="outside the shape"):
        tableau_from_json({"shape": shape, "entries": [[3, 3, 1]]})
    with pytest.raises(InvalidInputError, match="positive integers, got 0"):
        tableau_from_json({"shape": shape, "entries": [[1, 1, 0]]})
    with pytest.raises(InvalidInputError, match=r"missing for boxes \[\(2, 1\)"):
        tableau_from_json({"shape": shape, "entries": [[1, 1, 1], [1, 2, 2]]})
    # Parsing does not enforce monotonicity; that is a predicate's job.
    crooked = tableau_from_json(
        {"shape": shape, "entries": [[1, 1, 5], [2, 1, 1], [1, 2, 1]]}
    )
    assert not is_tableau(crooked)


# --------------------------------------------------------------------------
# Divisors


def test_divisor_records_round_trip():
    chain = make_folded_chain(7, 4)
    div = tableau_to_divisor(minimal_witness(PrymParams(7, 3, 4)), chain)
    records = divisor_to_json(div)
    assert len(records) == chain.loop_count + 1  # per-loop records + the stack
    stack = records[-1]
    assert stack == {"loop": 13, "pos": "0", "mult": 5}
    free = [rec for rec in records if rec.get("free")]
    assert [rec["loop"] for rec in free] == list(div.free_loops)

    rows = divisor_entries_from_json(json.loads(json.dumps(records)))
    assert rows[-1] == (13, Fraction(0), 5)
    for rec, (loop, pos, mult) in zip(records, rows):
        assert rec["loop"] == loop
        if rec.get("free"):
            assert pos is None and mult == 0
        else:
            assert pos == Fraction(rec["pos"]) and mult == rec["mult"]


def test_divisor_records_omit_empty_stack():
    chain = make_folded_chain(2, 2)
    div = tableau_to_divisor(square([[1]]), chain)
    records = divisor_to_json(div)
    assert len(records) == chain.loop_count  # stack of g - 2 = 0 is omitted
    assert all(not rec.get("free") for rec in records)


def test_divisor_entries_from_json_validation():
    with pytest.raises(InvalidInputError, match="list of records"):
        divisor_entries_from_json({"loop": 1})
    with pytest.raises(InvalidInputError, match="must be an object"):
        divisor_entries_from_json(["x"])
    with pytest.raises(InvalidInputError, match="bad loop index"):
        divisor_entries_from_json([{"loop": 0, "pos": "1"}])
    with pytest.raises(InvalidInputError, match="pos or free"):
        divisor_entries_from_json([{"loop": 1}])
    rows = divisor_entries_from_json([{"loop": 2, "pos": "3/4"}])
    assert rows == [(2, Fraction(3, 4), 1)]
