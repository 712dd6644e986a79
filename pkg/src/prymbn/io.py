"""JSON serialization for tableaux, strip tableaux, and chip divisors.

Tableau schema: ``{"shape": {"kind": "...", "r": ..., "boxes": [[x, y],
...]}, "entries": [[x, y, symbol], ...]}`` with boxes and entries in
canonical order (ascending anti-diagonal, then ascending x).  Divisor
schema: a list of ``{"loop": n, "pos": "p/q", "mult": m}`` records —
positions are exact arc lengths, counter-clockwise from the rightmost
vertex on loops up to the middle, clockwise from the leftmost vertex
beyond it — or ``{"loop": n, "free": true}`` markers.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .core import (
    Box,
    InvalidInputError,
    Shape,
    Tableau,
    canonical_boxes,
    canonical_key,
    explicit_shape,
    square_shape,
    staircase_shape,
)
from .divisors import ChipDivisor, ChipEntry

__all__ = [
    "SCHEMA_VERSION",
    "divisor_entries_from_json",
    "divisor_to_json",
    "shape_from_json",
    "shape_to_json",
    "tableau_from_json",
    "tableau_to_json",
]

SCHEMA_VERSION = 1

_KIND_ALIASES = {"triangle": "staircase"}


def shape_to_json(shape: Shape) -> dict[str, Any]:
    return {
        "kind": shape.kind,
        "r": shape.r,
        "boxes": [[x, y] for x, y in canonical_boxes(shape)],
    }


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InvalidInputError(message)


def shape_from_json(data: Any) -> Shape:
    _require(isinstance(data, dict), "shape must be an object")
    kind = _KIND_ALIASES.get(data.get("kind"), data.get("kind"))
    r = data.get("r")
    raw = data.get("boxes")
    boxes: list[Box] = []
    if raw is not None:
        _require(isinstance(raw, list), "shape boxes must be a list")
        for item in raw:
            _require(
                isinstance(item, list) and len(item) == 2
                and all(isinstance(c, int) and c >= 1 for c in item),
                f"each box must be a pair of positive integers, got {item!r}",
            )
            boxes.append((item[0], item[1]))
        _require(len(set(boxes)) == len(boxes), "shape boxes contain duplicates")
    if kind == "staircase":
        _require(isinstance(r, int) and r >= 1, "staircase shape needs integer r >= 1")
        shape = staircase_shape(r)
    elif kind == "square":
        _require(isinstance(r, int) and r >= 0, "square shape needs integer r >= 0")
        shape = square_shape(r)
    elif kind in (None, "explicit"):
        _require(bool(boxes), "explicit shape needs a non-empty boxes list")
        return explicit_shape(boxes)
    else:
        raise InvalidInputError(f"unknown shape kind {kind!r}")
    if boxes:
        _require(
            set(boxes) == shape.boxes,
            f"boxes list disagrees with the {kind} shape of order {r}",
        )
    return shape


def tableau_to_json(t: Tableau) -> dict[str, Any]:
    return {
        "shape": shape_to_json(t.shape),
        "entries": [[x, y, t.at((x, y))] for x, y in canonical_boxes(t.shape)],
    }


def tableau_from_json(data: Any) -> Tableau:
    _require(isinstance(data, dict), "tableau must be an object")
    _require("shape" in data and "entries" in data, "tableau needs shape and entries")
    shape = shape_from_json(data["shape"])
    entries = data["entries"]
    _require(isinstance(entries, list), "entries must be a list")
    mapping: dict[Box, int] = {}
    for item in entries:
        _require(
            isinstance(item, list) and len(item) == 3
            and all(isinstance(c, int) for c in item),
            f"each entry must be [x, y, symbol], got {item!r}",
        )
        x, y, v = item
        box = (x, y)
        _require(box not in mapping, f"duplicate entry for box {box}")
        _require(box in shape, f"entry box {box} is outside the shape")
        _require(v >= 1, f"symbols are positive integers, got {v}")
        mapping[box] = v
    missing = sorted(shape.boxes - set(mapping), key=canonical_key)
    _require(not missing, f"entries missing for boxes {missing}")
    return Tableau.from_mapping(shape, mapping)


def _entry_to_json(e: ChipEntry) -> dict[str, Any]:
    if e.free:
        return {"loop": e.loop, "free": True}
    return {"loop": e.loop, "pos": str(e.pos), "mult": e.mult}


def divisor_to_json(div: ChipDivisor) -> list[dict[str, Any]]:
    """The divisor as a flat record list; the boundary stack comes last."""
    records = [_entry_to_json(e) for e in div.entries]
    if div.stack:
        records.append(
            {"loop": div.chain.loop_count, "pos": "0", "mult": div.stack}
        )
    return records


def divisor_entries_from_json(data: Any) -> list[tuple[int, Fraction | None, int]]:
    """Parse divisor records back into (loop, position, multiplicity) rows."""
    _require(isinstance(data, list), "divisor must be a list of records")
    rows: list[tuple[int, Fraction | None, int]] = []
    for item in data:
        _require(isinstance(item, dict), f"divisor record must be an object: {item!r}")
        loop = item.get("loop")
        _require(isinstance(loop, int) and loop >= 1, f"bad loop index in {item!r}")
        if item.get("free"):
            rows.append((loop, None, 0))
            continue
        _require("pos" in item, f"record needs pos or free: {item!r}")
        rows.append((loop, Fraction(item["pos"]), int(item.get("mult", 1))))
    return rows
