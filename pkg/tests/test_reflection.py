"""Unit tests for loose boxes, the reflectification sweep, and its inverses."""

from __future__ import annotations

import pytest

from prymbn.core import (
    InvalidInputError,
    PrymParams,
    dominates,
    is_prym,
    is_reflective,
    staircase_shape,
)
from prymbn.dimension import enumerate_staircase_tableaux
from prymbn.reflection import (
    extend_to_reflective,
    loose_boxes,
    reflectify,
    reflectify_states,
    reflectify_trace,
    restrict_to_staircase,
    upward_displacement,
)
from prymbn.selftest import REFLECTION_TRACE

from helpers import square, stair

# --------------------------------------------------------------------------
# Loose boxes


def test_loose_boxes_of_the_empty_partition():
    assert loose_boxes([], None, 0) == frozenset({(1, 1)})


def test_loose_boxes_requires_a_partition():
    with pytest.raises(InvalidInputError, match="partition"):
        loose_boxes([(2, 1)], None, 0)
    with pytest.raises(InvalidInputError):
        loose_boxes([(1, 1)], None, 1)


def test_loose_boxes_with_class_filter():
    lam = [(1, 1), (2, 1)]
    assert loose_boxes(lam, None, 2) == frozenset({(3, 1), (1, 2)})
    assert loose_boxes(lam, [0], 2) == frozenset({(3, 1)})  # (3,1) has offset 2
    assert loose_boxes(lam, [1], 2) == frozenset({(1, 2)})


def test_upward_displacement_grows_by_the_loose_boxes():
    lam = frozenset({(1, 1)})
    grown = upward_displacement(lam, None, 0)
    assert grown.boxes == frozenset({(1, 1), (2, 1), (1, 2)})


# --------------------------------------------------------------------------
# The sweep


def _trace_tableaux():
    return [square([list(row) for row in s]) for s in REFLECTION_TRACE]


def test_reflectify_step_invariants_on_the_golden_trace():
    p = PrymParams(11, 4, 3)
    states = reflectify_states(_trace_tableaux()[0], p)
    thresholds = [st.threshold for st in states]
    assert thresholds[0] == 0 and thresholds[-1] == p.g
    assert all(a < b for a, b in zip(thresholds[1:-1], thresholds[2:-1]))
    kappas = [st.kappa for st in states]
    assert all(a <= b for a, b in zip(kappas, kappas[1:]))
    assert kappas[-1] == staircase_shape(p.r).boxes
    for prev, cur in zip(states, states[1:]):
        assert is_prym(cur.tableau, p)
        assert dominates(cur.tableau, prev.tableau, p)
        if cur.step < len(states) - 1:
            assert cur.replaced <= prev.loose


def test_reflectify_is_idempotent():
    p = PrymParams(11, 4, 3)
    final = reflectify(_trace_tableaux()[0], p)
    assert is_reflective(final, p)
    assert reflectify(final, p) == final
    assert reflectify_trace(final, p)[-1] == final


def test_reflectify_rejects_non_prym_input():
    p = PrymParams(3, 1, 2)
    with pytest.raises(InvalidInputError):
        reflectify(square([[2, 4], [1, 3]]), p)  # dual pair split across classes


def test_reflectify_rejects_misparitied_middle_symbol():
    p = PrymParams(3, 1, 2)
    t = square([[4, 5], [3, 4]])  # g = 3 at (1, 1): parity 0, but r is odd
    assert is_prym(t, p)
    with pytest.raises(InvalidInputError, match="parity"):
        reflectify(t, p)


# --------------------------------------------------------------------------
# Extension and restriction


def test_extend_restrict_round_trip():
    p = PrymParams(6, 3, 4)
    for t in enumerate_staircase_tableaux(p):
        e = extend_to_reflective(t, p)
        assert is_reflective(e, p)
        assert restrict_to_staircase(e, p) == t
        # A reflective tableau is a fixed point of the sweep.
        assert reflectify(e, p) == e


def test_extend_to_reflective_validates_input():
    from prymbn.dimension import minimal_witness

    p = PrymParams(6, 3, 4)
    with pytest.raises(InvalidInputError):
        extend_to_reflective(stair([[1], [1, 2], [1, 2, 3]]), p)
    # The witness repeats symbol 5 across offsets -2 and 2: fine mod 4,
    # invalid at torsion 0.
    with pytest.raises(InvalidInputError):
        extend_to_reflective(minimal_witness(p), PrymParams(6, 3, 0))
    with pytest.raises(InvalidInputError, match=r"\[1, g-1\]"):
        extend_to_reflective(stair([[6], [2, 4], [1, 3, 5]]), p)


def test_restrict_to_staircase_requires_reflective():
    p = PrymParams(11, 4, 3)
    with pytest.raises(InvalidInputError):
        restrict_to_staircase(_trace_tableaux()[0], p)
