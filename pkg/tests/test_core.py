"""Unit tests for shapes, tableaux, and the defining predicates."""

from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from prymbn.core import (
    InvalidInputError,
    PrymParams,
    Tableau,
    anti_diagonal,
    anti_diagonal_boxes,
    canonical_boxes,
    canonical_key,
    class_symbol_sets,
    codimension,
    diag_class,
    diag_offset,
    dominates,
    dual_symbol,
    equivalent,
    explicit_shape,
    generic_regime,
    is_displacement,
    is_prym,
    is_reflective,
    is_tableau,
    rank_map,
    reflect_box,
    square_shape,
    staircase_boxes,
    staircase_shape,
)
from prymbn.dimension import enumerate_staircase_tableaux

from helpers import square, stair

# --------------------------------------------------------------------------
# Boxes and shapes


def test_box_helpers():
    assert anti_diagonal((3, 2)) == 4
    assert diag_offset((3, 2)) == 1
    assert diag_class((3, 2), 0) == 1
    assert diag_class((1, 4), 2) == 1
    assert diag_class((1, 4), 3) == 0


def test_generic_regime_boundaries():
    assert generic_regime(3, 0)
    assert generic_regime(3, 5)  # 2r - 1
    assert not generic_regime(3, 4)  # 2r - 2


def test_staircase_boxes_counts():
    assert staircase_boxes(0) == frozenset()
    assert staircase_boxes(1) == frozenset({(1, 1)})
    assert len(staircase_boxes(4)) == 10


def test_shape_constructors():
    sq = square_shape(2)
    assert sq.kind == "square" and len(sq) == 9 and (3, 3) in sq
    tri = staircase_shape(3)
    assert tri.kind == "staircase" and len(tri) == 6 and (2, 3) not in tri
    ex = explicit_shape([(1, 1), (2, 1)])
    assert ex.kind == "explicit" and ex.r is None


def test_shape_rejects_bad_input():
    with pytest.raises(InvalidInputError):
        square_shape(-1)
    with pytest.raises(InvalidInputError):
        staircase_shape(-2)
    with pytest.raises(InvalidInputError):
        explicit_shape([(0, 1)])


def test_canonical_order_staircase():
    assert canonical_boxes(staircase_shape(3)) == (
        (1, 1), (1, 2), (2, 1), (1, 3), (2, 2), (3, 1),
    )
    assert anti_diagonal_boxes(staircase_shape(3), 2) == ((1, 2), (2, 1))
    assert rank_map(staircase_shape(2))[(2, 1)] == 3


@given(st.tuples(st.integers(1, 30), st.integers(1, 30)),
       st.tuples(st.integers(1, 30), st.integers(1, 30)))
def test_canonical_key_is_a_total_order_refining_anti_diagonals(a, b):
    if anti_diagonal(a) < anti_diagonal(b):
        assert canonical_key(a) < canonical_key(b)
    if a != b:
        assert canonical_key(a) != canonical_key(b)


@given(st.integers(0, 8), st.integers(1, 100))
def test_reflect_box_is_an_involution(r, seed):
    side = r + 1
    x, y = seed % side + 1, (seed * 7) % side + 1
    assert reflect_box(reflect_box((x, y), r), r) == (x, y)
    assert reflect_box((x, y), r) in square_shape(r)


@given(st.integers(2, 40), st.integers(1, 79))
def test_dual_symbol_is_an_involution(g, a):
    assert dual_symbol(dual_symbol(a, g), g) == a
    assert dual_symbol(g, g) == g


# --------------------------------------------------------------------------
# Tableaux


def test_from_rows_and_rows_round_trip():
    t = stair([[3], [2, 4], [1, 2, 4]])
    assert t.rows() == [[1, 2, 4], [2, 4], [3]]
    assert t.at((1, 3)) == 3
    assert t.fiber(4) == ((2, 2), (3, 1))
    assert t.symbols == frozenset({1, 2, 3, 4})


def test_from_mapping_validates_coverage():
    shape = staircase_shape(2)
    with pytest.raises(InvalidInputError, match="without an entry"):
        Tableau.from_mapping(shape, {(1, 1): 1})
    with pytest.raises(InvalidInputError, match="outside the shape"):
        Tableau.from_mapping(shape, {(1, 1): 1, (1, 2): 2, (2, 1): 2, (9, 9): 3})


def test_tableau_rejects_bad_values():
    with pytest.raises(InvalidInputError):
        Tableau(staircase_shape(1), (0,))
    with pytest.raises(InvalidInputError):
        Tableau(staircase_shape(1), (1, 2))


def test_at_outside_shape():
    t = stair([[1]])
    with pytest.raises(InvalidInputError):
        t.at((5, 5))


def test_with_values():
    t = stair([[2], [1, 3]])
    u = t.with_values({(2, 1): 4})
    assert u.at((2, 1)) == 4 and t.at((2, 1)) == 3
    with pytest.raises(InvalidInputError):
        t.with_values({(9, 9): 1})


def test_is_tableau():
    assert is_tableau(stair([[2], [1, 3]]))
    assert not is_tableau(stair([[2], [1, 1]]))  # equal along a row
    assert not is_tableau(stair([[1], [1, 2]]))  # equal along a column
    # Incomparable boxes may repeat.
    assert is_tableau(stair([[2], [1, 2]]))


# --------------------------------------------------------------------------
# Displacement, Prym, reflective


def test_is_displacement_exact_and_modular():
    t = stair([[2], [1, 2]])  # 2 at (1, 2) and (2, 1): offsets -1 and 1
    assert not is_displacement(t, 0)
    assert is_displacement(t, 2)
    assert not is_displacement(t, 3)


def test_is_displacement_requires_a_tableau():
    with pytest.raises(InvalidInputError):
        is_displacement(stair([[1], [1, 2]]), 2)
    with pytest.raises(InvalidInputError):
        is_displacement(stair([[2], [1, 3]]), 1)


def test_class_symbol_sets():
    t = stair([[2], [1, 2]])
    sig = class_symbol_sets(t, 2)
    assert sig == {0: frozenset({1}), 1: frozenset({2})}
    assert class_symbol_sets(t, 2, exclude=2) == {0: frozenset({1})}


def test_is_prym_and_reflective_square():
    p = PrymParams(3, 1, 2)
    t = square([[3, 5], [1, 3]])
    assert is_prym(t, p)
    assert is_reflective(t, p)
    # Prym, but the defining point symmetry fails.
    u = square([[4, 5], [3, 4]])
    assert is_prym(u, p)
    assert not is_reflective(u, p)
    # A valid tableau whose dual pair (2, 4) straddles two diagonal classes.
    w = square([[2, 4], [1, 3]])
    assert is_tableau(w)
    assert not is_prym(w, p)


def test_is_prym_validates_shape_and_range():
    p = PrymParams(3, 1, 2)
    with pytest.raises(InvalidInputError):
        is_prym(stair([[1]]), p)
    with pytest.raises(InvalidInputError):
        is_prym(square([[6, 7], [1, 6]]), p)  # symbols above 2g - 1


# --------------------------------------------------------------------------
# PrymParams


def test_params_validation():
    with pytest.raises(InvalidInputError):
        PrymParams(1, 1, 0)
    with pytest.raises(InvalidInputError):
        PrymParams(5, -1, 0)
    with pytest.raises(InvalidInputError):
        PrymParams(5, 1, 1)
    with pytest.raises(InvalidInputError):
        PrymParams(5, 1, -2)


def test_params_derived_quantities():
    p = PrymParams(11, 4, 3)
    assert p.l == 2 and p.eps == 1 and not p.generic and p.max_symbol == 21
    q = PrymParams(12, 4, 0)
    assert q.eps == 0 and q.generic
    with pytest.raises(InvalidInputError):
        _ = q.l


# --------------------------------------------------------------------------
# Codimension, dominance, equivalence


def test_codimension_staircase_counts_distinct_symbols():
    p = PrymParams(5, 2, 2)
    assert codimension(stair([[2], [1, 2]]), p) == 2
    assert codimension(stair([[3], [1, 2]]), p) == 3


def test_codimension_square_counts_dual_pairs_once():
    p = PrymParams(3, 1, 2)
    t = square([[3, 5], [1, 3]])  # the pair (1, 5) appears twice; g adds nothing
    assert codimension(t, p) == 1


def test_codimension_rejects_large_staircase_symbols():
    p = PrymParams(3, 2, 2)
    with pytest.raises(InvalidInputError):
        codimension(stair([[3], [1, 2]]), p)


def test_dominates_needs_common_shape():
    p = PrymParams(5, 2, 2)
    with pytest.raises(InvalidInputError):
        dominates(stair([[2], [1, 2]]), stair([[1]]), p)


def test_dominates_staircase_containment():
    p = PrymParams(5, 2, 2)
    t = stair([[2], [1, 2]])
    s = stair([[3], [1, 2]])
    assert dominates(t, t, p) and equivalent(t, t, p)
    assert dominates(t, s, p)  # s uses a superset of symbols per class
    assert not dominates(s, t, p)
    assert not equivalent(t, s, p)


def test_dominates_square_accepts_the_dual_symbol():
    p = PrymParams(3, 1, 2)
    t = square([[3, 5], [1, 3]])  # class 0 asks for {1, 5}; g on parity class 1
    s = square([[3, 4], [1, 3]])  # class 0 carries {1, 4}: 5 is matched by its dual 1
    assert dominates(t, s, p)
    assert not dominates(s, t, p)  # 4 has neither itself nor its dual 2 in t


@pytest.mark.parametrize("r,k", [(1, 0), (2, 0), (2, 2), (2, 3), (3, 2), (3, 4)])
def test_dominance_is_reflexive_on_staircase_fillings(r, k):
    p = PrymParams(r * (r + 1) // 2 + 1, r, k)
    tableaux = list(enumerate_staircase_tableaux(p))
    assert tableaux
    for t in tableaux[:: max(1, len(tableaux) // 12)]:
        assert dominates(t, t, p)
        assert equivalent(t, t, p)
