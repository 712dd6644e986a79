"""Unit tests for edit operations, walks, descent, and the circle graph."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from prymbn.core import (
    GuardRefused,
    InvalidInputError,
    InvariantError,
    PrymParams,
    dominates,
    staircase_shape,
)
from prymbn.dimension import expected_codim, minimal_witness, pbn_dimension
from prymbn.locus import (
    IntersectionGraph,
    MaximalCell,
    average_intersections,
    betti_closed_form,
    betti_number,
    build_intersection_graph,
    connect_path,
    cycle_out,
    cycle_out_trace,
    enumerate_maximal_cells,
    graph_to_dot,
    height,
    height_descent_step,
    is_adjacent,
    standard_filling,
    standard_rank,
    swap_in_for,
    swap_into,
)

from helpers import stair

# --------------------------------------------------------------------------
# Standard fillings and rank


def test_standard_filling_and_rank():
    shape = staircase_shape(4)
    base = standard_filling(shape)
    assert base.values == tuple(range(1, 11))
    assert standard_rank(base) == 0
    bumped = base.with_values({(4, 1): 11})
    assert standard_rank(bumped) == 1


# --------------------------------------------------------------------------
# Edit operations


def test_swap_into_identity_and_rejections():
    t = stair([[4], [3, 7], [2, 6, 9], [1, 5, 8, 10]])
    assert swap_into(t, 4, (1, 4)) == t  # resident symbol: identity
    with pytest.raises(InvalidInputError, match="absent"):
        swap_into(t, 1, (2, 1))  # 1 already sits elsewhere in the tableau
    with pytest.raises(InvalidInputError, match="upper neighbor"):
        swap_into(t, 11, (1, 1))
    with pytest.raises(InvalidInputError, match="outside the shape"):
        swap_into(t, 11, (9, 9))


def test_swap_into_strict_multiplicity():
    t = stair([[3], [2, 4], [1, 2, 4]])
    # (2, 2) holds 4, which also appears at (3, 1): strict mode refuses.
    with pytest.raises(InvalidInputError, match="appears 2 times"):
        swap_into(t, 5, (2, 2))
    relaxed = swap_into(t, 5, (2, 2), strict=False)
    assert relaxed.at((2, 2)) == 5
    assert len(relaxed.symbols) == len(t.symbols) + 1


def test_swap_in_for():
    t = stair([[3], [2, 4], [1, 2, 4]])
    s = swap_in_for(t, 5, 4)
    assert s.fiber(5) == ((2, 2), (3, 1)) and 4 not in s.symbols
    assert swap_in_for(t, 6, 5) == t  # absent source symbol: identity
    with pytest.raises(InvalidInputError, match="absent"):
        swap_in_for(t, 3, 4)  # 3 already present
    with pytest.raises(InvalidInputError, match="tableau condition"):
        swap_in_for(t, 6, 2)  # 6 beats its east neighbor 4 in the bottom row


def test_cycle_out_shifts_every_symbol_between():
    t = stair([[4], [3, 7], [2, 6, 9], [1, 5, 8, 10]])
    up = cycle_out(t, 3, 11)
    assert up == stair([[5], [4, 8], [2, 7, 10], [1, 6, 9, 11]])
    assert len(cycle_out_trace(t, 3, 11)) - 1 == 8
    assert cycle_out(up, 11, 3) == t  # the inverse relabeling
    assert cycle_out(t, 11, 3) == t  # absent symbol: identity
    with pytest.raises(InvalidInputError, match="absent"):
        cycle_out(t, 3, 4)  # 4 is present, not free


# --------------------------------------------------------------------------
# The generic walk (standard-filling figure, T_4, g = 12, k = 0)


WALK_STATES = [
    [[4], [3, 7], [2, 6, 9], [1, 5, 8, 10]],
    [[5], [4, 8], [2, 7, 10], [1, 6, 9, 11]],
    [[5], [4, 8], [2, 7, 10], [1, 3, 9, 11]],
    [[6], [4, 8], [2, 7, 10], [1, 3, 9, 11]],
    [[6], [4, 8], [2, 5, 10], [1, 3, 9, 11]],
    [[7], [4, 8], [2, 5, 10], [1, 3, 9, 11]],
    [[7], [4, 8], [2, 5, 10], [1, 3, 6, 11]],
    [[7], [4, 8], [2, 5, 9], [1, 3, 6, 11]],
    [[7], [4, 8], [2, 5, 9], [1, 3, 6, 10]],
]


def test_generic_walk_reproduces_the_figure():
    p = PrymParams(12, 4, 0)
    states = [stair(s) for s in WALK_STATES]
    assert states[-1] == standard_filling(states[0].shape)
    assert states[-1] == minimal_witness(p)
    assert standard_rank(states[0]) == 8
    assert standard_rank(states[-1]) == 0
    path = connect_path(states[0], states[-1], p)
    assert len(path) == 16  # eight operations, the first expanded into eight
    assert [path.index(f) for f in states] == [0, 8, 9, 10, 11, 12, 13, 14, 15]
    for a, b in zip(path, path[1:]):
        assert is_adjacent(a, b, p)
    assert not is_adjacent(states[0], states[-1], p)


def test_generic_walk_operation_replay():
    states = [stair(s) for s in WALK_STATES]
    t = states[0]
    t = cycle_out(t, 3, 11)
    assert t == states[1]
    t = swap_into(t, 3, (2, 1))
    assert t == states[2]
    t = cycle_out(t, 5, 6)
    assert t == states[3]
    t = swap_into(t, 5, (2, 2))
    assert t == states[4]
    t = cycle_out(t, 6, 7)
    assert t == states[5]
    t = swap_into(t, 6, (3, 1))
    assert t == states[6]
    t = swap_into(t, 9, (3, 2))
    assert t == states[7]
    t = swap_into(t, 10, (4, 1))
    assert t == states[8]


def test_connect_path_endpoints_and_identity():
    p = PrymParams(12, 4, 0)
    a = stair(WALK_STATES[0])
    b = stair(WALK_STATES[-1])
    assert connect_path(a, a, p) == [a]
    rev = connect_path(b, a, p)
    assert rev[0] == b and rev[-1] == a


def test_connect_path_validates_inputs():
    with pytest.raises(InvalidInputError, match="dimension"):
        connect_path(stair([[2], [1, 2]]), stair([[2], [1, 2]]), PrymParams(3, 3, 0))
    p = PrymParams(8, 3, 2)
    injective = standard_filling(staircase_shape(3))
    with pytest.raises(InvalidInputError, match="non-repeating"):
        connect_path(injective, injective, p)


# --------------------------------------------------------------------------
# Odd-torsion height descent


def test_height_needs_odd_torsion():
    with pytest.raises(InvalidInputError, match="odd torsion"):
        height(stair([[2], [1, 2]]), PrymParams(5, 2, 2))


def test_descent_golden_example():
    p = PrymParams(23, 8, 5)
    t = stair([
        [17],
        [15, 16],
        [11, 14, 18],
        [9, 12, 17, 19],
        [8, 10, 15, 16, 20],
        [5, 7, 11, 14, 18, 21],
        [2, 6, 9, 12, 13, 15, 16],
        [1, 3, 4, 5, 7, 11, 14, 18],
    ])
    assert expected_codim(8, 5) == 21 and pbn_dimension(p) == 1
    assert height(t, p) == 5
    step = height_descent_step(t, p)
    assert step.v == t  # nothing to clear: g-1 and g-2 already in place
    assert step.u == t.with_values({(7, 2): 22})
    assert step.s == step.u.with_values({(5, 2): 17, (6, 2): 19})
    assert step.strip.word == "NEEEE"
    assert step.path == (t, step.s)
    assert height(step.s, p) == 4
    assert frozenset(range(1, 23)) - t.symbols == frozenset({22})
    assert frozenset(range(1, 23)) - step.s.symbols == frozenset({13})
    assert is_adjacent(step.v, step.s, p)
    assert dominates(step.v, step.u, p) and dominates(step.s, step.u, p)


def test_descent_parks_the_top_symbol_when_it_is_the_only_free_one():
    # Dimension-1 regression: after clearing g-1 = 6 the only free symbol
    # is 6 itself, so g-2 = 5 cannot be cycled out; the step must instead
    # park 6 on the target box and relabel it in place.
    p = PrymParams(7, 3, 3)
    t = stair([[6], [4, 5], [1, 2, 4]])
    assert pbn_dimension(p) == 1
    assert height(t, p) == 3
    step = height_descent_step(t, p)
    assert step.v == stair([[4], [3, 5], [1, 2, 3]])
    assert step.u == stair([[4], [3, 5], [1, 2, 6]])
    assert step.s == stair([[4], [3, 5], [1, 4, 6]])
    assert step.strip.word == "E"
    assert height(step.s, p) == 2
    for a, b in zip(step.path, step.path[1:]):
        assert is_adjacent(a, b, p)


def test_descent_rejects_minimal_height():
    p = PrymParams(9, 3, 3)
    w = minimal_witness(p)
    assert height(w, p) == p.l
    with pytest.raises(InvalidInputError, match="minimal"):
        height_descent_step(w, p)


def test_full_descent_reaches_the_witness():
    p = PrymParams(23, 8, 5)
    t = stair([
        [17],
        [15, 16],
        [11, 14, 18],
        [9, 12, 17, 19],
        [8, 10, 15, 16, 20],
        [5, 7, 11, 14, 18, 21],
        [2, 6, 9, 12, 13, 15, 16],
        [1, 3, 4, 5, 7, 11, 14, 18],
    ])
    path = connect_path(t, minimal_witness(p), p)
    assert path[0] == t and path[-1] == minimal_witness(p)


# --------------------------------------------------------------------------
# Adjacency


def test_is_adjacent_cases():
    p = PrymParams(5, 2, 2)
    t = stair([[2], [1, 2]])
    assert is_adjacent(t, t, p)  # equal symbol sets count as touching
    assert is_adjacent(t, stair([[3], [1, 3]]), p)  # trade 2 for 3
    with pytest.raises(InvalidInputError, match="same shape"):
        is_adjacent(t, standard_filling(staircase_shape(3)), p)
    with pytest.raises(InvalidInputError, match="distinct symbols"):
        is_adjacent(t, stair([[3], [1, 2]]), p)
    with pytest.raises(InvalidInputError, match="displacement"):
        is_adjacent(t, t, PrymParams(5, 2, 0))
    with pytest.raises(InvalidInputError, match=r"outside \[1, g-1\]"):
        is_adjacent(stair([[4], [1, 4]]), stair([[4], [1, 4]]), PrymParams(4, 2, 2))


def test_random_pairs_walk_and_land():
    rng = random.Random(7)
    for g, r, k in ((9, 3, 3), (8, 3, 2), (10, 3, 0)):
        p = PrymParams(g, r, k)
        assert pbn_dimension(p) >= 1
        cells = enumerate_maximal_cells(p)
        for _ in range(10):
            a, b = rng.choice(cells), rng.choice(cells)
            path = connect_path(a.tableau, b.tableau, p)
            assert path[0] == a.tableau and path[-1] == b.tableau


# --------------------------------------------------------------------------
# Maximal cells


def test_enumerate_maximal_cells_counts_and_free_symbols():
    p = PrymParams(7, 3, 4)
    cells = enumerate_maximal_cells(p)
    assert len(cells) == 24
    assert len({c.tableau for c in cells}) == 24
    assert all(len(c.free_symbols) == 1 for c in cells)
    assert all(c.free_symbols.isdisjoint(c.tableau.symbols) for c in cells)


def test_maximal_cell_free_symbol_count_is_checked():
    p = PrymParams(7, 3, 4)
    cell = enumerate_maximal_cells(p)[0]
    with pytest.raises(InvariantError, match="free symbols"):
        MaximalCell(p, cell.strip, cell.tableau, frozenset({1, 2}))


def test_enumerate_maximal_cells_guard():
    p = PrymParams(17, 5, 0)  # 292864 tableaux, one free-symbol choice each
    with pytest.raises(GuardRefused, match="desk-scale"):
        enumerate_maximal_cells(p)


# --------------------------------------------------------------------------
# The dim-1 circle graph


def test_intersection_graph_small_pins():
    p = PrymParams(5, 3, 2)
    G = build_intersection_graph(p)
    assert (len(G.circles), G.v, G.e, G.components) == (4, 3, 6, 1)
    assert G.circle_vertex_counts == (1, 2, 2, 1)
    assert betti_number(G) == 4 == betti_closed_form(p)
    assert average_intersections(G) == Fraction(3, 2)
    for w in G.vertices:
        assert w.a != w.b and w.i < w.j


def test_intersection_graph_generic_pins():
    for g, r, k, circles, v, betti in (
        (3, 1, 0, 2, 1, 2),
        (5, 2, 0, 8, 8, 9),
        (8, 3, 0, 112, 168, 169),
    ):
        p = PrymParams(g, r, k)
        G = build_intersection_graph(p)
        assert (len(G.circles), G.v, G.e, G.components) == (circles, v, 2 * v, 1)
        assert betti_number(G) == betti == betti_closed_form(p)
        assert average_intersections(G) == Fraction(r)


def test_small_torsion_chain_betti():
    for r in range(1, 5):
        p = PrymParams(expected_codim(r, 2) + 2, r, 2)
        G = build_intersection_graph(p)
        assert betti_number(G) == r + 1 == betti_closed_form(p)


def test_intersection_graph_requires_dimension_one():
    with pytest.raises(InvalidInputError, match="1-dimensional"):
        build_intersection_graph(PrymParams(8, 3, 2))


def test_betti_closed_form_scope():
    with pytest.raises(InvalidInputError, match="dimension 1"):
        betti_closed_form(PrymParams(8, 3, 2))
    with pytest.raises(InvalidInputError, match="closed form"):
        betti_closed_form(PrymParams(7, 3, 3))


def test_average_intersections_needs_circles():
    empty = IntersectionGraph(PrymParams(5, 3, 2), (), (), 0, 0, 0, ())
    with pytest.raises(InvalidInputError, match="no circles"):
        average_intersections(empty)


def test_graph_to_dot_output():
    G = build_intersection_graph(PrymParams(5, 3, 2))
    dot = graph_to_dot(G)
    lines = dot.splitlines()
    assert lines[0] == "graph locus {" and lines[-1] == "}"
    assert dot.count(" -- ") == G.e
    loops = graph_to_dot(build_intersection_graph(PrymParams(3, 1, 0)))
    assert "v0 -- v0" in loops  # single-vertex circles render as self-loops
