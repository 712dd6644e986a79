"""The acceptance suite: one row per exit criterion, shared by pytest and CLI.

Each row re-derives a published pin or sweeps an exhaustive family and
asserts exact agreement between independent routes.  Rows accept a
``RunContext`` so the command line can restrict the suite to a single
``(g, r, k)`` instance or flip the negative-control knob that narrows the
determinant's support box (a correct build then *reports* divergence,
proving the finite-support row can detect bad bounds).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Iterator

from .core import (
    PrymParams,
    Tableau,
    codimension,
    dominates,
    is_reflective,
    square_shape,
    staircase_shape,
)
from .counting import (
    cardinality,
    count_brute,
    count_even_determinant,
    count_generic,
    count_lattice_paths,
)
from .dimension import (
    brute_min_codim,
    enumerate_staircase_tableaux,
    expected_codim,
    pbn_dimension,
)
from .divisors import make_folded_chain, tableau_to_divisor
from .locus import (
    average_intersections,
    betti_closed_form,
    betti_number,
    build_intersection_graph,
    connect_path,
    enumerate_maximal_cells,
    height_descent_step,
)
from .reflection import (
    extend_to_reflective,
    reflectify,
    reflectify_trace,
    restrict_to_staircase,
)
from .strips import dominating_non_repeating, enumerate_strip_tableaux, extend_strip_tableau

__all__ = ["ROWS", "Row", "RowResult", "RunContext", "format_row", "run_rows"]


@dataclass(frozen=True)
class RunContext:
    """Knobs threaded through every row."""

    instance: tuple[int, int, int] | None = None  # restrict to one (g, r, k)
    narrow_alpha: bool = False  # negative control: shrink the support box

    def wants(self, g: int, r: int, k: int) -> bool:
        return self.instance is None or self.instance == (g, r, k)


@dataclass(frozen=True)
class Row:
    ident: str
    title: str
    run: Callable[[RunContext], str]


@dataclass(frozen=True)
class RowResult:
    ident: str
    title: str
    passed: bool
    seconds: float
    detail: str


_SKIPPED = "skipped by instance filter"


def _stair(rows_top_down: list[list[int]]) -> Tableau:
    rows = list(reversed(rows_top_down))
    return Tableau.from_rows(rows, staircase_shape(len(rows)))


def _square(rows_top_down: list[list[int]]) -> Tableau:
    rows = list(reversed(rows_top_down))
    return Tableau.from_rows(rows, square_shape(len(rows) - 1))


def _grid() -> Iterator[tuple[int, int, int, int]]:
    """The exhaustive sweep grid: (r, k, g-1, n) with g-1 in {n, n+1, n+2}."""
    for r in range(1, 5):
        for k in (0, 2, 3, 4, 5):
            n = expected_codim(r, k)
            for gm1 in (n, n + 1, n + 2):
                yield r, k, gm1, n


# --------------------------------------------------------------------------
# Row 1: dimension formula against the exhaustive minimum.
# --------------------------------------------------------------------------


def _row_dimension(ctx: RunContext) -> str:
    checked, worst = 0, 0.0
    for r, k, gm1, n in _grid():
        if not ctx.wants(gm1 + 1, r, k):
            continue
        p = PrymParams(gm1 + 1, r, k)
        t0 = time.perf_counter()
        got = brute_min_codim(p)
        dt = time.perf_counter() - t0
        assert got == n, f"exhaustive minimum {got} != formula {n} at {p}"
        assert dt < 60.0, f"{p} took {dt:.1f}s, budget 60s"
        checked += 1
        worst = max(worst, dt)
    if not checked:
        return _SKIPPED
    return f"{checked} instances agree with the formula; slowest {worst:.2f}s"


# --------------------------------------------------------------------------
# Row 2: the cardinality table, every route.
# --------------------------------------------------------------------------

# C(r, k) over r = 1..6 (rows) and k = 0, 2, 4, 6, 8 (columns).  Two cells
# are corrected relative to a circulating misprint — C(5, 8) = 35840 and
# C(6, 6) = 8192 — as forced by the agreement of the determinant, lattice
# path, brute-force, and transfer-matrix routes.
CARDINALITY_TABLE: dict[tuple[int, int], int] = {
    (1, 0): 1, (1, 2): 1, (1, 4): 1, (1, 6): 1, (1, 8): 1,
    (2, 0): 2, (2, 2): 1, (2, 4): 2, (2, 6): 2, (2, 8): 2,
    (3, 0): 16, (3, 2): 1, (3, 4): 4, (3, 6): 16, (3, 8): 16,
    (4, 0): 768, (4, 2): 1, (4, 4): 8, (4, 6): 128, (4, 8): 768,
    (5, 0): 292864, (5, 2): 1, (5, 4): 16, (5, 6): 1024, (5, 8): 35840,
    (6, 0): 1100742656, (6, 2): 1, (6, 4): 32, (6, 6): 8192, (6, 8): 1671168,
}


def _row_cardinality(ctx: RunContext) -> str:
    if ctx.instance is not None:
        return _SKIPPED
    t0 = time.perf_counter()
    brutes = 0
    for (r, k), want in sorted(CARDINALITY_TABLE.items()):
        got = cardinality(r, k)
        assert got == want, f"C({r},{k}) = {got}, table says {want}"
        if k == 0 or k >= 2 * r - 1:
            assert count_generic(r) == want, f"generic route differs at ({r},{k})"
        else:
            det = count_even_determinant(r, k)
            paths = count_lattice_paths(r, k)
            assert det == want, f"determinant C({r},{k}) = {det} != {want}"
            assert paths == want, f"lattice paths C({r},{k}) = {paths} != {want}"
        if k == 2:
            assert want == 1
        if k == 4:
            assert want == 2 ** (r - 1)
        if expected_codim(r, k) <= 18:
            assert count_brute(r, k) == want, f"brute C({r},{k}) != {want}"
            brutes += 1
    dt = time.perf_counter() - t0
    assert dt < 300.0, f"table took {dt:.1f}s, budget 300s"
    return (
        f"30 cells agree across routes ({brutes} brute-confirmed) in {dt:.1f}s;"
        " corrected cells C(5,8)=35840, C(6,6)=8192"
    )


def _row_finite_support(ctx: RunContext) -> str:
    if ctx.instance is not None:
        return _SKIPPED
    cells = [
        (r, k)
        for r in range(2, 7)
        for k in (2, 4, 6, 8)
        if 2 <= k <= 2 * r - 2
    ]
    if ctx.narrow_alpha:
        diverged = [
            (r, k)
            for r, k in cells
            if count_even_determinant(r, k, widen=-1) != count_even_determinant(r, k)
        ]
        assert diverged, "narrowing the support box changed nothing; bounds look loose"
        return (
            f"negative control: narrowed box flagged {len(diverged)}/{len(cells)}"
            f" cells (first at r,k={diverged[0]})"
        )
    for r, k in cells:
        base = count_even_determinant(r, k)
        for widen in (1, 2):
            wide = count_even_determinant(r, k, widen=widen)
            assert wide == base, f"widening by {widen} moved C({r},{k}): {wide} != {base}"
    return f"{len(cells)} determinant cells invariant under box widening (+1, +2)"


# --------------------------------------------------------------------------
# Row 3: maximal-cell counts.
# --------------------------------------------------------------------------


def _row_cells(ctx: RunContext) -> str:
    checked, pinned = 0, False
    for r, k, gm1, n in _grid():
        if not ctx.wants(gm1 + 1, r, k):
            continue
        p = PrymParams(gm1 + 1, r, k)
        if (pbn_dimension(p) or -1) < 0:
            continue
        cells = enumerate_maximal_cells(p)
        want = cardinality(r, k) * comb(gm1, n)
        assert len(cells) == want, f"{p}: {len(cells)} cells, product rule says {want}"
        if (gm1 + 1, r, k) == (7, 3, 4):
            assert len(cells) == 24
            pinned = True
        checked += 1
    if not checked:
        return _SKIPPED
    pin = ", including the 24 cells of (g,r,k)=(7,3,4)" if pinned else ""
    return f"{checked} instances match the product count{pin}"


# --------------------------------------------------------------------------
# Row 4: first Betti numbers.
# --------------------------------------------------------------------------


def _timed_graph(p: PrymParams):
    t0 = time.perf_counter()
    graph = build_intersection_graph(p)
    dt = time.perf_counter() - t0
    assert dt < 120.0, f"graph for {p} took {dt:.1f}s, budget 120s"
    return graph


def _k4_profile(free: int, r: int) -> int:
    if free == 1:
        return 1
    if free == 2:
        return 3
    if free == 2 * r:
        return 2
    return 2 if free % 2 else 4


def _row_betti(ctx: RunContext) -> str:
    notes: list[str] = []
    if ctx.wants(7, 3, 4):
        p = PrymParams(7, 3, 4)
        graph = _timed_graph(p)
        assert betti_number(graph) == 29, f"betti {betti_number(graph)} != 29"
        assert betti_closed_form(p) == 29
        notes.append("(7,3,4) betti 29")
    k2 = 0
    for r in range(1, 7):
        n = expected_codim(r, 2)
        if not ctx.wants(n + 2, r, 2):
            continue
        p = PrymParams(n + 2, r, 2)
        graph = _timed_graph(p)
        assert betti_number(graph) == r + 1 == betti_closed_form(p), f"k=2 r={r}"
        k2 += 1
    if k2:
        notes.append(f"k=2 chain r<=6 gives r+1 ({k2} instances)")
    k4 = 0
    for r in range(2, 6):
        n = expected_codim(r, 4)
        if not ctx.wants(n + 2, r, 4):
            continue
        p = PrymParams(n + 2, r, 4)
        graph = _timed_graph(p)
        want = 2 ** (r - 1) * (3 * r - 2) + 1
        assert betti_number(graph) == want == betti_closed_form(p), f"k=4 r={r}"
        assert len(graph.circles) == 2 ** (r - 1) * 2 * r, f"k=4 r={r} circle count"
        for cell, cnt in zip(graph.circles, graph.circle_vertex_counts):
            free = min(cell.free_symbols)
            assert cnt == _k4_profile(free, r), (
                f"k=4 r={r}: circle with free symbol {free} meets {cnt} vertices,"
                f" profile says {_k4_profile(free, r)}"
            )
        k4 += 1
    if k4:
        notes.append(f"k=4 profile r<=5 ({k4} instances)")
    generic = []
    for r, want in ((2, 9), (3, 169)):
        n = expected_codim(r, 0)
        if not ctx.wants(n + 2, r, 0):
            continue
        p = PrymParams(n + 2, r, 0)
        graph = _timed_graph(p)
        assert betti_number(graph) == want == betti_closed_form(p), f"generic r={r}"
        generic.append(want)
    if generic:
        notes.append(f"generic r=2,3 give {generic}")
    if not notes:
        return _SKIPPED
    return "; ".join(notes)


# --------------------------------------------------------------------------
# Row 5: the reflection golden trace.
# --------------------------------------------------------------------------

# Nine states of the published reflection run on a (g, r, k) = (11, 4, 3)
# square tableau, top row first.  Some consecutive states coincide: those
# steps only certify already-reflective boxes.
REFLECTION_TRACE: tuple[tuple[tuple[int, ...], ...], ...] = (
    ((9, 15, 17, 18, 21), (7, 12, 13, 15, 19), (5, 9, 11, 12, 18),
     (4, 8, 10, 11, 14), (2, 5, 6, 7, 11)),
    ((9, 15, 17, 18, 21), (7, 12, 13, 15, 19), (5, 9, 11, 12, 18),
     (4, 8, 10, 11, 14), (1, 5, 6, 7, 11)),
    ((9, 15, 17, 18, 21), (7, 12, 13, 15, 19), (5, 9, 11, 12, 18),
     (4, 8, 10, 11, 14), (1, 3, 6, 7, 11)),
    ((9, 15, 17, 18, 21), (7, 12, 13, 15, 19), (5, 9, 11, 12, 18),
     (4, 8, 10, 11, 14), (1, 3, 4, 7, 11)),
    ((9, 15, 17, 18, 21), (7, 12, 13, 15, 19), (5, 9, 11, 12, 18),
     (4, 8, 10, 11, 14), (1, 3, 4, 7, 11)),
    ((9, 15, 17, 18, 21), (7, 12, 13, 15, 19), (5, 9, 11, 12, 18),
     (4, 7, 10, 11, 15), (1, 3, 4, 7, 11)),
    ((9, 15, 17, 18, 21), (7, 12, 13, 15, 19), (5, 9, 11, 12, 18),
     (4, 7, 10, 11, 15), (1, 3, 4, 7, 11)),
    ((9, 15, 17, 18, 21), (7, 12, 13, 15, 19), (5, 9, 11, 12, 18),
     (4, 7, 10, 11, 15), (1, 3, 4, 7, 11)),
    ((11, 15, 17, 18, 21), (7, 11, 13, 15, 19), (5, 9, 11, 12, 18),
     (4, 7, 10, 11, 15), (1, 3, 4, 7, 11)),
)


def _row_reflection(ctx: RunContext) -> str:
    if ctx.instance is not None and ctx.instance != (11, 4, 3):
        return _SKIPPED
    p = PrymParams(11, 4, 3)
    states = [_square([list(row) for row in s]) for s in REFLECTION_TRACE]
    got = reflectify_trace(states[0], p)
    assert len(got) == len(states), f"trace length {len(got)} != {len(states)}"
    for i, (a, b) in enumerate(zip(got, states)):
        assert a == b, f"trace state {i} differs:\n{a.rows()}\nvs\n{b.rows()}"
    final = reflectify(states[0], p)
    assert final == states[-1]
    assert is_reflective(final, p)
    assert dominates(final, states[0], p)
    return "all 9 golden states reproduced box-for-box; final state reflective"


# --------------------------------------------------------------------------
# Row 6: connectivity.
# --------------------------------------------------------------------------


def _dim1_instances() -> list[tuple[int, int, int]]:
    seen: list[tuple[int, int, int]] = []
    for r in range(1, 5):
        for k in (0, 2, 3, 4, 5):
            seen.append((expected_codim(r, k) + 2, r, k))
    seen.append((7, 3, 4))
    for r in range(1, 7):
        seen.append((expected_codim(r, 2) + 2, r, 2))
    for r in range(2, 6):
        seen.append((expected_codim(r, 4) + 2, r, 4))
    for r in (2, 3):
        seen.append((expected_codim(r, 0) + 2, r, 0))
    out: list[tuple[int, int, int]] = []
    for inst in seen:
        if inst not in out:
            out.append(inst)
    return out


# Golden pivot for one odd-torsion height-descent step at
# (g, r, k) = (23, 8, 5), top row first.
DESCENT_START: tuple[tuple[int, ...], ...] = (
    (17,),
    (15, 16),
    (11, 14, 18),
    (9, 12, 17, 19),
    (8, 10, 15, 16, 20),
    (5, 7, 11, 14, 18, 21),
    (2, 6, 9, 12, 13, 15, 16),
    (1, 3, 4, 5, 7, 11, 14, 18),
)


def _check_descent_golden() -> None:
    p = PrymParams(23, 8, 5)
    t = _stair([list(row) for row in DESCENT_START])
    step = height_descent_step(t, p)
    assert step.v == t, "no symbols needed clearing, yet v != t"
    u_want = t.with_values({(7, 2): 22})
    assert step.u == u_want, "pivot tableau differs from the golden pin"
    s_want = u_want.with_values({(5, 2): 17, (6, 2): 19})
    assert step.s == s_want, "descended tableau differs from the golden pin"
    assert step.strip.word == "NEEEE"
    assert step.path == (t, s_want)


def _row_connectivity(ctx: RunContext) -> str:
    t0 = time.perf_counter()
    graphs = 0
    for g, r, k in _dim1_instances():
        if not ctx.wants(g, r, k):
            continue
        graph = build_intersection_graph(PrymParams(g, r, k))
        assert graph.components == 1, f"({g},{r},{k}) graph has {graph.components} parts"
        graphs += 1
    rng = random.Random(2026)
    pairs = 0
    for r, k, gm1, n in _grid():
        p = PrymParams(gm1 + 1, r, k)
        if not ctx.wants(p.g, r, k):
            continue
        if (pbn_dimension(p) or 0) < 1:
            continue
        cells = enumerate_maximal_cells(p)
        for _ in range(100):
            a, b = rng.choice(cells), rng.choice(cells)
            path = connect_path(a.tableau, b.tableau, p)
            assert path[0] == a.tableau and path[-1] == b.tableau
            pairs += 1
    golden = ""
    if ctx.wants(23, 8, 5) or ctx.instance is None:
        _check_descent_golden()
        golden = "; odd-torsion descent golden reproduced"
    dt = time.perf_counter() - t0
    assert dt < 300.0, f"connectivity row took {dt:.1f}s, budget 300s"
    if not graphs and not pairs and not golden:
        return _SKIPPED
    return (
        f"{graphs} dim-1 graphs connected; {pairs} random cell pairs walked"
        f"{golden}; {dt:.1f}s"
    )


# --------------------------------------------------------------------------
# Row 7: pure dimensionality via the reflect-and-dominate pipeline.
# --------------------------------------------------------------------------


def _row_pure_dimension(ctx: RunContext) -> str:
    checked = 0
    for r, k, gm1, n in _grid():
        if not ctx.wants(gm1 + 1, r, k):
            continue
        p = PrymParams(gm1 + 1, r, k)
        for t in enumerate_staircase_tableaux(p):
            refl = reflectify(extend_to_reflective(t, p), p)
            _, dom = dominating_non_repeating(restrict_to_staircase(refl, p), p)
            assert codimension(dom, p) == n, (
                f"{p}: pipeline codimension {codimension(dom, p)} != {n}"
                f" from {t.rows()}"
            )
            assert dominates(dom, t, p), f"{p}: pipeline output fails to dominate"
            checked += 1
    if not checked:
        return _SKIPPED
    return f"{checked} tableaux land on codimension-n dominating tableaux"


# --------------------------------------------------------------------------
# Row 8: generic average intersections.
# --------------------------------------------------------------------------


def _row_average(ctx: RunContext) -> str:
    hits = []
    for r in range(1, 5):
        n = expected_codim(r, 0)
        if not ctx.wants(n + 2, r, 0):
            continue
        graph = build_intersection_graph(PrymParams(n + 2, r, 0))
        avg = average_intersections(graph)
        assert avg == Fraction(r), f"generic r={r}: average {avg} != {r}"
        hits.append(r)
    if not hits:
        return _SKIPPED
    return f"average vertices per circle exactly r for r in {hits}"


# --------------------------------------------------------------------------
# Row 9: the divisor layer.
# --------------------------------------------------------------------------


def _row_divisors(ctx: RunContext) -> str:
    swept = []
    for g, r, k in ((7, 3, 4), (5, 3, 2)):
        if not ctx.wants(g, r, k):
            continue
        p = PrymParams(g, r, k)
        chain = make_folded_chain(g, k)
        count = 0
        for st in enumerate_strip_tableaux(p):
            t = extend_strip_tableau(st)
            div = tableau_to_divisor(t, chain)
            assert div is not None, "staircase tableaux always carry a divisor"
            assert div.degree == 2 * g - 2, f"degree {div.degree} != {2 * g - 2}"
            pos = {e.loop: e.pos for e in div.entries}
            for a in range(1, g):
                assert pos[a] == pos[2 * g - a], f"mirror pair ({a},{2 * g - a})"
            by_symbol: dict[int, list[tuple[int, int]]] = {}
            for box, v in t.items():
                by_symbol.setdefault(v, []).append(box)
            for v, boxes in by_symbol.items():
                m, length = chain.lengths[v - 1]
                circ = m + length
                spots = {(m * (x - y)) % circ for x, y in boxes}
                assert len(spots) == 1, f"symbol {v} pins two spots: {sorted(spots)}"
                assert pos[v] == spots.pop(), f"symbol {v} chip off its box position"
            count += 1
        swept.append(f"({g},{r},{k}): {count} tableaux")
    if not swept:
        return _SKIPPED
    return "degree, mirror symmetry, and box positions hold over " + ", ".join(swept)


ROWS: tuple[Row, ...] = (
    Row("R1", "dimension formula vs exhaustive minimum", _row_dimension),
    Row("R2", "cardinality table, all routes", _row_cardinality),
    Row("R2b", "determinant finite support", _row_finite_support),
    Row("R3", "maximal-cell product counts", _row_cells),
    Row("R4", "first Betti numbers", _row_betti),
    Row("R5", "reflection golden trace", _row_reflection),
    Row("R6", "connectivity walks", _row_connectivity),
    Row("R7", "pure dimensionality pipeline", _row_pure_dimension),
    Row("R8", "generic average intersections", _row_average),
    Row("R9", "divisor layer sweeps", _row_divisors),
)


def format_row(res: RowResult) -> str:
    mark = "PASS" if res.passed else "FAIL"
    return f"{res.ident:<4} {res.title:<40} {mark} {res.seconds:8.1f}s  {res.detail}"


def run_rows(
    ctx: RunContext = RunContext(),
    stream: Callable[[str], None] | None = None,
) -> list[RowResult]:
    """Run every acceptance row, never letting one failure stop the matrix."""
    results: list[RowResult] = []
    for row in ROWS:
        t0 = time.perf_counter()
        try:
            detail = row.run(ctx)
            passed = True
        except AssertionError as exc:
            detail, passed = f"assertion failed: {exc}", False
        except Exception as exc:  # noqa: BLE001 — the matrix must finish
            detail, passed = f"{type(exc).__name__}: {exc}", False
        res = RowResult(row.ident, row.title, passed, time.perf_counter() - t0, detail)
        results.append(res)
        if stream is not None:
            stream(format_row(res))
    return results
