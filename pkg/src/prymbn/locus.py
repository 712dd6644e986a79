"""Maximal cells, adjacency, connectivity walks, and the dim-1 circle graph.

The locus decomposes into maximal cells indexed by strip tableaux.  Two
cells touch when their tableaux differ by one symbol per diagonal class
(adjacency); every pair of cells is joined by a constructive walk built
from three edit operations (swap into a box, swap a symbol in for another,
cycle a symbol out).  When the locus is one-dimensional it is a union of
circles meeting at points; this module builds that graph, computes its
first Betti number, and exports it as DOT.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .core import (
    Box,
    GuardRefused,
    InvalidInputError,
    InvariantError,
    PrymParams,
    Shape,
    Tableau,
    canonical_boxes,
    class_symbol_sets,
    dominates,
    is_displacement,
    is_tableau,
    staircase_shape,
)
from .counting import count_generic, max_cell_count
from .dimension import expected_codim, minimal_witness, pbn_dimension
from .strips import (
    StripShape,
    extend_strip_tableau,
    horizontal_strip,
    is_non_repeating,
    restrict_to_strip,
    strips_admitting,
)

__all__ = [
    "CELL_GUARD",
    "GraphVertex",
    "HeightDescent",
    "IntersectionGraph",
    "MaximalCell",
    "average_intersections",
    "betti_closed_form",
    "betti_number",
    "build_intersection_graph",
    "connect_path",
    "cycle_out",
    "cycle_out_trace",
    "enumerate_maximal_cells",
    "graph_to_dot",
    "height",
    "height_descent_step",
    "is_adjacent",
    "standard_filling",
    "standard_rank",
    "swap_in_for",
    "swap_into",
]

CELL_GUARD = 100_000


# --------------------------------------------------------------------------
# Canonical-order rank


def standard_filling(shape: Shape) -> Tableau:
    """The filling placing ``1..n`` along the canonical box order."""
    boxes = canonical_boxes(shape)
    return Tableau.from_mapping(shape, {b: i + 1 for i, b in enumerate(boxes)})


def standard_rank(t: Tableau) -> int:
    """Distance from the standard filling: boxes minus the matching prefix.

    The prefix runs along the canonical box order; rank 0 characterises the
    standard filling itself.
    """
    boxes = canonical_boxes(t.shape)
    prefix = 0
    for i, b in enumerate(boxes):
        if t.at(b) != i + 1:
            break
        prefix = i + 1
    return len(boxes) - prefix


# --------------------------------------------------------------------------
# Edit operations


def _canon(t: Tableau, p: PrymParams) -> Tableau:
    """Re-anchor a tableau with staircase boxes onto the staircase shape."""
    shape = staircase_shape(p.r)
    if t.shape == shape:
        return t
    if t.shape.boxes != shape.boxes:
        raise InvalidInputError(f"tableau does not live on the staircase T_{p.r}")
    return Tableau.from_mapping(shape, t.mapping)


def _require_absent(t: Tableau, a: int, op: str) -> None:
    if a in t.symbols:
        raise InvalidInputError(f"{op} needs symbol {a} absent from the tableau")


def swap_into(t: Tableau, a: int, box: Box, *, strict: bool = True) -> Tableau:
    """Place ``a`` at ``box``; the previous symbol there disappears.

    ``a`` must be absent, exceed the west/south neighbors, and be exceeded
    by the east/north neighbors.  In strict mode the replaced symbol must
    occur exactly once, so the distinct-symbol count is preserved.
    Swapping the resident symbol into its own box is the identity.
    """
    if box not in t.shape:
        raise InvalidInputError(f"box {box} is outside the shape")
    old = t.at(box)
    if a == old:
        return t
    _require_absent(t, a, "swap_into")
    x, y = box
    for nb, want_smaller in (
        ((x - 1, y), True),
        ((x, y - 1), True),
        ((x + 1, y), False),
        ((x, y + 1), False),
    ):
        if nb in t.shape:
            v = t.at(nb)
            if want_smaller and not v < a:
                raise InvalidInputError(
                    f"symbol {a} does not exceed lower neighbor {nb} holding {v}"
                )
            if not want_smaller and not a < v:
                raise InvalidInputError(
                    f"symbol {a} is not exceeded by upper neighbor {nb} holding {v}"
                )
    if strict:
        mult = len(t.fiber(old))
        if mult != 1:
            raise InvalidInputError(
                f"replaced symbol {old} appears {mult} times; swap_into would"
                " change the distinct-symbol count"
            )
    return t.with_values({box: a})


def swap_in_for(t: Tableau, a: int, b: int) -> Tableau:
    """Replace every box holding ``b`` with ``a`` (identity when ``b`` absent)."""
    if a == b or b not in t.symbols:
        return t
    _require_absent(t, a, "swap_in_for")
    out = t.with_values({box: a for box in t.fiber(b)})
    if not is_tableau(out):
        raise InvalidInputError(
            f"swapping {a} in for {b} violates the tableau condition"
        )
    return out


def cycle_out_trace(t: Tableau, b: int, a: int) -> list[Tableau]:
    """States of cycling ``b`` out of the tableau using the free symbol ``a``.

    Every symbol from ``b`` toward ``a`` shifts by one in ``a``'s direction,
    one relabeling per state; consecutive states are adjacent.  Returns
    ``[t]`` unchanged when ``b`` is absent or equals ``a``.
    """
    if a == b or b not in t.symbols:
        return [t]
    _require_absent(t, a, "cycle_out")
    states = [t]
    cur = t
    if a > b:
        for v in range(a - 1, b - 1, -1):
            if v in cur.symbols:
                cur = swap_in_for(cur, v + 1, v)
                states.append(cur)
    else:
        for v in range(a + 1, b + 1):
            if v in cur.symbols:
                cur = swap_in_for(cur, v - 1, v)
                states.append(cur)
    if b in cur.symbols:
        raise InvariantError(f"cycling out {b} using {a} left {b} in place")
    return states


def cycle_out(t: Tableau, b: int, a: int) -> Tableau:
    """The tableau with ``b`` cycled out using the free symbol ``a``."""
    return cycle_out_trace(t, b, a)[-1]


# --------------------------------------------------------------------------
# Adjacency


def is_adjacent(t: Tableau, s: Tableau, p: PrymParams) -> bool:
    """Whether the cells of ``t`` and ``s`` share a codimension-1 face.

    Per diagonal class, the symbol sets of ``s`` may differ from those of
    ``t`` in exactly one of three ways: not at all, by trading one symbol
    for another within a single class, or by a pure one-symbol gain in one
    class paired with a pure one-symbol loss in another.
    """
    if t.shape.boxes != s.shape.boxes:
        raise InvalidInputError("adjacency needs tableaux of the same shape")
    for name, tab in (("first", t), ("second", s)):
        if not is_displacement(tab, p.k):
            raise InvalidInputError(
                f"{name} tableau is not a {p.k}-uniform displacement tableau"
            )
        bad = sorted(v for v in tab.symbols if v > p.g - 1)
        if bad:
            raise InvalidInputError(
                f"{name} tableau uses symbols outside [1, g-1]: {bad}"
            )
    if len(t.symbols) != len(s.symbols):
        raise InvalidInputError(
            "adjacency needs the same number of distinct symbols"
            f" ({len(t.symbols)} vs {len(s.symbols)})"
        )
    st = class_symbol_sets(t, p.k)
    ss = class_symbol_sets(s, p.k)
    empty: frozenset[int] = frozenset()
    dif = [
        c
        for c in set(st) | set(ss)
        if st.get(c, empty) != ss.get(c, empty)
    ]
    if not dif:
        return bool(t.symbols)
    if len(dif) == 1:
        c = dif[0]
        gained = ss.get(c, empty) - st.get(c, empty)
        lost = st.get(c, empty) - ss.get(c, empty)
        return len(gained) == 1 and len(lost) == 1
    if len(dif) == 2:
        deltas = [
            (ss.get(c, empty) - st.get(c, empty), st.get(c, empty) - ss.get(c, empty))
            for c in dif
        ]
        pure_gain = [g for g, lo in deltas if len(g) == 1 and not lo]
        pure_loss = [lo for g, lo in deltas if len(lo) == 1 and not g]
        return (
            len(pure_gain) == 1
            and len(pure_loss) == 1
            and pure_gain[0] != pure_loss[0]
        )
    return False


# --------------------------------------------------------------------------
# Height and the odd-torsion descent


def height(t: Tableau, p: PrymParams) -> int:
    """Row of the r-th leftmost strip box of the unique strip admitting ``t``."""
    if p.k == 0 or p.eps == 0:
        raise InvalidInputError("height is defined only for odd torsion")
    mus = strips_admitting(t, p)
    if not mus:
        raise InvalidInputError("tableau is not non-repeating in any strip")
    if len(mus) > 1:
        raise InvariantError("odd torsion admits at most one strip")
    return mus[0].height


@dataclass(frozen=True)
class HeightDescent:
    """One height-lowering move: the walk states plus the pivot tableaux.

    ``path`` runs from the input tableau to ``s`` with consecutive states
    adjacent.  ``u`` carries one extra distinct symbol — it is the
    intersection point of the cells of ``v`` (the last state before ``s``)
    and ``s``, not itself a path element.
    """

    path: tuple[Tableau, ...]
    v: Tableau
    u: Tableau
    s: Tableau
    strip: StripShape


def _smallest_free(t: Tableau, p: PrymParams) -> int:
    for v in range(1, p.g):
        if v not in t.symbols:
            return v
    raise InvariantError("no free symbol available; the locus must be positive-dimensional")


def height_descent_step(t: Tableau, p: PrymParams) -> HeightDescent:
    """Connect ``t`` to a tableau whose strip height is lower by exactly one."""
    if p.eps != 1 or p.k == 0:
        raise InvalidInputError("height descent applies to odd torsion only")
    dim = pbn_dimension(p)
    if dim is None or dim < 1:
        raise InvalidInputError("height descent needs a positive-dimensional locus")
    t = _canon(t, p)
    mus = strips_admitting(t, p)
    if len(mus) != 1:
        raise InvalidInputError("tableau is not non-repeating in a unique strip")
    mu = mus[0]
    l, r, g = p.l, p.r, p.g
    H = mu.height
    if H <= l:
        raise InvalidInputError("height is already minimal; nothing to descend")
    x = min(bx for bx, by in mu.boxes if by == H)
    y = H
    q = x + y - 1
    n = r - q
    psi = [(x + i, y) for i in range(n + 1)]
    omega_n0 = (x + n + l - 1, y - l)
    gm2_box = (omega_n0[0], omega_n0[1] + 1)
    gm1_box = (omega_n0[0] + 1, omega_n0[1])

    # Cycle the largest symbol out first: cycling shifts every symbol
    # strictly between the free symbol and the removed one, so clearing
    # g-1 later would dislodge an already-seated g-2.
    states = [t]
    cur = t
    if g - 1 in cur.symbols:
        trace = cycle_out_trace(cur, g - 1, _smallest_free(cur, p))
        states.extend(trace[1:])
        cur = states[-1]
    if cur.at(gm2_box) != g - 2:
        # Park g-1 on the target box, then cycle it out via the symbol it
        # displaced: the final shift of that cycle turns the parked g-1
        # into g-2 in place.  Seating g-2 directly would first need it
        # cycled out, and when g-1 is the only free symbol that cycle
        # would re-introduce g-1.
        displaced = cur.at(gm2_box)
        cur = swap_into(cur, g - 1, gm2_box)
        states.append(cur)
        trace = cycle_out_trace(cur, g - 1, displaced)
        states.extend(trace[1:])
        cur = states[-1]
        if cur.at(gm2_box) != g - 2:
            raise InvariantError("parking shift failed to leave g-2 on its box")
    v = cur

    u = swap_into(v, g - 1, gm1_box, strict=False)
    if len(u.symbols) != len(v.symbols) + 1:
        raise InvariantError("the pivot tableau must gain exactly one symbol")

    shape = staircase_shape(r)
    overrides: dict[Box, int] = {}
    for i in range(n + 1):
        j = 0
        while True:
            w = (x + i + l - 1 + j * l, y - l - j * (l - 1))
            if w not in shape:
                break
            overrides[w] = u.at(psi[i])
            j += 1
    s = u.with_values(overrides)

    idx = (q - 1) - l
    if mu.word[idx] != "N" or any(c != "E" for c in mu.word[idx + 1 :]):
        raise InvariantError("strip word disagrees with the height row")
    nu = StripShape(r, l, mu.word[:idx] + "E" * (len(mu.word) - idx))

    if not is_tableau(s) or not is_displacement(s, p.k):
        raise InvariantError("descent produced an invalid tableau")
    if not is_non_repeating(s, nu, p):
        raise InvariantError("descent result is not non-repeating in the lower strip")
    if len(s.symbols) != expected_codim(r, p.k):
        raise InvariantError("descent result is not minimal")
    if nu.height != H - 1:
        raise InvariantError("descent did not lower the height by exactly one")
    if not (dominates(v, u, p) and dominates(s, u, p)):
        raise InvariantError("the pivot tableau is not dominated by both endpoints")
    if not is_adjacent(v, s, p):
        raise InvariantError("descent endpoints are not adjacent")
    states.append(s)
    for a, b in zip(states, states[1:]):
        if a != b and not is_adjacent(a, b, p):
            raise InvariantError("descent path contains a non-adjacent step")
    return HeightDescent(tuple(states), v, u, s, nu)


# --------------------------------------------------------------------------
# Connectivity walks


def _first_mismatch(t: Tableau, boxes: tuple[Box, ...]) -> tuple[Box, int] | None:
    for i, b in enumerate(boxes):
        if t.at(b) != i + 1:
            return b, i + 1
    return None


def _descend_injective(t: Tableau, p: PrymParams) -> list[Tableau]:
    """Walk an injective tableau down to the standard filling (full shape)."""
    boxes = canonical_boxes(t.shape)
    states = [t]
    cur = t
    while True:
        miss = _first_mismatch(cur, boxes)
        if miss is None:
            return states
        omega, a = miss
        rank = standard_rank(cur)
        b = _smallest_free(cur, p)
        if b < a:
            raise InvariantError("free symbols must not precede the target symbol")
        trace = cycle_out_trace(cur, a, b)
        states.extend(trace[1:])
        cur = states[-1]
        cur = swap_into(cur, a, omega)
        states.append(cur)
        if not standard_rank(cur) < rank:
            raise InvariantError("walk failed to reduce the rank")


def _descend_strip(t: Tableau, p: PrymParams) -> list[Tableau]:
    """Walk a tableau non-repeating in mu_0 down to the standard extension."""
    mu0 = horizontal_strip(p.r, p.k)
    boxes = canonical_boxes(mu0.shape)
    states = [t]
    cur = t
    while True:
        miss = next(
            (
                (b, i + 1)
                for i, b in enumerate(boxes)
                if cur.at(b) != i + 1
            ),
            None,
        )
        if miss is None:
            return states
        omega, a = miss
        rank = standard_rank(restrict_to_strip(cur, mu0, p).entries)
        b = _smallest_free(cur, p)
        if b < a:
            raise InvariantError("free symbols must not precede the target symbol")
        trace = cycle_out_trace(cur, a, b)
        states.extend(trace[1:])
        cur = states[-1]
        cur = swap_in_for(cur, a, cur.at(omega))
        states.append(cur)
        if not is_non_repeating(cur, mu0, p):
            raise InvariantError("walk left the non-repeating family")
        if not standard_rank(restrict_to_strip(cur, mu0, p).entries) < rank:
            raise InvariantError("walk failed to reduce the rank")


def _descend(t: Tableau, p: PrymParams) -> list[Tableau]:
    mu0 = horizontal_strip(p.r, p.k)
    if mu0.degenerate:
        return _descend_injective(t, p)
    if p.eps == 0:
        return _descend_strip(t, p)
    states = [t]
    cur = t
    while height(cur, p) > p.l:
        step = height_descent_step(cur, p)
        states.extend(step.path[1:])
        cur = step.s
    tail = _descend_strip(cur, p)
    states.extend(tail[1:])
    return states


def _collapse(path: list[Tableau]) -> list[Tableau]:
    out: list[Tableau] = []
    for state in path:
        if out and out[-1] == state:
            continue
        if len(out) >= 2 and out[-2] == state:
            out.pop()
            continue
        out.append(state)
    return out


def connect_path(t: Tableau, s: Tableau, p: PrymParams) -> list[Tableau]:
    """A sequence of pairwise-adjacent tableaux from ``t`` to ``s``.

    Both endpoints must be non-repeating tableaux of the same type and the
    locus must be at least one-dimensional.  The walk descends each
    endpoint to the standard extension and joins the two descents; all
    states are returned on the canonical staircase shape.
    """
    dim = pbn_dimension(p)
    if dim is None or dim < 1:
        raise InvalidInputError(
            "connectivity in codimension 1 needs a locus of dimension >= 1"
        )
    t, s = _canon(t, p), _canon(s, p)
    for name, tab in (("source", t), ("target", s)):
        if not strips_admitting(tab, p):
            raise InvalidInputError(f"{name} tableau is not non-repeating in any strip")
        if len(tab.symbols) != expected_codim(p.r, p.k):
            raise InvalidInputError(f"{name} tableau is not minimal")
    if t == s:
        return [t]
    down_t = _descend(t, p)
    down_s = _descend(s, p)
    base = minimal_witness(p)
    if down_t[-1] != base or down_s[-1] != base:
        raise InvariantError("descents missed the standard base tableau")
    path = _collapse(down_t + down_s[-2::-1])
    if path[0] != t or path[-1] != s:
        raise InvariantError("walk endpoints drifted")
    for a, b in zip(path, path[1:]):
        if not is_adjacent(a, b, p):
            raise InvariantError("walk contains a non-adjacent step")
    return path


# --------------------------------------------------------------------------
# Maximal cells and the dim-1 intersection graph


@dataclass(frozen=True)
class MaximalCell:
    """A maximal cell: a non-repeating tableau plus its unused symbols."""

    params: PrymParams
    strip: StripShape
    tableau: Tableau
    free_symbols: frozenset[int]

    def __post_init__(self) -> None:
        dim = self.params.g - 1 - len(self.tableau.symbols)
        if len(self.free_symbols) != dim:
            raise InvariantError(
                "free symbols must number exactly the cell dimension"
            )


def enumerate_maximal_cells(
    p: PrymParams, *, force: bool = False
) -> list[MaximalCell]:
    """All maximal cells of the locus, in enumeration order of strip tableaux."""
    from .strips import enumerate_strip_tableaux

    total = max_cell_count(p, force=force)
    if total > CELL_GUARD and not force:
        raise GuardRefused(
            f"{total} maximal cells exceed the desk-scale limit of {CELL_GUARD};"
            " pass force=True to enumerate anyway"
        )
    cells = []
    for st in enumerate_strip_tableaux(p):
        cells.append(
            MaximalCell(p, st.strip, extend_strip_tableau(st), st.free_symbols)
        )
    if len(cells) != total:
        raise InvariantError(
            f"enumerated {len(cells)} cells but the closed form gives {total}"
        )
    return cells


@dataclass(frozen=True)
class GraphVertex:
    """An intersection point of two circles, identified by the symbol swap."""

    i: int
    j: int
    a: int
    b: int


@dataclass(frozen=True)
class IntersectionGraph:
    """Circles of a 1-dimensional locus and their pairwise intersections."""

    params: PrymParams
    circles: tuple[MaximalCell, ...]
    vertices: tuple[GraphVertex, ...]
    v: int
    e: int
    components: int
    circle_vertex_counts: tuple[int, ...]


def _sigma_key(sig: dict[int, frozenset[int]]) -> tuple:
    return tuple(sorted((c, tuple(sorted(fs))) for c, fs in sig.items()))


def build_intersection_graph(
    p: PrymParams, *, force: bool = False
) -> IntersectionGraph:
    """The circle/intersection graph of a 1-dimensional locus.

    Circles are the maximal cells; a vertex joins two circles with distinct
    free symbols whose tableaux are adjacent (equivalently, per diagonal
    class their symbol sets differ by trading the two free symbols).  Two
    circles meet in at most one point; each vertex lies on exactly two
    circles, so ``e = 2v``.
    """
    if pbn_dimension(p) != 1:
        raise InvalidInputError(
            "the intersection graph is defined for 1-dimensional loci only"
        )
    cells = enumerate_maximal_cells(p, force=force)
    frees = []
    for cell in cells:
        if len(cell.free_symbols) != 1:
            raise InvariantError("dim-1 circles carry exactly one free symbol")
        frees.append(next(iter(cell.free_symbols)))
    sigmas = [class_symbol_sets(cell.tableau, p.k) for cell in cells]

    buckets: defaultdict[tuple, list[int]] = defaultdict(list)
    for idx, sig in enumerate(sigmas):
        for cls, fs in sig.items():
            for sym in fs:
                reduced = dict(sig)
                rest = fs - {sym}
                if rest:
                    reduced[cls] = rest
                else:
                    del reduced[cls]
                buckets[_sigma_key(reduced)].append(idx)

    vertices: dict[tuple[int, int], GraphVertex] = {}
    for members in buckets.values():
        for ii in range(len(members)):
            for jj in range(ii + 1, len(members)):
                i, j = sorted((members[ii], members[jj]))
                if frees[i] == frees[j]:
                    continue
                if (i, j) in vertices:
                    raise InvariantError(
                        f"circles {i} and {j} meet in more than one point"
                    )
                if not is_adjacent(cells[i].tableau, cells[j].tableau, p):
                    raise InvariantError(
                        f"bucketed circles {i} and {j} fail the adjacency check"
                    )
                vertices[(i, j)] = GraphVertex(i, j, frees[i], frees[j])

    counts = [0] * len(cells)
    parent = list(range(len(cells)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, j in vertices:
        counts[i] += 1
        counts[j] += 1
        parent[find(i)] = find(j)

    v = len(vertices)
    e = sum(counts)
    if e != 2 * v:
        raise InvariantError("every vertex must lie on exactly two circles")
    components = len({find(i) for i in range(len(cells))})
    ordered = tuple(sorted(vertices.values(), key=lambda w: (w.i, w.j)))
    return IntersectionGraph(
        p, tuple(cells), ordered, v, e, components, tuple(counts)
    )


def betti_number(graph: IntersectionGraph) -> int:
    """First Betti number ``e - v + c`` of the circle graph.

    Each circle with ``m`` vertices contributes ``m`` arcs (a vertex-free
    circle is an isolated component contributing 1); when the graph is
    connected and every circle meets another, this reduces to ``v + 1``.
    """
    return graph.e - graph.v + graph.components


def betti_closed_form(p: PrymParams) -> int:
    """Closed-form first Betti number for torsion 0 (or above 2r-2), 2, or 4."""
    if pbn_dimension(p) != 1:
        raise InvalidInputError("closed-form Betti numbers require dimension 1")
    r = p.r
    if p.k == 0 or p.k > 2 * r - 2:
        num = r * count_generic(r) * (comb(r + 1, 2) + 1)
        half, rem = divmod(num, 2)
        if rem:
            raise InvariantError("generic Betti numerator must be even")
        return half + 1
    if p.k == 2:
        return r + 1
    if p.k == 4:
        return 2 ** (r - 1) * (3 * r - 2) + 1
    raise InvalidInputError(
        f"no closed form in scope for torsion k={p.k}; use the graph method"
    )


def average_intersections(graph: IntersectionGraph) -> Fraction:
    """Average number of intersection points per circle (exact)."""
    if not graph.circles:
        raise InvalidInputError("the graph has no circles")
    return Fraction(2 * graph.v, len(graph.circles))


def graph_to_dot(graph: IntersectionGraph) -> str:
    """Render the circle graph in DOT: nodes are intersection points.

    Each circle contributes arcs chaining its vertices in an arbitrary
    cyclic order (the Betti number does not depend on the choice), a
    self-loop when it has a single vertex, and an annotated isolated node
    when it has none.
    """
    by_circle: defaultdict[int, list[int]] = defaultdict(list)
    for n, w in enumerate(graph.vertices):
        by_circle[w.i].append(n)
        by_circle[w.j].append(n)
    lines = ["graph locus {"]
    for n, w in enumerate(graph.vertices):
        lines.append(
            f'  v{n} [label="swap {w.a} <-> {w.b} (circles {w.i}, {w.j})"];'
        )
    for c in range(len(graph.circles)):
        free = ",".join(str(a) for a in sorted(graph.circles[c].free_symbols))
        nodes = by_circle.get(c, [])
        if not nodes:
            lines.append(
                f'  c{c} [shape=circle, label="isolated circle {c} (free {free})"];'
            )
            continue
        if len(nodes) == 1:
            lines.append(f'  v{nodes[0]} -- v{nodes[0]} [label="circle {c}"];')
            continue
        for a, b in zip(nodes, nodes[1:] + nodes[:1]):
            lines.append(f'  v{a} -- v{b} [label="circle {c}"];')
    lines.append("}")
    return "\n".join(lines)
