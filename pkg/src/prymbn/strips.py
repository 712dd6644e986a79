"""Strips, non-repeating tableaux, strip tableaux, and dominating constructions.

A strip of width ``l`` inside the staircase ``T_r`` consists of the full
sub-staircase ``T_l`` plus, for each anti-diagonal ``n > l``, a window of
``l`` consecutive boxes whose west end (the "n-th leftmost box") moves one
step east or north of the previous window's west end.  The move sequence is
the strip's word; the all-east word gives the horizontal strip ``mu_0``
(the bottom ``l`` rows).

A tableau on ``T_r`` is non-repeating in a strip when boxes in the left and
right components of the complement copy strip values along translations by
the torsion, and consecutive windows satisfy a gluing inequality.  Such a
tableau is determined by its strip restriction, which is injective; this
restriction is a strip tableau.  Torsion ``0`` and torsion above ``2r``
degenerate the strip to ``T_r`` itself and strip tableaux to injective
fillings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache
from itertools import product
from typing import Iterable, Iterator

from .core import (
    Box,
    InvalidInputError,
    InvariantError,
    PrymParams,
    Shape,
    Tableau,
    anti_diagonal,
    canonical_boxes,
    canonical_key,
    diag_class,
    dominates,
    is_displacement,
    is_tableau,
    staircase_boxes,
    staircase_shape,
)

__all__ = [
    "StripShape",
    "StripTableau",
    "cell_strips",
    "dominating_non_repeating",
    "effective_width",
    "enumerate_strip_tableaux",
    "enumerate_strips",
    "extend_strip_tableau",
    "horizontal_strip",
    "is_non_repeating",
    "restrict_to_strip",
    "strip_shape",
    "strips_admitting",
]


def effective_width(r: int, k: int) -> int:
    """Strip width for torsion ``k`` inside ``T_r``: ceil(k/2), capped at r.

    Torsion 0 and torsion above ``2r`` degenerate to width ``r`` (the strip
    is all of ``T_r``).
    """
    if k < 0 or k == 1:
        raise InvalidInputError(f"k must be 0 or at least 2, got {k}")
    if k == 0 or k > 2 * r:
        return r
    return (k + 1) // 2


@dataclass(frozen=True)
class StripShape:
    """A width-``l`` strip in ``T_r``, encoded by its east/north word."""

    r: int
    l: int
    word: str

    def __post_init__(self) -> None:
        if not 0 <= self.l <= self.r:
            raise InvalidInputError(f"strip width {self.l} outside [0, {self.r}]")
        if len(self.word) != self.r - self.l:
            raise InvalidInputError(
                f"strip word must have length r - l = {self.r - self.l}, got {self.word!r}"
            )
        if any(c not in "EN" for c in self.word):
            raise InvalidInputError(f"strip word must use E/N moves, got {self.word!r}")

    @cache
    def leftmost(self, n: int) -> Box:
        """West end of the window on anti-diagonal ``n`` (``(1, n)`` below T_l)."""
        if not 1 <= n <= self.r:
            raise InvalidInputError(f"anti-diagonal {n} outside [1, {self.r}]")
        if n <= self.l:
            return (1, n)
        x, y = (1, self.l)
        for c in self.word[: n - self.l]:
            x, y = (x + 1, y) if c == "E" else (x, y + 1)
        return (x, y)

    def rightmost(self, n: int) -> Box:
        """East end of the window on anti-diagonal ``n``."""
        x, y = self.leftmost(n)
        w = min(n, self.l)
        return (x + w - 1, y - w + 1)

    def window(self, n: int) -> tuple[Box, ...]:
        """The strip's boxes on anti-diagonal ``n``, west to east."""
        x, y = self.leftmost(n)
        return tuple((x + i, y - i) for i in range(min(n, self.l)))

    @property
    def boxes(self) -> frozenset[Box]:
        return frozenset(b for n in range(1, self.r + 1) for b in self.window(n))

    @property
    def shape(self) -> Shape:
        return Shape("strip", self.boxes, self.r)

    @property
    def height(self) -> int:
        """Row of the r-th leftmost box (``l`` exactly for the horizontal strip)."""
        return self.leftmost(self.r)[1]

    @property
    def degenerate(self) -> bool:
        """True when the strip is all of ``T_r`` (width r)."""
        return self.l >= self.r

    def side_of(self, box: Box) -> int:
        """-1 for the left component, 0 on the strip, +1 for the right component."""
        n = anti_diagonal(box)
        if not 1 <= n <= self.r:
            raise InvalidInputError(f"box {box} outside T_{self.r}")
        x = box[0]
        if x < self.leftmost(n)[0]:
            return -1
        if x > self.rightmost(n)[0]:
            return 1
        return 0


def strip_shape(r: int, l: int, word: str) -> StripShape:
    """Construct and validate a strip shape."""
    return StripShape(r, l, word)


def horizontal_strip(r: int, k: int) -> StripShape:
    """The all-east strip mu_0 for torsion ``k`` in ``T_r``."""
    l = effective_width(r, k)
    return StripShape(r, l, "E" * (r - l))


def enumerate_strips(p: PrymParams) -> list[StripShape]:
    """All strips for the given type, in lexicographic word order (E < N).

    Torsion outside ``[2, 2r]`` yields the single degenerate strip ``T_r``.
    """
    l = effective_width(p.r, p.k)
    return [
        StripShape(p.r, l, "".join(w)) for w in product("EN", repeat=p.r - l)
    ]


def _require_staircase(t: Tableau, p: PrymParams, op: str) -> None:
    if t.shape.boxes != staircase_boxes(p.r):
        raise InvalidInputError(f"{op} needs a tableau on the staircase T_{p.r}")
    bad = sorted(v for v in t.symbols if v > p.g - 1)
    if bad:
        raise InvalidInputError(f"{op} needs symbols in [1, g-1]; got {bad}")


def _check_restriction(t: Tableau, mu: StripShape, p: PrymParams, op: str) -> dict[Box, int]:
    """Validate tableau + displacement of ``t`` restricted to ``mu``; return it."""
    sub = {b: t.at(b) for b in mu.boxes}
    boxes = sorted(sub, key=canonical_key)
    for j, bj in enumerate(boxes):
        for bi in boxes[:j]:
            if bi[0] <= bj[0] and bi[1] <= bj[1] and not sub[bi] < sub[bj]:
                raise InvalidInputError(
                    f"{op}: restriction to the strip violates the tableau condition"
                    f" at {bi} -> {bj}"
                )
    classes: dict[int, int] = {}
    for b, v in sub.items():
        c = diag_class(b, p.k)
        if classes.setdefault(v, c) != c:
            raise InvalidInputError(
                f"{op}: restriction to the strip violates displacement at symbol {v}"
            )
    return sub


def _gluing_violation(
    value_at, mu: StripShape, eps: int
) -> tuple[int, str] | None:
    """First failed gluing condition as (anti-diagonal, move), else None."""
    for n in range(mu.l, mu.r):
        move = mu.word[n - mu.l]
        lm = value_at(mu.leftmost(n))
        rm = value_at(mu.rightmost(n))
        if eps == 1:
            lo, hi = (lm, rm) if move == "E" else (rm, lm)
        elif move == "E":
            lo, hi = lm, value_at(mu.rightmost(n + 1))
        else:
            lo, hi = rm, value_at(mu.leftmost(n + 1))
        if not lo < hi:
            return (n, move)
    return None


def is_non_repeating(t: Tableau, mu: StripShape, p: PrymParams) -> bool:
    """Whether ``t`` repeats strip values across the complement of ``mu``.

    Checks the left and right repeating conditions and the window gluing
    condition.  The restriction of ``t`` to the strip must already satisfy
    the tableau and displacement conditions; violations there are input
    errors, not a False result.  Degenerate strips (all of ``T_r``) make
    every condition vacuous.
    """
    _require_staircase(t, p, "is_non_repeating")
    if mu.r != p.r:
        raise InvalidInputError("strip and tableau live in different staircases")
    _check_restriction(t, mu, p, "is_non_repeating")
    if mu.degenerate:
        return True
    l, eps = mu.l, p.eps
    m = t.mapping
    for box, v in t.items():
        side = mu.side_of(box)
        if side == -1 and v != m[(box[0] + l - eps, box[1] - l)]:
            return False
        if side == 1 and v != m[(box[0] - l, box[1] + l - eps)]:
            return False
    return _gluing_violation(lambda b: m[b], mu, eps) is None


@dataclass(frozen=True)
class StripTableau:
    """An injective, glued filling of a strip with symbols in ``[g-1]``."""

    strip: StripShape
    entries: Tableau
    params: PrymParams

    def __post_init__(self) -> None:
        p, mu = self.params, self.strip
        if mu.r != p.r:
            raise InvalidInputError("strip does not match the type's staircase order")
        if p.k != 0 and not mu.degenerate and mu.l != p.l:
            raise InvalidInputError(
                f"strip width {mu.l} does not match the torsion width {p.l}"
            )
        if p.eps == 0 and p.k != 0 and not mu.degenerate and "N" in mu.word:
            raise InvalidInputError(
                "even torsion admits only the horizontal strip mu_0"
            )
        if self.entries.shape.boxes != mu.boxes:
            raise InvalidInputError("entries must fill the strip exactly")
        bad = sorted(v for v in self.entries.symbols if v > p.g - 1)
        if bad:
            raise InvalidInputError(f"strip symbols must lie in [1, g-1]; got {bad}")
        if len(self.entries.symbols) != len(mu.boxes):
            raise InvalidInputError("strip tableau entries must be injective")
        if not is_tableau(self.entries):
            raise InvalidInputError("strip entries violate the tableau condition")
        viol = _gluing_violation(self.entries.at, mu, p.eps)
        if viol is not None:
            raise InvalidInputError(
                f"strip entries violate the gluing condition at anti-diagonal {viol[0]}"
                f" ({viol[1]} move)"
            )

    @property
    def free_symbols(self) -> frozenset[int]:
        """Symbols of ``[g-1]`` not used by the entries."""
        return frozenset(range(1, self.params.g)) - self.entries.symbols


def extend_strip_tableau(st: StripTableau) -> Tableau:
    """The unique non-repeating tableau on ``T_r`` extending ``st``.

    Off-strip boxes chase the repeating translations (south-east from the
    left component, north-west from the right) until they land on the strip.
    """
    p, mu = st.params, st.strip
    l, eps, r = mu.l, p.eps, p.r
    values: dict[Box, int] = dict(st.entries.mapping)

    def resolve(box: Box, hops: int = 0) -> int:
        if box in values:
            return values[box]
        if hops > 2 * r:
            raise InvariantError(f"repeat chase from {box} did not reach the strip")
        side = mu.side_of(box)
        if side == -1:
            nxt = (box[0] + l - eps, box[1] - l)
        elif side == 1:
            nxt = (box[0] - l, box[1] + l - eps)
        else:
            raise InvariantError(f"strip box {box} missing an entry")
        v = resolve(nxt, hops + 1)
        values[box] = v
        return v

    shape = staircase_shape(r)
    ext = Tableau.from_mapping(shape, {b: resolve(b) for b in shape.boxes})
    if not is_tableau(ext):
        raise InvariantError("non-repeating extension violates the tableau condition")
    if not is_displacement(ext, p.k):
        raise InvariantError("non-repeating extension violates displacement")
    if not is_non_repeating(ext, mu, p):
        raise InvariantError("extension is not non-repeating in its own strip")
    if len(ext.symbols) != len(mu.boxes):
        raise InvariantError("non-repeating extension is not minimal")
    return ext


def restrict_to_strip(t: Tableau, mu: StripShape, p: PrymParams) -> StripTableau:
    """Package the strip restriction of a non-repeating tableau."""
    sub = {b: t.at(b) for b in mu.boxes}
    return StripTableau(mu, Tableau.from_mapping(mu.shape, sub), p)


def strips_admitting(t: Tableau, p: PrymParams) -> list[StripShape]:
    """The strips in which ``t`` is non-repeating, in canonical strip order.

    Odd torsion admits at most one; even torsion admits either none or all.
    """
    _require_staircase(t, p, "strips_admitting")
    if not is_tableau(t):
        raise InvalidInputError("strips_admitting needs a tableau")
    if not is_displacement(t, p.k):
        raise InvalidInputError("strips_admitting needs k-uniform displacement")
    return [mu for mu in enumerate_strips(p) if is_non_repeating(t, mu, p)]


def dominating_non_repeating(t: Tableau, p: PrymParams) -> tuple[StripShape, Tableau]:
    """A strip and a non-repeating tableau in it dominating ``t``.

    Odd torsion grows the strip greedily (east exactly when the window's
    west value is below its east value) and copies ``t`` along it; even
    torsion takes per-class anti-diagonal maxima on the horizontal strip.
    Degenerate torsion (0 or above 2r) returns ``t`` unchanged on ``T_r``.
    """
    _require_staircase(t, p, "dominating_non_repeating")
    if not is_tableau(t):
        raise InvalidInputError("dominating_non_repeating needs a tableau")
    if not is_displacement(t, p.k):
        raise InvalidInputError("dominating_non_repeating needs k-uniform displacement")
    r = p.r
    if p.k == 0 or p.k > 2 * r:
        mu = horizontal_strip(r, p.k)
        if len(t.symbols) != len(t.values):
            raise InvariantError("degenerate-torsion tableau should be injective")
        return mu, t
    m = t.mapping
    if p.eps == 1:
        l = p.l
        word = []
        x, y = (1, l)
        for n in range(l, r):
            w = min(n, l)
            lm, rm = m[(x, y)], m[(x + w - 1, y - w + 1)]
            if lm == rm:
                raise InvariantError(
                    f"window ends on anti-diagonal {n} tie at symbol {lm};"
                    " boxes within the torsion distance may not repeat"
                )
            if lm < rm:
                word.append("E")
                x += 1
            else:
                word.append("N")
                y += 1
        mu = StripShape(r, l, "".join(word))
        s = extend_strip_tableau(restrict_to_strip(t, mu, p))
    else:
        mu = horizontal_strip(r, p.k)
        best: dict[tuple[int, int], int] = {}
        for box, v in t.items():
            key = (anti_diagonal(box), diag_class(box, p.k))
            best[key] = max(best.get(key, 0), v)
        shape = staircase_shape(r)
        s = Tableau.from_mapping(
            shape,
            {b: best[(anti_diagonal(b), diag_class(b, p.k))] for b in shape.boxes},
        )
        if not is_non_repeating(s, mu, p):
            raise InvariantError("anti-diagonal maxima are not non-repeating in mu_0")
    if not dominates(s, t, p):
        raise InvariantError("dominating construction failed to dominate its input")
    return mu, s


def enumerate_strip_tableaux(
    p: PrymParams, symbol_set: Iterable[int] | None = None
) -> Iterator[StripTableau]:
    """Every strip tableau of the given type, exactly once, in canonical order.

    Order: strip word lexicographic (E < N; even torsion uses only mu_0),
    then entries lexicographic over the strip's canonical box order.  When
    ``symbol_set`` is given, entries draw from it instead of ``[g-1]``.
    """
    symbols = (
        tuple(range(1, p.g)) if symbol_set is None else tuple(sorted(set(symbol_set)))
    )
    if any(v < 1 or v > p.g - 1 for v in symbols):
        raise InvalidInputError("symbol_set must be a subset of [1, g-1]")
    for mu in cell_strips(p):
        yield from _fill_strip(mu, p, symbols)


def cell_strips(p: PrymParams) -> list[StripShape]:
    """The strips that index cells: all of them at odd torsion, mu_0 otherwise."""
    strips = enumerate_strips(p)
    if p.k != 0 and p.eps == 0 and not strips[0].degenerate:
        strips = [horizontal_strip(p.r, p.k)]
    return strips


def _fill_strip(
    mu: StripShape, p: PrymParams, symbols: tuple[int, ...]
) -> Iterator[StripTableau]:
    boxes = tuple(sorted(mu.boxes, key=canonical_key))
    n = len(boxes)
    if len(symbols) < n:
        return
    index = {b: i for i, b in enumerate(boxes)}
    below: list[list[int]] = []
    for b in boxes:
        pres = []
        for nb in ((b[0] - 1, b[1]), (b[0], b[1] - 1)):
            if nb in index:
                pres.append(index[nb])
        below.append(pres)
    # Gluing comparisons as (smaller, larger) index pairs; both ends are
    # strip boxes, so they prune during backtracking like tableau steps.
    glue: list[tuple[int, int]] = []
    for d in range(mu.l, mu.r):
        move = mu.word[d - mu.l]
        if p.eps == 1:
            lo, hi = (
                (mu.leftmost(d), mu.rightmost(d))
                if move == "E"
                else (mu.rightmost(d), mu.leftmost(d))
            )
        elif move == "E":
            lo, hi = mu.leftmost(d), mu.rightmost(d + 1)
        else:
            lo, hi = mu.rightmost(d), mu.leftmost(d + 1)
        glue.append((index[lo], index[hi]))
    # A gluing pair constrains whichever endpoint is placed later: a floor
    # when the smaller end precedes it, a ceiling when the larger end does
    # (the odd north move compares a window's east end against its west end).
    floors: list[list[int]] = [[] for _ in range(n)]
    ceilings: list[list[int]] = [[] for _ in range(n)]
    for i, j in glue:
        if i < j:
            floors[j].append(i)
        else:
            ceilings[i].append(j)
    values = [0] * n
    used = [False] * len(symbols)

    def place(i: int) -> Iterator[StripTableau]:
        if i == n:
            entries = Tableau.from_mapping(
                Shape("strip", mu.boxes, mu.r), dict(zip(boxes, values))
            )
            yield StripTableau(mu, entries, p)
            return
        floor = 0
        for bi in below[i]:
            floor = max(floor, values[bi])
        for gi in floors[i]:
            floor = max(floor, values[gi])
        ceiling = None
        for gi in ceilings[i]:
            c = values[gi]
            ceiling = c if ceiling is None else min(ceiling, c)
        for si, v in enumerate(symbols):
            if used[si] or v <= floor:
                continue
            if ceiling is not None and v >= ceiling:
                break
            used[si] = True
            values[i] = v
            yield from place(i + 1)
            used[si] = False
        values[i] = 0

    yield from place(0)
