"""Core data model: boxes, shapes, tableaux, and the defining predicates.

Boxes live in the positive quadrant with French conventions: ``(x, y)`` has
column ``x`` and row ``y``, both 1-based, and ``(1, 1)`` is the bottom-left
box.  Anti-diagonal ``n`` collects the boxes with ``x + y = n + 1``; the
staircase ``T_n`` is the union of the first ``n`` anti-diagonals.

A tableau is a total map from a finite box set to positive integers that
strictly increases from any box to every box weakly north-east of it.  The
displacement condition constrains equal symbols to a common diagonal class,
where the class of a box is ``x - y`` reduced mod ``k`` (or taken exactly
when ``k == 0``).  Prym tableaux on squares additionally tie the symbols
``a`` and ``2g - a`` to a common class and confine the fiber of ``g`` to a
single parity class.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache, cached_property
from typing import Iterable, Iterator, Mapping

Box = tuple[int, int]

__all__ = [
    "Box",
    "GuardRefused",
    "InvalidInputError",
    "InvariantError",
    "PrymParams",
    "Shape",
    "Tableau",
    "anti_diagonal",
    "anti_diagonal_boxes",
    "canonical_boxes",
    "canonical_key",
    "class_symbol_sets",
    "codimension",
    "diag_class",
    "diag_offset",
    "dominates",
    "dual_symbol",
    "equivalent",
    "explicit_shape",
    "generic_regime",
    "is_displacement",
    "is_prym",
    "is_reflective",
    "is_tableau",
    "rank_map",
    "reflect_box",
    "square_shape",
    "staircase_boxes",
    "staircase_shape",
]


class InvalidInputError(ValueError):
    """Raised when an argument violates an operation's input contract."""


class GuardRefused(RuntimeError):
    """Raised when a computation exceeds its desk-scale guard and was not forced."""


class InvariantError(AssertionError):
    """Raised when an internal cross-check that should always hold fails."""


def anti_diagonal(box: Box) -> int:
    """Index of the anti-diagonal containing ``box`` (``x + y - 1``)."""
    return box[0] + box[1] - 1


def diag_offset(box: Box) -> int:
    """Exact diagonal offset ``x - y`` of ``box``."""
    return box[0] - box[1]


def diag_class(box: Box, k: int) -> int:
    """Diagonal class of ``box``: ``x - y`` mod ``k``, or exact when ``k == 0``."""
    d = box[0] - box[1]
    return d % k if k >= 2 else d


def canonical_key(box: Box) -> tuple[int, int]:
    """Sort key realizing the canonical box order: by anti-diagonal, then by x."""
    return (box[0] + box[1], box[0])


def dual_symbol(a: int, g: int) -> int:
    """The symbol paired with ``a`` by the fold, ``2g - a``."""
    return 2 * g - a


def reflect_box(box: Box, r: int) -> Box:
    """Reflection of ``box`` across the main anti-diagonal of the (r+1)-square."""
    x, y = box
    return (r + 2 - y, r + 2 - x)


def generic_regime(r: int, k: int) -> bool:
    """True when the diagonal classes cannot recur inside ``T_r`` (k=0 or k >= 2r-1)."""
    return k == 0 or k >= 2 * r - 1


def staircase_boxes(n: int) -> frozenset[Box]:
    """Boxes of the staircase ``T_n`` (anti-diagonals 1 through n)."""
    return frozenset((x, y) for y in range(1, n + 1) for x in range(1, n + 2 - y))


@dataclass(frozen=True)
class Shape:
    """A finite box set, tagged with how it was constructed.

    ``kind`` is one of ``"square"``, ``"staircase"``, ``"strip"`` or
    ``"explicit"``; ``r`` records the defining size parameter where one
    exists (side minus one for squares, the staircase order, the ambient
    staircase order for strips).
    """

    kind: str
    boxes: frozenset[Box]
    r: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("square", "staircase", "strip", "explicit"):
            raise InvalidInputError(f"unknown shape kind {self.kind!r}")
        for box in self.boxes:
            if not (isinstance(box, tuple) and len(box) == 2):
                raise InvalidInputError(f"malformed box {box!r}")
            if box[0] < 1 or box[1] < 1:
                raise InvalidInputError(f"box {box!r} outside the positive quadrant")

    def __len__(self) -> int:
        return len(self.boxes)

    def __contains__(self, box: Box) -> bool:
        return box in self.boxes


@cache
def square_shape(r: int) -> Shape:
    """The (r+1) x (r+1) square, ``r >= 0``."""
    if r < 0:
        raise InvalidInputError(f"square_shape needs r >= 0, got {r}")
    side = r + 1
    boxes = frozenset((x, y) for x in range(1, side + 1) for y in range(1, side + 1))
    return Shape("square", boxes, r)


@cache
def staircase_shape(n: int) -> Shape:
    """The staircase ``T_n``, ``n >= 0`` (empty when n == 0)."""
    if n < 0:
        raise InvalidInputError(f"staircase_shape needs n >= 0, got {n}")
    return Shape("staircase", staircase_boxes(n), n)


def explicit_shape(boxes: Iterable[Box]) -> Shape:
    """An arbitrary box set with no structural tag."""
    return Shape("explicit", frozenset(tuple(b) for b in boxes))


@cache
def canonical_boxes(shape: Shape) -> tuple[Box, ...]:
    """The shape's boxes in canonical order (anti-diagonal, then x)."""
    return tuple(sorted(shape.boxes, key=canonical_key))


def anti_diagonal_boxes(shape: Shape, n: int) -> tuple[Box, ...]:
    """Boxes of ``shape`` on anti-diagonal ``n``, ordered by increasing x."""
    return tuple(b for b in canonical_boxes(shape) if anti_diagonal(b) == n)


@cache
def rank_map(shape: Shape) -> dict[Box, int]:
    """1-based position of each box in the canonical order."""
    return {box: i + 1 for i, box in enumerate(canonical_boxes(shape))}


@dataclass(frozen=True)
class Tableau:
    """A total filling of a shape, stored in canonical box order."""

    shape: Shape
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != len(self.shape.boxes):
            raise InvalidInputError(
                f"expected {len(self.shape.boxes)} values, got {len(self.values)}"
            )
        for v in self.values:
            if not isinstance(v, int) or v < 1:
                raise InvalidInputError(f"tableau values must be positive integers, got {v!r}")

    @classmethod
    def from_mapping(cls, shape: Shape, mapping: Mapping[Box, int]) -> "Tableau":
        """Build a tableau from a box -> value mapping covering the shape exactly."""
        extra = set(mapping) - shape.boxes
        if extra:
            raise InvalidInputError(f"entries outside the shape: {sorted(extra)}")
        missing = shape.boxes - set(mapping)
        if missing:
            raise InvalidInputError(f"boxes without an entry: {sorted(missing)}")
        return cls(shape, tuple(mapping[b] for b in canonical_boxes(shape)))

    @classmethod
    def from_rows(cls, rows: list[list[int]], shape: Shape | None = None) -> "Tableau":
        """Build a tableau from per-row value lists, bottom row first.

        ``rows[y-1][x-1]`` is the value at ``(x, y)``.  When ``shape`` is
        omitted, the row lengths determine an explicit shape.
        """
        mapping = {
            (x, y): v
            for y, row in enumerate(rows, start=1)
            for x, v in enumerate(row, start=1)
        }
        if shape is None:
            shape = explicit_shape(mapping)
        return cls.from_mapping(shape, mapping)

    @cached_property
    def mapping(self) -> dict[Box, int]:
        """Box -> value lookup."""
        return dict(zip(canonical_boxes(self.shape), self.values))

    def at(self, box: Box) -> int:
        """Value at ``box``."""
        try:
            return self.mapping[box]
        except KeyError:
            raise InvalidInputError(f"box {box} not in the shape") from None

    @cached_property
    def symbols(self) -> frozenset[int]:
        """The set of values appearing in the tableau."""
        return frozenset(self.values)

    def fiber(self, symbol: int) -> tuple[Box, ...]:
        """Boxes carrying ``symbol``, in canonical order."""
        return tuple(
            b for b, v in zip(canonical_boxes(self.shape), self.values) if v == symbol
        )

    def with_values(self, updates: Mapping[Box, int]) -> "Tableau":
        """Copy of the tableau with the given boxes overwritten."""
        mapping = dict(self.mapping)
        for box, v in updates.items():
            if box not in self.shape.boxes:
                raise InvalidInputError(f"box {box} not in the shape")
            mapping[box] = v
        return Tableau.from_mapping(self.shape, mapping)

    def items(self) -> Iterator[tuple[Box, int]]:
        """(box, value) pairs in canonical order."""
        return iter(zip(canonical_boxes(self.shape), self.values))

    def rows(self) -> list[list[int]]:
        """Per-row value lists, bottom row first (inverse of ``from_rows``)."""
        by_row: dict[int, dict[int, int]] = {}
        for (x, y), v in self.items():
            by_row.setdefault(y, {})[x] = v
        return [
            [by_row[y][x] for x in sorted(by_row[y])] for y in sorted(by_row)
        ]


@dataclass(frozen=True)
class PrymParams:
    """The numerical type ``(g, r, k)`` of a Prym-Brill-Noether problem.

    ``g`` is the number of folded loops, ``r`` the rank, and ``k`` the
    torsion order; ``k == 0`` encodes the generic (torsion-free) case and
    ``k == 1`` is excluded.
    """

    g: int
    r: int
    k: int

    def __post_init__(self) -> None:
        if self.g < 2:
            raise InvalidInputError(f"g must be at least 2, got {self.g}")
        if self.r < 0:
            raise InvalidInputError(f"r must be non-negative, got {self.r}")
        if self.k < 0 or self.k == 1:
            raise InvalidInputError(f"k must be 0 or at least 2, got {self.k}")

    @property
    def l(self) -> int:
        """Half the torsion order, rounded up; only meaningful for k >= 2."""
        if self.k == 0:
            raise InvalidInputError("l is undefined in the generic (k == 0) case")
        return (self.k + 1) // 2

    @property
    def eps(self) -> int:
        """Torsion parity: ``k mod 2`` (0 for the generic case)."""
        return self.k % 2

    @property
    def generic(self) -> bool:
        """True when diagonal classes cannot recur inside ``T_r``."""
        return generic_regime(self.r, self.k)

    @property
    def max_symbol(self) -> int:
        """Largest symbol a square Prym tableau of this type may use."""
        return 2 * self.g - 1


def is_tableau(t: Tableau) -> bool:
    """True iff values strictly increase along every componentwise-below pair."""
    boxes = canonical_boxes(t.shape)
    vals = t.values
    n = len(boxes)
    for j in range(n):
        xj, yj = boxes[j]
        vj = vals[j]
        for i in range(j):
            xi, yi = boxes[i]
            if xi <= xj and yi <= yj and not vals[i] < vj:
                return False
    return True


def is_displacement(t: Tableau, k: int) -> bool:
    """True iff every symbol's boxes share one diagonal class mod ``k``.

    ``k == 0`` demands exact equality of the diagonals.  The tableau
    condition is a prerequisite and is validated (violations raise rather
    than returning False).
    """
    if k < 0 or k == 1:
        raise InvalidInputError(f"k must be 0 or at least 2, got {k}")
    if not is_tableau(t):
        raise InvalidInputError("is_displacement requires the tableau condition to hold")
    seen: dict[int, int] = {}
    for box, v in t.items():
        c = diag_class(box, k)
        if seen.setdefault(v, c) != c:
            return False
    return True


def class_symbol_sets(
    t: Tableau, k: int, *, exclude: int | None = None
) -> dict[int, frozenset[int]]:
    """Diagonal class -> set of symbols appearing on it (optionally excluding one)."""
    out: dict[int, set[int]] = {}
    for box, v in t.items():
        if v == exclude:
            continue
        out.setdefault(diag_class(box, k), set()).add(v)
    return {c: frozenset(s) for c, s in out.items()}


def _check_square(t: Tableau, p: PrymParams, op: str) -> None:
    if t.shape != square_shape(p.r):
        raise InvalidInputError(f"{op} needs a tableau on the (r+1)-square of type {p}")
    bad = [v for v in t.symbols if v > p.max_symbol]
    if bad:
        raise InvalidInputError(f"symbols out of range [1, 2g-1]: {sorted(bad)}")


def is_prym(t: Tableau, p: PrymParams) -> bool:
    """Whether ``t`` is a Prym tableau of type ``p`` on the (r+1)-square.

    Beyond the tableau condition, every symbol other than ``g`` occupies a
    single diagonal class mod ``k``, the two symbols of each dual pair
    ``(a, 2g - a)`` share that class, and the fiber of ``g`` lies in a
    single parity class mod 2.
    """
    _check_square(t, p, "is_prym")
    if not is_tableau(t):
        return False
    g = p.g
    fibers: dict[int, set[int]] = {}
    for box, v in t.items():
        k_eff = 2 if v == g else p.k
        fibers.setdefault(v, set()).add(diag_class(box, k_eff))
    for v, classes in fibers.items():
        if len(classes) > 1:
            return False
    for a in range(1, g):
        pair = fibers.get(a, set()) | fibers.get(dual_symbol(a, g), set())
        if len(pair) > 1:
            return False
    return True


def is_reflective(t: Tableau, p: PrymParams) -> bool:
    """Whether ``t`` is a Prym tableau satisfying ``t(b) = 2g - t(reflect(b))``."""
    _check_square(t, p, "is_reflective")
    m = t.mapping
    for box, v in t.items():
        if v != 2 * p.g - m[reflect_box(box, p.r)]:
            return False
    return is_prym(t, p)


def _staircase_symbols(t: Tableau, p: PrymParams, op: str) -> frozenset[int]:
    bad = [v for v in t.symbols if v > p.g - 1]
    if bad:
        raise InvalidInputError(
            f"{op} on a non-square shape needs symbols in [1, g-1]; got {sorted(bad)}"
        )
    return t.symbols


def codimension(t: Tableau, p: PrymParams) -> int:
    """Codimension of the cell indexed by ``t``.

    On the square this counts dual pairs ``(a, 2g - a)`` with at least one
    member present (the symbol ``g`` contributes nothing); on staircase-like
    shapes, whose symbols stay below ``g``, it is the number of distinct
    symbols.
    """
    if t.shape == square_shape(p.r):
        syms = t.symbols
        return sum(1 for a in range(1, p.g) if a in syms or dual_symbol(a, p.g) in syms)
    return len(_staircase_symbols(t, p, "codimension"))


def dominates(t: Tableau, s: Tableau, p: PrymParams) -> bool:
    """Whether the cell of ``s`` is contained in the cell of ``t``.

    Squares: every class carrying ``g`` in ``t`` carries ``g`` in ``s`` (mod
    2), and every class carrying a symbol ``a != g`` in ``t`` carries ``a``
    or its dual in ``s`` (mod ``k``).  Staircase-like shapes: per-class
    symbol containment ``t(D_i) <= s(D_i)``.
    """
    if t.shape != s.shape:
        raise InvalidInputError("dominates compares tableaux on a common shape")
    if t.shape == square_shape(p.r):
        g = p.g
        sig_t = class_symbol_sets(t, p.k, exclude=g)
        sig_s = class_symbol_sets(s, p.k, exclude=g)
        for c, syms in sig_t.items():
            have = sig_s.get(c, frozenset())
            for a in syms:
                if a not in have and dual_symbol(a, g) not in have:
                    return False
        par_t = class_symbol_sets(t, 2)
        par_s = class_symbol_sets(s, 2)
        for c in (0, 1):
            if g in par_t.get(c, frozenset()) and g not in par_s.get(c, frozenset()):
                return False
        return True
    _staircase_symbols(t, p, "dominates")
    _staircase_symbols(s, p, "dominates")
    sig_t = class_symbol_sets(t, p.k)
    sig_s = class_symbol_sets(s, p.k)
    return all(syms <= sig_s.get(c, frozenset()) for c, syms in sig_t.items())


def equivalent(t: Tableau, s: Tableau, p: PrymParams) -> bool:
    """Mutual domination: the two tableaux index the same cell."""
    return dominates(t, s, p) and dominates(s, t, p)
