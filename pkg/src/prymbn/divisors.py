"""Chip divisors on folded chains of loops.

A folded chain doubles a chain of ``g`` loops into ``2g - 1`` loops: each
base loop ``a < g`` lifts to the pair ``(a, 2g - a)``, and the ``g``-th
loop lifts to a single middle loop of doubled circumference.  A tableau
places one chip unit per loop pair (its position read counter-clockwise
from the rightmost vertex on the upper loop equals the clockwise distance
from the leftmost vertex on the lower loop), one chip on the middle loop
at the parity-pinned position, and a stack of ``g - 2`` chips at the
leftmost vertex of the last loop — total degree ``2g - 2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .core import (
    InvalidInputError,
    InvariantError,
    PrymParams,
    Tableau,
    codimension,
    diag_offset,
    dual_symbol,
    is_displacement,
    is_prym,
    is_tableau,
    square_shape,
    staircase_boxes,
)

__all__ = [
    "ChipDivisor",
    "ChipEntry",
    "FoldedChain",
    "cell_dimension",
    "loop_torsion",
    "make_folded_chain",
    "tableau_to_divisor",
]


def loop_torsion(m: Fraction, length: Fraction) -> int:
    """Least positive ``K`` such that ``m + length`` divides ``K * m``."""
    if m <= 0 or length <= 0:
        raise InvalidInputError("arc lengths must be positive")
    return Fraction(m, m + length).denominator


@dataclass(frozen=True)
class FoldedChain:
    """A folded chain: torsion-``k`` loop pairs over a chain of ``g`` loops.

    ``lengths[a - 1] = (m_a, l_a)`` gives the lower and upper arc lengths
    of base loop ``a``; both lift unchanged to the pair ``(a, 2g - a)``,
    while the middle loop ``g`` doubles to circumference ``2 (m_g + l_g)``.
    """

    g: int
    k: int
    lengths: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self) -> None:
        if self.g < 2:
            raise InvalidInputError(f"g must be at least 2, got {self.g}")
        if self.k < 2:
            raise InvalidInputError(f"torsion must be at least 2, got {self.k}")
        if len(self.lengths) != self.g:
            raise InvalidInputError(
                f"need one (m, l) pair per base loop: got {len(self.lengths)},"
                f" expected {self.g}"
            )
        for a, (m, length) in enumerate(self.lengths, start=1):
            torsion = loop_torsion(m, length)
            if torsion != self.k:
                raise InvalidInputError(
                    f"loop {a} has torsion {torsion}, not {self.k}"
                    f" (m={m}, l={length})"
                )

    @property
    def loop_count(self) -> int:
        return 2 * self.g - 1

    def base_loop(self, loop: int) -> int:
        """The base-chain loop under ``loop`` of the folded chain."""
        if not 1 <= loop <= self.loop_count:
            raise InvalidInputError(f"loop index {loop} outside [1, {self.loop_count}]")
        return min(loop, 2 * self.g - loop)

    def circumference(self, loop: int) -> Fraction:
        m, length = self.lengths[self.base_loop(loop) - 1]
        if loop == self.g:
            return 2 * (m + length)
        return m + length


def _as_fraction(x) -> Fraction:
    if isinstance(x, Rational):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise InvalidInputError(f"arc length must be rational, got {x!r}")


def make_folded_chain(g: int, k: int, lengths=None) -> FoldedChain:
    """A torsion-``k`` folded chain; default arcs ``m = 1``, ``l = k - 1``.

    Custom ``lengths`` (one ``(m, l)`` pair per base loop, exact rationals)
    are accepted if every loop passes the torsion test.
    """
    if k == 0:
        raise InvalidInputError(
            "torsion 0 has no folded-chain model: rational arc lengths"
            " always give finite torsion"
        )
    if lengths is None:
        if k < 2:
            raise InvalidInputError(f"torsion must be at least 2, got {k}")
        lengths = [(Fraction(1), Fraction(k - 1))] * g
    pairs = tuple(
        (_as_fraction(m), _as_fraction(length)) for m, length in lengths
    )
    return FoldedChain(g, k, pairs)


@dataclass(frozen=True)
class ChipEntry:
    """Chip data on one loop: an exact position or a free marker.

    Positions on loops ``a <= g`` are arc lengths counter-clockwise from
    the loop's rightmost vertex; on loops ``a > g`` they are measured
    clockwise from the leftmost vertex, which makes the two entries of a
    dual pair numerically equal.
    """

    loop: int
    pos: Fraction | None
    mult: int = 1

    @property
    def free(self) -> bool:
        return self.pos is None


@dataclass(frozen=True)
class ChipDivisor:
    """One chip unit per loop pair, a middle chip, and the boundary stack.

    ``entries`` holds one record per loop in ``[1, 2g - 1]``; the two
    records of a dual pair describe the same chip unit in mirrored
    coordinates, so the degree counts each pair once:
    ``(g - 1) + 1 + stack = 2g - 2``.
    """

    chain: FoldedChain
    entries: tuple[ChipEntry, ...]
    stack: int

    def __post_init__(self) -> None:
        g = self.chain.g
        loops = [e.loop for e in self.entries]
        if loops != list(range(1, 2 * g)):
            raise InvariantError("chip entries must cover each loop exactly once")
        for e in self.entries:
            if e.mult != 1:
                raise InvariantError("per-loop chip entries carry multiplicity 1")
            if e.pos is not None and not 0 <= e.pos < self.chain.circumference(e.loop):
                raise InvariantError(
                    f"chip position {e.pos} outside loop {e.loop}'s circumference"
                )
        for a in range(1, g):
            if self.entries[a - 1].pos != self.entries[2 * g - a - 1].pos:
                raise InvariantError(
                    f"dual loops {a} and {2 * g - a} disagree on the chip position"
                )
        if self.entries[g - 1].free:
            raise InvariantError("the middle loop's chip is parity-pinned, never free")
        if self.stack < 0:
            raise InvariantError("stack multiplicity must be non-negative")

    def entry(self, loop: int) -> ChipEntry:
        return self.entries[loop - 1]

    @property
    def degree(self) -> int:
        """Total degree: one unit per pair, the middle chip, the stack."""
        return (self.chain.g - 1) + self.entries[self.chain.g - 1].mult + self.stack

    @property
    def free_loops(self) -> tuple[int, ...]:
        return tuple(e.loop for e in self.entries if e.free)

    @property
    def dimension(self) -> int:
        """Degrees of freedom: one per free loop pair."""
        return sum(1 for e in self.entries if e.free and e.loop < self.chain.g)


def _pair_position(chain: FoldedChain, a: int, offsets: set[int]) -> Fraction:
    m, length = chain.lengths[a - 1]
    circ = m + length
    positions = {(m * off) % circ for off in offsets}
    if len(positions) > 1:
        raise InvariantError(
            f"boxes of the pair ({a}, {2 * chain.g - a}) disagree on the chip"
            f" position: {sorted(positions)}"
        )
    return positions.pop()


def tableau_to_divisor(t: Tableau, chain: FoldedChain) -> ChipDivisor | None:
    """The chip divisor of a tableau, or ``None`` when its cell is empty.

    Accepts a Prym tableau on the square (symbols up to ``2g - 1``) or a
    displacement tableau on the staircase (symbols up to ``g - 1``).  A
    symbol ``a`` at box ``(x, y)`` pins the chip of the pair
    ``(a, 2g - a)`` at distance ``m_a (x - y)`` around the loop; pairs
    with neither symbol present stay free.  The middle chip sits at the
    parity position ``(m_g + l_g) (r mod 2)``; a square tableau whose
    ``g``-fiber has the opposite parity indexes the empty cell.
    """
    g, k = chain.g, chain.k
    side = max(x for x, _ in t.shape.boxes)
    if t.shape.boxes == square_shape(side - 1).boxes:
        r = side - 1
        p = PrymParams(g, r, k)
        if not is_prym(t, p):
            raise InvalidInputError("square tableaux must satisfy the Prym conditions")
        limit = 2 * g - 1
    elif t.shape.boxes == staircase_boxes(side):
        r = side
        p = PrymParams(g, r, k)
        if not is_tableau(t):
            raise InvalidInputError("not a tableau")
        if not is_displacement(t, k):
            raise InvalidInputError(f"not a {k}-uniform displacement tableau")
        limit = g - 1
    else:
        raise InvalidInputError("divisors need a square or staircase tableau")
    bad = sorted(v for v in t.symbols if v > limit)
    if bad:
        raise InvalidInputError(f"symbols exceed the codomain [1, {limit}]: {bad}")

    fibers: dict[int, set[int]] = {}
    for box, v in t.items():
        fibers.setdefault(v, set()).add(diag_offset(box))

    g_offsets = fibers.get(g, set())
    if g_offsets and next(iter(g_offsets)) % 2 != r % 2:
        return None
    m_g, l_g = chain.lengths[g - 1]
    middle_pos = (m_g + l_g) * (r % 2)

    entries = [ChipEntry(g, middle_pos)]
    for a in range(1, g):
        offsets = fibers.get(a, set()) | fibers.get(dual_symbol(a, g), set())
        pos = _pair_position(chain, a, offsets) if offsets else None
        entries.append(ChipEntry(a, pos))
        entries.append(ChipEntry(2 * g - a, pos))
    entries.sort(key=lambda e: e.loop)
    div = ChipDivisor(chain, tuple(entries), g - 2)
    if div.degree != 2 * g - 2:
        raise InvariantError(f"divisor degree {div.degree} is not {2 * g - 2}")
    return div


def cell_dimension(t: Tableau, p: PrymParams) -> int:
    """Dimension ``g - 1 - codim`` of the cell indexed by ``t``.

    Equals the number of free loop pairs of the corresponding divisors.
    """
    return p.g - 1 - codimension(t, p)
