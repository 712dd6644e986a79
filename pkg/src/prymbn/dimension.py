"""Expected codimension, locus dimension, and the brute-force oracle.

The minimal codimension of a cell equals the box count of a width-``l``
strip in ``T_r``; the locus dimension is ``g - 1`` minus that, with
negative values meaning the locus is empty.  The oracle recomputes the
minimum over raw staircase displacement tableaux, independently of the
strip machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator

from . import kernels
from .core import (
    GuardRefused,
    InvalidInputError,
    PrymParams,
    Tableau,
    staircase_shape,
)
from .strips import StripTableau, extend_strip_tableau, horizontal_strip

__all__ = [
    "BRUTE_BOX_LIMIT",
    "DimensionReport",
    "brute_min_codim",
    "dimension_report",
    "enumerate_staircase_tableaux",
    "expected_codim",
    "minimal_witness",
    "pbn_dimension",
]

BRUTE_BOX_LIMIT = 10


def expected_codim(r: int, k: int) -> int:
    """Closed-form minimal codimension ``n(r, k)``.

    ``binom(l+1, 2) + l(r-l)`` when the strip width ``l = ceil(k/2)`` is
    below ``r``, else ``binom(r+1, 2)``; torsion 0 uses the wide branch.
    """
    if r < 0:
        raise InvalidInputError(f"rank must be non-negative, got {r}")
    if k < 0 or k == 1:
        raise InvalidInputError(f"k must be 0 or at least 2, got {k}")
    l = r if k == 0 else (k + 1) // 2
    if l <= r - 1:
        return comb(l + 1, 2) + l * (r - l)
    return comb(r + 1, 2)


def pbn_dimension(p: PrymParams) -> int | None:
    """Dimension ``g - 1 - n(r, k)`` of the locus, or ``None`` when empty."""
    d = p.g - 1 - expected_codim(p.r, p.k)
    return d if d >= 0 else None


def minimal_witness(p: PrymParams) -> Tableau | None:
    """A staircase tableau of minimal codimension, or ``None`` when the
    locus is empty.

    Uses the standard filling of the horizontal strip (symbols 1..n in
    canonical box order) extended by the repeating conditions; for widths
    ``l >= r`` this is simply the standard staircase filling.
    """
    if pbn_dimension(p) is None:
        return None
    mu = horizontal_strip(p.r, p.k)
    boxes = sorted(mu.boxes, key=lambda b: (b[0] + b[1], b[0]))
    entries = Tableau.from_mapping(
        mu.shape, {b: i + 1 for i, b in enumerate(boxes)}
    )
    return extend_strip_tableau(StripTableau(mu, entries, p))


@dataclass(frozen=True)
class DimensionReport:
    """Expected codimension, dimension (None = empty), and a witness."""

    params: PrymParams
    n: int
    dim: int | None
    witness: Tableau | None

    @property
    def empty(self) -> bool:
        return self.dim is None


def dimension_report(p: PrymParams) -> DimensionReport:
    """Bundle ``expected_codim``, ``pbn_dimension`` and a minimal witness."""
    return DimensionReport(
        p, expected_codim(p.r, p.k), pbn_dimension(p), minimal_witness(p)
    )


def brute_min_codim(
    p: PrymParams, *, force: bool = False, use_budget: bool = True
) -> int:
    """Exhaustive minimum distinct-symbol count over staircase displacement
    tableaux ``T_r -> [g-1]``.

    Logically independent of the strip machinery.  Refuses staircases above
    ``BRUTE_BOX_LIMIT`` boxes unless ``force`` is set; ``use_budget=False``
    disables the per-anti-diagonal new-symbol prune (paranoid mode).
    """
    boxes = p.r * (p.r + 1) // 2
    if boxes > BRUTE_BOX_LIMIT and not force:
        raise GuardRefused(
            f"brute_min_codim over {boxes} boxes exceeds the desk-scale limit"
            f" of {BRUTE_BOX_LIMIT}; pass force=True to run anyway"
        )
    got = kernels.min_codim_staircase(p.r, p.k, p.g - 1, use_budget)
    if got < 0:
        raise InvalidInputError(
            f"no displacement tableau T_{p.r} -> [{p.g - 1}] exists"
        )
    return got


def enumerate_staircase_tableaux(p: PrymParams) -> Iterator[Tableau]:
    """Every staircase displacement tableau ``T_r -> [g-1]``, canonical order.

    Desk-scale helper for property tests and pipelines; no guard, callers
    pick sensible sizes.
    """
    shape = staircase_shape(p.r)
    for values in kernels.enumerate_staircase_values(p.r, p.k, p.g - 1):
        yield Tableau(shape, tuple(values))
