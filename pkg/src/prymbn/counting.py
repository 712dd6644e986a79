"""Cardinality C(r, k) of minimal fillings by four independent routes.

``C(r, k)`` counts the strip tableaux whose symbols are exactly
``[1..n(r,k)]`` (equivalently, the maximal cells per fixed symbol choice).
Routes: hook-length formula on the staircase (torsion 0 or above ``2r-2``),
an alternating factorial-determinant sum and a lattice-path walk (even
torsion up to ``2r-2``), and per-strip linear-extension counting (any
torsion, desk-scale).  Everything is exact integer/rational arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from itertools import product
from math import comb, factorial

from . import kernels
from .core import GuardRefused, InvalidInputError, InvariantError, PrymParams
from .dimension import expected_codim, pbn_dimension
from .strips import StripShape, cell_strips

__all__ = [
    "BRUTE_SYMBOL_LIMIT",
    "cardinality",
    "count_brute",
    "count_even_determinant",
    "count_generic",
    "count_lattice_paths",
    "hook_length_syt_count",
    "max_cell_count",
    "strip_poset_succ_masks",
]

BRUTE_SYMBOL_LIMIT = 18


def hook_length_syt_count(partition: list[int] | tuple[int, ...]) -> int:
    """Number of standard fillings of a partition shape, by hook lengths."""
    rows = tuple(partition)
    if any(a < 1 for a in rows) or any(
        rows[i] < rows[i + 1] for i in range(len(rows) - 1)
    ):
        raise InvalidInputError(f"not a partition: {rows}")
    n = sum(rows)
    denom = 1
    for i, length in enumerate(rows):
        for j in range(1, length + 1):
            arm = length - j
            leg = sum(1 for other in rows[i + 1 :] if other >= j)
            denom *= arm + leg + 1
    count, rem = divmod(factorial(n), denom)
    if rem:
        raise InvariantError("hook product does not divide n!")
    return count


def count_generic(r: int) -> int:
    """C(r, 0): standard fillings of the staircase T_r."""
    if r < 1:
        raise InvalidInputError(f"count_generic needs r >= 1, got {r}")
    return hook_length_syt_count(tuple(range(r, 0, -1)))


def _check_even(r: int, k: int, op: str) -> int:
    if k % 2 != 0 or not 2 <= k <= 2 * r - 2:
        raise InvalidInputError(
            f"{op} needs even torsion with 2 <= k <= 2r-2, got k={k} at r={r}"
        )
    return k // 2


def _det(m: list[list[Fraction]]) -> Fraction:
    n = len(m)
    if n == 1:
        return m[0][0]
    total = Fraction(0)
    sign = 1
    for j in range(n):
        if m[0][j]:
            minor = [row[:j] + row[j + 1 :] for row in m[1:]]
            total += sign * m[0][j] * _det(minor)
        sign = -sign
    return total


def _inv_factorial(m: int) -> Fraction:
    return Fraction(1, factorial(m)) if m >= 0 else Fraction(0)


def count_even_determinant(r: int, k: int, *, widen: int = 0) -> int:
    """C(r, k) for even torsion via the factorial-determinant sum.

    ``n! * sum over integer tuples (a_1..a_l) with sum 0 of
    det[ 1/(r + (i-1) - 2(j-1) + a_j k)! ]``, with ``1/m! = 0`` for
    negative ``m``.  A column is identically zero once its largest entry's
    argument goes negative, which bounds each coordinate below; the zero-sum
    constraint bounds it above.  ``widen`` grows that bounding box (the
    result must not change; tests use it as a finite-support check).
    """
    l = _check_even(r, k, "count_even_determinant")
    n = expected_codim(r, k)
    lo = [-((r + l - 1 - 2 * (j - 1)) // k) for j in range(1, l + 1)]
    total_lo = sum(lo)
    ranges = [
        range(lo[j] - widen, lo[j] - total_lo + widen + 1) for j in range(l)
    ]
    total = Fraction(0)
    for alpha in product(*ranges):
        if sum(alpha) != 0:
            continue
        mat = [
            [
                _inv_factorial(r + (i - 1) - 2 * (j - 1) + alpha[j - 1] * k)
                for j in range(1, l + 1)
            ]
            for i in range(1, l + 1)
        ]
        total += _det(mat)
    count = Fraction(factorial(n)) * total
    if count.denominator != 1 or count < 0:
        raise InvariantError(f"determinant sum is not a nonnegative integer: {count}")
    return int(count)


def count_lattice_paths(r: int, k: int) -> int:
    """C(r, k) for even torsion by counting monotone lattice paths.

    Paths run from ``(l, l-1, ..., 1)`` to ``(r+l, r+l-2, ..., r-l+2)`` by
    unit steps, every point strictly decreasing with wrap gap below the
    torsion: ``z_1 > ... > z_l > z_1 - k``.
    """
    l = _check_even(r, k, "count_lattice_paths")
    start = tuple(l - j + 1 for j in range(1, l + 1))
    end = tuple(r + l - 2 * (j - 1) for j in range(1, l + 1))

    def valid(z: tuple[int, ...]) -> bool:
        return all(z[i] > z[i + 1] for i in range(l - 1)) and z[-1] > z[0] - k

    @cache
    def walk(z: tuple[int, ...]) -> int:
        if z == start:
            return 1
        total = 0
        for i in range(l):
            if z[i] > start[i]:
                prev = z[:i] + (z[i] - 1,) + z[i + 1 :]
                if valid(prev):
                    total += walk(prev)
        return total

    if not (valid(start) and valid(end)):
        raise InvariantError("lattice-path endpoints violate the chain constraint")
    return walk(end)


def strip_poset_succ_masks(mu: StripShape, eps: int) -> list[int]:
    """Successor bitmasks of the strip's filling constraints.

    Elements are the strip's boxes in canonical order; relations are the
    west/south covers plus the gluing comparisons for the given torsion
    parity.  Linear extensions of this poset are exactly the standard
    fillings counted by C(r, k).
    """
    boxes = sorted(mu.boxes, key=lambda b: (b[0] + b[1], b[0]))
    index = {b: i for i, b in enumerate(boxes)}
    succ = [0] * len(boxes)
    for b, i in index.items():
        for nb in ((b[0] + 1, b[1]), (b[0], b[1] + 1)):
            j = index.get(nb)
            if j is not None:
                succ[i] |= 1 << j
    for d in range(mu.l, mu.r):
        move = mu.word[d - mu.l]
        if eps == 1:
            lo, hi = (
                (mu.leftmost(d), mu.rightmost(d))
                if move == "E"
                else (mu.rightmost(d), mu.leftmost(d))
            )
        elif move == "E":
            lo, hi = mu.leftmost(d), mu.rightmost(d + 1)
        else:
            lo, hi = mu.rightmost(d), mu.leftmost(d + 1)
        succ[index[lo]] |= 1 << index[hi]
    return succ


def count_brute(r: int, k: int, *, force: bool = False) -> int:
    """C(r, k) by summing linear-extension counts over the type's strips."""
    n = expected_codim(r, k)
    if n > BRUTE_SYMBOL_LIMIT and not force:
        raise GuardRefused(
            f"count_brute over {n} symbols exceeds the desk-scale limit of"
            f" {BRUTE_SYMBOL_LIMIT}; pass force=True to run anyway"
        )
    p = PrymParams(g=max(n + 1, 2), r=r, k=k)
    return sum(
        kernels.count_linext(strip_poset_succ_masks(mu, p.eps))
        for mu in cell_strips(p)
    )


def cardinality(r: int, k: int, method: str = "auto", *, force: bool = False) -> int:
    """C(r, k) by the requested route (``auto`` picks the cheapest valid one)."""
    if method == "auto":
        if k == 0 or k > 2 * r - 2:
            method = "hook"
        elif k % 2 == 0:
            method = "det"
        else:
            method = "brute"
    if method == "hook":
        if not (k == 0 or k > 2 * r - 2):
            raise InvalidInputError(
                "hook route applies only to torsion 0 or above 2r-2"
            )
        return count_generic(r)
    if method == "det":
        return count_even_determinant(r, k)
    if method == "paths":
        return count_lattice_paths(r, k)
    if method == "brute":
        return count_brute(r, k, force=force)
    raise InvalidInputError(f"unknown counting method {method!r}")


def max_cell_count(p: PrymParams, *, force: bool = False) -> int:
    """Number of maximal cells, ``C(r,k) * binom(g-1, n(r,k))``."""
    dim = pbn_dimension(p)
    if dim is None:
        raise InvalidInputError(
            f"the locus of type (g={p.g}, r={p.r}, k={p.k}) is empty;"
            " it has no maximal cells"
        )
    n = expected_codim(p.r, p.k)
    return cardinality(p.r, p.k, force=force) * comb(p.g - 1, n)
