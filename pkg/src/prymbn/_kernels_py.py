"""Pure-Python hot kernels: staircase codimension search and poset counting.

These mirror the compiled kernels in ``_ckernels.pyx`` exactly; the
dispatcher in :mod:`prymbn.kernels` picks whichever is available.  Inputs
are plain integers and bitmasks so both backends share one calling
convention.
"""

from __future__ import annotations

import sys

BACKEND = "python"


def _staircase_arrays(r: int, k: int) -> tuple[list[int], list[int], list[int], list[int]]:
    """Canonical-order west/south predecessor indices, class ids, diagonals."""
    boxes = sorted(
        ((x, y) for y in range(1, r + 1) for x in range(1, r + 2 - y)),
        key=lambda b: (b[0] + b[1], b[0]),
    )
    idx = {b: i for i, b in enumerate(boxes)}
    west = [idx.get((x - 1, y), -1) for (x, y) in boxes]
    south = [idx.get((x, y - 1), -1) for (x, y) in boxes]
    if k >= 2:
        cls = [(x - y) % k for (x, y) in boxes]
    else:
        cls = [(x - y) + (r - 1) for (x, y) in boxes]
    diag = [x + y - 1 for (x, y) in boxes]
    return west, south, cls, diag


def min_codim_staircase(r: int, k: int, gmax: int, use_budget: bool = True) -> int:
    """Minimum distinct-symbol count over displacement tableaux T_r -> [gmax].

    Backtracks over boxes in canonical order; a symbol may recur only on its
    recorded diagonal class.  With ``use_budget`` the search abandons
    branches whose distinct count plus the per-anti-diagonal new-symbol
    budget (each full anti-diagonal ``A_m`` introduces at least
    ``min(m, l)`` fresh symbols) cannot beat the incumbent.

    Returns ``gmax + |T_r| + 1``-bounded sentinel ``-1`` when no tableau
    exists (``gmax`` too small).
    """
    west, south, cls, diag = _staircase_arrays(r, k)
    n = len(west)
    if n == 0:
        return 0
    if k == 0 or k >= 2 * r - 1:
        leff = r
    else:
        leff = (k + 1) // 2
    suf = [0] * (r + 2)
    for m in range(r, 0, -1):
        suf[m] = suf[m + 1] + min(m, leff)
    bound = [suf[diag[i]] if west[i] < 0 else suf[diag[i] + 1] for i in range(n)]
    sym_class = [-1] * (gmax + 1)
    sym_count = [0] * (gmax + 1)
    best = n + 1
    found = False

    sys.setrecursionlimit(max(sys.getrecursionlimit(), 10 * n + 100))

    def dfs(i: int, distinct: int) -> None:
        nonlocal best, found
        if distinct >= best:
            return
        if i == n:
            best = distinct
            found = True
            return
        if use_budget and distinct + bound[i] >= best:
            return
        lo = 1
        if west[i] >= 0 and values[west[i]] >= lo:
            lo = values[west[i]] + 1
        if south[i] >= 0 and values[south[i]] >= lo:
            lo = values[south[i]] + 1
        ci = cls[i]
        for v in range(lo, gmax + 1):
            c = sym_class[v]
            if c >= 0 and c != ci:
                continue
            new = sym_count[v] == 0
            sym_class[v] = ci
            sym_count[v] += 1
            values[i] = v
            dfs(i + 1, distinct + 1 if new else distinct)
            sym_count[v] -= 1
            if sym_count[v] == 0:
                sym_class[v] = -1

    values = [0] * n
    dfs(0, 0)
    return best if found else -1


def enumerate_staircase_values(r: int, k: int, gmax: int):
    """Yield the canonical-order value tuple of every displacement tableau
    T_r -> [gmax].  Desk-scale helper shared by oracles and property tests."""
    west, south, cls, _ = _staircase_arrays(r, k)
    n = len(west)
    if n == 0:
        yield ()
        return
    sym_class = [-1] * (gmax + 1)
    sym_count = [0] * (gmax + 1)
    values = [0] * n

    def dfs(i: int):
        if i == n:
            yield tuple(values)
            return
        lo = 1
        if west[i] >= 0 and values[west[i]] >= lo:
            lo = values[west[i]] + 1
        if south[i] >= 0 and values[south[i]] >= lo:
            lo = values[south[i]] + 1
        ci = cls[i]
        for v in range(lo, gmax + 1):
            c = sym_class[v]
            if c >= 0 and c != ci:
                continue
            sym_class[v] = ci
            sym_count[v] += 1
            values[i] = v
            yield from dfs(i + 1)
            sym_count[v] -= 1
            if sym_count[v] == 0:
                sym_class[v] = -1

    yield from dfs(0)


def count_linext(succ_masks: list[int]) -> int:
    """Number of linear extensions of a poset given successor bitmasks.

    ``succ_masks[v]`` has bit ``w`` set when ``v < w`` is a (not necessarily
    covering) relation; only downsets of the poset are visited, so counts
    stay exact at arbitrary precision.
    """
    n = len(succ_masks)
    full = (1 << n) - 1
    memo: dict[int, int] = {0: 1}

    def f(mask: int) -> int:
        got = memo.get(mask)
        if got is not None:
            return got
        total = 0
        rest = mask
        while rest:
            bit = rest & -rest
            rest ^= bit
            v = bit.bit_length() - 1
            if succ_masks[v] & mask == 0:
                total += f(mask ^ bit)
        memo[mask] = total
        return total

    sys.setrecursionlimit(max(sys.getrecursionlimit(), 10 * n + 100))
    return f(full)
