# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels: staircase codimension search and poset counting.

Mirrors :mod:`prymbn._kernels_py` exactly; see there for semantics.  The
linear-extension counter uses a flat uint64 table and is therefore capped
at 20 poset elements (21! overflows 64 bits); the dispatcher falls back to
the arbitrary-precision Python counter beyond that.
"""

from libc.stdlib cimport calloc, free

from . import _kernels_py as _py

BACKEND = "cython"


cdef struct Search:
    int n
    int gmax
    int best
    bint use_budget
    bint found
    int *west
    int *south
    int *cls
    int *bound
    int *sym_class
    int *sym_count
    int *values


cdef void _dfs(Search *s, int i, int distinct) noexcept:
    cdef int lo, v, c, ci, w
    cdef bint fresh
    if distinct >= s.best:
        return
    if i == s.n:
        s.best = distinct
        s.found = True
        return
    if s.use_budget and distinct + s.bound[i] >= s.best:
        return
    lo = 1
    w = s.west[i]
    if w >= 0 and s.values[w] >= lo:
        lo = s.values[w] + 1
    w = s.south[i]
    if w >= 0 and s.values[w] >= lo:
        lo = s.values[w] + 1
    ci = s.cls[i]
    for v in range(lo, s.gmax + 1):
        c = s.sym_class[v]
        if c >= 0 and c != ci:
            continue
        fresh = s.sym_count[v] == 0
        s.sym_class[v] = ci
        s.sym_count[v] += 1
        s.values[i] = v
        _dfs(s, i + 1, distinct + 1 if fresh else distinct)
        s.sym_count[v] -= 1
        if s.sym_count[v] == 0:
            s.sym_class[v] = -1


def min_codim_staircase(int r, int k, int gmax, bint use_budget=True):
    """Minimum distinct-symbol count over displacement tableaux T_r -> [gmax]."""
    west_l, south_l, cls_l, diag_l = _py._staircase_arrays(r, k)
    cdef int n = len(west_l)
    if n == 0:
        return 0
    cdef int leff
    if k == 0 or k >= 2 * r - 1:
        leff = r
    else:
        leff = (k + 1) // 2
    suf_l = [0] * (r + 2)
    for m in range(r, 0, -1):
        suf_l[m] = suf_l[m + 1] + min(m, leff)
    bound_l = [
        suf_l[diag_l[i]] if west_l[i] < 0 else suf_l[diag_l[i] + 1] for i in range(n)
    ]
    cdef Search s
    s.n = n
    s.gmax = gmax
    s.best = n + 1
    s.use_budget = use_budget
    s.found = False
    s.west = <int *> calloc(n, sizeof(int))
    s.south = <int *> calloc(n, sizeof(int))
    s.cls = <int *> calloc(n, sizeof(int))
    s.bound = <int *> calloc(n, sizeof(int))
    s.values = <int *> calloc(n, sizeof(int))
    s.sym_class = <int *> calloc(gmax + 1, sizeof(int))
    s.sym_count = <int *> calloc(gmax + 1, sizeof(int))
    if (s.west == NULL or s.south == NULL or s.cls == NULL or s.bound == NULL
            or s.values == NULL or s.sym_class == NULL or s.sym_count == NULL):
        raise MemoryError()
    cdef int i
    try:
        for i in range(n):
            s.west[i] = west_l[i]
            s.south[i] = south_l[i]
            s.cls[i] = cls_l[i]
            s.bound[i] = bound_l[i]
        for i in range(gmax + 1):
            s.sym_class[i] = -1
            s.sym_count[i] = 0
        _dfs(&s, 0, 0)
    finally:
        free(s.west)
        free(s.south)
        free(s.cls)
        free(s.bound)
        free(s.values)
        free(s.sym_class)
        free(s.sym_count)
    return s.best if s.found else -1


def count_linext(succ_masks):
    """Number of linear extensions of a poset on at most 20 elements."""
    cdef int n = len(succ_masks)
    if n > 20:
        raise ValueError("compiled count_linext is capped at 20 elements")
    if n == 0:
        return 1
    cdef unsigned long long full = (1ULL << n) - 1
    cdef unsigned long long *table = <unsigned long long *> calloc(
        <size_t> (full + 1), sizeof(unsigned long long)
    )
    if table == NULL:
        raise MemoryError()
    cdef unsigned long long succ[20]
    cdef int v
    for v in range(n):
        succ[v] = succ_masks[v]
    cdef unsigned long long mask, rest, bit, total
    try:
        table[0] = 1
        mask = 1
        while mask <= full:
            total = 0
            rest = mask
            while rest:
                bit = rest & (~rest + 1)
                rest ^= bit
                v = _bit_index(bit)
                if succ[v] & mask == 0:
                    total += table[mask ^ bit]
            table[mask] = total
            mask += 1
        return table[full]
    finally:
        free(table)


cdef inline int _bit_index(unsigned long long bit) noexcept:
    cdef int i = 0
    while bit > 1:
        bit >>= 1
        i += 1
    return i
