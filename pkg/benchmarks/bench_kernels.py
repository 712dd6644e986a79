"""Benchmark the compiled kernels against the pure-Python fallback.

Runs the two hot kernels -- the staircase codimension search and the
linear-extension counter -- on representative workloads with both backends
and prints a timing table.  Usage::

    python3 benchmarks/bench_kernels.py [--repeat N]

The two ``count_linext`` implementations trade differently with poset
shape.  The compiled kernel fills a flat table over all 2^n subsets, so
its cost and memory are fixed by n alone; the pure-Python counter memoizes
only reachable order ideals, so it wins when ideals are scarce (the strip
posets behind the lattice-path count decompose into short disjoint chains)
and loses when nearly every subset is an ideal (antichain-like posets,
where the memo dict also balloons).  The dispatcher in
:mod:`prymbn.kernels` prefers the compiled table up to its 20-element
overflow cap because that bounds worst-case time and memory for any input;
the few-milliseconds edge the memo has on strip posets is noise at desk
scale.  Rows below cover both regimes.
"""

from __future__ import annotations

import argparse
import math
import sys
import time

from prymbn import _kernels_py as py_impl
from prymbn.core import PrymParams
from prymbn.counting import strip_poset_succ_masks
from prymbn.strips import cell_strips

try:
    from prymbn import _ckernels as c_impl
except ImportError:
    c_impl = None


def antichain_masks(n: int) -> list[int]:
    return [0] * n


def strip_masks(r: int, k: int) -> list[int]:
    """Successor masks of the widest strip poset at (r, k), the real call site."""
    p = PrymParams(g=math.comb(r + 1, 2) + 1, r=r, k=k)
    return max(
        (strip_poset_succ_masks(mu, p.eps) for mu in cell_strips(p)), key=len
    )


def workloads() -> list[tuple[str, str, tuple]]:
    return [
        ("min_codim_staircase", "r=4 k=0 gmax=12", (4, 0, 12, True)),
        ("min_codim_staircase", "r=5 k=4 gmax=12", (5, 4, 12, True)),
        ("min_codim_staircase", "r=5 k=5 gmax=14", (5, 5, 14, True)),
        ("min_codim_staircase", "r=4 k=3 gmax=11 nobudget", (4, 3, 11, False)),
        ("count_linext", "antichain n=18", (antichain_masks(18),)),
        ("count_linext", "antichain n=20", (antichain_masks(20),)),
        ("count_linext", "strip poset r=6 k=10", (strip_masks(6, 10),)),
    ]


def run_one(impl, kernel: str, args: tuple, repeat: int) -> tuple[float, int]:
    fn = getattr(impl, kernel)
    best = float("inf")
    value = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, value


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3,
                        help="timing repetitions per workload (best of N)")
    opts = parser.parse_args(argv)

    if c_impl is None:
        print("compiled extension unavailable; timing the fallback only")

    header = (f"{'kernel':<20} {'workload':<26} {'python':>10} {'cython':>10}"
              f" {'speedup':>8}")
    print(header)
    print("-" * len(header))
    for kernel, label, args in workloads():
        py_time, py_value = run_one(py_impl, kernel, args, opts.repeat)
        if c_impl is not None:
            c_time, c_value = run_one(c_impl, kernel, args, opts.repeat)
            if c_value != py_value:
                print(f"BACKEND MISMATCH on {kernel} {label}: "
                      f"{py_value} vs {c_value}", file=sys.stderr)
                return 1
            ratio = py_time / c_time if c_time else float("inf")
            print(f"{kernel:<20} {label:<26} {py_time:>9.4f}s {c_time:>9.4f}s "
                  f"{ratio:>7.2f}x")
        else:
            print(f"{kernel:<20} {label:<26} {py_time:>9.4f}s {'-':>10} {'-':>8}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
