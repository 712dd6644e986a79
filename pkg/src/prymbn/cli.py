"""Command-line front end: inspect loci, export graphs, and run the suite.

Verbs map one-to-one onto library entry points; ``--json`` switches any
verb to machine-readable output carrying a ``schema`` version field.
Exit codes: 0 success, 1 internal assertion failure, 2 usage or invalid
input, 3 refused desk-scale bound (override with ``--force``).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import tempfile
from concurrent.futures import ProcessPoolExecutor, as_completed
from math import comb
from typing import Any

from .core import (
    GuardRefused,
    InvalidInputError,
    InvariantError,
    PrymParams,
    Tableau,
    square_shape,
    staircase_shape,
)
from .counting import (
    cardinality,
    count_brute,
    count_even_determinant,
    count_generic,
    count_lattice_paths,
    max_cell_count,
)
from .dimension import dimension_report, expected_codim, pbn_dimension
from .divisors import make_folded_chain, tableau_to_divisor
from .io import SCHEMA_VERSION, divisor_to_json, tableau_from_json, tableau_to_json
from .locus import (
    CELL_GUARD,
    betti_closed_form,
    betti_number,
    build_intersection_graph,
    connect_path,
    enumerate_maximal_cells,
    graph_to_dot,
)
from .reflection import reflectify, reflectify_trace
from .selftest import RunContext, run_rows
from .strips import enumerate_strip_tableaux, extend_strip_tableau

__all__ = ["main"]


def _emit_json(obj: Any) -> None:
    print(json.dumps(obj, sort_keys=True))


def _warn_force() -> None:
    print("warning: desk-scale guard overridden by --force", file=sys.stderr)


def _params(args: argparse.Namespace) -> PrymParams:
    return PrymParams(args.g, args.r, args.k)


def _load_tableau(path: str) -> Tableau:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InvalidInputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"{path} is not valid JSON: {exc}") from exc
    return tableau_from_json(data)


def _infer_r(t: Tableau) -> tuple[str, int]:
    """(shape family, r) for a tableau on a staircase or square."""
    side = max(x for x, _ in t.shape.boxes)
    if t.shape.boxes == staircase_shape(side).boxes:
        return "staircase", side
    if t.shape.boxes == square_shape(side - 1).boxes:
        return "square", side - 1
    raise InvalidInputError("tableau is neither a staircase nor a square")


def _check_r(args: argparse.Namespace, r: int) -> None:
    if args.r is not None and args.r != r:
        raise InvalidInputError(f"--r {args.r} disagrees with the tableau's order {r}")


# --------------------------------------------------------------------------
# Verbs.
# --------------------------------------------------------------------------


def _cmd_dim(args: argparse.Namespace) -> int:
    p = _params(args)
    rep = dimension_report(p)
    if args.json:
        _emit_json(
            {
                "schema": SCHEMA_VERSION,
                "g": p.g,
                "r": p.r,
                "k": p.k,
                "n": rep.n,
                "dim": rep.dim,
                "empty": rep.empty,
            }
        )
        return 0
    if rep.empty:
        print("empty")
        return 0
    print(f"n(r,k) = {rep.n}")
    print(f"dim = {rep.dim}")
    return 0


_ROUTES = ("hook", "det", "paths", "brute")


def _route_value(route: str, r: int, k: int, force: bool) -> int | None:
    """The count via one route, or None where the route does not apply."""
    if route == "hook":
        return count_generic(r) if k == 0 or k >= 2 * r - 1 else None
    if route == "det":
        if k and k % 2 == 0 and 2 <= k <= 2 * r - 2:
            return count_even_determinant(r, k)
        return None
    if route == "paths":
        if k and k % 2 == 0 and 2 <= k <= 2 * r - 2:
            return count_lattice_paths(r, k)
        return None
    if route == "brute":
        return count_brute(r, k, force=force)
    raise InvalidInputError(f"unknown counting method {route!r}")


def _cmd_count(args: argparse.Namespace) -> int:
    if args.force:
        _warn_force()
    r, k = args.r, args.k
    expected_codim(r, k)  # validates the pair
    if args.method == "all":
        routes: dict[str, int] = {}
        for route in _ROUTES:
            try:
                value = _route_value(route, r, k, args.force)
            except GuardRefused:
                continue
            if value is not None:
                routes[route] = value
        if len(set(routes.values())) > 1:
            raise InvariantError(f"counting routes disagree: {routes}")
        value = next(iter(routes.values()))
        if args.json:
            _emit_json(
                {"schema": SCHEMA_VERSION, "r": r, "k": k, "count": value,
                 "routes": routes}
            )
            return 0
        for route, got in routes.items():
            print(f"{route} = {got}")
        print("AGREE")
        return 0
    if args.method == "auto":
        value = cardinality(r, k, force=args.force)
    else:
        value = _route_value(args.method, r, k, args.force)
        if value is None:
            raise InvalidInputError(
                f"method {args.method!r} does not apply at (r, k) = ({r}, {k})"
            )
    if args.json:
        _emit_json(
            {"schema": SCHEMA_VERSION, "r": r, "k": k, "count": value,
             "method": args.method}
        )
    else:
        print(value)
    return 0


def _parse_symbols(spec: str, g: int) -> list[int]:
    try:
        symbols = sorted({int(tok) for tok in spec.split(",") if tok.strip()})
    except ValueError as exc:
        raise InvalidInputError(f"bad --symbols list {spec!r}") from exc
    if not symbols:
        raise InvalidInputError("--symbols needs at least one symbol")
    return symbols


def _cell_line(index: int, word: str, t: Tableau, free: list[int]) -> dict[str, Any]:
    return {
        "schema": SCHEMA_VERSION,
        "index": index,
        "word": word,
        "free_symbols": free,
        "tableau": tableau_to_json(t),
    }


def _cmd_cells(args: argparse.Namespace) -> int:
    if args.force:
        _warn_force()
    p = _params(args)
    n = expected_codim(p.r, p.k)
    if args.count_only:
        total = max_cell_count(p)
        if args.json:
            _emit_json(
                {"schema": SCHEMA_VERSION, "g": p.g, "r": p.r, "k": p.k,
                 "cells": total}
            )
        else:
            print(total)
        return 0
    if args.symbols is not None:
        symbols = _parse_symbols(args.symbols, p.g)
        total = cardinality(p.r, p.k, force=args.force) * comb(len(symbols), n)
        if total > CELL_GUARD and not args.force:
            raise GuardRefused(
                f"{total} strip tableaux exceed the desk-scale limit of"
                f" {CELL_GUARD}; pass --force to stream anyway"
            )
        for i, st in enumerate(enumerate_strip_tableaux(p, symbols)):
            t = extend_strip_tableau(st)
            free = sorted(set(range(1, p.g)) - t.symbols)
            _emit_json(_cell_line(i, st.strip.word, t, free))
        return 0
    cells = enumerate_maximal_cells(p, force=args.force)
    for i, cell in enumerate(cells):
        _emit_json(
            _cell_line(i, cell.strip.word, cell.tableau, sorted(cell.free_symbols))
        )
    return 0


def _cmd_betti(args: argparse.Namespace) -> int:
    if args.force:
        _warn_force()
    p = _params(args)
    from_graph = from_closed = None
    if args.method in ("graph", "both"):
        from_graph = betti_number(build_intersection_graph(p, force=args.force))
    if args.method in ("closed", "both"):
        from_closed = betti_closed_form(p)
    if args.json:
        out: dict[str, Any] = {
            "schema": SCHEMA_VERSION, "g": p.g, "r": p.r, "k": p.k,
            "method": args.method,
        }
        if from_graph is not None:
            out["graph"] = from_graph
        if from_closed is not None:
            out["closed"] = from_closed
        if args.method == "both":
            out["agree"] = from_graph == from_closed
        _emit_json(out)
        return 1 if args.method == "both" and from_graph != from_closed else 0
    if args.method == "graph":
        print(from_graph)
        return 0
    if args.method == "closed":
        print(from_closed)
        return 0
    print(f"graph = {from_graph}")
    print(f"closed = {from_closed}")
    if from_graph != from_closed:
        print("DISAGREE")
        return 1
    print("AGREE")
    return 0


def _cmd_graph(args: argparse.Namespace) -> int:
    if args.force:
        _warn_force()
    p = _params(args)
    graph = build_intersection_graph(p, force=args.force)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(graph_to_dot(graph))
    summary = {
        "circles": len(graph.circles),
        "vertices": graph.v,
        "edges": graph.e,
        "components": graph.components,
        "betti": betti_number(graph),
    }
    if args.json:
        _emit_json(
            {"schema": SCHEMA_VERSION, "g": p.g, "r": p.r, "k": p.k, **summary,
             **({"dot": args.dot} if args.dot else {})}
        )
        return 0
    for key, value in summary.items():
        print(f"{key} = {value}")
    if args.dot:
        print(f"wrote {args.dot}")
    return 0


def _cmd_path(args: argparse.Namespace) -> int:
    start = _load_tableau(args.src)
    goal = _load_tableau(args.dst)
    family, r = _infer_r(start)
    if family != "staircase":
        raise InvalidInputError("path endpoints must live on the staircase")
    _check_r(args, r)
    p = PrymParams(args.g, r, args.k)
    path = connect_path(start, goal, p)
    if args.json:
        for i, t in enumerate(path):
            _emit_json(
                {"schema": SCHEMA_VERSION, "index": i, "tableau": tableau_to_json(t)}
            )
        return 0
    print(f"{len(path)} states, {len(path) - 1} steps")
    for i, t in enumerate(path):
        print(f"-- state {i}")
        for row in reversed(t.rows()):
            print("   " + " ".join(f"{v:>3}" for v in row))
    return 0


def _cmd_reflectify(args: argparse.Namespace) -> int:
    t = _load_tableau(args.src)
    family, r = _infer_r(t)
    if family != "square":
        raise InvalidInputError("reflection acts on square tableaux")
    _check_r(args, r)
    p = PrymParams(args.g, r, args.k)
    states = reflectify_trace(t, p) if args.trace else [reflectify(t, p)]
    if args.json:
        for i, s in enumerate(states):
            _emit_json(
                {"schema": SCHEMA_VERSION, "index": i, "tableau": tableau_to_json(s)}
            )
        return 0
    for i, s in enumerate(states):
        if args.trace:
            print(f"-- state {i}")
        for row in reversed(s.rows()):
            print("   " + " ".join(f"{v:>3}" for v in row))
    return 0


def _cmd_divisor(args: argparse.Namespace) -> int:
    t = _load_tableau(args.src)
    family, r = _infer_r(t)
    _check_r(args, r)
    chain = make_folded_chain(args.g, args.k)
    div = tableau_to_divisor(t, chain)
    if div is None:
        if args.json:
            _emit_json({"schema": SCHEMA_VERSION, "g": args.g, "k": args.k,
                        "empty": True})
        else:
            print("empty")
        return 0
    if args.json:
        _emit_json(
            {
                "schema": SCHEMA_VERSION,
                "g": args.g,
                "k": args.k,
                "degree": div.degree,
                "dimension": div.dimension,
                "free_loops": list(div.free_loops),
                "entries": divisor_to_json(div),
            }
        )
        return 0
    for record in divisor_to_json(div):
        if record.get("free"):
            print(f"loop {record['loop']}: free")
        else:
            print(f"loop {record['loop']}: pos {record['pos']} mult {record['mult']}")
    print(f"degree = {div.degree}")
    print(f"dimension = {div.dimension}")
    return 0


# --------------------------------------------------------------------------
# Census.
# --------------------------------------------------------------------------

CENSUS_COLUMNS = (
    "g", "r", "k", "n", "dim", "C_method_det", "C_method_paths",
    "C_method_brute", "cells", "betti_closed", "betti_graph", "agree",
)


def _census_row(task: tuple[int, int, bool]) -> dict[str, Any]:
    r, k, force = task
    n = expected_codim(r, k)
    g = n + 2  # the dim-1 slice, where the circle graph is defined
    p = PrymParams(g, r, k)
    row: dict[str, Any] = {
        "g": g, "r": r, "k": k, "n": n, "dim": pbn_dimension(p),
        "C_method_det": "", "C_method_paths": "", "C_method_brute": "",
        "cells": "", "betti_closed": "", "betti_graph": "", "agree": "",
    }
    counts: dict[str, int] = {}
    if k and k % 2 == 0 and 2 <= k <= 2 * r - 2:
        counts["det"] = row["C_method_det"] = count_even_determinant(r, k)
        counts["paths"] = row["C_method_paths"] = count_lattice_paths(r, k)
    if n <= 18 or force:
        counts["brute"] = row["C_method_brute"] = count_brute(r, k, force=force)
    reference = cardinality(r, k, force=True)
    cells = reference * comb(g - 1, n)
    row["cells"] = cells
    bettis: dict[str, int] = {}
    try:
        bettis["closed"] = row["betti_closed"] = betti_closed_form(p)
    except InvalidInputError:
        pass
    if cells <= CELL_GUARD:
        graph = build_intersection_graph(p)
        bettis["graph"] = row["betti_graph"] = betti_number(graph)
    ok = all(v == reference for v in counts.values())
    if len(bettis) == 2:
        ok = ok and bettis["closed"] == bettis["graph"]
    row["agree"] = "yes" if ok else "no"
    return row


def _cmd_census(args: argparse.Namespace) -> int:
    if args.force:
        _warn_force()
    if args.rmax < 1 or args.kmax < 0:
        raise InvalidInputError("census needs --rmax >= 1 and --kmax >= 0")
    tasks = [
        (r, k, args.force)
        for r in range(1, args.rmax + 1)
        for k in range(0, args.kmax + 1)
        if k != 1
    ]
    rows: dict[tuple[int, int], dict[str, Any]] = {}
    jobs = args.jobs or min(4, os.cpu_count() or 1)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = {pool.submit(_census_row, t): t for t in tasks}
            for fut in as_completed(futures):
                row = fut.result()
                rows[(row["r"], row["k"])] = row
    else:
        for task in tasks:
            row = _census_row(task)
            rows[(row["r"], row["k"])] = row
    out_dir = os.path.dirname(os.path.abspath(args.out))
    fd, tmp_path = tempfile.mkstemp(dir=out_dir, suffix=".csv.part")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=CENSUS_COLUMNS)
            writer.writeheader()
            for key in sorted(rows):
                writer.writerow(rows[key])
        os.replace(tmp_path, args.out)
    except BaseException:
        os.unlink(tmp_path)
        raise
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def _cmd_selftest(args: argparse.Namespace) -> int:
    instance = None
    if args.instance:
        try:
            g, r, k = (int(tok) for tok in args.instance.split(","))
        except ValueError as exc:
            raise InvalidInputError(
                f"--instance wants g,r,k integers, got {args.instance!r}"
            ) from exc
        instance = (g, r, k)
    ctx = RunContext(instance=instance, narrow_alpha=args.narrow_alpha)
    if args.json:
        results = run_rows(ctx)
        _emit_json(
            {
                "schema": SCHEMA_VERSION,
                "passed": all(res.passed for res in results),
                "rows": [
                    {"ident": res.ident, "title": res.title, "passed": res.passed,
                     "seconds": round(res.seconds, 3), "detail": res.detail}
                    for res in results
                ],
            }
        )
        return 0 if all(res.passed for res in results) else 1
    results = run_rows(ctx, stream=print)
    failed = [res for res in results if not res.passed]
    print(f"{len(results) - len(failed)}/{len(results)} rows passed")
    return 1 if failed else 0


# --------------------------------------------------------------------------
# Parser.
# --------------------------------------------------------------------------


def _add_params(sub: argparse.ArgumentParser, *, with_r: bool = True) -> None:
    sub.add_argument("--g", type=int, required=True, help="arithmetic genus g")
    if with_r:
        sub.add_argument("--r", type=int, required=True, help="rank bound r")
    sub.add_argument("--k", type=int, required=True, help="torsion order k")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prymbn",
        description="Tableau calculus for Prym-Brill-Noether loci on folded chains",
    )
    subs = parser.add_subparsers(dest="verb", required=True)

    sub = subs.add_parser("dim", help="expected codimension and dimension")
    _add_params(sub)
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(func=_cmd_dim)

    sub = subs.add_parser("count", help="number of rectangle-free fillings C(r,k)")
    sub.add_argument("--r", type=int, required=True)
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument(
        "--method", choices=("auto", "hook", "det", "paths", "brute", "all"),
        default="auto",
    )
    sub.add_argument("--force", action="store_true")
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(func=_cmd_count)

    sub = subs.add_parser("cells", help="stream the maximal cells as JSON lines")
    _add_params(sub)
    sub.add_argument("--count-only", action="store_true", dest="count_only")
    sub.add_argument("--symbols", help="comma-separated symbol subset")
    sub.add_argument("--force", action="store_true")
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(func=_cmd_cells)

    sub = subs.add_parser("betti", help="first Betti number of the dim-1 locus")
    _add_params(sub)
    sub.add_argument("--method", choices=("graph", "closed", "both"), default="both")
    sub.add_argument("--force", action="store_true")
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(func=_cmd_betti)

    sub = subs.add_parser("graph", help="build the circle intersection graph")
    _add_params(sub)
    sub.add_argument("--dot", help="write DOT markup to this path")
    sub.add_argument("--force", action="store_true")
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(func=_cmd_graph)

    sub = subs.add_parser("path", help="adjacency walk between two tableaux")
    sub.add_argument("--g", type=int, required=True)
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--r", type=int, help="optional cross-check of the order")
    sub.add_argument("--from", dest="src", required=True, metavar="TABLEAU.json")
    sub.add_argument("--to", dest="dst", required=True, metavar="TABLEAU.json")
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(func=_cmd_path)

    sub = subs.add_parser("reflectify", help="reflective closure of a square tableau")
    sub.add_argument("--g", type=int, required=True)
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--r", type=int, help="optional cross-check of the order")
    sub.add_argument("--in", dest="src", required=True, metavar="TABLEAU.json")
    sub.add_argument("--trace", action="store_true")
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(func=_cmd_reflectify)

    sub = subs.add_parser("divisor", help="chip divisor of a tableau")
    sub.add_argument("--g", type=int, required=True)
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--r", type=int, help="optional cross-check of the order")
    sub.add_argument("--in", dest="src", required=True, metavar="TABLEAU.json")
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(func=_cmd_divisor)

    sub = subs.add_parser("census", help="sweep (r, k) and write a CSV summary")
    sub.add_argument("--rmax", type=int, default=4)
    sub.add_argument("--kmax", type=int, default=5)
    sub.add_argument("--out", default="census.csv")
    sub.add_argument("--jobs", type=int, default=0, help="worker processes")
    sub.add_argument("--force", action="store_true")
    sub.set_defaults(func=_cmd_census)

    sub = subs.add_parser("selftest", help="run the acceptance suite")
    sub.add_argument("--instance", help="restrict to one g,r,k")
    sub.add_argument(
        "--narrow-alpha", action="store_true", dest="narrow_alpha",
        help="negative control: shrink the determinant support box by 1",
    )
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(func=_cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GuardRefused as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 3
    except (InvariantError, AssertionError) as exc:
        print(f"internal failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
