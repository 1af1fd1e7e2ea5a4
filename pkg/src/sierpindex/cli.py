"""Command-line front end.

Subcommands: ``gen`` (named families), ``expand`` (explicit construction),
``closed`` (closed-form index), ``direct`` (index of an explicit graph),
``verify`` (closed form vs construction sweep; nonzero exit on mismatch) and
``bench`` (closed form vs construction timings, CSV).

The vertex budget comes from ``--budget`` when given, else from the
``SIERPINDEX_VERTEX_BUDGET`` environment variable, else the built-in default.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import closedform, construct, graphs
from .graphs import GraphError

_ENV_BUDGET = "SIERPINDEX_VERTEX_BUDGET"


def _load_graph(path: str) -> graphs.Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return graphs.parse_edge_list(fh.read())


def _write_out(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _budget(args) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get(_ENV_BUDGET)
    if env:
        return int(env)
    return construct.DEFAULT_VERTEX_BUDGET


def _parse_t_range(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    values = range(int(lo), int(hi) + 1) if sep else [int(text)]
    out = list(values)
    if not out or out[0] < 1:
        raise ValueError(f"bad t range {text!r}")
    return out


def _json_text(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


# -- subcommand handlers -------------------------------------------------------

def _cmd_gen(args) -> int:
    g = graphs.generate_family(args.family, args.params)
    _write_out(graphs.render_edge_list(g), args.out)
    return 0


def _cmd_expand(args) -> int:
    base = _load_graph(args.graph)
    budget = _budget(args)
    if args.variant == "S":
        g = construct.sierpinski_graph(base, args.t, budget)
        labels = construct.vertex_labels(base, args.t) if args.labels else None
    else:
        g = construct.polymeric_graph(base, args.t, budget)
        labels = construct.polymeric_vertex_labels(base, args.t) if args.labels else None
    _write_out(graphs.render_edge_list(g), args.out)
    if labels is not None:
        with open(args.labels, "w", encoding="utf-8") as fh:
            fh.writelines(f"{vid}\t{label}\n" for vid, label in enumerate(labels, 1))
    return 0


def _closed_report(base, variant, t, params, breakdown):
    if variant == "S":
        return closedform.sierpinski_randic(base, t, params, include_breakdown=breakdown)
    return closedform.polymeric_randic(base, t, params, include_breakdown=breakdown)


def _cmd_closed(args) -> int:
    base = _load_graph(args.graph)
    params = graphs.IndexParams(args.alpha, exact=args.exact)
    report = _closed_report(base, args.variant, args.t, params, args.breakdown)
    _write_out(_json_text(report.to_json_dict()), args.out)
    return 0


def _cmd_direct(args) -> int:
    g = _load_graph(args.graph)
    if args.degree_sum:
        doc = {"index": "degree_power_sum", "alpha": args.alpha,
               "value": graphs.degree_power_sum(g, args.alpha)}
    else:
        params = graphs.IndexParams(args.alpha, exact=args.exact)
        value = graphs.randic_index(g, params)
        doc = {"index": "randic", "alpha": args.alpha}
        if args.exact:
            doc["value"] = float(value)
            doc["exact"] = str(value)
        else:
            doc["value"] = value
    _write_out(_json_text(doc), args.out)
    return 0


def _cmd_verify(args) -> int:
    budget = _budget(args)
    variants = sorted(set(args.variant or ["S", "P"]))
    alphas = sorted(set(args.alpha or [-1.0, -0.5, 0.5, 1.0, 2.0]))
    ts = _parse_t_range(args.t)
    tol = args.tol

    cells = []
    for path in args.graphs:
        base = _load_graph(path)
        for variant in variants:
            for t in ts:
                built = (
                    construct.sierpinski_graph(base, t, budget)
                    if variant == "S"
                    else construct.polymeric_graph(base, t, budget)
                )
                for alpha in alphas:
                    closed = _closed_report(base, variant, t, alpha, False).value
                    oracle = graphs.randic_index(built, alpha)
                    abs_err = abs(closed - oracle)
                    ok = abs_err <= max(tol * abs(oracle), 1e-12)
                    cells.append(
                        {
                            "graph": path,
                            "variant": variant,
                            "t": t,
                            "alpha": alpha,
                            "closed": closed,
                            "oracle": oracle,
                            "abs_err": abs_err,
                            "rel_err": abs_err / max(abs(oracle), 1e-12),
                            "pass": ok,
                        }
                    )

    cells.sort(key=lambda c: (c["graph"], c["variant"], c["t"], c["alpha"]))
    failed = sum(not c["pass"] for c in cells)
    header = f"{'graph':<24} {'var':<3} {'t':>3} {'alpha':>7}  {'closed':<24} {'oracle':<24} {'rel_err':>10}  status"
    print(header)
    print("-" * len(header))
    for c in cells:
        print(
            f"{c['graph']:<24} {c['variant']:<3} {c['t']:>3} {c['alpha']:>7.3g}  "
            f"{c['closed']!r:<24} {c['oracle']!r:<24} {c['rel_err']:>10.2e}  "
            f"{'ok' if c['pass'] else 'FAIL'}"
        )
    print(f"{len(cells)} cells: {len(cells) - failed} ok, {failed} failed (tolerance {tol:g})")
    if args.out:
        doc = {"tolerance": tol, "cells": cells, "passed": len(cells) - failed,
               "failed": failed, "ok": failed == 0}
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(_json_text(doc))
    return 0 if failed == 0 else 1


def _polymeric_edge_count(n: int, m: int, t: int) -> int:
    total = sum(m * closedform.repunit(n, i) + n ** i for i in range(1, t + 1))
    return total + sum(n ** i for i in range(1, t))


def _cmd_bench(args) -> int:
    base = _load_graph(args.graph)
    budget = _budget(args)
    ts = _parse_t_range(args.t)
    lines = ["variant,t,closed_ns,construct_ns,vertices,edges"]
    for t in ts:
        start = time.perf_counter_ns()
        _closed_report(base, args.variant, t, args.alpha, False)
        closed_ns = time.perf_counter_ns() - start
        if args.variant == "S":
            vertices = base.n ** t
            edges = base.m * closedform.repunit(base.n, t)
        else:
            vertices = (base.n + 1) * closedform.repunit(base.n, t)
            edges = _polymeric_edge_count(base.n, base.m, t)
        if vertices <= budget:
            start = time.perf_counter_ns()
            built = (
                construct.sierpinski_graph(base, t, budget)
                if args.variant == "S"
                else construct.polymeric_graph(base, t, budget)
            )
            construct_ns = str(time.perf_counter_ns() - start)
            assert built.n == vertices and built.m == edges
        else:
            construct_ns = "skipped: budget"
        lines.append(f"{args.variant},{t},{closed_ns},{construct_ns},{vertices},{edges}")
    _write_out("\n".join(lines) + "\n", args.out)
    return 0


# -- parser ----------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sierpindex",
        description="Degree-product indices of Sierpinski-type and polymeric expansions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_budget(p):
        p.add_argument("--budget", type=int, default=None,
                       help=f"vertex budget for explicit construction (or ${_ENV_BUDGET})")

    def add_out(p):
        p.add_argument("--out", default=None, help="write output to this file instead of stdout")

    p = sub.add_parser("gen", help="generate a named family member as an edge list")
    p.add_argument("family", choices=sorted(graphs._FAMILIES))
    p.add_argument("params", nargs="*", type=int)
    add_out(p)
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("expand", help="explicitly construct an expansion")
    p.add_argument("graph")
    p.add_argument("--variant", choices=("S", "P"), required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--labels", default=None, help="also write an 'id<TAB>label' sidecar file")
    add_budget(p)
    add_out(p)
    p.set_defaults(fn=_cmd_expand)

    p = sub.add_parser("closed", help="closed-form index of an expansion (JSON)")
    p.add_argument("graph")
    p.add_argument("--variant", choices=("S", "P"), required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--breakdown", action="store_true", help="include the term breakdown")
    p.add_argument("--exact", action="store_true", help="exact integers (integer alpha >= 1)")
    add_out(p)
    p.set_defaults(fn=_cmd_closed)

    p = sub.add_parser("direct", help="index of an explicit graph file (JSON)")
    p.add_argument("graph")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--exact", action="store_true")
    p.add_argument("--degree-sum", action="store_true",
                   help="sum deg(v)**alpha over vertices instead of the edge index")
    add_out(p)
    p.set_defaults(fn=_cmd_direct)

    p = sub.add_parser("verify", help="sweep closed form against explicit construction")
    p.add_argument("graphs", nargs="+")
    p.add_argument("--variant", action="append", choices=("S", "P"))
    p.add_argument("--t", default="2..3", help="level or range, e.g. 2 or 2..3")
    p.add_argument("--alpha", action="append", type=float,
                   help="repeatable; default -1 -0.5 0.5 1 2")
    p.add_argument("--tol", type=float, default=1e-9)
    add_budget(p)
    p.add_argument("--out", default=None, help="also write the JSON report here")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("bench", help="closed form vs construction timings (CSV)")
    p.add_argument("graph")
    p.add_argument("--variant", choices=("S", "P"), default="S")
    p.add_argument("--t", default="2..8", help="level or range, e.g. 2..50")
    p.add_argument("--alpha", type=float, default=-0.5)
    add_budget(p)
    add_out(p)
    p.set_defaults(fn=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except construct.VertexBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
