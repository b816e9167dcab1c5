"""Command-line front end.

Graphs are given as graph6 (files, stdin or ``--graph6``) or by name:

  K4        complete graph K_4
  K2,3      complete bipartite K_{2,3}; K_{2,3} and K{2,3} also work
  P3        path with 3 edges
  C6        cycle on 6 vertices
  S4        star K_{1,4}
  split2,3  complete split graph: clique on 2, independent set of 3
  split2,3+e  the same plus one edge inside the independent set
  paw       triangle with a pendant edge; any name accepts a +pendant suffix

Every JSON line carries a "schema" field.  Exit codes: 0 ok, 1 resource
budget exceeded, 2 bad input.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import json
import logging
import os
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import formulas, oracle
from .amoeba import amoeba_verdict
from .colorings import (
    Coloring,
    bal_K4_extremal,
    find_type_AB_clique,
    ot_star_extremal,
    split_graph_coloring,
    tone_set,
    type_A_coloring,
    type_B_coloring,
)
from .graph import (
    Graph,
    Graph6Error,
    GraphError,
    ResourceError,
    complete_bipartite,
    complete_graph,
    complete_split,
    cycle_graph,
    parse_graph6,
    path_graph,
    star_graph,
    to_graph6,
)
from .spectra import tonal_report

SCHEMA = "omnitonal/1"
EXIT_OK, EXIT_RESOURCE, EXIT_INPUT = 0, 1, 2

log = logging.getLogger("omnitonal")

_NAME = re.compile(r"^(K|P|C|S|split)(\d+)(?:,(\d+))?(\+e)?$")
_ALIASES = {"paw": "K3+pendant", "triangle": "K3"}


def parse_named(text: str) -> Graph:
    """Build a graph from the naming scheme in the module docstring."""
    name = _ALIASES.get(text.strip(), text.strip())
    pendant = name.endswith("+pendant")
    if pendant:
        name = name[: -len("+pendant")]
    name = _ALIASES.get(name, name).replace("_", "").replace("{", "").replace("}", "")
    m = _NAME.match(name)
    if not m:
        raise GraphError(f"cannot parse graph name {text!r}")
    kind, a, b, extra = m.group(1), int(m.group(2)), m.group(3), m.group(4)
    if extra and kind != "split":
        raise GraphError(f"+e only applies to split graphs: {text!r}")
    if b is not None and kind not in ("K", "split"):
        raise GraphError(f"{kind} takes one parameter: {text!r}")
    if kind == "K":
        g = complete_graph(a) if b is None else complete_bipartite(a, int(b))
    elif kind == "P":
        g = path_graph(a)
    elif kind == "C":
        g = cycle_graph(a)
    elif kind == "S":
        g = star_graph(a)
    else:
        if b is None:
            raise GraphError(f"split needs two parameters: {text!r}")
        g = complete_split(a, int(b))
        if extra:
            if int(b) < 2:
                raise GraphError("split+e needs an independent set of size >= 2")
            g = Graph.from_edges(g.n, g.edge_list() + [(a, a + 1)])
    return g.add_pendant() if pendant else g


def _emit(obj: dict, out) -> None:
    out.write(json.dumps({"schema": SCHEMA, **obj}, sort_keys=True) + "\n")


def _graph_arg(args) -> Graph:
    if args.named:
        return parse_named(args.named)
    if args.graph6:
        return parse_graph6(args.graph6)
    raise GraphError("give --named or --graph6")


def _input_graphs(args):
    """Yield (line number, graph or error) from --named, --graph6 or a graph6 stream."""
    if getattr(args, "named", None):
        for i, name in enumerate(args.named, 1):
            try:
                yield i, parse_named(name)
            except GraphError as exc:
                yield i, exc
        return
    if getattr(args, "graph6", None):
        for i, code in enumerate(args.graph6, 1):
            try:
                yield i, parse_graph6(code)
            except GraphError as exc:
                yield i, exc
        return
    if args.input in (None, "-"):
        ctx = contextlib.nullcontext(sys.stdin)
    else:
        ctx = open(args.input, encoding="ascii", errors="replace")
    with ctx as fh:
        for i, line in enumerate(fh, 1):
            text = line.strip()
            if not text:
                continue
            try:
                yield i, parse_graph6(text)
            except GraphError as exc:
                yield i, exc


def _parse_range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"(\d+)\.\.(\d+)", text.strip())
    if not m:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


# -- subcommands ----------------------------------------------------------------

def cmd_classify(args, out) -> int:
    status = EXIT_OK
    for lineno, g in _input_graphs(args):
        if isinstance(g, Exception):
            print(f"line {lineno}: {g}", file=sys.stderr)
            status = EXIT_INPUT
            continue
        report = tonal_report(g)
        _emit({"kind": "tonality", **report.to_dict()}, out)
    return status


def cmd_amoeba(args, out) -> int:
    g = _graph_arg(args)
    lo, hi = args.range if args.range else (g.n + 1, g.n + 3)
    verdict = amoeba_verdict(g, lo, hi, budget=args.budget)
    _emit({"kind": "amoeba", **verdict.to_dict()}, out)
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    g = _graph_arg(args)
    if args.mode == "ex":
        res = oracle.brute_force_ex(args.n, g)
    elif args.mode == "bal":
        res = oracle.brute_force_bal(args.n, g, strong=args.strong, budget=args.budget, jobs=args.jobs)
    elif args.mode == "bal_r":
        if args.r is None:
            raise GraphError("bal_r needs --r")
        res = oracle.brute_force_bal_r(args.n, g, args.r, budget=args.budget, jobs=args.jobs)
    else:
        res = oracle.brute_force_ot(args.n, g, budget=args.budget, jobs=args.jobs)
    _emit({"kind": "oracle", **res.to_dict(timing=args.timing)}, out)
    return EXIT_OK


_FORMULAS = {
    "bal_star": (formulas.bal_star, ("n", "k")),
    "bal_path": (formulas.bal_path, ("n", "k")),
    "bal_K4": (formulas.bal_K4, ("n",)),
    "ot_star": (formulas.ot_star, ("n", "k")),
    "ot_tree_bound": (formulas.ot_tree_bound, ("n", "k")),
    "erdos_gallai_path_bound": (formulas.erdos_gallai_path_bound, ("n", "k")),
    "kst_bound": (formulas.kst_bound, ("n", "t")),
    "zarankiewicz_bound": (formulas.zarankiewicz_bound, ("n", "t")),
    "rtz_phi": (formulas.rtz_phi, ("n", "t")),
}


def cmd_formula(args, out) -> int:
    if args.name == "rtz_q":
        if args.t is None:
            raise GraphError("rtz_q needs --t")
        _emit({"kind": "formula", "name": "rtz_q", "t": args.t, "value": formulas.rtz_q(args.t)}, out)
        return EXIT_OK
    if args.name == "zero_sum_pattern":
        if None in (args.p, args.q, args.e):
            raise GraphError("zero_sum_pattern needs --p, --q and --e")
        r, b = formulas.zero_sum_pattern(args.p, args.q, args.e)
        _emit({"kind": "formula", "name": args.name, "p": args.p, "q": args.q, "e": args.e, "value": [r, b]}, out)
        return EXIT_OK
    fn, params = _FORMULAS[args.name]
    values = {p: getattr(args, p) for p in params}
    missing = [p for p, v in values.items() if v is None]
    if missing:
        raise GraphError(f"{args.name} needs " + ", ".join(f"--{p}" for p in missing))
    fv = fn(*values.values())
    _emit({"kind": "formula", "name": args.name, **values, **fv.to_dict()}, out)
    return EXIT_OK


def _build_coloring(args) -> Coloring:
    kind = args.kind
    if kind == "load":
        return Coloring.loads(args.spec)
    need = {"typeA": "t", "typeB": "t", "split": "p", "ot_star": "k"}
    if kind in need and getattr(args, need[kind]) is None:
        raise GraphError(f"{kind} needs --{need[kind]}")
    if kind == "typeA":
        return type_A_coloring(args.n, args.t)
    if kind == "typeB":
        return type_B_coloring(args.n, args.t)
    if kind == "split":
        return split_graph_coloring(args.n, args.p, args.extra_edge)
    if kind == "ot_star":
        return ot_star_extremal(args.n, args.k)
    return bal_K4_extremal(args.n)


def cmd_coloring(args, out) -> int:
    if args.kind != "load" and args.n is None:
        raise GraphError("give --n")
    c = _build_coloring(args)
    obj = {
        "kind": "coloring",
        "n": c.n,
        "red": to_graph6(c.red_graph()),
        "blue": to_graph6(c.blue_graph()),
        "e_red": c.e_red,
        "e_blue": c.e_blue,
        "encoded": c.dumps(),
    }
    if args.against:
        g = parse_named(args.against)
        obj["tones"] = sorted(tone_set(c, g).achieved)
        obj["against"] = to_graph6(g)
    if args.clique_t:
        found = find_type_AB_clique(c, args.clique_t)
        obj["clique"] = None if found is None else {
            "type": found.kind, "colour": found.colour,
            "vertices": list(found.vertices), "monochromatic": found.monochromatic,
        }
    _emit(obj, out)
    return EXIT_OK


# -- census -------------------------------------------------------------------

CENSUS_FIELDS = ["graph6", "n", "e", "balanceable", "omnitonal", "bipartite", "r_tonal", "amoeba_window"]


def census_row(g: Graph, window: tuple[int, int] | None = None, budget: int = 200_000,
               timing: bool = False) -> dict:
    t0 = time.perf_counter()
    rep = tonal_report(g)
    row = {
        "graph6": rep.graph,
        "n": rep.n,
        "e": rep.e,
        "balanceable": rep.balanceable,
        "omnitonal": rep.omnitonal,
        "bipartite": rep.bipartite,
        "r_tonal": rep.r_tonal_mask,
        "amoeba_window": "",
    }
    if window is not None:
        h = g.without_isolated()
        lo, hi = max(window[0], h.n + 1), window[1]
        if h.e == 0 or h.n != g.n:
            row["amoeba_window"] = "skipped: isolated vertices"
        elif lo > hi:
            row["amoeba_window"] = "skipped: window below n(G)+1"
        else:
            try:
                row["amoeba_window"] = amoeba_verdict(h, lo, hi, budget=budget).verdict
            except ResourceError:
                row["amoeba_window"] = "skipped: budget"
    if timing:
        row["seconds"] = round(time.perf_counter() - t0, 4)
    return row


def _row_job(item):
    code, window, budget, timing = item
    return census_row(parse_graph6(code), window, budget, timing)


def cmd_census(args, out) -> int:
    graphs = []
    for lineno, g in _input_graphs(args):
        if isinstance(g, Exception):
            print(f"line {lineno}: {g}", file=sys.stderr)
            if not args.lenient:
                return EXIT_INPUT
            continue
        graphs.append(g)
    items = [(to_graph6(g), args.amoeba_window, args.budget, args.timing) for g in graphs]
    if args.jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_row_job, items, chunksize=64))
    else:
        rows = [census_row(g, args.amoeba_window, args.budget, args.timing) for g in graphs]

    summary = {
        "rows": len(rows),
        "balanceable": sum(r["balanceable"] for r in rows),
        "omnitonal": sum(r["omnitonal"] for r in rows),
        "bipartite": sum(r["bipartite"] for r in rows),
        "omnitonal_not_bipartite": sum(r["omnitonal"] and not r["bipartite"] for r in rows),
        "omnitonal_not_balanceable": sum(r["omnitonal"] and not r["balanceable"] for r in rows),
    }
    target = out if args.output in (None, "-") else open(args.output, "w", encoding="ascii", newline="")
    try:
        if args.format == "csv":
            fields = CENSUS_FIELDS + (["seconds"] if args.timing else [])
            writer = csv.DictWriter(target, fieldnames=fields, lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
            target.write("# summary " + " ".join(f"{k}={v}" for k, v in summary.items()) + "\n")
        else:
            for row in rows:
                _emit({"kind": "census_row", **row}, target)
            _emit({"kind": "census_summary", **summary}, target)
    finally:
        if target is not out:
            target.close()
    return EXIT_OK


# -- entry point ----------------------------------------------------------------

def _add_graph_args(p, many=False):
    if many:
        p.add_argument("--named", action="append", help="named graph (repeatable)")
        p.add_argument("--graph6", action="append", help="graph6 code (repeatable)")
        p.add_argument("--input", "-i", help="graph6 file, one per line; default stdin")
    else:
        p.add_argument("--named", help="named graph, e.g. K4, K1,4, P3, C6, S4, split1,5+e, paw")
        p.add_argument("--graph6", help="graph6 code")


def build_parser() -> argparse.ArgumentParser:
    jobs_default = len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)
    parser = argparse.ArgumentParser(
        prog="omnitonal", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="spectra and tonality flags per graph")
    _add_graph_args(p, many=True)

    p = sub.add_parser("amoeba", help="edge-replacement connectivity over a window of n")
    _add_graph_args(p)
    p.add_argument("--range", type=_parse_range, help="n window as a..b (default n(G)+1..n(G)+3)")
    p.add_argument("--budget", type=int, default=2_000_000, help="max copies per n")

    p = sub.add_parser("oracle", help="exhaustive bal / bal_r / ot / ex")
    p.add_argument("mode", choices=["bal", "bal_r", "ot", "ex"])
    _add_graph_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--strong", action="store_true", help="bal: require both floor and ceil tones")
    p.add_argument("--budget", type=int, default=oracle.DEFAULT_SCAN_BUDGET, help="max red bitmaps scanned")
    p.add_argument("--jobs", type=int, default=jobs_default)
    p.add_argument("--timing", action="store_true", help="include elapsed seconds")

    p = sub.add_parser("formula", help="closed forms and bounds")
    p.add_argument("name", choices=sorted([*_FORMULAS, "rtz_q", "zero_sum_pattern"]))
    for flag in ("n", "k", "t", "p", "q", "e"):
        p.add_argument(f"--{flag}", type=int)

    p = sub.add_parser("coloring", help="build a named coloring of K_n")
    p.add_argument("kind", choices=["typeA", "typeB", "split", "ot_star", "bal_K4", "load"])
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--extra-edge", action="store_true")
    p.add_argument("--spec", help="for load: 'n; hex' as printed in 'encoded'")
    p.add_argument("--against", help="named pattern; report its tone set")
    p.add_argument("--clique-t", type=int, help="search a type-A/B K_2t")

    p = sub.add_parser("census", help="classification table over a graph6 file")
    _add_graph_args(p, many=True)
    p.add_argument("--output", "-o", help="output path; default stdout")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--lenient", action="store_true", help="skip malformed lines with a warning")
    p.add_argument("--amoeba-window", type=_parse_range, help="also test amoeba connectivity for n in a..b")
    p.add_argument("--budget", type=int, default=200_000, help="max copies per amoeba test")
    p.add_argument("--jobs", type=int, default=jobs_default)
    p.add_argument("--timing", action="store_true")
    return parser


_COMMANDS = {
    "classify": cmd_classify,
    "amoeba": cmd_amoeba,
    "oracle": cmd_oracle,
    "formula": cmd_formula,
    "coloring": cmd_coloring,
    "census": cmd_census,
}


def main(argv=None, out=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    out = out or sys.stdout
    try:
        return _COMMANDS[args.command](args, out)
    except ResourceError as exc:
        print(f"resource budget exceeded: {exc} (estimate {exc.estimate})", file=sys.stderr)
        return EXIT_RESOURCE
    except Graph6Error as exc:
        print(f"graph6 error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (GraphError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
