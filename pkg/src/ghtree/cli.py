"""Command line interface: ``ghtree <command> ...``.

Exit codes: 0 success, 2 verification or randomized failure after retries,
3 input error, 4 oracle refused.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bench import run_suite, scaling_suite, summarize
from .config import DEFAULT_CONFIG
from .decomposition import find_threshold
from .errors import GHTreeError, OracleRefusedError, RandomizedFailureError
from .generators import KINDS, generate
from .graph import format_graph, parse_graph
from .hypergraph import Hypergraph, format_hypergraph, parse_hypergraph
from .isolating import compute_isolating_cuts
from .maxflow import maxflow
from .oracle import MAXFLOW_ORACLE_CAP, verify_ghtree
from .partial import partial_ghtree
from .recursive import compute_ghtree
from .rng import RngHandle
from .tree import format_tree, read_tree
from .validation import check_terminals, read_groups, read_terminals

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_REFUSED = 0, 2, 3, 4

GLOBAL_DEFAULTS = {
    "seed": 0,
    "format": None,
    "stats": None,
    "workers": 1,
    "classic": False,
    "oracle_cap": MAXFLOW_ORACLE_CAP,
}


def _globals_parser() -> argparse.ArgumentParser:
    # defaults are suppressed so the flags work before or after the command
    p = argparse.ArgumentParser(add_help=False)
    S = argparse.SUPPRESS
    p.add_argument("--seed", type=int, default=S, help="random seed (unsigned 64-bit)")
    p.add_argument("--format", choices=("graph", "hyper"), default=S, help="input file format")
    p.add_argument("--stats", default=S, help="append run statistics as a JSON line to this path")
    p.add_argument("--workers", type=int, default=S, help="parallel bench workers")
    p.add_argument("--classic", action="store_true", default=S, help="force the classic algorithm")
    p.add_argument("--oracle-cap", type=int, default=S, help="largest n the all-pairs oracle accepts")
    return p


def _opt(args, name):
    return getattr(args, name, GLOBAL_DEFAULTS[name])


def _load(path, args):
    text = Path(path).read_text()
    fmt = _opt(args, "format")
    if getattr(args, "hyper", False):
        fmt = "hyper"
    if fmt is None:
        first = next((ln.split("#", 1)[0].split() for ln in text.splitlines()
                      if ln.split("#", 1)[0].strip()), [""])
        fmt = "hyper" if first[0] == "h" else "graph"
    return parse_hypergraph(text) if fmt == "hyper" else parse_graph(text)


def _terminals(args, G):
    path = getattr(args, "terminals", None)
    return check_terminals(None if path is None else read_terminals(path), G.n)


def _ids(arr) -> str:
    return " ".join(str(int(x)) for x in arr)


def _emit(text: str, out):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _append_stats(path, row):
    if path:
        with open(path, "a") as fh:
            fh.write(json.dumps(row, sort_keys=True) + "\n")


# -- commands -------------------------------------------------------------------


def cmd_build(args):
    G = _load(args.graph, args)
    U = _terminals(args, G)
    seed = _opt(args, "seed")
    T = compute_ghtree(G, U, seed, DEFAULT_CONFIG, classic=_opt(args, "classic"), verify=args.verify)
    _emit(f"# seed {seed}\n" + format_tree(T), args.output)
    st = T.stats
    _append_stats(_opt(args, "stats"), {
        "depth": st.depth,
        "per_level_edges": st.per_level_edges,
        "maxflow_calls": st.maxflow_calls,
        "maxflow_edge_sum": st.maxflow_edge_sum,
        "seed": seed,
        "wall_ms": st.wall_ms,
        "retries": st.retries,
    })
    return EXIT_OK


def cmd_query(args):
    T = read_tree(args.tree)
    value, side = T.query(args.s, args.t)
    print(f"value {value}")
    print(f"side {_ids(side)}")
    return EXIT_OK


def cmd_kcomp(args):
    T = read_tree(args.tree)
    for comp in T.k_components(args.k):
        print(_ids(comp))
    return EXIT_OK


def cmd_verify(args):
    G = _load(args.graph, args)
    T = read_tree(args.tree)
    U = _terminals(args, G) if getattr(args, "terminals", None) else T.terminals
    report = verify_ghtree(G, U, T, oracle_cap=_opt(args, "oracle_cap"))
    if args.json:
        print(json.dumps(report.to_dict(), sort_keys=True))
    else:
        for s, t, got, want in report.pair_errors:
            print(f"pair {s} {t} tree {got} mincut {want}")
        for a, b, w, got in report.edge_errors:
            print(f"edge {a} {b} weight {w} cut {got}")
        for msg in report.structure_errors:
            print(f"structure {msg}")
        if report.oracle_refused:
            print(f"oracle refused: n={G.n} exceeds cap, pair check skipped")
        print("certified" if report.ok and not report.oracle_refused else
              "edge certificates ok" if report.ok else "FAILED")
    if not report.ok:
        return EXIT_VERIFY
    return EXIT_REFUSED if report.oracle_refused else EXIT_OK


def cmd_maxflow(args):
    G = _load(args.graph, args)
    res = maxflow(G, args.s, args.t)
    print(f"value {res.value}")
    print(_ids(res.source_side))
    return EXIT_OK


def cmd_isocuts(args):
    G = _load(args.graph, args)
    groups = read_groups(args.groups)
    for cut in compute_isolating_cuts(G, groups):
        print(f"group {cut.group} value {cut.value} side {_ids(cut.side)}")
    return EXIT_OK


def cmd_threshold(args):
    G = _load(args.graph, args)
    U = _terminals(args, G)
    seed = _opt(args, "seed")
    res = find_threshold(G, U, RngHandle(seed))
    print(f"seed {seed}")
    print(f"tau {res.tau}")
    print(f"component {_ids(res.component_terminals)}")
    return EXIT_OK


def cmd_partial(args):
    G = _load(args.graph, args)
    U = _terminals(args, G)
    seed = _opt(args, "seed")
    P = partial_ghtree(G, U, args.tau, RngHandle(seed))
    print(f"seed {seed}")
    for i, grp in enumerate(P.nodes):
        print(f"class {i} {_ids(grp)}")
    for a, b, w in P.edges:
        print(f"edge {a} {b} {w}")
    return EXIT_OK


def cmd_gen(args):
    params = {}
    if args.kind in ("gnp", "gnm", "two-cliques-bridge", "tree-plus-edges", "hyper-random"):
        params["n"] = args.n
    if args.kind == "gnp":
        params["p"] = args.p
    if args.kind in ("gnm", "hyper-random"):
        params["m"] = args.m
    if args.kind == "grid":
        params.update(rows=args.rows, cols=args.cols)
    if args.kind == "tree-plus-edges":
        params["extra"] = args.extra
    if args.kind in ("gnp", "grid", "tree-plus-edges"):
        params["w_range"] = (args.wmin, args.wmax)
    if args.kind == "hyper-random":
        params["arity"] = (args.amin, args.amax)
    if args.kind in ("gnp", "gnm", "hyper-random") and args.connected is not None:
        params["connected"] = args.connected
    seed = _opt(args, "seed")
    G = generate(args.kind, seed, **params)
    text = format_hypergraph(G) if isinstance(G, Hypergraph) else format_graph(G)
    _emit(text, args.output)
    return EXIT_OK


def cmd_bench(args):
    if args.suite:
        suite = json.loads(Path(args.suite).read_text())
    else:
        suite = scaling_suite(tuple(args.sizes), args.density, tuple(args.seeds))
    out = args.out or _opt(args, "stats")
    rows = run_suite(suite, workers=_opt(args, "workers"), oracle_cap=_opt(args, "oracle_cap"), out=out)
    cols = ("n", "m", "terminals", "seed", "depth", "depth_bound", "instance_edges",
            "maxflow_calls", "maxflow_edge_sum", "c_size", "wall_ms", "verified")
    print(",".join(cols))
    for row in rows:
        print(",".join(f"{row[c]:.4f}" if isinstance(row[c], float) else str(row[c]) for c in cols))
    print(json.dumps(summarize(rows), sort_keys=True))
    return EXIT_OK


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    g = _globals_parser()
    parser = argparse.ArgumentParser(prog="ghtree", description="Exact Gomory-Hu trees.", parents=[g])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[g], help="build a Gomory-Hu tree")
    p.add_argument("graph")
    p.add_argument("--terminals")
    p.add_argument("--verify", action="store_true", help="certify the tree, retrying on failure")
    p.add_argument("--hyper", action="store_true", help="read a hypergraph file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("query", parents=[g], help="minimum cut between two terminals")
    p.add_argument("tree")
    p.add_argument("s", type=int)
    p.add_argument("t", type=int)
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("kcomp", parents=[g], help="k-connected terminal groups")
    p.add_argument("tree")
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_kcomp)

    p = sub.add_parser("verify", parents=[g], help="certify a tree against its graph")
    p.add_argument("graph")
    p.add_argument("tree")
    p.add_argument("--terminals")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("maxflow", parents=[g], help="(s, t) maxflow and minimal source side")
    p.add_argument("graph")
    p.add_argument("s", type=int)
    p.add_argument("t", type=int)
    p.set_defaults(func=cmd_maxflow)

    p = sub.add_parser("isocuts", parents=[g], help="minimum isolating cuts")
    p.add_argument("graph")
    p.add_argument("groups", help="file with one terminal group per line")
    p.set_defaults(func=cmd_isocuts)

    p = sub.add_parser("threshold", parents=[g], help="largest tau with a majority component")
    p.add_argument("graph")
    p.add_argument("--terminals")
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("partial", parents=[g], help="partial tree over (tau+1)-classes")
    p.add_argument("graph")
    p.add_argument("--tau", type=int, required=True)
    p.add_argument("--terminals")
    p.set_defaults(func=cmd_partial)

    p = sub.add_parser("gen", parents=[g], help="generate an instance")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--m", type=int, default=20)
    p.add_argument("--rows", type=int, default=3)
    p.add_argument("--cols", type=int, default=3)
    p.add_argument("--extra", type=int, default=10)
    p.add_argument("--wmin", type=int, default=1)
    p.add_argument("--wmax", type=int, default=1)
    p.add_argument("--amin", type=int, default=2)
    p.add_argument("--amax", type=int, default=3)
    p.add_argument("--connected", action=argparse.BooleanOptionalAction, default=None)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", parents=[g], help="run the scaling benchmark")
    p.add_argument("--suite", help="JSON list of {kind, params, seed}")
    p.add_argument("--sizes", type=int, nargs="+", default=[2000, 4000, 8000, 16000])
    p.add_argument("--density", type=int, default=10, help="edges per vertex")
    p.add_argument("--seeds", type=int, nargs="+", default=[0])
    p.add_argument("--out", help="JSON lines output (append)")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OracleRefusedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except RandomizedFailureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (GHTreeError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
