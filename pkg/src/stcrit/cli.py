"""Command-line entry point: ``stcrit <command> ...``.

JSON on stdout, one-line diagnostics on stderr. Exit 0 on success or a
passing verdict, 1 on a failing check or negative answer, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import inspect
import json
import sys

from . import census, verify
from .coalescence import CoalescenceSpec, identify_vertices, vertex_set_coalescence
from .criticality import StCriticalChecker, enumerate_st_critical_sets
from .domination import all_mds, gamma
from .formats import parse_edge_list, parse_graph6, write_dot, write_edge_list, write_graph6
from .graph import Graph, GraphError, generate, mask_of, members
from .partition import achievable_part_counts, find_partition, verify_partition


class UsageError(Exception):
    pass


# -- inputs ----------------------------------------------------------------------


def _read_first_g6(stream) -> Graph:
    for line in stream:
        line = line.strip()
        if line and line != ">>graph6<<":
            return parse_graph6(line)
    raise UsageError("no graph6 record on input")


def load_graph(spec: str | None, g6: str | None, edges: str | None) -> Graph:
    given = [x for x in (spec, g6, edges) if x is not None]
    if len(given) != 1:
        raise UsageError("exactly one of --spec, --g6, --edges is required")
    if spec is not None:
        return generate(spec)
    if g6 is not None:
        return _read_first_g6(sys.stdin) if g6 == "-" else parse_graph6(g6)
    with open(edges) as fh:
        return parse_edge_list(fh.read())


def _graph_arg(args, prefix: str = "") -> Graph:
    return load_graph(getattr(args, prefix + "spec"), getattr(args, prefix + "g6"),
                      getattr(args, prefix + "edges"))


def parse_pairs(text: str) -> list[tuple[int, int]]:
    """``"0:1,2:3"`` -> ``[(0, 1), (2, 3)]``."""
    out = []
    for tok in filter(None, text.split(",")):
        a, sep, b = tok.partition(":")
        if not sep:
            raise UsageError(f"bad pair {tok!r}, expected u:v")
        try:
            out.append((int(a), int(b)))
        except ValueError:
            raise UsageError(f"bad pair {tok!r}, expected integers") from None
    if not out:
        raise UsageError("--at needs at least one u:v pair")
    return out


def parse_int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t]
    except ValueError:
        raise UsageError(f"bad integer list {text!r}") from None


# -- commands ------------------------------------------------------------------------
# Each returns (report dict, exit code).


def cmd_gamma(args):
    G = _graph_arg(args)
    cert = gamma(G)
    return {"n": G.n, "gamma": cert.gamma, "witness": members(cert.witness)}, 0


def cmd_mds(args):
    G = _graph_arg(args)
    res = all_mds(G, limit=args.limit)
    sets = [members(D) for D in res.sets]
    return {"n": G.n, "gamma": len(sets[0]), "count": len(sets),
            "truncated": res.truncated, "sets": sets}, 0


def cmd_critical(args):
    G = _graph_arg(args)
    chk = StCriticalChecker(G)
    crit = chk.critical_vertices()
    return {"n": G.n, "gamma": chk.gamma, "critical": crit,
            "vertex_critical": len(crit) == G.n}, 0


def cmd_stcrit(args):
    G = _graph_arg(args)
    chk = StCriticalChecker(G)
    if args.set is not None:
        S = mask_of(parse_int_list(args.set))
        G.check_set(S)
        cert = chk.check(S)
        rep = {"n": G.n, "gamma": chk.gamma, "set": members(S), "st_critical": cert is not None,
               "witness": members(cert.witness) if cert else None}
        return rep, 0 if cert else 1
    sets = enumerate_st_critical_sets(G, args.max_size, chk)
    return {"n": G.n, "gamma": chk.gamma,
            "sets": [{"set": members(c.set), "witness": members(c.witness)} for c in sets]}, 0


def cmd_partition(args):
    G = _graph_arg(args)
    part = find_partition(G, args.parts)
    rep = {"n": G.n, "l": args.parts, "found": part is not None, "parts": [], "witnesses": [],
           "sizes": [], "verified": False}
    if part is not None:
        rep.update(parts=part.as_lists(), witnesses=[members(c.witness) for c in part.certificates],
                   sizes=list(part.sizes), verified=verify_partition(G, part.parts))
    return rep, 0 if rep["verified"] else 1


def cmd_sequences(args):
    G = _graph_arg(args)
    return achievable_part_counts(G).as_dict(), 0


def cmd_coalesce(args):
    G = _graph_arg(args)
    H = _graph_arg(args, "other_")
    pairs = tuple(parse_pairs(args.at))
    co = vertex_set_coalescence(CoalescenceSpec(G, H, pairs))
    J = co.graph
    gg, gh, gj = gamma(G).gamma, gamma(H).gamma, gamma(J)
    k = len(pairs)
    return {
        "n": J.n, "g6": write_graph6(J), "edges": [list(e) for e in J.edges()],
        "map_g": list(co.map_g), "map_h": list(co.map_h), "gamma_g": gg, "gamma_h": gh,
        "gamma": gj.gamma, "witness": members(gj.witness),
        "bounds_ok": gg + gh - k <= gj.gamma <= gg + gh,
    }, 0


def cmd_identify(args):
    from .coalescence import verify_identification

    J = _graph_arg(args)
    pairs = parse_pairs(args.at)
    if len(pairs) != 1:
        raise UsageError("identify takes exactly one x:y pair")
    x, y = pairs[0]
    if not (0 <= x < J.n and 0 <= y < J.n):
        raise UsageError(f"vertices must lie in [0, {J.n})")
    merged, id_map = identify_vertices(J, x, y)
    r = verify_identification(J, x, y)
    return {
        "n": merged.n, "g6": write_graph6(merged), "map": [id_map[v] for v in range(J.n)],
        "gamma_before": r.gamma_j, "gamma_after": r.gamma_merged, "compatible": r.compatible,
        "x_critical": r.x_critical, "y_critical": r.y_critical,
        "sandwich_ok": r.sandwich_ok, "iff_ok": r.iff_ok,
    }, 0 if r.ok else 1


def cmd_gen(args):
    G = generate(args.graph)
    if args.format == "g6":
        return write_graph6(G) + "\n", 0
    if args.format == "edges":
        return write_edge_list(G), 0
    if args.format == "dot":
        return write_dot(G), 0
    return {"n": G.n, "g6": write_graph6(G), "edges": [list(e) for e in G.edges()]}, 0


def _census_stream(args):
    if args.g6 is None:
        return None
    if args.g6 == "-":
        return list(census.ingest_graph6(sys.stdin))
    with open(args.g6) as fh:
        return list(census.ingest_graph6(fh))


def cmd_census(args):
    name, w = args.check, args.workers
    graphs = _census_stream(args)
    if graphs is not None and name not in ("l-nonexistence", "c4-uniqueness"):
        raise UsageError("--g6 input is only supported for l-nonexistence and c4-uniqueness")
    if name == "l-nonexistence":
        ls = parse_int_list(args.ls) if args.ls else sorted(census.NONEXISTENCE_LS)
        rep = census.check_l_nonexistence(args.max_n or 7, ls, args.min_n, graphs, w)
    elif name == "c4-uniqueness":
        rep = census.check_c4_uniqueness(args.max_n or 8, graphs, w)
    elif name == "c6-members":
        rep = census.check_c6_members()
    elif name == "h48":
        rep = census.reconstruct_h48(w)
    elif name == "family":
        if args.l is None:
            raise UsageError("census --check family needs --l")
        rep = census.verify_family_sufficiency(args.l)
    elif name == "vizing-comb":
        rep = census.check_vizing_comb(args.max_n or 8, args.max_h, w)
    elif name == "bipartite":
        rep = census.explore_conjecture_bipartite(args.max_n or 8, w)
    else:
        rep = census.find_multi_sequence_graph(args.max_n or 8, w)
    return rep.as_dict(), 0 if rep.passed else 1


def cmd_verify(args):
    fn = verify.SWEEPS[args.check]
    given = {"trials": args.trials, "seed": args.seed, "n_max": args.max_n}
    params = inspect.signature(fn).parameters
    kwargs = {k: v for k, v in given.items() if v is not None and k in params}
    rep = fn(**kwargs)
    return rep.as_dict(), 0 if rep.verdict == "pass" else 1


# -- output ----------------------------------------------------------------------------


def _cell(v) -> str:
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_cell(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_cell(x)}" for k, x in sorted(v.items())) + "}"
    if isinstance(v, float):
        return f"{v:.3f}"
    return str(v).lower() if isinstance(v, bool) else str(v)


def format_report(report, mode: str = "json") -> str:
    """JSON (sorted keys, stable) or a plain aligned table."""
    if isinstance(report, str):
        return report
    if mode == "json":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    lines = []
    width = max((len(k) for k in report), default=0)
    for key in sorted(report):
        val = report[key]
        if isinstance(val, list) and val and all(isinstance(x, dict) for x in val):
            lines.append(f"{key}:")
            lines.extend(f"  {_cell(row)}" for row in val)
        else:
            lines.append(f"{key.ljust(width)}  {_cell(val)}")
    return "\n".join(lines) + "\n"


# -- parser ----------------------------------------------------------------------------


def _add_input(p, prefix: str = "", required_help: str = "graph"):
    flag = "--" + prefix.replace("_", "-")
    p.add_argument(flag + "spec", dest=prefix + "spec", metavar="SPEC",
                   help=f"{required_help} as a family spec, e.g. cycle:9")
    p.add_argument(flag + "g6", dest=prefix + "g6", metavar="G6",
                   help=f"{required_help} as a graph6 string ('-' reads stdin)")
    p.add_argument(flag + "edges", dest=prefix + "edges", metavar="FILE",
                   help=f"{required_help} as an edge-list file")


def _add_output(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", dest="mode", action="store_const", const="json", help="JSON output (default)")
    g.add_argument("--table", dest="mode", action="store_const", const="table", help="plain table output")
    p.set_defaults(mode="json")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="stcrit", description="Domination and strong critical vertex-set toolkit.")
    sub = ap.add_subparsers(dest="command", required=True)

    def graph_cmd(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        _add_input(p)
        _add_output(p)
        p.set_defaults(fn=fn)
        return p

    graph_cmd("gamma", cmd_gamma, "domination number with a witness set")
    p = graph_cmd("mds", cmd_mds, "list minimum dominating sets")
    p.add_argument("--limit", type=int, default=10_000)
    graph_cmd("critical", cmd_critical, "critical vertices")
    p = graph_cmd("stcrit", cmd_stcrit, "enumerate st-critical sets, or test one with --set")
    p.add_argument("--set", help="comma-separated vertices to test")
    p.add_argument("--max-size", type=int)
    p = graph_cmd("partition", cmd_partition, "partition V(G) into l st-critical parts")
    p.add_argument("--parts", type=int, required=True, metavar="L")
    graph_cmd("sequences", cmd_sequences, "all achievable part counts and size sequences")
    p = graph_cmd("coalesce", cmd_coalesce, "vertex(-set) coalescence of two graphs")
    _add_input(p, "other_", "second graph")
    p.add_argument("--at", required=True, help="identified pairs u:v[,u2:v2...] (u in G, v in H)")
    p = graph_cmd("identify", cmd_identify, "identify two vertices of one graph")
    p.add_argument("--at", required=True, help="x:y")

    p = sub.add_parser("gen", help="emit a graph from a family spec")
    p.add_argument("graph", metavar="SPEC")
    p.add_argument("--format", choices=("g6", "edges", "dot", "json"), default="g6")
    _add_output(p)
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("census", help="exhaustive campaigns over connected graphs")
    p.add_argument("--check", required=True, choices=sorted(census.CHECKS))
    p.add_argument("--max-n", type=int)
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--ls", help="part counts for l-nonexistence, e.g. 2,3,5")
    p.add_argument("--l", type=int, help="part count for --check family")
    p.add_argument("--max-h", type=int, default=6, help="largest H order for vizing-comb")
    p.add_argument("--g6", metavar="FILE", help="graph6 stream instead of built-in generation ('-' = stdin)")
    p.add_argument("--workers", type=int, default=1)
    _add_output(p)
    p.set_defaults(fn=cmd_census)

    p = sub.add_parser("verify", help="seeded randomized or exhaustive property sweeps")
    p.add_argument("check", choices=sorted(verify.SWEEPS))
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int)
    _add_output(p)
    p.set_defaults(fn=cmd_verify)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report, code = args.fn(args)
    except (UsageError, GraphError, OSError) as exc:
        print(f"stcrit: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(format_report(report, args.mode))
    return code


if __name__ == "__main__":
    sys.exit(main())
