"""Command-line front end.

Exit codes: 0 success or passing sweep, 1 sweep found a counterexample,
2 usage error (bad flags, malformed graph6), 3 contract violation.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from . import bounds, constructions, repair, verify
from .deficiency import DeficiencyQuery, HFactor, Hamiltonicity, KrFactor, deficiency
from .errors import ContractError, GraphInputError
from .factors import hamilton_cycle, kr_factor
from .graph import Graph, join, parse_adjlist
from .graph6 import emit_graph6, parse_graph6


EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_CONTRACT = 0, 1, 2, 3


def _common(suppress: bool) -> argparse.ArgumentParser:
    """Global flags, accepted both before and after the subcommand."""
    kw = {"default": argparse.SUPPRESS} if suppress else {}
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", help="machine-readable output", **kw)
    p.add_argument("--threads", type=int, help="worker processes for sweeps",
                   **(kw or {"default": 1}))
    p.add_argument("--seed", type=int, help="seed for randomised checks",
                   **(kw or {"default": 0}))
    p.add_argument("--iso-dedup", action="store_true",
                   help="sweep one graph per isomorphism class", **kw)
    p.add_argument("-v", "--verbose", action="store_true", **kw)
    return p


def _graph_arg(p: argparse.ArgumentParser, required: bool = True) -> None:
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--g6", help="graph in graph6 format")
    g.add_argument("--graph", type=Path, help="adjacency-list file: n, then 'u v' lines")


def _load_graph(args) -> Graph:
    if getattr(args, "g6", None):
        return parse_graph6(args.g6)
    text = args.graph.read_text()
    first = text.strip().splitlines()[0] if text.strip() else ""
    if first.startswith(">>graph6<<") or (first and not first.split()[0].isdigit()):
        return parse_graph6(first)
    return parse_adjlist(text)


def build_parser() -> argparse.ArgumentParser:
    leaf = _common(suppress=True)
    parser = argparse.ArgumentParser(
        prog="graphdef", parents=[_common(suppress=False)],
        description="Exact deficiency computations and bound verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    con = sub.add_parser("construct", help="emit an extremal graph as graph6")
    con_sub = con.add_subparsers(dest="family", required=True)
    for name in ("ex1", "ex2"):
        p = con_sub.add_parser(name, parents=[leaf])
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--t", type=int, required=True)
        p.add_argument("--r", type=int, required=True)
    for name in ("ex1band", "ex2band"):
        p = con_sub.add_parser(name, parents=[leaf])
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--t", type=int, required=True)
    p = con_sub.add_parser("exh", parents=[leaf])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--h", required=True, help="H in graph6")
    p = con_sub.add_parser("exhprime", parents=[leaf])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--s", type=int, required=True)

    bnd = sub.add_parser("bound", help="evaluate a closed-form edge bound")
    bnd_sub = bnd.add_subparsers(dest="which", required=True)
    p = bnd_sub.add_parser("kr", parents=[leaf])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    for name in ("triangle", "hamilton"):
        p = bnd_sub.add_parser(name, parents=[leaf])
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--t", type=int, required=True)
    p = bnd_sub.add_parser("bandwidth", parents=[leaf])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--eps", type=Fraction, required=True)

    fac = sub.add_parser("factor", parents=[leaf], help="K_r-factor or Hamilton cycle of G*K_t")
    group = fac.add_mutually_exclusive_group(required=True)
    group.add_argument("--r", type=int)
    group.add_argument("--hamilton", action="store_true")
    _graph_arg(fac)
    fac.add_argument("--t", type=int, default=0)

    dfc = sub.add_parser("deficiency", parents=[leaf], help="least t giving the property")
    dfc.add_argument("--property", choices=["kr", "ham", "h"], required=True)
    dfc.add_argument("--r", type=int)
    dfc.add_argument("--h", help="tile graph H in graph6 (for --property h)")
    dfc.add_argument("--t-cap", type=int)
    _graph_arg(dfc)

    ver = sub.add_parser("verify", help="exhaustive verification sweeps")
    ver_sub = ver.add_subparsers(dest="task", required=True)
    p = ver_sub.add_parser("kr", parents=[leaf])
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--nmin", type=int, default=2)
    p.add_argument("--r", type=int, required=True)
    p = ver_sub.add_parser("hamilton", parents=[leaf])
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--nmin", type=int, default=1)
    p = ver_sub.add_parser("hclasses", parents=[leaf])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--h", required=True, help="H in graph6")
    p = ver_sub.add_parser("lemma43", parents=[leaf])
    p.add_argument("--nmax", type=int, default=60)
    p.add_argument("--rmax", type=int, default=8)
    p = ver_sub.add_parser("repair", parents=[leaf])
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--nmax", type=int, default=10)
    p.add_argument("--tmax", type=int, default=4)
    p.add_argument("--r", type=int, default=3)

    rep = sub.add_parser("repair", help="run a rewiring transform on one instance")
    rep_sub = rep.add_subparsers(dest="kind", required=True)
    p = rep_sub.add_parser("vertex", parents=[leaf])
    _graph_arg(p)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--v", type=int, required=True)
    p = rep_sub.add_parser("edge", parents=[leaf])
    _graph_arg(p)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    return parser


def _print(args, payload: dict, text: str) -> None:
    print(json.dumps(payload, sort_keys=True) if args.json else text)


def _cmd_construct(args) -> int:
    fam = args.family
    if fam in ("ex1", "ex2"):
        p = constructions.RFactorParams(args.n, args.t, args.r)
        g = constructions.ex1_factor(p) if fam == "ex1" else constructions.ex2_factor(p)
    elif fam == "ex1band":
        g = constructions.ex1_band(args.n, args.t)
    elif fam == "ex2band":
        g = constructions.ex2_band(args.n, args.t)
    elif fam == "exh":
        g = constructions.ex_h(args.n, args.t, parse_graph6(args.h))
    else:
        g = constructions.ex_h_prime(args.n, args.t, args.s)
    g6 = emit_graph6(g)
    _print(args, {"g6": g6, "n": g.n, "edges": g.num_edges}, g6)
    return EXIT_PASS


def _cmd_bound(args) -> int:
    if args.which == "kr":
        res = bounds.kr_bound(constructions.RFactorParams(args.n, args.t, args.r))
    elif args.which == "triangle":
        res = bounds.triangle_bound(args.n, args.t)
    elif args.which == "hamilton":
        res = bounds.hamilton_bound(args.n, args.t)
    else:
        res = bounds.bandwidth_bound(args.n, args.t, args.eps)
    print(json.dumps(res.to_dict(), sort_keys=True))
    return EXIT_PASS


def _cmd_factor(args) -> int:
    g = join(_load_graph(args), args.t)
    if args.hamilton:
        cert = hamilton_cycle(g)
    else:
        cert = kr_factor(g, args.r)
    if cert is None:
        _print(args, {"found": False}, "none")
    else:
        payload = {"found": True, **json.loads(cert.to_json())}
        _print(args, payload, " ".join("{" + ",".join(map(str, t)) + "}" for t in cert.tiles))
    return EXIT_PASS


def _cmd_deficiency(args) -> int:
    g = _load_graph(args)
    if args.property == "kr":
        if args.r is None:
            raise GraphInputError("--r is required for --property kr")
        prop = KrFactor(args.r)
    elif args.property == "h":
        if args.h is None:
            raise GraphInputError("--h is required for --property h")
        prop = HFactor(parse_graph6(args.h))
    else:
        prop = Hamiltonicity()
    value = deficiency(DeficiencyQuery(prop, g, args.t_cap))
    _print(args, {"deficiency": value}, str(value))
    return EXIT_PASS


def _cmd_verify(args) -> int:
    task = args.task
    if task == "kr":
        rep = verify.verify_kr_theorem(args.nmax, args.r, args.iso_dedup, args.threads, args.nmin)
    elif task == "hamilton":
        rep = verify.verify_hamilton_theorem(args.nmax, args.iso_dedup, args.threads, args.nmin)
    elif task == "hclasses":
        rep = verify.verify_h_classes(args.n, args.t, parse_graph6(args.h))
    elif task == "lemma43":
        rep = verify.verify_lemma43(args.nmax, args.rmax)
    else:
        rep = verify.verify_repair(args.samples, args.seed, args.r, args.nmax, args.tmax)
    text = (f"{rep.task}: {rep.verdict} ({rep.graphs_checked} checked, "
            f"{len(rep.counterexamples)} counterexamples, {rep.elapsed:.2f}s)")
    _print(args, rep.to_dict(), text)
    return EXIT_PASS if rep.passed else EXIT_FAIL


def _cmd_repair(args) -> int:
    g = _load_graph(args)
    if args.kind == "vertex":
        g2 = repair.saturate_vertex(g, args.v)
        t_prime = kr_factor(join(g2, args.t), args.r)
        if t_prime is None:
            raise ContractError("saturated graph joined with K_t has no K_r-factor")
        out, case = repair.rewire_vertex_with_case(g, args.t, args.v, t_prime)
        payload = {"case": case, "input": [list(t) for t in t_prime.tiles],
                   "output": [list(t) for t in out.tiles]}
    else:
        g2, ctx = repair.edge_lemma_transform(g, args.x, args.y, args.r)
        payload = {"g6": emit_graph6(g2), "q": list(ctx.q), "edges_before": g.num_edges,
                   "edges_after": g2.num_edges}
        t_prime = kr_factor(join(g2, args.t), args.r)
        if t_prime is not None:
            out = repair.rewire_factor_clique(g2, args.t, ctx, t_prime)
            payload.update(input=[list(t) for t in t_prime.tiles],
                           output=[list(t) for t in out.tiles])
    _print(args, payload, json.dumps(payload))
    return EXIT_PASS


COMMANDS = {
    "construct": _cmd_construct,
    "bound": _cmd_bound,
    "factor": _cmd_factor,
    "deficiency": _cmd_deficiency,
    "verify": _cmd_verify,
    "repair": _cmd_repair,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"graphdef: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ContractError as exc:
        print(f"graphdef: contract violation: {exc}", file=sys.stderr)
        return EXIT_CONTRACT


if __name__ == "__main__":
    sys.exit(main())
