"""Command-line front end.

Graph arguments are paths to graph files; a bare fixture name such as ``GL``
(or ``GL.graph`` when no such file exists) loads the bundled copy.
"""

from __future__ import annotations

import argparse
import os
import sys

from .algebra import LeavittAlgebra, graded_components
from .errors import LeavittError, NotACycleGraph
from .expr import parse_expr
from .fixtures import NAMES, fixture
from .graph import Graph, check_condition_K, check_condition_L, is_cofinal, parse_graph
from .ideals import all_saturated_hereditary, hasse_covers, is_basically_simple, quotient_graph, simplicity_report
from .oracle import acyclic_family, base_change, cycle_family, differential_check, verify_e_family
from .rings import RingHom, parse_ring
from .sampling import ElementSampler
from .witness import full_witness

__all__ = ["main", "run_command", "load_graph"]


def load_graph(arg: str) -> Graph:
    if os.path.exists(arg):
        with open(arg, encoding="utf-8") as fh:
            return parse_graph(fh.read())
    stem = os.path.basename(arg)
    if stem.endswith(".graph"):
        stem = stem[: -len(".graph")]
    if stem in NAMES:
        return fixture(stem)
    raise FileNotFoundError(f"no graph file {arg!r} and no bundled graph of that name")


def _ring(text: str):
    try:
        return parse_ring(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _yes(flag: bool) -> str:
    return "true" if flag else "false"


def cmd_check(args, out):
    g = load_graph(args.graph)
    cond = args.condition
    if cond == "L":
        ok, cycle = check_condition_L(g)
        out.append(f"condition L: {_yes(ok)}")
        if not ok:
            out.append(f"cycle without exit: {cycle}")
    elif cond == "K":
        ok, v = check_condition_K(g)
        out.append(f"condition K: {_yes(ok)}")
        if not ok:
            out.append(f"witness vertex: {v}")
    elif cond == "cofinal":
        out.append(f"cofinal: {_yes(is_cofinal(g))}")
    else:
        out.append(f"basically simple: {_yes(is_basically_simple(g))}")
        rep = simplicity_report(g)
        labels = (
            "L and trivial lattice",
            "K and trivial lattice",
            "L, cofinal, sinks reachable",
            "K, cofinal, sinks reachable",
        )
        for label, val in zip(labels, rep.as_tuple()):
            out.append(f"  {label}: {_yes(val)}")
    return 0


def cmd_ideals(args, out):
    g = load_graph(args.graph)
    sets = all_saturated_hereditary(g)
    out.append(f"{len(sets)} saturated hereditary subsets")
    for i, H in enumerate(sets):
        out.append(f"  [{i}] {H}")
    out.append("covers:")
    for i, j in hasse_covers(g, sets):
        out.append(f"  [{i}] < [{j}]")
    return 0


def cmd_eval(args, out):
    g = load_graph(args.graph)
    x = parse_expr(args.expr, g, args.ring)
    out.append(str(x))
    for k, part in graded_components(x).items():
        out.append(f"  degree {k}: {part}")
    return 0


def cmd_witness(args, out):
    g = load_graph(args.graph)
    x = parse_expr(args.expr, g, args.ring)
    out.append(str(full_witness(g, x)))
    return 0


def cmd_quotient(args, out):
    g = load_graph(args.graph)
    H = [v.strip() for v in args.set.split(",") if v.strip()]
    out.append(quotient_graph(g, H).to_text().rstrip("\n"))
    return 0


def cmd_basechange(args, out):
    g = load_graph(args.graph)
    h = RingHom(args.source, args.target)
    x = parse_expr(args.expr, g, args.source)
    out.append(str(base_change(h, g, x)))
    return 0


def cmd_oracle(args, out):
    g = load_graph(args.graph)
    if g.is_acyclic():
        fam, kind = acyclic_family(g, args.ring), "acyclic"
    else:
        try:
            fam, kind = cycle_family(g, args.ring), "cycle"
        except NotACycleGraph:
            raise NotACycleGraph("oracle needs an acyclic graph or a single cycle") from None
    family_ok = verify_e_family(g, fam)
    out.append(f"{kind} family relations: {'pass' if family_ok else 'FAIL'}")
    sampler = ElementSampler(LeavittAlgebra(g, args.ring), seed=args.seed)
    passed, failed = differential_check(fam, (sampler.pair() for _ in range(args.pairs)))
    out.append(f"pairs passed: {passed}")
    out.append(f"pairs failed: {failed}")
    return 0 if family_ok and not failed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="leavitt", description="Leavitt path algebra toolkit")
    p.add_argument("--seed", type=int, default=0, help="seed for every random choice (default 0)")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="decide a graph condition")
    c.add_argument("graph")
    c.add_argument("--condition", required=True, choices=["L", "K", "cofinal", "basic-simple"])
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("ideals", help="list saturated hereditary subsets and their covers")
    c.add_argument("graph")
    c.set_defaults(func=cmd_ideals)

    for name, func, helptext in (
        ("eval", cmd_eval, "print the canonical form and graded components"),
        ("witness", cmd_witness, "reduce a nonzero element to a multiple of a vertex"),
    ):
        c = sub.add_parser(name, help=helptext)
        c.add_argument("graph")
        c.add_argument("--ring", type=_ring, default="z")
        c.add_argument("--expr", required=True)
        c.set_defaults(func=func)

    c = sub.add_parser("quotient", help="print the quotient graph by a saturated hereditary set")
    c.add_argument("graph")
    c.add_argument("--set", required=True, help="comma-separated vertex names")
    c.set_defaults(func=cmd_quotient)

    c = sub.add_parser("basechange", help="push an element along a coefficient map")
    c.add_argument("graph")
    c.add_argument("--from", dest="source", type=_ring, required=True)
    c.add_argument("--to", dest="target", type=_ring, required=True)
    c.add_argument("--expr", required=True)
    c.set_defaults(func=cmd_basechange)

    c = sub.add_parser("oracle", help="differential test against a matrix representation")
    c.add_argument("graph")
    c.add_argument("--ring", type=_ring, default="z")
    c.add_argument("--pairs", type=int, default=500)
    c.set_defaults(func=cmd_oracle)
    return p


def run_command(argv) -> tuple[int, str]:
    """Run one command; returns ``(exit status, report text)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), ""
    out: list[str] = []
    try:
        status = args.func(args, out)
    except (LeavittError, ValueError, OSError) as exc:
        return 1, f"error: {exc}\n"
    return status, "\n".join(out) + "\n"


def main(argv=None) -> int:
    status, text = run_command(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if status == 0 or not text.startswith("error:") else sys.stderr
    stream.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
