"""Command-line front end. Every verb prints one JSON document on stdout.

Exit codes: 0 success, 2 precondition not met (NotApplicable), 3 malformed
input or arguments, 4 budget or cap exhausted.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import generators
from .core import gated_hull
from .cover import DEFAULT_CAP, universal_cover_ball
from .errors import (BudgetExceeded, CapReached, GraphFormatError, NotAClosedWalk,
                     NotApplicable, RadiusTooLarge, RankDiverges)
from .graph import read_graph, serialize_graph, write_graph, Graph
from .metric import bfs_order, fill_cycle, is_distance_preserving, verify_hyperbolicity_bounds
from .recognition import decide_simple_connectivity, recognize
from .swm import (barycentric_graph, barycentric_iterate, normal_bg_path, partial_thickening,
                  thickening, wm_skeleton, diagonal_extension)
from .zeroext import DEFAULT_BUDGET, ZeroExtInstance, approx2, solve_exact


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}") from None


def _graph(args) -> Graph:
    if not args.graph:
        raise UsageError("--graph is required")
    return read_graph(args.graph)


def _emit_graph(args, g: Graph) -> dict:
    if args.out:
        write_graph(g, args.out)
    return {"n": g.n, "m": g.m, "graph": serialize_graph(g)}


# -- verbs ------------------------------------------------------------------
def cmd_recognize(args, g):
    out = recognize(g).to_json()
    try:
        sc = decide_simple_connectivity(g)
        out["simply-connected"] = {"verdict": "yes" if sc.simply_connected else "no",
                                   "witness": None, "complex": sc.complex}
    except NotApplicable:
        out["simply-connected"] = {"verdict": "not-evaluated", "witness": None, "complex": None}
    return out


def cmd_hull(args, g):
    if args.set is None:
        raise UsageError("--set is required")
    return {"hull": sorted(gated_hull(g, _ints(args.set)))}


def cmd_gstar(args, g):
    bary = barycentric_iterate(g, args.iterations) if args.iterations > 1 else barycentric_graph(g)
    out = bary.to_json()
    out.update(_emit_graph(args, bary.graph))
    return out


def cmd_thicken(args, g):
    h = thickening(g) if args.k is None else partial_thickening(g, args.k)
    return _emit_graph(args, h)


def cmd_normalpath(args, g):
    if args.p is None or args.q is None:
        raise UsageError("--p and --q are required")
    path = normal_bg_path(g, args.p, args.q)
    return {"vertices": list(path.vertices), "length": len(path), "hulls": [sorted(h) for h in path.hulls]}


def cmd_zeroext(args, g):
    if not args.instance:
        raise UsageError("--instance is required")
    with open(args.instance, encoding="utf-8") as fh:
        try:
            inst = ZeroExtInstance.from_json(json.load(fh))
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"instance is not valid JSON: {exc}") from None
    out = {}
    exact = None
    if args.mode in ("exact", "both"):
        sol = solve_exact(g, inst, args.budget)
        exact = sol.cost
        out["exact"] = sol.to_json()
    if args.mode in ("approx", "both"):
        out["approx"] = approx2(g, inst, args.anchor, args.budget).to_json(exact)
    return out


def cmd_hyperbolicity(args, g):
    return verify_hyperbolicity_bounds(g, args.cap).to_json()


def cmd_bfs(args, g):
    if args.seed is None:
        raise UsageError("--seed is required for bfs")
    res = bfs_order(g, args.base, args.seed)
    ok, wit = is_distance_preserving(g, res.order)
    return {"order": list(res.order), "parent": list(res.parent), "base": res.base,
            "distance_preserving": ok, "witness": None if wit is None else list(wit)}


def cmd_fill(args, g):
    if args.cycle is None:
        raise UsageError("--cycle is required")
    return fill_cycle(g, _ints(args.cycle)).to_json()


def cmd_cover(args, g):
    if args.radius is None:
        raise UsageError("--radius is required")
    ball = universal_cover_ball(g, args.base, args.radius, args.cap or DEFAULT_CAP)
    out = ball.to_json()
    out.update(_emit_graph(args, ball.graph))
    return out


def cmd_diag(args, g):
    if args.k is not None:
        return _emit_graph(args, diagonal_extension(g, args.k))
    skel, rank = wm_skeleton(g, args.cap)
    out = _emit_graph(args, skel)
    out["rank"] = rank
    return out


def cmd_generate(args, _):
    kind, params = args.kind, args.params
    if kind == "random-swm":
        if args.seed is None:
            raise UsageError("--seed is required for random-swm")
        g = generators.random_swm(args.seed, args.max_vertices)
    elif kind == "cartesian-product":
        if len(params) != 2:
            raise UsageError("cartesian-product takes two graph files")
        g = generators.cartesian_product(read_graph(params[0]), read_graph(params[1]))
    elif kind == "gated-amalgam":
        if len(params) != 2 or args.interface1 is None or args.interface2 is None:
            raise UsageError("gated-amalgam takes two graph files plus --interface1/--interface2")
        g = generators.gated_amalgam(read_graph(params[0]), _ints(args.interface1),
                                     read_graph(params[1]), _ints(args.interface2))
    elif kind in generators.GENERATORS:
        try:
            nums = [int(p) for p in params]
            g = generators.GENERATORS[kind](*nums)
        except (TypeError, ValueError) as exc:
            raise UsageError(f"bad parameters for {kind}: {exc}") from None
    else:
        raise UsageError(f"unknown generator {kind!r}")
    return _emit_graph(args, g)


VERBS = {
    "recognize": cmd_recognize, "hull": cmd_hull, "gstar": cmd_gstar, "thicken": cmd_thicken,
    "normalpath": cmd_normalpath, "zeroext": cmd_zeroext, "hyperbolicity": cmd_hyperbolicity,
    "bfs": cmd_bfs, "fill": cmd_fill, "cover": cmd_cover, "diag": cmd_diag, "generate": cmd_generate,
}
BATCHABLE = {"recognize", "hyperbolicity", "thicken", "gstar", "diag"}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wmgraphs", description="Weakly modular graph toolkit")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    for verb in VERBS:
        p = sub.add_parser(verb)
        p.add_argument("--graph")
        p.add_argument("--out")
        p.add_argument("--seed", type=int)
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        p.add_argument("--cap", type=int)
        p.add_argument("--json", action="store_true", help="compact single-line JSON")
        if verb in BATCHABLE:
            p.add_argument("--manifest", help="file listing one graph path per line")
    sub.choices["hull"].add_argument("--set")
    sub.choices["gstar"].add_argument("--iterations", type=int, default=1)
    sub.choices["thicken"].add_argument("--k", type=int)
    sub.choices["diag"].add_argument("--k", type=int)
    sub.choices["normalpath"].add_argument("--p", type=int)
    sub.choices["normalpath"].add_argument("--q", type=int)
    z = sub.choices["zeroext"]
    z.add_argument("--instance")
    z.add_argument("--mode", choices=("exact", "approx", "both"), default="both")
    z.add_argument("--anchor", type=int, default=0)
    sub.choices["bfs"].add_argument("--base", type=int, default=0)
    sub.choices["fill"].add_argument("--cycle")
    c = sub.choices["cover"]
    c.add_argument("--base", type=int, default=0)
    c.add_argument("--radius", type=int)
    gen = sub.choices["generate"]
    gen.add_argument("kind")
    gen.add_argument("params", nargs="*")
    gen.add_argument("--max-vertices", type=int, default=40)
    gen.add_argument("--interface1")
    gen.add_argument("--interface2")
    return parser


def _exit_code(exc) -> int:
    if isinstance(exc, NotApplicable):
        return 2
    if isinstance(exc, (BudgetExceeded, CapReached, RadiusTooLarge, RankDiverges)):
        return 4
    return 3


HANDLED = (NotApplicable, BudgetExceeded, CapReached, RadiusTooLarge, RankDiverges,
           GraphFormatError, NotAClosedWalk, UsageError, ValueError, OSError)


def _run_one(args, path):
    """(exit code, JSON payload) for a single graph."""
    try:
        g = None if args.verb == "generate" else read_graph(path) if path else _graph(args)
        return 0, VERBS[args.verb](args, g)
    except HANDLED as exc:
        payload = {"error": type(exc).__name__, "message": str(exc)}
        report = getattr(exc, "report", None)
        if report is not None:
            payload["report"] = report.to_json()
        return _exit_code(exc), payload


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 3
    manifest = getattr(args, "manifest", None)
    if manifest:
        try:
            with open(manifest, encoding="utf-8") as fh:
                paths = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 3
        args.out = None
        results, code = {}, 0
        for path in paths:
            c, payload = _run_one(args, path)
            results[path] = payload
            code = max(code, c)
        doc = results
    else:
        code, doc = _run_one(args, None)
    if code:
        print(f"error: {doc.get('message', '') if isinstance(doc, dict) else ''}", file=sys.stderr)
    print(json.dumps(doc, sort_keys=True, indent=None if args.json else 2))
    return code


if __name__ == "__main__":
    sys.exit(main())
