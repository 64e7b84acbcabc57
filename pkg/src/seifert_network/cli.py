"""Command-line interface: ``seifert-net <command> ...``.

Surgery literals are ``K,m`` where K is ``T(p,q)``, ``O`` (the unknot), a
named knot such as ``P(-2,3,7)`` or ``figure-eight``, or a derived word
``D[T(p,q);m|id:turns,...]``.

Exit codes: 0 success, 1 lemma failure or no path, 2 invalid input,
3 invalid seiferter in a twist script, 4 vertex absent from the graph.
"""
from __future__ import annotations

import argparse
import json
import sys
from math import gcd
from pathlib import Path

from . import network, verifiers
from .catalog import default_catalog
from .classifier import classify_torus_surgery
from .errors import CatalogError, DomainError, SeiferterNotValid, VertexAbsent
from .knots import SeifertSurgery, TorusKnotId, TwistStep, canonical_torus_knot, parse_surgery, spreader_conjecture_predicate
from .twist import load_script, resolve_seiferter, twist_along_seiferter

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_SEIFERTER, EXIT_ABSENT = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _emit(text, output=None):
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _surgery(text):
    try:
        return parse_surgery(text)
    except ValueError as exc:
        raise UsageError(f"bad surgery literal {text!r}: {exc}") from None


# classify ------------------------------------------------------------------


def _classification(knot, m):
    desc = classify_torus_surgery(knot, m)
    inv = getattr(desc, "invariants", None)
    return {
        "surgery": f"{knot.label}({m})",
        "manifold": desc.summary(),
        "description": desc.to_json(),
        "invariants": None if inv is None else str(inv),
        "h1_order": desc.homology_order(),
        "spreader_predicate": spreader_conjecture_predicate(knot.p, knot.q, m),
    }


def cmd_classify(args):
    p, q, m = args.p, args.q, args.m
    if q < 1:
        raise UsageError(f"q must be >= 1, got {q}")
    if gcd(abs(p), q) != 1:
        raise UsageError(f"non-coprime: gcd({p}, {q}) = {gcd(abs(p), q)}")
    report = _classification(canonical_torus_knot(p, q), m)
    if args.json:
        _emit(json.dumps(report, indent=2, ensure_ascii=False) + "\n")
        return EXIT_OK
    invariants = report["invariants"]
    if invariants is None:
        invariants = "degenerate" if report["description"].get("degenerate") else "n/a"
    _emit(
        f"surgery: {report['surgery']}\n"
        f"manifold: {report['manifold']}\n"
        f"invariants: {invariants}\n"
        f"|H1|: {report['h1_order'] if report['h1_order'] else 'infinite'}\n"
        f"spreader predicate: {str(report['spreader_predicate']).lower()}\n"
    )
    return EXIT_OK


# twist ---------------------------------------------------------------------


def _parse_step(text):
    sid, sep, turns = text.rpartition(":")
    try:
        if not sep or not sid:
            raise ValueError
        return TwistStep(sid, int(turns))
    except ValueError:
        raise UsageError(f"bad step {text!r}; expected id:turns") from None


def _describe(s):
    if isinstance(s.knot, TorusKnotId):
        return f"{s}  {classify_torus_surgery(s.knot, s.slope).summary()}"
    return str(s)


def cmd_twist(args):
    base = _surgery(args.base)
    steps = [_parse_step(t) for t in args.step or []]
    if args.script:
        try:
            steps = load_script(Path(args.script).read_text(encoding="utf-8")) + steps
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read twist script: {exc}") from None
    catalog = default_catalog()
    s = base
    trail = [{"step": None, "surgery": s.key}]
    lines = [f"start: {_describe(s)}"]
    for i, step in enumerate(steps):
        try:
            c = resolve_seiferter(step.seiferter_id, s, catalog)
            s = twist_along_seiferter(s, c, step.turns, catalog)
        except SeiferterNotValid as exc:
            print(f"error: step {i}: {exc}", file=sys.stderr)
            return EXIT_SEIFERTER
        trail.append({"step": i, "seiferter": step.seiferter_id, "turns": step.turns, "linking": c.linking,
                      "surgery": s.key})
        lines.append(f"step {i}: {step.seiferter_id} {step.turns:+d} (lk {c.linking}) -> {_describe(s)}")
    lines.append(f"result: {s}")
    if args.json:
        _emit(json.dumps({"base": base.key, "steps": trail, "result": s.key}, indent=2) + "\n")
    else:
        _emit("\n".join(lines) + "\n")
    return EXIT_OK


# catalog -------------------------------------------------------------------


def cmd_catalog(args):
    knot = canonical_torus_knot(args.p, args.q) if gcd(abs(args.p), args.q) == 1 and args.q >= 1 else None
    if knot is None:
        raise UsageError(f"T({args.p},{args.q}) is not a knot")
    catalog = default_catalog()
    found = catalog.lookup(knot.p, knot.q, args.m)
    pairs = catalog.annular_pairs(SeifertSurgery(knot, args.m))
    doc = {
        "surgery": f"{knot.label}({args.m})",
        "seiferters": [c.to_json() for c in found],
        "annular_pairs": [
            {"id": a.id, "members": list(a.members), "pair_linking": a.pair_linking,
             "knot_linkings": list(a.knot_linkings), "hopf": a.is_hopf, "hyperbolic": a.hyperbolic}
            for a in pairs
        ],
    }
    _emit(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
    return EXIT_OK


# verify-all ----------------------------------------------------------------


def cmd_verify_all(args):
    for name in ("b_range", "x_max", "n_max", "p_max", "c_plus_p_max", "workers"):
        if getattr(args, name) < 1:
            raise UsageError(f"--{name.replace('_', '-')} must be positive")
    report = verifiers.run_all(
        b_range=args.b_range, x_max=args.x_max, n_max=args.n_max, p_max=args.p_max,
        c_plus_p_max=args.c_plus_p_max, workers=args.workers,
    )
    _emit(json.dumps(report, indent=2) + "\n", args.output)
    return EXIT_OK if report["passed"] else EXIT_FAIL


# network -------------------------------------------------------------------


def cmd_network(args):
    if args.network_cmd == "build-T":
        try:
            g = network.build_subcomplex_t(args.p_max, args.radius)
        except DomainError as exc:
            raise UsageError(str(exc)) from None
        _emit(network.export_graph(g, args.format), args.output)
        return EXIT_OK
    if args.network_cmd == "figure2":
        lo, hi = args.window
        if lo > hi:
            raise UsageError(f"bad window [{lo}, {hi}]")
        _emit(network.export_graph(network.build_figure2((lo, hi)), args.format), args.output)
        return EXIT_OK
    v = _surgery(args.vertex)
    if args.graph:
        try:
            g = network.import_graph(Path(args.graph).read_text(encoding="utf-8"))
        except (OSError, ValueError, KeyError) as exc:
            raise UsageError(f"cannot read graph: {exc}") from None
    else:
        g = network.build_figure2()
    try:
        path = network.find_path_to_t(g, v)
    except VertexAbsent:
        print(f"error: vertex {v.key} is not in the graph", file=sys.stderr)
        return EXIT_ABSENT
    if path is None:
        print(f"no path from {v} to a torus-knot vertex")
        return EXIT_FAIL
    here = v
    lines = [f"path from {v}: length {len(path)}"]
    for e in path:
        step = e.turns if e.source == here else -e.turns
        there = e.target if e.source == here else e.source
        lines.append(f"  {here} --{e.seiferter}:{step:+d}--> {there}")
        here = there
    word = ", ".join(f"{sid} {turns:+d}" for sid, turns, _, _ in network.path_segments(path, v))
    lines.append(f"twists: {word or 'none'}")
    _emit("\n".join(lines) + "\n")
    return EXIT_OK


# parser --------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="seifert-net",
        description="Seifert surgeries on torus knots: classification, twists, lemma sweeps, network export.",
        epilog="Surgery literal grammar: K,m with K = T(p,q) | O | <name> | D[T(p,q);m|id:turns,...].",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="identify T(p,q)(m)")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("twist", help="apply a twist script to a surgery")
    p.add_argument("--base", required=True, help='surgery literal, e.g. "T(-3,2),-7"')
    p.add_argument("--script", help='JSON file: [{"seiferter": id, "turns": k}, ...]')
    p.add_argument("--step", action="append", metavar="ID:TURNS", help="inline step, repeatable")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("catalog", help="list seiferters and annular pairs at (T(p,q), m)")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify-all", help="run every lemma sweep")
    p.add_argument("--b-range", type=int, default=10)
    p.add_argument("--x-max", type=int, default=99)
    p.add_argument("--n-max", type=int, default=10_000)
    p.add_argument("--p-max", type=int, default=60, help="band-sum sweep bound")
    p.add_argument("--c-plus-p-max", type=int, default=100)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_verify_all)

    p = sub.add_parser("network", help="build and query network windows")
    nsub = p.add_subparsers(dest="network_cmd", required=True)
    b = nsub.add_parser("build-T", help="torus-knot subcomplex window")
    b.add_argument("--p-max", type=int, required=True)
    b.add_argument("--radius", type=int, required=True)
    f = nsub.add_parser("figure2", help="the T(-3,2) meridian line with its two vertical lines")
    f.add_argument("--window", type=int, nargs=2, default=list(network.FIGURE2_WINDOW), metavar=("LO", "HI"))
    for q in (b, f):
        q.add_argument("--format", choices=("dot", "json"), default="dot")
        q.add_argument("-o", "--output")
    t = nsub.add_parser("path", help="shortest path to a torus-knot vertex")
    t.add_argument("--vertex", required=True)
    t.add_argument("--graph", help="graph JSON (default: the figure2 window)")
    p.set_defaults(func=cmd_network)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, CatalogError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
