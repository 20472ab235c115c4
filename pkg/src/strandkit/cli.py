"""Command-line front end: generation, embedding, construction, verification,
oracle runs, SVG rendering, and per-result reproduction commands.

Exit codes: 0 on success / expected verdicts, 1 on verification failure or
unexpected verdicts, 2 on usage errors. Every run emits a manifest (to
--manifest, next to --out, or to stderr)."""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

from . import __version__, jsonio
from .circle import build_circle, chord_to_geometry
from .errors import StrandkitError
from .families import (
    extended_wheel,
    random_maximal_outerplanar,
    random_partial_2tree,
    random_planar_3tree,
    subdivided_k23,
    triple_stellation,
    wheel,
)
from .geom import (
    BOTH_ENDS,
    ONE_END,
    crossing_profile,
    verify_1string,
    verify_order_preserving,
    verify_outer_string,
)
from .graphs import Graph, PlaneGraph, RotationScheme, is_outerplanar, is_planar
from .oracle import enumerate_breaks
from .sp import build_sp
from .svg import emit_svg
from .vpg import build_vpg


def _sha(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:16]


class _Run:
    def __init__(self, argv):
        self.manifest = {
            "command": list(argv),
            "version": __version__,
            "inputs": {},
            "outputs": {},
            "timings_ms": {},
            "extra": {},
        }
        self.t0 = time.perf_counter()

    def read_graph(self, path: str):
        text = open(path).read()
        self.manifest["inputs"][path] = _sha(text)
        if path.endswith(".txt"):
            return jsonio.graph_from_edge_text(text), None
        data = json.loads(text)
        return jsonio.graph_from_json(data)

    def read_rep(self, path: str):
        text = open(path).read()
        self.manifest["inputs"][path] = _sha(text)
        return jsonio.rep_from_json(json.loads(text))

    def write(self, path: str | None, text: str) -> None:
        if path:
            with open(path, "w") as fh:
                fh.write(text)
            self.manifest["outputs"][path] = _sha(text)
        else:
            sys.stdout.write(text)
            self.manifest["outputs"]["<stdout>"] = _sha(text)

    def finish(self, args, code: int) -> int:
        self.manifest["timings_ms"]["total"] = int((time.perf_counter() - self.t0) * 1000)
        self.manifest["exit_code"] = code
        target = getattr(args, "manifest", None)
        if target is None and getattr(args, "out", None):
            target = args.out + ".manifest.json"
        line = jsonio.dumps(self.manifest)
        if target:
            with open(target, "w") as fh:
                fh.write(line)
        else:
            sys.stderr.write(line)
        return code


def _plane_for(run: _Run, g: Graph, rot: RotationScheme | None) -> PlaneGraph:
    if rot is not None:
        return PlaneGraph(g, rot)
    ok, orot, _ofi = (False, None, None)
    try:
        ok, orot, _ofi = is_outerplanar(g)
    except StrandkitError:
        ok = False
    if ok:
        run.manifest["extra"]["embedding"] = "outer-plane witness"
        return PlaneGraph(g, orot)
    okp, prot = is_planar(g)
    if not okp:
        raise StrandkitError("input graph is not planar; no rotation scheme exists")
    run.manifest["extra"]["embedding"] = "planar witness"
    return PlaneGraph(g, prot)


def _verify_all(rep, g, plane, outer_mode):
    prof = crossing_profile(rep)
    r1 = verify_1string(rep, g, prof)
    r2 = verify_order_preserving(rep, plane, profile=prof)
    reports = {"one_string": r1, "order_preserving": r2}
    if outer_mode:
        reports["outer_string"] = verify_outer_string(rep, outer_mode)
    ok = all(r.ok for r in reports.values())
    return ok, {k: {"ok": r.ok, "failures": list(r.failures)} for k, r in reports.items()}


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_gen(run: _Run, args) -> int:
    fam = args.family
    if fam == "wheel":
        pg = wheel(args.n)
        out = jsonio.graph_to_json(pg.graph, pg.rot)
    elif fam == "extended-wheel":
        pg = extended_wheel(args.n)
        out = jsonio.graph_to_json(pg.graph, pg.rot)
    elif fam == "planar-3tree":
        pg = random_planar_3tree(args.n, args.seed)
        out = jsonio.graph_to_json(pg.graph, pg.rot)
    elif fam == "triple-stellation-3tree":
        pg = triple_stellation(random_planar_3tree(args.n, args.seed))
        out = jsonio.graph_to_json(pg.graph, pg.rot)
    elif fam == "maximal-outerplanar":
        pg = random_maximal_outerplanar(args.n, args.seed)
        out = jsonio.graph_to_json(pg.graph, pg.rot)
    elif fam == "partial-2tree":
        g = random_partial_2tree(args.n, args.density, args.seed)
        out = jsonio.graph_to_json(g)
    elif fam == "subdivided-k23":
        out = jsonio.graph_to_json(subdivided_k23())
    else:
        raise StrandkitError(f"unknown family {fam}")
    run.manifest["extra"]["seed"] = args.seed
    run.write(args.out, jsonio.dumps(out))
    return 0


def _cmd_embed(run: _Run, args) -> int:
    g, rot = run.read_graph(args.graph)
    if args.check:
        if rot is None:
            raise StrandkitError("--check needs a rotation in the input")
        from .graphs import euler_check

        ok = euler_check(g, rot)
        run.write(args.out, jsonio.dumps({"plane": ok}))
        return 0 if ok else 1
    plane = _plane_for(run, g, rot)
    run.write(args.out, jsonio.dumps(jsonio.graph_to_json(g, plane.rot)))
    return 0


def _cmd_build(run: _Run, args) -> int:
    g, _rot = run.read_graph(args.graph)
    t0 = time.perf_counter()
    if args.kind == "circle":
        b = build_circle(g, trace=args.trace)
        rep = chord_to_geometry(b.diagram)
        plane, breaks, outer = b.plane, b.breaks, BOTH_ENDS
        trace = b.trace
    elif args.kind == "vpg":
        b = build_vpg(g, trace=args.trace)
        rep = b.diag_rep if args.frame == "diag" else b.rep
        plane, breaks, outer = b.plane, b.breaks, BOTH_ENDS
        run.manifest["extra"]["grid"] = list(b.grid)
        trace = b.trace
    else:
        b = build_sp(g)
        rep = b.rep
        plane, breaks, outer = b.plane, None, None
        trace = ()
    run.manifest["timings_ms"]["build"] = int((time.perf_counter() - t0) * 1000)
    ok, reports = _verify_all(rep, g, plane, outer)
    if not ok:
        sys.stderr.write(jsonio.dumps({"verify": reports}))
        return 1
    payload = jsonio.rep_to_json(rep)
    payload["rotation"] = {str(v): list(plane.rot.order[v]) for v in range(g.n)}
    if breaks is not None:
        payload["breaks"] = {str(v): breaks[v] for v in sorted(breaks)}
    if args.trace:
        payload["trace"] = list(trace)
    run.manifest["extra"]["verified"] = sorted(reports)
    run.write(args.out, jsonio.dumps(payload))
    if args.svg:
        overlays = None
        if args.kind == "vpg" and args.trace and args.frame == "diag":
            overlays = [
                (f"region {r.edge[0]}-{r.edge[1]}",
                 [r.hyp_world()[0], r.hyp_world()[1], r.apex_world()])
                for r in b.regions
            ]
        run.write(args.svg, emit_svg(rep, profile=crossing_profile(rep), overlays=overlays))
    return 0


def _cmd_verify(run: _Run, args) -> int:
    rep = run.read_rep(args.rep)
    g, rot = run.read_graph(args.graph)
    prof = crossing_profile(rep)
    reports = {"one_string": verify_1string(rep, g, prof)}
    if args.order:
        text = open(args.rep).read()
        data = json.loads(text)
        if rot is None and data.get("rotation"):
            order = [[] for _ in range(g.n)]
            for k, nbrs in data["rotation"].items():
                order[int(k)] = list(nbrs)
            rot = RotationScheme(order)
        if rot is None:
            raise StrandkitError("--order needs a rotation (graph json or rep json)")
        reports["order_preserving"] = verify_order_preserving(
            rep, PlaneGraph(g, rot), strict=args.strict, profile=prof
        )
    if args.outer:
        mode = BOTH_ENDS if args.outer == "both-ends" else ONE_END
        reports["outer_string"] = verify_outer_string(rep, mode)
    ok = all(r.ok for r in reports.values())
    run.write(
        args.out,
        jsonio.dumps(
            {k: {"ok": r.ok, "failures": list(r.failures)} for k, r in reports.items()}
        ),
    )
    return 0 if ok else 1


def _cmd_oracle(run: _Run, args) -> int:
    g, rot = run.read_graph(args.graph)
    plane = _plane_for(run, g, rot)
    mode = {"base": None, "both-ends": BOTH_ENDS, "one-end": ONE_END}[args.mode]
    budget = args.samples
    v = enumerate_breaks(
        plane,
        mode,
        budget=budget,
        jobs=args.jobs,
        seed=args.seed,
        gadgets=not args.no_gadgets,
        chunk=args.chunk,
        limit=args.limit,
    )
    run.write(args.out, jsonio.dumps(v.to_json()))
    return 0


def _cmd_svg(run: _Run, args) -> int:
    rep = run.read_rep(args.rep)
    prof = crossing_profile(rep) if args.crossings else None
    run.write(args.out, emit_svg(rep, profile=prof))
    return 0


def _cmd_repro(run: _Run, args) -> int:
    which = args.result
    ex = run.manifest["extra"]
    if which == "thm3":
        g = random_maximal_outerplanar(args.n, args.seed).graph
        b = build_circle(g)
        rep = chord_to_geometry(b.diagram)
        ok, reports = _verify_all(rep, g, b.plane, BOTH_ENDS)
        ex["checks"] = {k: r["ok"] for k, r in reports.items()}
        run.write(args.out, jsonio.dumps({"ok": ok, "n": g.n}))
        return 0 if ok else 1
    if which == "thm4":
        g = random_maximal_outerplanar(args.n, args.seed).graph
        b = build_vpg(g)
        ok, reports = _verify_all(b.rep, g, b.plane, BOTH_ENDS)
        bends_ok = all(c.bend_count() <= 1 for c in b.rep.curves.values())
        ex["checks"] = {k: r["ok"] for k, r in reports.items()}
        ex["grid"] = list(b.grid)
        ex["grid_per_n"] = [b.grid[0] / g.n, b.grid[1] / g.n]
        ex["grid_constant"] = 4  # implementation bound: dimension <= 4n
        ok = ok and bends_ok
        run.write(args.out, jsonio.dumps({"ok": ok, "n": g.n, "grid": list(b.grid)}))
        return 0 if ok else 1
    if which == "lem2":
        g = random_partial_2tree(args.n, args.density, args.seed)
        b = build_sp(g)
        ok, reports = _verify_all(b.rep, g, b.plane, None)
        shapes = all(c.bend_count() == 1 for c in b.rep.curves.values())
        ex["checks"] = {k: r["ok"] for k, r in reports.items()}
        ok = ok and shapes
        run.write(args.out, jsonio.dumps({"ok": ok, "n": g.n}))
        return 0 if ok else 1
    if which == "sec5-k23":
        g = subdivided_k23()
        plane = build_sp(g).plane
        v_base = enumerate_breaks(plane, None, jobs=args.jobs)
        v_outer = enumerate_breaks(plane, BOTH_ENDS, jobs=args.jobs)
        ok = v_base.status == "yes" and v_outer.status == "no" and v_outer.tried == 4608
        ex["base"] = v_base.to_json()
        ex["both_ends"] = v_outer.to_json()
        run.write(args.out, jsonio.dumps({"ok": ok}))
        return 0 if ok else 1
    if which == "thm6":
        pg = extended_wheel(7)
        v = enumerate_breaks(
            pg, BOTH_ENDS, jobs=args.jobs, chunk=args.chunk, limit=args.limit
        )
        expected = "no" if args.limit is None else "unknown"
        ok = v.status == expected
        ex["verdict"] = v.to_json()
        run.write(args.out, jsonio.dumps({"ok": ok, "status": v.status, "tried": v.tried}))
        return 0 if ok else 1
    if which == "thm2-sample":
        pg = triple_stellation(random_planar_3tree(6, args.seed))
        v = enumerate_breaks(pg, None, budget=args.samples, jobs=args.jobs, seed=args.seed)
        ok = v.status == "unknown"
        ex["verdict"] = v.to_json()
        ex["note"] = "evidence, not proof: sampled search only"
        run.write(
            args.out,
            jsonio.dumps(
                {"ok": ok, "status": v.status, "zero_hits": v.witness is None,
                 "note": "evidence, not proof"}
            ),
        )
        return 0 if ok else 1
    raise StrandkitError(f"unknown repro target {which}")


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="strandkit")
    p.add_argument("--manifest", help="write the run manifest to this path")
    sub = p.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", help="emit a named graph family as JSON")
    g.add_argument("family", choices=[
        "wheel", "extended-wheel", "planar-3tree", "triple-stellation-3tree",
        "maximal-outerplanar", "partial-2tree", "subdivided-k23"])
    g.add_argument("--n", type=int, default=8)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--density", type=float, default=0.7)
    g.add_argument("--out")
    g.set_defaults(fn=_cmd_gen)

    e = sub.add_parser("embed", help="compute or validate a rotation scheme")
    e.add_argument("graph")
    e.add_argument("--check", action="store_true")
    e.add_argument("--out")
    e.set_defaults(fn=_cmd_embed)

    b = sub.add_parser("build", help="construct a representation (verified)")
    b.add_argument("kind", choices=["circle", "vpg", "sp"])
    b.add_argument("graph")
    b.add_argument("--out")
    b.add_argument("--svg")
    b.add_argument("--trace", action="store_true")
    b.add_argument("--frame", choices=["diag", "ortho"], default="ortho")
    b.set_defaults(fn=_cmd_build)

    v = sub.add_parser("verify", help="verify a representation against a graph")
    v.add_argument("rep")
    v.add_argument("graph")
    v.add_argument("--order", action="store_true")
    v.add_argument("--outer", choices=["both-ends", "one-end"])
    v.add_argument("--strict", action="store_true")
    v.add_argument("--out")
    v.set_defaults(fn=_cmd_verify)

    o = sub.add_parser("oracle", help="break-vector realizability search")
    o.add_argument("graph")
    o.add_argument("--mode", choices=["base", "both-ends", "one-end"], default="base")
    o.add_argument("--exhaustive", action="store_true")
    o.add_argument("--samples", type=int)
    o.add_argument("--limit", type=int)
    o.add_argument("--jobs", type=int, default=int(os.environ.get("STRANDKIT_JOBS", "1")))
    o.add_argument("--seed", type=int, default=0)
    o.add_argument("--no-gadgets", action="store_true")
    o.add_argument("--chunk", type=int, default=2048)
    o.add_argument("--out")
    o.set_defaults(fn=_cmd_oracle)

    s = sub.add_parser("svg", help="render a representation")
    s.add_argument("rep")
    s.add_argument("--crossings", action="store_true")
    s.add_argument("--out")
    s.set_defaults(fn=_cmd_svg)

    r = sub.add_parser("repro", help="reproduce one of the library's results")
    r.add_argument("result", choices=[
        "thm3", "thm4", "lem2", "sec5-k23", "thm6", "thm2-sample"])
    r.add_argument("--n", type=int, default=50)
    r.add_argument("--seed", type=int, default=1)
    r.add_argument("--density", type=float, default=0.7)
    r.add_argument("--samples", type=int, default=1_000_000)
    r.add_argument("--jobs", type=int, default=int(os.environ.get("STRANDKIT_JOBS", "1")))
    r.add_argument("--chunk", type=int, default=2048)
    r.add_argument("--limit", type=int)
    r.add_argument("--out")
    r.set_defaults(fn=_cmd_repro)
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    run = _Run(["strandkit"] + argv)
    try:
        code = args.fn(run, args)
    except StrandkitError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return run.finish(args, 2)
    except FileNotFoundError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return run.finish(args, 2)
    return run.finish(args, code)


if __name__ == "__main__":
    sys.exit(main())
