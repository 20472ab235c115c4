"""JSON interchange for graphs, representations, reports and verdicts.

Graph JSON: {"n": int, "edges": [[u,v],...], "rotation": {"v": [...]}?}
StringRep JSON: {"curves": {"v": [[x_num,x_den,y_num,y_den], ...]},
                 "witness": {"circle": {...}} | {"polyline": [...]} | null}
Edge-list text: one "u v" pair per line, 0-indexed.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .geom import CircleWitness, Curve, PolylineWitness, StringRep
from .graphs import Graph, RotationScheme


def graph_to_json(g: Graph, rot: RotationScheme | None = None) -> dict:
    out: dict = {"n": g.n, "edges": [list(e) for e in g.edges]}
    if rot is not None:
        out["rotation"] = {str(v): list(rot.order[v]) for v in range(g.n)}
    return out


def graph_from_json(data: dict) -> tuple[Graph, RotationScheme | None]:
    g = Graph(int(data["n"]), [tuple(e) for e in data["edges"]])
    rot = None
    if data.get("rotation"):
        order = [[] for _ in range(g.n)]
        for k, nbrs in data["rotation"].items():
            order[int(k)] = list(nbrs)
        rot = RotationScheme(order)
        rot.validate(g)
    return g, rot


def graph_from_edge_text(text: str) -> Graph:
    edges = []
    mx = -1
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        u, v = line.split()
        edges.append((int(u), int(v)))
        mx = max(mx, int(u), int(v))
    return Graph(mx + 1, edges)


def _pt_json(p) -> list[int]:
    return [p[0].numerator, p[0].denominator, p[1].numerator, p[1].denominator]


def _pt_parse(q) -> tuple[Fraction, Fraction]:
    return (Fraction(q[0], q[1]), Fraction(q[2], q[3]))


def rep_to_json(rep: StringRep) -> dict:
    out: dict = {
        "curves": {
            str(v): [_pt_json(p) for p in c.points] for v, c in sorted(rep.curves.items())
        }
    }
    w = rep.witness
    if isinstance(w, CircleWitness):
        out["witness"] = {
            "circle": {
                "center": _pt_json(w.center),
                "radius2": [w.radius2.numerator, w.radius2.denominator],
            }
        }
    elif isinstance(w, PolylineWitness):
        out["witness"] = {"polyline": [_pt_json(p) for p in w.points]}
    else:
        out["witness"] = None
    return out


def rep_from_json(data: dict) -> StringRep:
    curves = {
        int(v): Curve(int(v), tuple(_pt_parse(q) for q in pts))
        for v, pts in data["curves"].items()
    }
    w = data.get("witness")
    witness = None
    if w:
        if "circle" in w:
            c = w["circle"]
            witness = CircleWitness(_pt_parse(c["center"]), Fraction(*c["radius2"]))
        elif "polyline" in w:
            witness = PolylineWitness(tuple(_pt_parse(q) for q in w["polyline"]))
    return StringRep(curves, witness)


def dumps(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"
