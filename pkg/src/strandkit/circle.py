"""Order-preserving circle-chord representations of outer-planar graphs.

Ear induction on the biconnected augmentation: each live directed outer edge
(u,v) owns an open parameter arc containing the tail of u's chord and the
head of v's chord; an ear consumes its edge's arc and lays out new chord
endpoints inside it. Circle points use the rational tangent-half-angle map
t -> ((1-t^2)/(1+t^2), 2t/(1+t^2)); the gap point (-1,0) at t=infinity is
never assigned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterCollision
from .geom import CircleWitness, Curve, StringRep
from .graphs import (
    Graph,
    PlaneGraph,
    RotationScheme,
    biconnect_outerplanar,
    ear_decomposition,
    is_outerplanar,
)

F = Fraction


def circle_point(t: Fraction) -> tuple[Fraction, Fraction]:
    """Rational point on the unit circle; t = tan(theta/2)."""
    d = 1 + t * t
    return ((1 - t * t) / d, 2 * t / d)


@dataclass(frozen=True)
class ChordDiagram:
    """Per-vertex chord given by two circle parameters (t_tail, t_head).

    The uncovered circle point is the parameterization gap (-1, 0).
    """

    params: dict[int, tuple[Fraction, Fraction]]

    def all_params(self) -> list[Fraction]:
        out = []
        for t0, t1 in self.params.values():
            out.append(t0)
            out.append(t1)
        return out


@dataclass
class ArcRegion:
    """Open parameter interval reserved for directed outer edge (u,v);
    contains exactly the tail parameter of u and the head parameter of v."""

    edge: tuple[int, int]
    lo: Fraction
    hi: Fraction
    p_u: Fraction
    p_v: Fraction


@dataclass(frozen=True)
class CircleBuild:
    diagram: ChordDiagram
    breaks: dict[int, int]
    plane: PlaneGraph
    super_plane: PlaneGraph
    super_diagram: ChordDiagram
    super_breaks: dict[int, int]
    regions: tuple[ArcRegion, ...]
    trace: tuple[dict, ...] = ()


def _chords_cross(a: tuple[Fraction, Fraction], b: tuple[Fraction, Fraction]) -> bool:
    """Interleaving of parameter pairs on the circle (gap at infinity)."""
    a0, a1 = sorted(a)
    b0, b1 = sorted(b)
    in0 = a0 < b0 < a1
    in1 = a0 < b1 < a1
    return in0 != in1


def _chord_meet(a, b) -> tuple[Fraction, Fraction]:
    """Crossing point of two interleaving chords (exact)."""
    p1, p2 = circle_point(a[0]), circle_point(a[1])
    p3, p4 = circle_point(b[0]), circle_point(b[1])
    d1 = (p2[0] - p1[0], p2[1] - p1[1])
    d2 = (p4[0] - p3[0], p4[1] - p3[1])
    den = d1[0] * d2[1] - d1[1] * d2[0]
    t = ((p3[0] - p1[0]) * d2[1] - (p3[1] - p1[1]) * d2[0]) / den
    return (p1[0] + t * d1[0], p1[1] + t * d1[1])


def _in_sliver(lo: Fraction, hi: Fraction, p: tuple[Fraction, Fraction]) -> bool:
    """Is p inside the circular segment bounded by the arc (lo,hi) and its
    cap chord (arc side of the cap, cap inclusive)."""
    a = circle_point(lo)
    b = circle_point(hi)
    m = circle_point((lo + hi) / 2)

    def orient(q):
        return (b[0] - a[0]) * (q[1] - a[1]) - (b[1] - a[1]) * (q[0] - a[0])

    sp = orient(p)
    sm = orient(m)
    return sp == 0 or (sp > 0) == (sm > 0)


def _make_region(
    edge: tuple[int, int],
    lo: Fraction,
    hi: Fraction,
    p_u: Fraction,
    p_v: Fraction,
    cross_pt: tuple[Fraction, Fraction],
) -> ArcRegion:
    """Region over (lo,hi), shrunk toward the protected parameters until the
    owners' crossing lies outside the circular segment."""
    a, b = (p_u, p_v) if p_u < p_v else (p_v, p_u)
    while _in_sliver(lo, hi, cross_pt):
        lo = (lo + a) / 2
        hi = (hi + b) / 2
    return ArcRegion(edge, lo, hi, p_u, p_v)


def chord_to_geometry(diagram: ChordDiagram) -> StringRep:
    """Chords as 0-bend curves on the unit circle, witness = that circle."""
    ts = diagram.all_params()
    if len(set(ts)) != len(ts):
        raise ParameterCollision("chord endpoints collide on the circle")
    curves = {
        v: Curve(v, (circle_point(t0), circle_point(t1)))
        for v, (t0, t1) in diagram.params.items()
    }
    return StringRep(curves, CircleWitness((F(0), F(0)), F(1)))


def build_circle(g: Graph, per_ear_check: bool = False, trace: bool = False) -> CircleBuild:
    """Theorem-3 style construction for any connected outer-planar graph."""
    if g.n == 1:
        plane = PlaneGraph(g, RotationScheme([[]]))
        diag = ChordDiagram({0: (F(2), F(-1, 2))})
        return CircleBuild(diag, {0: 0}, plane, plane, diag, {0: 0}, ())

    g2, _inj = biconnect_outerplanar(g)
    ok, rot2, ofi = is_outerplanar(g2)
    assert ok
    dec = ear_decomposition(g2, rot2, outer_face_index=ofi)

    a, b = dec.root_edge
    params: dict[int, tuple[Fraction, Fraction]] = {
        a: (F(2), F(-1, 2)),
        b: (F(-3), F(1, 3)),
    }
    regions: dict[tuple[int, int], ArcRegion] = {}
    regions[(a, b)] = _make_region(
        (a, b), F(-1, 12), F(3), F(2), F(1, 3), _chord_meet(params[a], params[b])
    )
    regions[(b, a)] = _make_region(
        (b, a), F(-4), F(-1, 12), F(-3), F(-1, 2), _chord_meet(params[a], params[b])
    )

    traces: list[dict] = []
    if trace:
        traces.append(_snapshot(params, regions))

    for ear in dec.ears:
        u, v = ear[0], ear[-1]
        xs = ear[1:-1]
        k = len(xs)
        reg = regions.pop((u, v))
        p_u, p_v = reg.p_u, reg.p_v
        assert params[u][0] == p_u and params[v][1] == p_v
        outer_u, outer_v = (reg.lo, reg.hi) if p_u < p_v else (reg.hi, reg.lo)
        u_new = (outer_u + p_u) / 2
        v_new = (p_v + outer_v) / 2
        qs = [p_u + (p_v - p_u) * F(j, 2 * k - 1) for j in range(1, 2 * k - 1)]

        def q(j: int) -> Fraction:
            # q_0 = p_u, q_{2k-1} = p_v, interior points 1..2k-2
            if j == 0:
                return p_u
            if j == 2 * k - 1:
                return p_v
            return qs[j - 1]

        for i, x in enumerate(xs, start=1):
            head = u_new if i == 1 else q(2 * i - 3)
            tail = v_new if i == k else q(2 * i)
            params[x] = (tail, head)

        def mid(s: Fraction, t: Fraction) -> Fraction:
            return (s + t) / 2

        new_regions = []
        new_regions.append(
            ((u, xs[0]), mid(outer_u, u_new), mid(p_u, q(1)), p_u, u_new, (u, xs[0]))
        )
        for i in range(1, k):
            e = (xs[i - 1], xs[i])
            new_regions.append(
                (e, mid(q(2 * i - 2), q(2 * i - 1)), mid(q(2 * i), q(2 * i + 1)),
                 q(2 * i), q(2 * i - 1), e)
            )
        new_regions.append(
            ((xs[-1], v), mid(q(2 * k - 2), p_v), mid(v_new, outer_v), v_new, p_v,
             (xs[-1], v))
        )
        for edge, lo, hi, pu, pv, owners in new_regions:
            lo, hi = (lo, hi) if lo < hi else (hi, lo)
            cross = _chord_meet(params[owners[0]], params[owners[1]])
            regions[edge] = _make_region(edge, lo, hi, pu, pv, cross)

        if per_ear_check:
            _check_partial(g2, rot2, params, regions)
        if trace:
            traces.append(_snapshot(params, regions))

    cw_nb = {e[0]: e[1] for e in regions}
    super_breaks = {v: rot2.position(v, cw_nb[v]) for v in range(g2.n)}
    super_diag = ChordDiagram(dict(params))
    super_plane = PlaneGraph(g2, rot2)

    # restrict to the original graph: drop augmentation curves, induce the
    # rotation, and re-derive each break from the induced linear order
    rot_g = []
    breaks = {}
    for v in range(g.n):
        full = rot2.order[v]
        induced = tuple(w for w in full if w < g.n)
        rot_g.append(induced)
        bpos = super_breaks[v]
        linear = full[bpos:] + full[:bpos]
        first = next(w for w in linear if w < g.n)
        breaks[v] = induced.index(first)
    plane = PlaneGraph(g, RotationScheme(rot_g))
    diagram = ChordDiagram({v: params[v] for v in range(g.n)})
    ts = diagram.all_params()
    if len(set(ts)) != len(ts):
        raise ParameterCollision("internal: parameter collision")
    return CircleBuild(
        diagram,
        breaks,
        plane,
        super_plane,
        super_diag,
        super_breaks,
        tuple(regions.values()),
        tuple(traces),
    )


def _snapshot(params, regions) -> dict:
    return {
        "params": {v: (str(t0), str(t1)) for v, (t0, t1) in sorted(params.items())},
        "regions": [
            {"edge": list(r.edge), "lo": str(r.lo), "hi": str(r.hi)}
            for r in regions.values()
        ],
    }


def _check_partial(g2, rot2, params, regions) -> None:
    """Machine-check the induction invariant on the partial diagram."""
    from .geom import crossing_profile, verify_1string, verify_order_preserving
    from .geom import verify_outer_string, BOTH_ENDS

    placed = sorted(params)
    idx = {v: i for i, v in enumerate(placed)}
    edges = [
        (idx[u], idx[v]) for (u, v) in g2.edges if u in params and v in params
    ]
    sub = Graph(len(placed), edges)
    sub_rot = RotationScheme(
        [[idx[w] for w in rot2.order[v] if w in params] for v in placed]
    )
    diag = ChordDiagram({idx[v]: params[v] for v in placed})
    rep = chord_to_geometry(diag)
    prof = crossing_profile(rep)
    assert verify_1string(rep, sub, prof).ok, "partial diagram is not 1-string"
    assert verify_order_preserving(rep, PlaneGraph(sub, sub_rot), profile=prof).ok
    assert verify_outer_string(rep, BOTH_ENDS).ok
    # arc regions: pairwise disjoint, free of foreign endpoints
    rs = sorted(regions.values(), key=lambda r: r.lo)
    for r1, r2 in zip(rs, rs[1:]):
        assert r1.hi <= r2.lo, "region arcs overlap"
    for r in rs:
        inside = [
            v
            for v, (t0, t1) in params.items()
            if r.lo < t0 < r.hi or r.lo < t1 < r.hi
        ]
        assert set(inside) <= set(r.edge), f"foreign endpoints inside region {r.edge}"
