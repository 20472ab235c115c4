"""Order-preserving outer-1-string representations with one-bend curves of
slopes +-1, turned into an orthogonal (B1-VPG) representation on an O(n) grid
by a 45-degree rotation and a monotone piecewise-linear compaction.

Construction frame: curves are peaks/valleys with +-1 arms; the contour S is
an axis-parallel closed polyline carrying every private region's hypotenuse.
Each live directed outer edge (u,v) owns a right isosceles triangle region
on S containing the tail of u's curve and the head of v's curve; the two
owner stretches enter with frame slopes that classify the region:

    P     tail(u) left  / head(v) right, both rising away      (same slope)
    Q     head(v) left  / tail(u) right, both rising away      (same slope)
    CONV  head(v) left rising right / tail(u) right rising left (converging)

plus horizontal mirrors of all three. Ears insert chains of peaks inside the
region; the converging single-vertex case uses a valley, shortens the owner
curves and reroutes S with a slit detour (the only case that edits S).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NonDiagonalSegment
from .geom import Curve, PolylineWitness, StringRep
from .graphs import (
    Graph,
    PlaneGraph,
    RotationScheme,
    biconnect_outerplanar,
    ear_decomposition,
    is_outerplanar,
)

F = Fraction
Pt = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Frame:
    """Axis-aligned local frame: world = origin + xi*e1 + eta*e2."""

    origin: Pt
    e1: tuple[int, int]
    e2: tuple[int, int]

    def to_world(self, xi: Fraction, eta: Fraction) -> Pt:
        return (
            self.origin[0] + xi * self.e1[0] + eta * self.e2[0],
            self.origin[1] + xi * self.e1[1] + eta * self.e2[1],
        )

    def sub(self, origin_local: Pt, e1_local: tuple[int, int], e2_local: tuple[int, int]) -> "Frame":
        w0 = self.to_world(origin_local[0], origin_local[1])
        ex = (
            e1_local[0] * self.e1[0] + e1_local[1] * self.e2[0],
            e1_local[0] * self.e1[1] + e1_local[1] * self.e2[1],
        )
        ey = (
            e2_local[0] * self.e1[0] + e2_local[1] * self.e2[0],
            e2_local[0] * self.e1[1] + e2_local[1] * self.e2[1],
        )
        return Frame(w0, ex, ey)

    def mirrored(self, width: Fraction) -> "Frame":
        return Frame(self.to_world(width, F(0)), (-self.e1[0], -self.e1[1]), self.e2)


@dataclass
class TriRegion:
    """Private region of directed outer edge (u,v): hyp from frame (0,0) to
    (width,0) on S, apex inward; tail(u) at xi_u with stretch slope s_u, the
    head of v at xi_v with slope s_v (slope +1 rises toward +xi)."""

    edge: tuple[int, int]
    frame: Frame
    width: Fraction
    xi_u: Fraction
    s_u: int
    xi_v: Fraction
    s_v: int

    def hyp_world(self) -> tuple[Pt, Pt]:
        return self.frame.to_world(F(0), F(0)), self.frame.to_world(self.width, F(0))

    def apex_world(self) -> Pt:
        return self.frame.to_world(self.width / 2, self.width / 2)


@dataclass(frozen=True)
class VpgBuild:
    rep: StringRep            # orthogonal frame, compacted integer grid
    diag_rep: StringRep       # slope +-1 construction frame (exact rationals)
    breaks: dict[int, int]
    plane: PlaneGraph
    super_plane: PlaneGraph
    super_breaks: dict[int, int]
    grid: tuple[int, int]
    regions: tuple[TriRegion, ...]
    trace: tuple[dict, ...] = ()


# ---------------------------------------------------------------------------
# construction state
# ---------------------------------------------------------------------------


class _Builder:
    def __init__(self) -> None:
        self.curves: dict[int, list[Pt]] = {}
        self.S: list[Pt] = []
        self.regions: dict[tuple[int, int], TriRegion] = {}

    # -- S editing ----------------------------------------------------------

    def splice(self, a: Pt, b: Pt, path: list[Pt]) -> None:
        """Replace the straight S portion between collinear points a, b
        (both interior to one S segment) by `path` (from a to b)."""
        n = len(self.S)
        for i in range(n):
            p, q = self.S[i], self.S[(i + 1) % n]
            if _between(p, q, a) and _between(p, q, b):
                ta = _param(p, q, a)
                tb = _param(p, q, b)
                pts = [a] + path + [b] if ta < tb else [b] + list(reversed(path)) + [a]
                self.S = self.S[: i + 1] + pts + self.S[i + 1 :]
                return
        raise AssertionError("splice span not found on S")


def _between(p: Pt, q: Pt, x: Pt) -> bool:
    dx, dy = q[0] - p[0], q[1] - p[1]
    if (x[0] - p[0]) * dy != (x[1] - p[1]) * dx:
        return False
    t = _param(p, q, x)
    return 0 < t < 1


def _param(p: Pt, q: Pt, x: Pt) -> Fraction:
    dx, dy = q[0] - p[0], q[1] - p[1]
    den = dx * dx + dy * dy
    return ((x[0] - p[0]) * dx + (x[1] - p[1]) * dy) / den


def _peak(H: Fraction, T: Fraction, tail_left: bool) -> list[Pt]:
    bend = ((H + T) / 2, (T - H) / 2)
    if tail_left:
        return [(H, F(0)), bend, (T, F(0))]
    return [(T, F(0)), bend, (H, F(0))]


def _neighbor_bounds(featues_sorted, p, q):
    """lo/hi midpoints isolating the protected pair (p < q)."""
    prev_p = max(x for x in featues_sorted if x < p)
    next_q = min(x for x in featues_sorted if x > q)
    return (prev_p + p) / 2, (q + next_q) / 2


# ---------------------------------------------------------------------------
# ear insertion
# ---------------------------------------------------------------------------


def _insert_ear(b: _Builder, u: int, xs: tuple[int, ...], v: int) -> None:
    reg = b.regions.pop((u, v))
    frame, w = reg.frame, reg.width
    xi_u, s_u, xi_v, s_v = reg.xi_u, reg.s_u, reg.xi_v, reg.s_v
    # canonicalize to one of P / Q / CONV by mirroring when needed
    xi_l, s_l = (xi_u, s_u) if xi_u < xi_v else (xi_v, s_v)
    if (s_l == -1) or (s_u == 1 and s_v == -1 and xi_u < xi_v):
        frame = frame.mirrored(w)
        xi_u, xi_v = w - xi_u, w - xi_v
        s_u, s_v = -s_u, -s_v
    k = len(xs)
    if s_u == 1 and s_v == 1:
        if xi_u < xi_v:
            _case_p(b, frame, w, u, xs, v, xi_u, xi_v)
        else:
            _case_q_conv(b, frame, w, u, xs, v, xi_v, xi_u, conv=False)
    else:
        assert s_v == 1 and s_u == -1 and xi_v < xi_u, "diverging region cannot arise"
        if k == 1:
            _case_conv_valley(b, frame, w, u, xs[0], v, xi_v, xi_u)
        else:
            _case_q_conv(b, frame, w, u, xs, v, xi_v, xi_u, conv=True)


def _commit_curves(b: _Builder, frame: Frame, pts_by_vertex: dict[int, list[Pt]]) -> None:
    for x, pts in pts_by_vertex.items():
        b.curves[x] = [frame.to_world(p[0], p[1]) for p in pts]


def _add_region(
    b: _Builder,
    frame: Frame,
    edge: tuple[int, int],
    lo: Fraction,
    hi: Fraction,
    xi_u: Fraction,
    s_u: int,
    xi_v: Fraction,
    s_v: int,
) -> None:
    sub = frame.sub((lo, F(0)), (1, 0), (0, 1))
    b.regions[edge] = TriRegion(edge, sub, hi - lo, xi_u - lo, s_u, xi_v - lo, s_v)


def _case_p(b, frame, w, u, xs, v, a, bb):
    """Same slope, tail(u)@a left of head(v)@bb; chain of peaks, tails right."""
    k = len(xs)
    H = {1: a / 2}
    T = {k: (bb + w) / 2}
    if k >= 2:
        step = (bb - a) / (2 * k - 1)
        for j in range(1, k):
            H[j + 1] = a + (2 * j - 1) * step
            T[j] = a + 2 * j * step
    _commit_curves(b, frame, {x: _peak(H[i], T[i], tail_left=False) for i, x in enumerate(xs, 1)})
    feats = sorted([F(0), w, a, bb] + list(H.values()) + list(T.values()))
    lo, hi = _neighbor_bounds(feats, H[1], a)
    _add_region(b, frame, (u, xs[0]), lo, hi, a, 1, H[1], 1)
    for i in range(1, k):
        lo, hi = _neighbor_bounds(feats, H[i + 1], T[i])
        _add_region(b, frame, (xs[i - 1], xs[i]), lo, hi, T[i], -1, H[i + 1], 1)
    lo, hi = _neighbor_bounds(feats, bb, T[k])
    _add_region(b, frame, (xs[-1], v), lo, hi, T[k], -1, bb, 1)


def _case_q_conv(b, frame, w, u, xs, v, h, t, conv: bool):
    """head(v)@h left of tail(u)@t. Q: u rises right (+1); CONV: u rises
    left (-1) with the owners' crossing inside. Chain of peaks, tails left."""
    k = len(xs)
    H = {k: h / 2}
    T = {1: (t + w) / 2}
    if k >= 2:
        step = (t - h) / (2 * k - 1)
        for j in range(1, k):
            H[k - j] = h + (2 * j - 1) * step
            T[k - j + 1] = h + 2 * j * step
    _commit_curves(b, frame, {x: _peak(H[i], T[i], tail_left=True) for i, x in enumerate(xs, 1)})
    feats = sorted([F(0), w, h, t] + list(H.values()) + list(T.values()))
    lo, hi = _neighbor_bounds(feats, t, T[1])
    _add_region(b, frame, (u, xs[0]), lo, hi, t, -1 if conv else 1, T[1], -1)
    for i in range(1, k):
        lo, hi = _neighbor_bounds(feats, H[i], T[i + 1])
        _add_region(b, frame, (xs[i - 1], xs[i]), lo, hi, H[i], 1, T[i + 1], -1)
    lo, hi = _neighbor_bounds(feats, H[k], h)
    _add_region(b, frame, (xs[-1], v), lo, hi, H[k], 1, h, 1)


def _case_conv_valley(b, frame, w, u, x, v, h, t):
    """Converging single-vertex ear: a valley between the owner stretches,
    shortened owners, and a slit detour of S reaching the two new (rotated)
    private regions.

    The valley crosses both stretches at height 5g/16 (g = t-h), which is
    always inside the region triangle's central corridor; every clearance
    beyond that height is scaled by the per-side leg margins (h on the left,
    w-t on the right) so the slit never pokes through a leg into foreign
    territory."""
    g = t - h
    m = (h + t) / 2
    d = g / 8            # valley bend height
    y0 = g / 16          # slit floor, below the bend
    cross = 5 * g / 16   # height of the valley's crossings with u and v
    er = min(w - t, g) / 16
    el = min(h, g) / 16

    y_u = cross - er     # shortened tail of u at (c_r, y_u)
    c_r = t - y_u
    y1r = cross + er     # right end of the valley at (c_r, y1r)
    y_v = cross - el
    c_l = h + y_v
    y1l = cross + el

    b.curves[x] = [
        frame.to_world(c_l, y1l),
        frame.to_world(m, d),
        frame.to_world(c_r, y1r),
    ]
    ut = frame.to_world(t, F(0))
    assert b.curves[u][0] == ut, "tail of u must sit on the consumed hyp"
    b.curves[u] = [frame.to_world(c_r, y_u)] + b.curves[u][1:]
    vh = frame.to_world(h, F(0))
    assert b.curves[v][-1] == vh, "head of v must sit on the consumed hyp"
    b.curves[v] = b.curves[v][:-1] + [frame.to_world(c_l, y_v)]

    path = [
        (c_l - el / 2, F(0)),
        (c_l - el / 2, y1l + 2 * el),
        (c_l, y1l + 2 * el),
        (c_l, y0),
        (c_r, y0),
        (c_r, y1r + 2 * er),
        (c_r + er / 2, y1r + 2 * er),
        (c_r + er / 2, F(0)),
    ]
    span_a = frame.to_world(path[0][0], F(0))
    span_b = frame.to_world(path[-1][0], F(0))
    b.splice(span_a, span_b, [frame.to_world(p[0], p[1]) for p in path[1:-1]])

    right = frame.sub((c_r, y_u - er), (0, 1), (-1, 0))
    b.regions[(u, x)] = TriRegion((u, x), right, 4 * er, er, 1, 3 * er, -1)
    left = frame.sub((c_l, y1l + el), (0, -1), (1, 0))
    b.regions[(x, v)] = TriRegion((x, v), left, 4 * el, el, 1, 3 * el, -1)


# ---------------------------------------------------------------------------
# build pipeline
# ---------------------------------------------------------------------------


def build_vpg(g: Graph, per_ear_check: bool = False, trace: bool = False) -> VpgBuild:
    if g.n == 1:
        curves = {0: [(F(0), F(0)), (F(1), F(1)), (F(2), F(0))]}
        S = [(F(-1), F(0)), (F(3), F(0)), (F(3), F(2)), (F(-1), F(2))]
        return _finish(
            Graph(1, []), PlaneGraph(g, RotationScheme([[]])), {0: 0},
            PlaneGraph(g, RotationScheme([[]])), {0: 0}, curves, S, (), ()
        )

    g2, _inj = biconnect_outerplanar(g)
    ok, rot2, ofi = is_outerplanar(g2)
    assert ok
    dec = ear_decomposition(g2, rot2, outer_face_index=ofi)
    a, c = dec.root_edge

    b = _Builder()
    b.curves[a] = [(F(0), F(0)), (F(3), F(3)), (F(6), F(0))]
    b.curves[c] = [(F(10), F(0)), (F(7), F(3)), (F(4), F(0))]
    b.S = [(F(-4), F(0)), (F(14), F(0)), (F(14), F(6)), (F(-4), F(6))]
    f1 = Frame((F(-1), F(0)), (1, 0), (0, 1))
    b.regions[(a, c)] = TriRegion((a, c), f1, F(6), F(1), 1, F(5), 1)
    f2 = Frame((F(11, 2), F(0)), (1, 0), (0, 1))
    b.regions[(c, a)] = TriRegion((c, a), f2, F(11, 2), F(9, 2), -1, F(1, 2), -1)

    traces: list[dict] = []
    if trace:
        traces.append(_snapshot(b))
    for ear in dec.ears:
        _insert_ear(b, ear[0], tuple(ear[1:-1]), ear[-1])
        if per_ear_check:
            _check_partial(g2, rot2, b)
        if trace:
            traces.append(_snapshot(b))

    cw_nb = {e[0]: e[1] for e in b.regions}
    super_breaks = {v: rot2.position(v, cw_nb[v]) for v in range(g2.n)}
    super_plane = PlaneGraph(g2, rot2)
    rot_g = []
    breaks = {}
    for v in range(g.n):
        full = rot2.order[v]
        induced = tuple(wv for wv in full if wv < g.n)
        rot_g.append(induced)
        bpos = super_breaks[v]
        linear = full[bpos:] + full[:bpos]
        first = next(wv for wv in linear if wv < g.n)
        breaks[v] = induced.index(first)
    plane = PlaneGraph(g, RotationScheme(rot_g))
    curves = {v: b.curves[v] for v in range(g.n)}
    return _finish(
        g, plane, breaks, super_plane, super_breaks, curves, b.S,
        tuple(b.regions.values()), tuple(traces)
    )


def _finish(g, plane, breaks, super_plane, super_breaks, curves, S, regions, traces) -> VpgBuild:
    diag_rep = StringRep(
        {v: Curve(v, tuple(pts)) for v, pts in curves.items()},
        PolylineWitness(tuple(S)),
    )
    ortho = rotate45(diag_rep, scale_to_integers=False)
    rep, grid = compact_grid(ortho)
    return VpgBuild(
        rep, diag_rep, breaks, plane, super_plane, super_breaks, grid, regions, traces
    )


# ---------------------------------------------------------------------------
# rotation and compaction
# ---------------------------------------------------------------------------


def rotate45(rep: StringRep, scale_to_integers: bool = True) -> StringRep:
    """(x, y) -> (x+y, y-x): slope +-1 segments become axis-parallel. With
    scale_to_integers the result is scaled by the common denominator."""
    for v, c in rep.curves.items():
        for p, q in c.segments:
            dx, dy = q[0] - p[0], q[1] - p[1]
            if dx != dy and dx != -dy:
                raise NonDiagonalSegment(f"curve {v} has a non-diagonal segment")

    def f(p: Pt) -> Pt:
        return (p[0] + p[1], p[1] - p[0])

    curves = {v: Curve(v, tuple(f(p) for p in c.points)) for v, c in rep.curves.items()}
    wit = rep.witness
    if isinstance(wit, PolylineWitness):
        wit = PolylineWitness(tuple(f(p) for p in wit.points))
    elif wit is not None:
        # the map scales by sqrt(2): a circle stays a circle
        from .geom import CircleWitness

        wit = CircleWitness(f(wit.center), 2 * wit.radius2)
    if scale_to_integers:
        den = 1
        pools = [p for c in curves.values() for p in c.points]
        if isinstance(wit, PolylineWitness):
            pools += list(wit.points)
        for p in pools:
            den = den * p[0].denominator // _g(den, p[0].denominator)
            den = den * p[1].denominator // _g(den, p[1].denominator)
        curves = {
            v: Curve(v, tuple((p[0] * den, p[1] * den) for p in c.points))
            for v, c in curves.items()
        }
        if isinstance(wit, PolylineWitness):
            wit = PolylineWitness(tuple((p[0] * den, p[1] * den) for p in wit.points))
    return StringRep(curves, wit)


def _g(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _piecewise(vals: list[Fraction]):
    def f(x: Fraction) -> Fraction:
        if x <= vals[0]:
            return x - vals[0]
        if x >= vals[-1]:
            return F(len(vals) - 1) + (x - vals[-1])
        lo, hi = 0, len(vals) - 1
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if vals[mid] <= x:
                lo = mid
            else:
                hi = mid
        return F(lo) + (x - vals[lo]) / (vals[hi] - vals[lo])

    return f


def compact_grid(rep: StringRep) -> tuple[StringRep, tuple[int, int]]:
    """Monotone piecewise-linear homeomorphism taking the distinct curve
    coordinates to consecutive integers. Axis-parallel curve segments stay
    axis-parallel; the witness polyline is subdivided at map breakpoints so
    its image stays piecewise linear. All incidence and crossing structure is
    preserved (the map is a plane homeomorphism)."""
    xs = sorted({p[0] for c in rep.curves.values() for p in c.points})
    ys = sorted({p[1] for c in rep.curves.values() for p in c.points})
    fx, fy = _piecewise(xs), _piecewise(ys)

    def fpt(p: Pt) -> Pt:
        return (fx(p[0]), fy(p[1]))

    curves = {v: Curve(v, tuple(fpt(p) for p in c.points)) for v, c in rep.curves.items()}
    wit = rep.witness
    if isinstance(wit, PolylineWitness):
        new_pts: list[Pt] = []
        pts = wit.points
        for i in range(len(pts)):
            p, q = pts[i], pts[(i + 1) % len(pts)]
            new_pts.append(fpt(p))
            cuts = set()
            for val in xs:
                if (p[0] < val < q[0]) or (q[0] < val < p[0]):
                    cuts.add((val - p[0]) / (q[0] - p[0]))
            for val in ys:
                if (p[1] < val < q[1]) or (q[1] < val < p[1]):
                    cuts.add((val - p[1]) / (q[1] - p[1]))
            for t in sorted(cuts):
                new_pts.append(fpt((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1]))))
        wit = PolylineWitness(tuple(_simplify_closed(new_pts)))
    out = StringRep(curves, wit)
    return out, grid_size(out)


def _simplify_closed(pts: list[Pt]) -> list[Pt]:
    """Drop interior points of straight runs (the polyline set is unchanged)."""
    n = len(pts)
    out = []
    for i in range(n):
        a, b, c = pts[(i - 1) % n], pts[i], pts[(i + 1) % n]
        if (b[0] - a[0]) * (c[1] - b[1]) != (b[1] - a[1]) * (c[0] - b[0]):
            out.append(b)
    return out if len(out) >= 3 else pts


def grid_size(rep: StringRep) -> tuple[int, int]:
    """Bounding box of all curve points."""
    xs = [p[0] for c in rep.curves.values() for p in c.points]
    ys = [p[1] for c in rep.curves.values() for p in c.points]
    if not xs:
        return (0, 0)
    return (int(max(xs) - min(xs)), int(max(ys) - min(ys)))


# ---------------------------------------------------------------------------
# diagnostics
# ---------------------------------------------------------------------------


def _snapshot(b: _Builder) -> dict:
    return {
        "curves": {v: [(str(p[0]), str(p[1])) for p in pts] for v, pts in sorted(b.curves.items())},
        "s": [(str(p[0]), str(p[1])) for p in b.S],
        "regions": [
            {"edge": list(r.edge), "hyp": [(str(p[0]), str(p[1])) for p in r.hyp_world()]}
            for r in b.regions.values()
        ],
    }


def _check_partial(g2: Graph, rot2: RotationScheme, b: _Builder) -> None:
    from .geom import BOTH_ENDS, crossing_profile, verify_1string
    from .geom import verify_order_preserving, verify_outer_string

    placed = sorted(b.curves)
    idx = {v: i for i, v in enumerate(placed)}
    sub = Graph(
        len(placed),
        [(idx[u], idx[v]) for (u, v) in g2.edges if u in idx and v in idx],
    )
    sub_rot = RotationScheme([[idx[w] for w in rot2.order[v] if w in idx] for v in placed])
    rep = StringRep(
        {idx[v]: Curve(idx[v], tuple(b.curves[v])) for v in placed},
        PolylineWitness(tuple(b.S)),
    )
    prof = crossing_profile(rep)
    assert verify_1string(rep, sub, prof).ok, "partial vpg rep is not 1-string"
    assert verify_order_preserving(rep, PlaneGraph(sub, sub_rot), profile=prof).ok
    assert verify_outer_string(rep, BOTH_ENDS).ok
    _check_regions(b, idx, rep)


def _check_regions(b: _Builder, idx: dict[int, int], rep: StringRep) -> None:
    """No curve other than the two owners meets a region triangle."""
    from .geom import segment_intersection

    back = {i: k for k, i in idx.items()}
    for r in b.regions.values():
        h0, h1 = r.hyp_world()
        ap = r.apex_world()
        tri = (h0, h1, ap)
        owners = set(r.edge)
        for v, c in rep.curves.items():
            orig = back[v]
            if orig in owners:
                continue
            for seg in c.segments:
                if _segment_hits_triangle(seg, tri, segment_intersection):
                    raise AssertionError(
                        f"curve {orig} intrudes into region {r.edge}"
                    )


def _segment_hits_triangle(seg, tri, seg_int) -> bool:
    a, b = seg
    for p in (a, b):
        if _strictly_in_triangle(p, tri):
            return True
    for i in range(3):
        e = (tri[i], tri[(i + 1) % 3])
        if seg_int(seg, e) is not None:
            return True
    return False


def _strictly_in_triangle(p, tri) -> bool:
    signs = []
    for i in range(3):
        a, b = tri[i], tri[(i + 1) % 3]
        d = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])
        signs.append((d > 0) - (d < 0))
    return all(s > 0 for s in signs) or all(s < 0 for s in signs)
