"""Exact rational geometry kernel and the 1-string representation verifier.

All predicates run on exact rationals (fractions.Fraction); the pairwise
segment tests use integer homogeneous coordinates so that no floating point
can ever misclassify a crossing. Floats appear only as a conservative
bounding-box prefilter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import (
    CurveOverlap,
    DegenerateSegment,
    EndpointOnCurve,
    InvalidCurve,
    MissingWitness,
    TouchingPoint,
    TripleIntersection,
)
from .graphs import Graph, PlaneGraph

Rat = Fraction
Point = tuple[Fraction, Fraction]

BOTH_ENDS = "both-ends"
ONE_END = "one-end"


def R(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def pt(x, y) -> Point:
    return (R(x), R(y))


# ---------------------------------------------------------------------------
# homogeneous integer predicates
# ---------------------------------------------------------------------------


def _homog(p: Point) -> tuple[int, int, int]:
    xd = p[0].denominator
    yd = p[1].denominator
    g = xd * yd // _gcd(xd, yd)
    return (p[0].numerator * (g // xd), p[1].numerator * (g // yd), g)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _orient_h(a, b, c) -> int:
    ax, ay, aw = a
    bx, by, bw = b
    cx, cy, cw = c
    d = aw * (bx * cy - by * cx) - bw * (ax * cy - ay * cx) + cw * (ax * by - ay * bx)
    return (d > 0) - (d < 0)


def _on_segment_h(a, b, p) -> bool:
    """p collinear with a,b assumed; is p within the closed box of a,b."""
    ax, ay, aw = a
    bx, by, bw = b
    px, py, pw = p
    # compare px/pw against ax/aw and bx/bw (all w > 0)
    lo_x = (px * aw - ax * pw) * (px * bw - bx * pw)
    lo_y = (py * aw - ay * pw) * (py * bw - by * pw)
    return lo_x <= 0 and lo_y <= 0


@dataclass(frozen=True)
class SegmentOverlap:
    start: Point
    end: Point


def segment_intersection(a: tuple[Point, Point], b: tuple[Point, Point]):
    """Exact classification: None, a single Point, or a SegmentOverlap."""
    (p1, p2), (p3, p4) = a, b
    if p1 == p2 or p3 == p4:
        raise DegenerateSegment("zero-length segment")
    h1, h2, h3, h4 = _homog(p1), _homog(p2), _homog(p3), _homog(p4)
    d1 = _orient_h(h3, h4, h1)
    d2 = _orient_h(h3, h4, h2)
    if d1 == 0 and d2 == 0:
        # collinear: project on the dominant axis
        axis = 0 if p1[0] != p2[0] else 1
        s1, s2 = sorted((p1, p2), key=lambda q: q[axis])
        s3, s4 = sorted((p3, p4), key=lambda q: q[axis])
        lo = max(s1[axis], s3[axis])
        hi = min(s2[axis], s4[axis])
        if lo > hi:
            return None
        if lo == hi:
            return s2 if s2[axis] == lo else s4
        start = s1 if s1[axis] >= s3[axis] else s3
        end = s2 if s2[axis] <= s4[axis] else s4
        return SegmentOverlap(start, end)
    # a zero orientation pins the line meet to that very endpoint
    if d1 == 0:
        return p1 if _on_segment_h(h3, h4, h1) else None
    if d2 == 0:
        return p2 if _on_segment_h(h3, h4, h2) else None
    d3 = _orient_h(h1, h2, h3)
    d4 = _orient_h(h1, h2, h4)
    if d3 == 0:
        return p3 if _on_segment_h(h1, h2, h3) else None
    if d4 == 0:
        return p4 if _on_segment_h(h1, h2, h4) else None
    if (d1 > 0) != (d2 > 0) and (d3 > 0) != (d4 > 0):
        return _line_meet(h1, h2, h3, h4)
    return None


def _line_meet(h1, h2, h3, h4) -> Point:
    def cross3(u, v):
        return (
            u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0],
        )

    l1 = cross3(h1, h2)
    l2 = cross3(h3, h4)
    x, y, w = cross3(l1, l2)
    assert w != 0
    return (Fraction(x, w), Fraction(y, w))


# ---------------------------------------------------------------------------
# curves and representations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Curve:
    """Directed polyline of a vertex: tail = points[0], head = points[-1]."""

    vertex: int
    points: tuple[Point, ...]

    def __post_init__(self):
        if len(self.points) < 2:
            raise InvalidCurve(f"curve {self.vertex} needs >= 2 points")
        for p, q in zip(self.points, self.points[1:]):
            if p == q:
                raise InvalidCurve(f"curve {self.vertex} repeats point {p}")

    @property
    def tail(self) -> Point:
        return self.points[0]

    @property
    def head(self) -> Point:
        return self.points[-1]

    @property
    def segments(self) -> list[tuple[Point, Point]]:
        return list(zip(self.points, self.points[1:]))

    def bend_count(self) -> int:
        bends = 0
        for a, b, c in zip(self.points, self.points[1:], self.points[2:]):
            if (b[0] - a[0]) * (c[1] - b[1]) != (b[1] - a[1]) * (c[0] - b[0]):
                bends += 1
        return bends


@dataclass(frozen=True)
class CircleWitness:
    center: Point
    radius2: Fraction


@dataclass(frozen=True)
class PolylineWitness:
    points: tuple[Point, ...]  # closed implicitly (last joins first)

    def segments(self) -> list[tuple[Point, Point]]:
        pts = self.points
        return [(pts[i], pts[(i + 1) % len(pts)]) for i in range(len(pts))]


Witness = CircleWitness | PolylineWitness


@dataclass(frozen=True)
class StringRep:
    curves: dict[int, Curve]
    witness: Witness | None = None


@dataclass(frozen=True)
class CrossingProfile:
    pair_counts: dict[tuple[int, int], int]
    sequences: dict[int, tuple[int, ...]]
    points: dict[tuple[int, int], tuple[Point, ...]]

    def count(self, u: int, v: int) -> int:
        return self.pair_counts.get((min(u, v), max(u, v)), 0)


@dataclass(frozen=True)
class Report:
    ok: bool
    failures: tuple[dict, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def _fail(kind: str, **kw) -> dict:
    d = {"kind": kind}
    d.update(kw)
    return d


# ---------------------------------------------------------------------------
# crossing profile
# ---------------------------------------------------------------------------


def _curve_self_check(c: Curve) -> None:
    segs = c.segments
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            r = segment_intersection(segs[i], segs[j])
            if r is None:
                continue
            if j == i + 1 and not isinstance(r, SegmentOverlap) and r == c.points[i + 1]:
                continue
            raise InvalidCurve(f"curve {c.vertex} self-intersects near {r}")


def _locate(c: Curve, p: Point) -> tuple[int, Fraction]:
    """Arc position of p on c as (segment index, parameter in [0,1]).

    Bend hits are canonicalized to (i, 1). Assumes p lies on the curve.
    """
    hits: list[tuple[int, Fraction]] = []
    for i, (a, b) in enumerate(c.segments):
        dx, dy = b[0] - a[0], b[1] - a[1]
        # collinear?
        if (p[0] - a[0]) * dy != (p[1] - a[1]) * dx:
            continue
        den = dx * dx + dy * dy
        t = ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / den
        if 0 <= t <= 1:
            hits.append((i, t))
    if not hits:
        raise AssertionError("point not on curve")
    if len(hits) == 2 and hits[0][1] == 1 and hits[1][1] == 0 and hits[1][0] == hits[0][0] + 1:
        return hits[0]
    return hits[0]


def _branches(c: Curve, loc: tuple[int, Fraction]) -> list[tuple[Fraction, Fraction]]:
    """Outgoing direction vectors of c around the located point."""
    i, t = loc
    segs = c.segments
    a, b = segs[i]
    d = (b[0] - a[0], b[1] - a[1])
    if 0 < t < 1:
        return [d, (-d[0], -d[1])]
    if t == 1:
        if i + 1 >= len(segs):
            return [(-d[0], -d[1])]  # head endpoint
        a2, b2 = segs[i + 1]
        return [(-d[0], -d[1]), (b2[0] - a2[0], b2[1] - a2[1])]
    # t == 0: only possible at the tail (bends canonicalize to t == 1)
    return [d]


def _angle_key(d: tuple[Fraction, Fraction]):
    dx, dy = d
    upper = 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1
    return upper, dx, dy


def _angle_less(d1, d2) -> bool:
    u1 = _angle_key(d1)[0]
    u2 = _angle_key(d2)[0]
    if u1 != u2:
        return u1 < u2
    cr = d1[0] * d2[1] - d1[1] * d2[0]
    return cr > 0


def crossing_profile(rep: StringRep) -> CrossingProfile:
    """Count proper crossings per curve pair and order them along each curve.

    Raises on anything that violates the representation model: touching
    points, overlaps, endpoints resting on curves, three curves through one
    point, self-intersecting curves.
    """
    curves = sorted(rep.curves.values(), key=lambda c: c.vertex)
    for c in curves:
        _curve_self_check(c)

    data = []
    for c in curves:
        segs = c.segments
        hs = []
        for a, b in segs:
            x0, x1 = sorted((float(a[0]), float(b[0])))
            y0, y1 = sorted((float(a[1]), float(b[1])))
            # reject-only prefilter: pad beyond float rounding error
            pad = 1e-9 + 1e-12 * max(abs(x0), abs(x1), abs(y0), abs(y1))
            hs.append((a, b, x0 - pad, x1 + pad, y0 - pad, y1 + pad))
        data.append((c, hs))

    pair_points: dict[tuple[int, int], set[Point]] = {}
    point_curves: dict[Point, set[int]] = {}
    for i in range(len(curves)):
        ci, hsi = data[i]
        for j in range(i + 1, len(curves)):
            cj, hsj = data[j]
            hits: set[Point] = set()
            for a, b, x0, x1, y0, y1 in hsi:
                for c_, d_, u0, u1, v0, v1 in hsj:
                    if x1 < u0 or u1 < x0 or y1 < v0 or v1 < y0:
                        continue
                    r = segment_intersection((a, b), (c_, d_))
                    if r is None:
                        continue
                    if isinstance(r, SegmentOverlap):
                        raise CurveOverlap(
                            f"curves {ci.vertex} and {cj.vertex} overlap on a segment"
                        )
                    hits.add(r)
            if hits:
                pair_points[(ci.vertex, cj.vertex)] = hits
                for p in hits:
                    point_curves.setdefault(p, set()).update((ci.vertex, cj.vertex))

    for p, vs in point_curves.items():
        if len(vs) > 2:
            raise TripleIntersection(f"curves {sorted(vs)} share point {p}")

    by_vertex = {c.vertex: c for c in curves}
    pair_counts: dict[tuple[int, int], int] = {}
    pair_pts: dict[tuple[int, int], tuple[Point, ...]] = {}
    seq_raw: dict[int, list[tuple[int, Fraction, int]]] = {c.vertex: [] for c in curves}

    for (u, v), pts in sorted(pair_points.items()):
        cu, cv = by_vertex[u], by_vertex[v]
        for p in sorted(pts):
            for c in (cu, cv):
                if p == c.tail or p == c.head:
                    raise EndpointOnCurve(
                        f"endpoint of curve {c.vertex} lies on curve "
                        f"{cv.vertex if c is cu else cu.vertex} at {p}"
                    )
            lu = _locate(cu, p)
            lv = _locate(cv, p)
            dirs = [(d, u) for d in _branches(cu, lu)] + [(d, v) for d in _branches(cv, lv)]
            assert len(dirs) == 4
            # exact angular sort; identical directions across curves = overlap
            for k in range(len(dirs)):
                for l in range(k + 1, len(dirs)):
                    d1, l1 = dirs[k]
                    d2, l2 = dirs[l]
                    cr = d1[0] * d2[1] - d1[1] * d2[0]
                    dot = d1[0] * d2[0] + d1[1] * d2[1]
                    if cr == 0 and dot > 0 and l1 != l2:
                        raise CurveOverlap(f"curves {u} and {v} run together at {p}")
            ordered = _sort_dirs(dirs)
            labels = [l for _d, l in ordered]
            if labels[0] == labels[1] or labels[1] == labels[2] or labels[2] == labels[3]:
                raise TouchingPoint(
                    f"curves {u} and {v} meet at {p} without alternation"
                )
            key = (u, v)
            pair_counts[key] = pair_counts.get(key, 0) + 1
            pair_pts.setdefault(key, ())
            pair_pts[key] = pair_pts[key] + (p,)
            seq_raw[u].append((lu[0], lu[1], v))
            seq_raw[v].append((lv[0], lv[1], u))

    sequences = {
        v: tuple(partner for _i, _t, partner in sorted(lst, key=lambda x: (x[0], x[1])))
        for v, lst in seq_raw.items()
    }
    return CrossingProfile(pair_counts, sequences, pair_pts)


def _sort_dirs(dirs):
    out = list(dirs)
    # insertion sort with the exact comparator (only 4 entries)
    for i in range(1, len(out)):
        j = i
        while j > 0 and _angle_less(out[j][0], out[j - 1][0]):
            out[j], out[j - 1] = out[j - 1], out[j]
            j -= 1
    return out


# ---------------------------------------------------------------------------
# verifiers
# ---------------------------------------------------------------------------


def verify_1string(rep: StringRep, g: Graph, profile: CrossingProfile | None = None) -> Report:
    """PASS iff adjacent curves cross exactly once and non-adjacent never."""
    if set(rep.curves) != set(range(g.n)):
        raise ValueError("representation must carry one curve per vertex")
    prof = profile if profile is not None else crossing_profile(rep)
    failures = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            want = 1 if g.has_edge(u, v) else 0
            got = prof.count(u, v)
            if got != want:
                failures.append(_fail("CrossingCount", pair=(u, v), expected=want, got=got))
    return Report(not failures, tuple(failures))


def is_rotation_of(seq: tuple[int, ...], cyc: tuple[int, ...]) -> bool:
    if len(seq) != len(cyc):
        return False
    if not seq:
        return True
    doubled = cyc + cyc
    n = len(cyc)
    for s in range(n):
        if doubled[s : s + n] == seq:
            return True
    return False


def verify_order_preserving(
    rep: StringRep,
    pg: PlaneGraph,
    strict: bool = False,
    profile: CrossingProfile | None = None,
) -> Report:
    """Crossing order along every curve matches the clockwise rotation,
    linearized at some break; per-curve walking direction is free unless
    strict=True pins tail-to-head."""
    prof = profile if profile is not None else crossing_profile(rep)
    pg.rot.validate(pg.graph)
    failures = []
    for v in range(pg.graph.n):
        seq = prof.sequences.get(v, ())
        cyc = pg.rot.order[v]
        ok = is_rotation_of(seq, cyc)
        if not ok and not strict:
            ok = is_rotation_of(tuple(reversed(seq)), cyc)
        if not ok:
            failures.append(
                _fail("OrderViolation", vertex=v, observed=list(seq), expected=list(cyc))
            )
    return Report(not failures, tuple(failures))


def _circle_side(w: CircleWitness, p: Point) -> int:
    dx = p[0] - w.center[0]
    dy = p[1] - w.center[1]
    d = dx * dx + dy * dy - w.radius2
    return (d > 0) - (d < 0)


class _PolyIndex:
    """Float-bucketed spatial index over witness segments. Buckets only
    prefilter; every geometric decision stays exact."""

    _PAD = 1e-6

    def __init__(self, w: PolylineWitness):
        self.segs = w.segments()
        self.cells: dict[tuple[int, int], list[int]] = {}
        self.ybuckets: dict[int, list[int]] = {}
        self.boxes: list[tuple[float, float, float, float]] = []
        for i, (a, b) in enumerate(self.segs):
            x0, x1 = sorted((float(a[0]), float(b[0])))
            y0, y1 = sorted((float(a[1]), float(b[1])))
            pad = self._PAD + 1e-12 * max(abs(x0), abs(x1), abs(y0), abs(y1))
            box = (x0 - pad, x1 + pad, y0 - pad, y1 + pad)
            self.boxes.append(box)
            import math

            for ix in range(math.floor(box[0]), math.floor(box[1]) + 1):
                for iy in range(math.floor(box[2]), math.floor(box[3]) + 1):
                    self.cells.setdefault((ix, iy), []).append(i)
            for iy in range(math.floor(box[2]), math.floor(box[3]) + 1):
                self.ybuckets.setdefault(iy, []).append(i)

    def near_box(self, x0: float, x1: float, y0: float, y1: float) -> list[int]:
        import math

        out: set[int] = set()
        for ix in range(math.floor(x0 - self._PAD), math.floor(x1 + self._PAD) + 1):
            for iy in range(math.floor(y0 - self._PAD), math.floor(y1 + self._PAD) + 1):
                out.update(self.cells.get((ix, iy), ()))
        return sorted(out)

    def on_boundary(self, p: Point) -> bool:
        import math

        fx, fy = float(p[0]), float(p[1])
        for i in self.cells.get((math.floor(fx), math.floor(fy)), ()):
            a, b = self.segs[i]
            dx, dy = b[0] - a[0], b[1] - a[1]
            if (p[0] - a[0]) * dy != (p[1] - a[1]) * dx:
                continue
            if min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(
                a[1], b[1]
            ):
                return True
        return False

    def inside(self, p: Point) -> bool:
        """Strict interior by exact crossing number; call after ruling out
        boundary membership."""
        import math

        cnt = 0
        px, py = p
        for i in self.ybuckets.get(math.floor(float(py)), ()):
            a, b = self.segs[i]
            ay, by = a[1], b[1]
            if (ay <= py < by) or (by <= py < ay):
                x_int = a[0] + (py - a[1]) * (b[0] - a[0]) / (b[1] - a[1])
                if x_int > px:
                    cnt += 1
        return cnt % 2 == 1


def _on_polyline(w: PolylineWitness, p: Point) -> bool:
    return _PolyIndex(w).on_boundary(p)


def _point_ok_circle(w: CircleWitness, p: Point) -> bool:
    return _circle_side(w, p) <= 0


def verify_outer_string(rep: StringRep, mode: str = BOTH_ENDS) -> Report:
    """Witness containment, no proper witness crossing, and curve ends on the
    contour witness per mode (both-ends or one-end)."""
    if rep.witness is None:
        raise MissingWitness("representation carries no contour witness")
    if mode not in (BOTH_ENDS, ONE_END):
        raise ValueError(f"unknown mode {mode!r}")
    w = rep.witness
    failures = []
    if isinstance(w, CircleWitness):
        for v in sorted(rep.curves):
            c = rep.curves[v]
            for p in c.points:
                if not _point_ok_circle(w, p):
                    failures.append(_fail("WitnessCrossesCurve", vertex=v, point=_pp(p)))
                    break
            on = [_circle_side(w, c.tail) == 0, _circle_side(w, c.head) == 0]
            _check_ends(failures, v, on, mode)
    else:
        index = _PolyIndex(w)
        for v in sorted(rep.curves):
            c = rep.curves[v]
            bad = False
            for a, b in c.segments:
                ts = {Fraction(0), Fraction(1)}
                x0, x1 = sorted((float(a[0]), float(b[0])))
                y0, y1 = sorted((float(a[1]), float(b[1])))
                for i in index.near_box(x0, x1, y0, y1):
                    r = segment_intersection((a, b), index.segs[i])
                    if r is None:
                        continue
                    pts = (r.start, r.end) if isinstance(r, SegmentOverlap) else (r,)
                    for p in pts:
                        ts.add(_param_on(a, b, p))
                cuts = sorted(ts)
                for t0, t1 in zip(cuts, cuts[1:]):
                    tm = (t0 + t1) / 2
                    m = (a[0] + tm * (b[0] - a[0]), a[1] + tm * (b[1] - a[1]))
                    if index.on_boundary(m):
                        continue
                    if not index.inside(m):
                        failures.append(_fail("WitnessCrossesCurve", vertex=v, point=_pp(m)))
                        bad = True
                        break
                if bad:
                    break
            on = [index.on_boundary(c.tail), index.on_boundary(c.head)]
            _check_ends(failures, v, on, mode)
    return Report(not failures, tuple(failures))


def _check_ends(failures, v, on, mode):
    if mode == BOTH_ENDS:
        if not (on[0] and on[1]):
            failures.append(_fail("EndpointNotOnContour", vertex=v, tail=on[0], head=on[1]))
    else:
        if not (on[0] or on[1]):
            failures.append(_fail("EndpointNotOnContour", vertex=v, tail=on[0], head=on[1]))


def _param_on(a: Point, b: Point, p: Point) -> Fraction:
    dx, dy = b[0] - a[0], b[1] - a[1]
    den = dx * dx + dy * dy
    return ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / den


def _pp(p: Point) -> list:
    return [str(p[0]), str(p[1])]


# ---------------------------------------------------------------------------
# transforms (used by constructors and property tests)
# ---------------------------------------------------------------------------


def map_rep(rep: StringRep, f) -> StringRep:
    curves = {
        v: Curve(v, tuple(f(p) for p in c.points)) for v, c in rep.curves.items()
    }
    w = rep.witness
    if isinstance(w, PolylineWitness):
        w = PolylineWitness(tuple(f(p) for p in w.points))
    elif isinstance(w, CircleWitness):
        raise ValueError("cannot map a circle witness through a general point map")
    return StringRep(curves, w)


def reverse_curves(rep: StringRep, vertices: Iterable[int]) -> StringRep:
    vs = set(vertices)
    curves = {
        v: Curve(v, tuple(reversed(c.points))) if v in vs else c
        for v, c in rep.curves.items()
    }
    return StringRep(curves, rep.witness)
