"""Touching-L contact representations of 2-trees, their extension to
order-preserving 1-string representations of series-parallel (partial
2-tree) graphs, and the planar embedding read off the contacts.

Every vertex is an unrotated L: a vertical arm descending to the corner,
then a horizontal arm rightward. Each edge (p,q) of the current 2-tree owns
a rectangular attachment slot whose top side lies on p's horizontal arm and
whose right side lies on q's vertical arm; a child placed in the slot
touches p with its top end and q with its right end, and the slot splits
into three nested slots for the edges (p,q), (p,child), (child,q).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ExtensionCollision, NotTwoTree
from .geom import Curve, StringRep
from .graphs import (
    EliminationOrder,
    Graph,
    PlaneGraph,
    RotationScheme,
    completed_two_tree,
    two_tree_completion,
)

F = Fraction
Pt = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class TouchingL:
    vertex: int
    corner: Pt
    up_len: Fraction
    right_len: Fraction

    @property
    def top(self) -> Pt:
        return (self.corner[0], self.corner[1] + self.up_len)

    @property
    def right_end(self) -> Pt:
        return (self.corner[0] + self.right_len, self.corner[1])

    def points(self) -> tuple[Pt, Pt, Pt]:
        return (self.top, self.corner, self.right_end)


@dataclass(frozen=True)
class Contact:
    """The `end` of curve `toucher` rests on the interior of curve `holder`."""

    toucher: int
    holder: int
    end: str  # "top" | "right"
    point: Pt


ContactMap = dict[tuple[int, int], Contact]


@dataclass
class _Slot:
    p: int  # horizontal arm along the top side
    q: int  # vertical arm along the right side
    x0: Fraction
    x1: Fraction
    y0: Fraction
    y1: Fraction


@dataclass(frozen=True)
class TouchingBuild:
    ls: dict[int, TouchingL]
    contacts: ContactMap
    completed: Graph
    elim: EliminationOrder


def build_touching_L(g: Graph, elim: EliminationOrder | None = None) -> TouchingBuild:
    """Touching-L representation of the 2-tree completion of g."""
    if elim is None:
        elim = two_tree_completion(g)
    completed = completed_two_tree(g, elim)
    ls: dict[int, TouchingL] = {}
    contacts: ContactMap = {}
    slots: dict[tuple[int, int], _Slot] = {}

    if len(elim.base) == 1:
        ls[elim.base[0]] = TouchingL(elim.base[0], (F(0), F(0)), F(10), F(10))
        return TouchingBuild(ls, contacts, completed, elim)

    a, b = elim.base
    ls[a] = TouchingL(a, (F(0), F(10)), F(15), F(25))
    ls[b] = TouchingL(b, (F(20), F(-5)), F(15), F(10))
    contacts[_key(a, b)] = Contact(b, a, "top", (F(20), F(10)))
    slots[_key(a, b)] = _Slot(a, b, F(10), F(20), F(0), F(10))

    for v, att in zip(reversed(elim.order), reversed(elim.attach)):
        key = _key(*att)
        if key not in slots:
            raise NotTwoTree(f"no live slot for attachment edge {att}")
        s = slots.pop(key)
        cx = s.x0 + (s.x1 - s.x0) / 4
        cy = s.y0 + (s.y1 - s.y0) / 4
        ls[v] = TouchingL(v, (cx, cy), s.y1 - cy, s.x1 - cx)
        contacts[_key(v, s.p)] = Contact(v, s.p, "top", (cx, s.y1))
        contacts[_key(v, s.q)] = Contact(v, s.q, "right", (s.x1, cy))
        slots[key] = _Slot(s.p, s.q, cx, s.x1, cy, s.y1)
        slots[_key(s.p, v)] = _Slot(s.p, v, s.x0, cx, cy, s.y1)
        slots[_key(v, s.q)] = _Slot(v, s.q, cx, s.x1, s.y0, cy)
    return TouchingBuild(ls, contacts, completed, elim)


def _key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def audit_contacts(tb: TouchingBuild) -> None:
    """Exactly one contact per completed-2-tree edge; touching ends rest on
    arm interiors; L interiors pairwise disjoint."""
    assert set(tb.contacts) == set(tb.completed.edges)
    for key, c in tb.contacts.items():
        toucher = tb.ls[c.toucher]
        holder = tb.ls[c.holder]
        p = toucher.top if c.end == "top" else toucher.right_end
        assert p == c.point
        hx, hy = holder.corner
        if c.end == "top":
            assert p[1] == hy and hx < p[0] < hx + holder.right_len
        else:
            assert p[0] == hx and hy < p[1] < hy + holder.up_len
    vs = sorted(tb.ls)
    for i, u in enumerate(vs):
        for v in vs[i + 1 :]:
            _assert_disjoint_but_contacts(tb, u, v)


def _assert_disjoint_but_contacts(tb: TouchingBuild, u: int, v: int) -> None:
    from .geom import SegmentOverlap, segment_intersection

    lu, lv = tb.ls[u], tb.ls[v]
    allowed = set()
    c = tb.contacts.get(_key(u, v))
    if c is not None:
        allowed.add(c.point)
    su = [(lu.top, lu.corner), (lu.corner, lu.right_end)]
    sv = [(lv.top, lv.corner), (lv.corner, lv.right_end)]
    for s1 in su:
        for s2 in sv:
            r = segment_intersection(s1, s2)
            if r is None:
                continue
            assert not isinstance(r, SegmentOverlap), f"L overlap {u},{v}"
            assert r in allowed, f"stray intersection of Ls {u},{v} at {r}"


def extend_to_1string(
    tb: TouchingBuild, g: Graph
) -> StringRep:
    """Turn each contact of a g-edge into one proper crossing by extending
    the touching end slightly; contacts of fill edges are first neutralized
    by retracting the touching end."""
    fill = set(tb.elim.fill_edges)
    tops: dict[int, Pt] = {v: l.top for v, l in tb.ls.items()}
    rights: dict[int, Pt] = {v: l.right_end for v, l in tb.ls.items()}

    for key in sorted(tb.contacts):
        c = tb.contacts[key]
        if key not in fill:
            continue
        # retract the touching end half way back to the previous feature on
        # its own arm, so the fill contact disappears
        t = tb.ls[c.toucher]
        if c.end == "top":
            below = [y for y in v_feats_of(tb, c.toucher) if y < t.top[1]]
            tops[c.toucher] = (t.top[0], (t.top[1] + max(below)) / 2)
        else:
            left = [x for x in h_feats_of(tb, c.toucher) if x < t.right_end[0]]
            rights[c.toucher] = ((t.right_end[0] + max(left)) / 2, t.right_end[1])

    def arms_now():
        out = []
        for w in tb.ls:
            l = tb.ls[w]
            out.append((w, "V", l.corner[0], l.corner[1], tops[w][1]))
            out.append((w, "H", l.corner[1], l.corner[0], rights[w][0]))
        return out

    # extensions are sequential: each obstacle scan sees the arms already
    # extended, so two extensions can never collide in fresh territory
    for key in sorted(tb.contacts):
        c = tb.contacts[key]
        if key in fill:
            continue
        arms = arms_now()
        if c.end == "top":
            x = tb.ls[c.toucher].corner[0]
            y = tops[c.toucher][1]
            obstacles = []
            for (w, kind, a0, a1, a2) in arms:
                if w == c.toucher:
                    continue
                if kind == "H" and a1 <= x <= a2 and a0 > y:
                    obstacles.append(a0)
                if kind == "V" and a0 == x and min(a1, a2) > y:
                    obstacles.append(min(a1, a2))
            delta = (min(obstacles) - y) / 2 if obstacles else F(1)
            if delta <= 0:
                raise ExtensionCollision(f"vertex {c.toucher} top extension blocked")
            tops[c.toucher] = (x, y + delta)
        else:
            y = tb.ls[c.toucher].corner[1]
            x = rights[c.toucher][0]
            obstacles = []
            for (w, kind, a0, a1, a2) in arms:
                if w == c.toucher:
                    continue
                if kind == "V" and a1 <= y <= a2 and a0 > x:
                    obstacles.append(a0)
                if kind == "H" and a0 == y and min(a1, a2) > x:
                    obstacles.append(min(a1, a2))
            delta = (min(obstacles) - x) / 2 if obstacles else F(1)
            if delta <= 0:
                raise ExtensionCollision(f"vertex {c.toucher} right extension blocked")
            rights[c.toucher] = (x + delta, y)

    curves = {}
    for v in range(g.n):
        l = tb.ls[v]
        curves[v] = Curve(v, (tops[v], l.corner, rights[v]))
    return StringRep(curves, None)


def v_feats_of(tb: TouchingBuild, v: int) -> list[Fraction]:
    l = tb.ls[v]
    out = [l.corner[1]]
    for c in tb.contacts.values():
        if c.holder == v and c.end == "right":
            out.append(c.point[1])
    return out


def h_feats_of(tb: TouchingBuild, v: int) -> list[Fraction]:
    l = tb.ls[v]
    out = [l.corner[0]]
    for c in tb.contacts.values():
        if c.holder == v and c.end == "top":
            out.append(c.point[0])
    return out


def derive_embedding(tb: TouchingBuild) -> PlaneGraph:
    """Clockwise rotation of the completed 2-tree read off the contacts:
    place the vertex point just above-right of the corner and connect it to
    the contact points along the L and to the two arm ends."""
    n = tb.completed.n
    order: list[list[int]] = []
    for v in range(n):
        l = tb.ls[v]
        top_partner = None
        right_partner = None
        on_h: list[tuple[Fraction, int]] = []
        on_v: list[tuple[Fraction, int]] = []
        for key, c in tb.contacts.items():
            if c.toucher == v:
                if c.end == "top":
                    top_partner = c.holder
                else:
                    right_partner = c.holder
            elif c.holder == v:
                if c.end == "top":
                    on_h.append((c.point[0], c.toucher))
                else:
                    on_v.append((c.point[1], c.toucher))
        cyc: list[int] = []
        if right_partner is not None:
            cyc.append(right_partner)
        cyc.extend(w for _x, w in sorted(on_h, reverse=True))
        cyc.extend(w for _y, w in sorted(on_v))
        if top_partner is not None:
            cyc.append(top_partner)
        order.append(cyc)
    return PlaneGraph(tb.completed, RotationScheme(order))


@dataclass(frozen=True)
class SpBuild:
    rep: StringRep
    plane: PlaneGraph          # embedding of g induced from the contact drawing
    completed_plane: PlaneGraph
    touching: TouchingBuild


def build_sp(g: Graph) -> SpBuild:
    """Order-preserving 1-string representation of a connected partial
    2-tree, plus the planar embedding it preserves."""
    tb = build_touching_L(g)
    rep = extend_to_1string(tb, g)
    completed_plane = derive_embedding(tb)
    fill = {tuple(sorted(e)) for e in tb.elim.fill_edges}
    order = []
    for v in range(g.n):
        order.append(
            [w for w in completed_plane.rot.order[v] if tuple(sorted((v, w))) not in fill]
        )
    plane = PlaneGraph(g, RotationScheme(order))
    return SpBuild(rep, plane, completed_plane, tb)
