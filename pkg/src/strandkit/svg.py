"""Deterministic SVG rendering of string representations."""

from __future__ import annotations

import math
from fractions import Fraction

from .geom import CircleWitness, CrossingProfile, PolylineWitness, StringRep

_PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
)


def emit_svg(
    rep: StringRep,
    size: int = 800,
    margin: int = 40,
    show_labels: bool = True,
    profile: CrossingProfile | None = None,
    overlays: list[tuple[str, list[tuple[Fraction, Fraction]]]] | None = None,
) -> str:
    """Curves, witness, optional crossing markers and region overlays.

    Output is byte-identical for equal inputs.
    """
    pts: list[tuple[float, float]] = []
    for c in rep.curves.values():
        pts += [(float(p[0]), float(p[1])) for p in c.points]
    w = rep.witness
    if isinstance(w, PolylineWitness):
        pts += [(float(p[0]), float(p[1])) for p in w.points]
    elif isinstance(w, CircleWitness):
        r = math.sqrt(float(w.radius2))
        cx, cy = float(w.center[0]), float(w.center[1])
        pts += [(cx - r, cy - r), (cx + r, cy + r)]
    for _label, poly in overlays or ():
        pts += [(float(p[0]), float(p[1])) for p in poly]

    if not pts:
        return (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
            f'viewBox="0 0 {size} {size}"></svg>\n'
        )
    x0 = min(p[0] for p in pts)
    x1 = max(p[0] for p in pts)
    y0 = min(p[1] for p in pts)
    y1 = max(p[1] for p in pts)
    span = max(x1 - x0, y1 - y0, 1e-9)
    scale = (size - 2 * margin) / span

    def T(p) -> tuple[float, float]:
        # flip y so the mathematical orientation reads normally on screen
        return (
            margin + (float(p[0]) - x0) * scale,
            size - margin - (float(p[1]) - y0) * scale,
        )

    def fmt(v: float) -> str:
        return f"{v:.3f}"

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">'
    ]
    if isinstance(w, CircleWitness):
        cx, cy = T(w.center)
        rr = math.sqrt(float(w.radius2)) * scale
        out.append(
            f'<circle cx="{fmt(cx)}" cy="{fmt(cy)}" r="{fmt(rr)}" fill="none" '
            'stroke="#999999" stroke-dasharray="6,4"/>'
        )
    elif isinstance(w, PolylineWitness):
        d = " ".join(f"{fmt(T(p)[0])},{fmt(T(p)[1])}" for p in w.points)
        out.append(
            f'<polygon points="{d}" fill="none" stroke="#999999" stroke-dasharray="6,4"/>'
        )
    for label, poly in overlays or ():
        d = " ".join(f"{fmt(T(p)[0])},{fmt(T(p)[1])}" for p in poly)
        out.append(f'<polygon points="{d}" fill="#dddddd" fill-opacity="0.5" stroke="none">'
                   f"<title>{label}</title></polygon>")
    for v in sorted(rep.curves):
        c = rep.curves[v]
        color = _PALETTE[v % len(_PALETTE)]
        d = " ".join(f"{fmt(T(p)[0])},{fmt(T(p)[1])}" for p in c.points)
        out.append(
            f'<polyline points="{d}" fill="none" stroke="{color}" stroke-width="1.6"/>'
        )
        if show_labels:
            tx, ty = T(c.points[0])
            out.append(
                f'<text x="{fmt(tx)}" y="{fmt(ty - 4)}" font-size="11" '
                f'fill="{color}">{v}</text>'
            )
    if profile is not None:
        for pair in sorted(profile.points):
            for p in profile.points[pair]:
                px, py = T(p)
                out.append(
                    f'<circle cx="{fmt(px)}" cy="{fmt(py)}" r="2.2" fill="#000000"/>'
                )
    out.append("</svg>")
    return "\n".join(out) + "\n"
