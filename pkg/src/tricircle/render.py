"""SVG pictures of constructions.  Presentation only: nothing here feeds back into counting."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping

from .calculus import InputError, TripartiteSpec

PAIRS = ("MN", "MP", "NP")
DEFAULT_COLORS = {"MN": "red", "MP": "orange", "NP": "green"}

_HEADER = (
    '<?xml version="1.0" encoding="UTF-8"?>\n'
    '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
    'width="{w}" height="{h}" viewBox="0 0 {w} {h}">\n'
)


def _pair_key(a: str, b: str) -> str:
    return "".join(sorted(a + b))


@dataclass(frozen=True)
class RenderSpec:
    layout: str = "cyclic"
    colors: Mapping[str, str] = field(default_factory=lambda: dict(DEFAULT_COLORS))
    width: int = 600
    height: int = 600
    circle_radius: float = 0.0  # 0 picks a size from the canvas
    vertex_size: float = 6.0

    def __post_init__(self) -> None:
        if self.layout not in ("cyclic", "nested"):
            raise InputError(f"layout must be cyclic or nested, got {self.layout!r}")
        keys = {_pair_key(*k) for k in self.colors}
        if keys != set(PAIRS) or len(self.colors) != 3:
            raise InputError(f"colors must cover exactly the pairs {PAIRS}, got {sorted(self.colors)}")
        if self.width <= 0 or self.height <= 0:
            raise InputError("width and height must be positive")

    def color(self, a: str, b: str) -> str:
        want = _pair_key(a, b)
        return next(c for k, c in self.colors.items() if _pair_key(*k) == want)


def _circles(spec: TripartiteSpec, style: RenderSpec) -> dict[str, tuple[float, float, float]]:
    """Centre and radius of each circle."""
    w, h = style.width, style.height
    cx, cy = w / 2, h / 2
    if style.layout == "cyclic":
        r = style.circle_radius or min(w, h) / 9
        spread = min(w, h) / 3.2
        out = {}
        for k, name in enumerate("MNP"):
            angle = -math.pi / 2 + 2 * math.pi * k / 3
            out[name] = (cx + spread * math.cos(angle), cy + spread * math.sin(angle), r)
        return out
    outer = min(w, h) * 0.42
    r = style.circle_radius or outer / 5
    return {
        "P": (cx, cy, outer),
        "N": (cx - outer / 2.4, cy, r),
        "M": (cx + outer / 2.4, cy, r),
    }


def _vertex_points(spec: TripartiteSpec, circles) -> dict[tuple[str, int], tuple[float, float]]:
    pts = {}
    for name, (x, y, r) in circles.items():
        size = spec.size(name)
        for i in range(1, size + 1):
            angle = -math.pi / 2 + 2 * math.pi * (i - 1) / size
            pts[(name, i)] = (x + r * math.cos(angle), y + r * math.sin(angle))
    return pts


def _edge_path(p, q, centre) -> str:
    # bow the edge away from the picture centre so bundles stay readable
    mx, my = (p[0] + q[0]) / 2, (p[1] + q[1]) / 2
    dx, dy = mx - centre[0], my - centre[1]
    norm = math.hypot(dx, dy) or 1.0
    bow = 0.15 * math.hypot(q[0] - p[0], q[1] - p[1])
    c = (mx + bow * dx / norm, my + bow * dy / norm)
    return f"M {p[0]:.2f} {p[1]:.2f} Q {c[0]:.2f} {c[1]:.2f} {q[0]:.2f} {q[1]:.2f}"


def render_svg(spec, style: RenderSpec | None = None, title: str = "") -> str:
    """SVG with one circle element per circle, one rect per vertex and one path per edge."""
    spec = spec if isinstance(spec, TripartiteSpec) else TripartiteSpec(*spec)
    style = style or RenderSpec()
    circles = _circles(spec, style)
    pts = _vertex_points(spec, circles)
    centre = (style.width / 2, style.height / 2)
    parts = [_HEADER.format(w=style.width, h=style.height)]
    if title:
        parts.append(f"  <title>{title}</title>\n")
    for name, (x, y, r) in circles.items():
        parts.append(
            f'  <circle cx="{x:.2f}" cy="{y:.2f}" r="{r:.2f}" fill="none" stroke="black" '
            f'stroke-width="1.5" data-circle="{name}"/>\n'
        )
    for a, b in (("M", "N"), ("M", "P"), ("N", "P")):
        color = style.color(a, b)
        for i in range(1, spec.size(a) + 1):
            for j in range(1, spec.size(b) + 1):
                d = _edge_path(pts[(a, i)], pts[(b, j)], centre)
                parts.append(f'  <path d="{d}" fill="none" stroke="{color}" stroke-width="0.8"/>\n')
    half = style.vertex_size / 2
    for (name, i), (x, y) in pts.items():
        parts.append(
            f'  <rect x="{x - half:.2f}" y="{y - half:.2f}" width="{style.vertex_size:.2f}" '
            f'height="{style.vertex_size:.2f}" fill="black" data-vertex="{name}{i}"/>\n'
        )
    parts.append("</svg>\n")
    return "".join(parts)
