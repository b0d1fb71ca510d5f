"""Explicit drawings: the linear (stripe) construction and the K_{2,2,n} drawing."""

from __future__ import annotations

from dataclasses import dataclass

from .calculus import (
    X_PAIRS,
    Y_PAIRS,
    DrawingLabels,
    InputError,
    LabelVector,
    TripartiteSpec,
    cyclic_distance,
    f,
)
from .stripes import Edge, Position, Region, Stripe, StripeDrawing

# Each circle's successor in the left-to-right order around the cylinder.
_NEXT = {a: b for a, b in X_PAIRS}
_PREV = {b: a for a, b in X_PAIRS}


def _as_spec(spec) -> TripartiteSpec:
    return spec if isinstance(spec, TripartiteSpec) else TripartiteSpec(*spec)


def linear_labels(spec) -> DrawingLabels:
    """x- and y-labels of the linear construction.

    Toward circle B, the circle preceding B sits at label b and the other
    source at ceil(b/2); x-labels coincide with y-labels.
    """
    spec = _as_spec(spec)

    def anchor(src: str, dst: str) -> int:
        size = spec.size(dst)
        return size if _PREV[dst] == src else (size + 1) // 2

    y = {
        (src, dst): LabelVector(src, dst, (anchor(src, dst),) * spec.size(src))
        for src, dst in Y_PAIRS
    }
    x = {pair: y[pair] for pair in X_PAIRS}
    return DrawingLabels(spec, x, y)


def _top(size: int) -> int:
    return (size + 1) // 2


def _vertex_from_incoming(size: int, label: int) -> int:
    """Map a counterclockwise label (read from the circle's right-hand point)
    to the vertex id, which is the clockwise label read from the left-hand point."""
    t = _top(size)
    return t + 1 - label if label <= t else size + t + 1 - label


def _walls(spec: TripartiteSpec, a: str, b: str) -> tuple[list[Edge], list[Edge]]:
    """Edge order on the two vertical lines between circle a (left) and b (right)."""
    na, nb = spec.size(a), spec.size(b)
    near_a = [Edge(a, i, b, _vertex_from_incoming(nb, j)) for i in range(1, na + 1) for j in range(1, nb + 1)]
    near_b = [Edge(a, j, b, _vertex_from_incoming(nb, i)) for i in range(1, nb + 1) for j in range(1, na + 1)]
    return near_a, near_b


def linear_stripe_model(spec) -> StripeDrawing:
    """Combinatorial stripe model of the linear construction.

    Stripes run circle M, bundle MN, circle N, bundle NP, circle P, bundle PM.
    In a circle stripe, the vertices in the closed top half (ceil(size/2) of
    them) are reached over the top of the circle and the rest from below; vertex
    ids 1..t run left to right along the top, t+1..size run right to left
    along the bottom.
    """
    spec = _as_spec(spec)
    walls = {(a, b): _walls(spec, a, b) for a, b in X_PAIRS}
    stripes = []
    for a, b in X_PAIRS:
        stripes.append(_circle_stripe(spec, a, walls))
        near_a, near_b = walls[(a, b)]
        bundle = Region(tuple(Position(e, "pass") for e in near_a), tuple(Position(e, "pass") for e in near_b))
        stripes.append(Stripe(f"bundle {a}{b}", "bundle", (bundle,)))
    return StripeDrawing(spec, tuple(stripes))


def _circle_stripe(spec: TripartiteSpec, c: str, walls) -> Stripe:
    size = spec.size(c)
    t = _top(size)
    arriving = walls[(_PREV[c], c)][1]  # left wall, edges ending on c
    leaving = walls[(c, _NEXT[c])][0]  # right wall, edges starting on c

    def floor(vertices) -> tuple[Position, ...]:
        out = []
        for v in vertices:
            out += [Position(e, "end") for e in arriving if e.j == v]
            out += [Position(e, "end") for e in leaving if e.i == v]
        return tuple(out)

    def passes(edges, keep) -> tuple[Position, ...]:
        return tuple(Position(e, "pass") for e in edges if keep(e))

    in_top = lambda v: v <= t  # noqa: E731
    top = Region(
        passes(arriving, lambda e: in_top(e.j)) + floor(range(1, t + 1)),
        passes(leaving, lambda e: in_top(e.i)),
    )
    bottom = Region(
        passes(arriving, lambda e: not in_top(e.j)),
        floor(range(size, t, -1)) + passes(leaving, lambda e: not in_top(e.i)),
    )
    return Stripe(f"circle {c}", "circle", (top, bottom))


@dataclass(frozen=True)
class K22nDrawing:
    """Labels of a K_{2,2,n} drawing on the outer circle P.

    Vertices 1, 2 lie on N and 3, 4 on M; ``x[i-1]`` and ``y[i-1]`` are the
    x- and y-labels of vertex i toward P.  ``type`` is which of the four
    drawings of K_{2,2,0} the drawing extends.
    """

    n: int
    type: int
    x: tuple[int, int, int, int]
    y: tuple[int, int, int, int]

    def __post_init__(self) -> None:
        if self.n < 3:
            raise InputError(f"K_{{2,2,n}} drawings need n >= 3, got {self.n}")
        if self.type not in (1, 2, 3, 4):
            raise InputError(f"type must be 1..4, got {self.type}")
        object.__setattr__(self, "x", tuple(self.x))
        object.__setattr__(self, "y", tuple(self.y))
        for v in self.x + self.y:
            if not 1 <= v <= self.n:
                raise InputError(f"label {v} outside 1..{self.n}")
        if len(self.x) != 4 or len(self.y) != 4:
            raise InputError("need exactly four x-labels and four y-labels")

    def to_dict(self) -> dict:
        return {"n": self.n, "type": self.type, "x": list(self.x), "y": list(self.y)}


def k22n_construction(n: int) -> K22nDrawing:
    if n < 3:
        raise InputError(f"K_{{2,2,n}} construction needs n >= 3, got {n}")
    h = n // 2
    return K22nDrawing(n, 1, x=(1, h + 2, n - 1, h), y=(1, n, h + 1, h))


def k22n_red_count(d: K22nDrawing) -> int:
    """Crossings involving M-N edges (lower-bound form for types 2-4)."""
    n = d.n
    x1, x2, x3, x4 = d.x
    y1, y2, y3, y4 = d.y
    if d.type == 1:
        return 2 * (
            cyclic_distance(n, y1, x1)
            + cyclic_distance(n, x2, y2)
            + cyclic_distance(n, y3, x3)
            + cyclic_distance(n, x4, y4)
        ) + 1
    if d.type in (2, 3):
        return 2 * n + 1
    return 2 * (cyclic_distance(n, y1, x1) + cyclic_distance(n, x2, y2)) + n


def k22n_green_count(d: K22nDrawing) -> int:
    n = d.n
    x1, x2, x3, x4 = d.x
    y1, y2, y3, y4 = d.y
    return (
        f(n, x1, x2)
        + f(n, x3, x4)
        + f(n, y1, y3)
        + f(n, y1, y4)
        + f(n, y2, y3)
        + f(n, y2, y4)
    )


def k22n_total(d: K22nDrawing) -> int:
    return k22n_red_count(d) + k22n_green_count(d)
