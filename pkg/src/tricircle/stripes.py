"""Formula-free crossing counter for drawings cut into monotone stripes.

A stripe is a vertical band of the cylinder.  Inside it every edge piece is
x- and y-monotone, so the stripe (minus any circle it contains) splits into
regions that are topological disks; each edge piece is a chord of one region
with two positions on that region's boundary.  Two chords cross exactly when
their endpoints interleave along the boundary.

A region stores its boundary as two sequences: ``left`` read top to bottom,
then ``right`` read bottom to top closes the cycle.  For a band between two
vertical lines this is the usual rule "two segments cross iff their order on
the left line differs from their order on the right line".  Around a circle
the vertices sit on the region boundary too, so edges that end at a vertex
are chords with a terminal position.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple

from .calculus import BI_KEYS, MONO_KEYS, CrossingBreakdown, TripartiteSpec


class StructuralError(ValueError):
    """The stripe data does not describe a valid stripe-monotone drawing."""


class Edge(NamedTuple):
    src: str
    i: int
    dst: str
    j: int

    def endpoints(self) -> frozenset[tuple[str, int]]:
        return frozenset({(self.src, self.i), (self.dst, self.j)})

    def pair(self) -> frozenset[str]:
        return frozenset({self.src, self.dst})

    def __str__(self) -> str:
        return f"{self.src}{self.i}-{self.dst}{self.j}"


class Position(NamedTuple):
    edge: Edge
    kind: str  # "pass" on a stripe wall, "end" at a vertex on a circle


@dataclass(frozen=True)
class Region:
    left: tuple[Position, ...]
    right: tuple[Position, ...]

    def boundary(self) -> tuple[Position, ...]:
        return self.left + self.right[::-1]

    def walls(self) -> tuple[tuple[Edge, ...], tuple[Edge, ...]]:
        return (
            tuple(p.edge for p in self.left if p.kind == "pass"),
            tuple(p.edge for p in self.right if p.kind == "pass"),
        )

    def reversed(self) -> "Region":
        """Mirror image top-to-bottom; crossings are unchanged."""
        return Region(self.left[::-1], self.right[::-1])


@dataclass(frozen=True)
class Stripe:
    name: str
    kind: str  # "circle" or "bundle"
    regions: tuple[Region, ...]

    def left_wall(self) -> tuple[Edge, ...]:
        return tuple(e for r in self.regions for e in r.walls()[0])

    def right_wall(self) -> tuple[Edge, ...]:
        return tuple(e for r in self.regions for e in r.walls()[1])

    def edges(self) -> set[Edge]:
        return {p.edge for r in self.regions for p in r.boundary()}


@dataclass(frozen=True)
class StripeDrawing:
    spec: TripartiteSpec
    stripes: tuple[Stripe, ...]

    def to_dict(self) -> dict:
        def pos(p: Position) -> list:
            return [p.kind, str(p.edge)]

        return {
            "spec": {"m": self.spec.m, "n": self.spec.n, "p": self.spec.p},
            "stripes": [
                {
                    "name": s.name,
                    "kind": s.kind,
                    "regions": [
                        {"left": [pos(p) for p in r.left], "right": [pos(p) for p in r.right]}
                        for r in s.regions
                    ],
                }
                for s in self.stripes
            ],
        }

    def reversed(self) -> "StripeDrawing":
        stripes = tuple(
            Stripe(s.name, s.kind, tuple(r.reversed() for r in s.regions[::-1])) for s in self.stripes
        )
        return StripeDrawing(self.spec, stripes)


def validate(d: StripeDrawing) -> None:
    if len(d.stripes) != 6:
        raise StructuralError(f"expected 6 stripes, got {len(d.stripes)}")
    for s in d.stripes:
        for r in s.regions:
            counts: dict[Edge, int] = {}
            for p in r.boundary():
                if p.kind not in ("pass", "end"):
                    raise StructuralError(f"unknown position kind {p.kind!r}")
                counts[p.edge] = counts.get(p.edge, 0) + 1
            bad = [e for e, c in counts.items() if c != 2]
            if bad:
                raise StructuralError(f"stripe {s.name}: edge {bad[0]} has {counts[bad[0]]} positions")
        seen = [e for r in s.regions for e in {p.edge for p in r.boundary()}]
        if len(seen) != len(set(seen)):
            raise StructuralError(f"stripe {s.name}: an edge occupies two regions")
    for k, s in enumerate(d.stripes):
        nxt = d.stripes[(k + 1) % len(d.stripes)]
        if s.right_wall() != nxt.left_wall():
            raise StructuralError(f"wall between {s.name} and {nxt.name} does not match")
    where: dict[Edge, list[int]] = {}
    for k, s in enumerate(d.stripes):
        for e in s.edges():
            where.setdefault(e, []).append(k)
    runs = [{k % 6, (k + 1) % 6, (k + 2) % 6} for k in range(6)]
    ends: dict[Edge, int] = {}
    for s in d.stripes:
        for r in s.regions:
            for p in r.boundary():
                if p.kind == "end":
                    ends[p.edge] = ends.get(p.edge, 0) + 1
    for e, ks in where.items():
        if len(ks) != 3 or set(ks) not in runs:
            raise StructuralError(f"edge {e} lies in stripes {ks}, not three consecutive ones")
        if ends.get(e, 0) != 2:
            raise StructuralError(f"edge {e} has {ends.get(e, 0)} terminal positions")


def _region_crossings(region: Region) -> Iterable[tuple[Edge, Edge]]:
    ends: dict[Edge, list[int]] = {}
    for idx, p in enumerate(region.boundary()):
        ends.setdefault(p.edge, []).append(idx)
    chords = sorted((e, tuple(ix)) for e, ix in ends.items())
    for (e1, (a1, b1)), (e2, (a2, b2)) in combinations(chords, 2):
        if e1.endpoints() & e2.endpoints():
            continue
        if (a1 < a2 < b1) != (a1 < b2 < b1):
            yield e1, e2


def _crossing_pairs(d: StripeDrawing) -> list[tuple[Edge, Edge]]:
    validate(d)
    found: set[frozenset[Edge]] = set()
    pairs = []
    for s in d.stripes:
        for r in s.regions:
            for e1, e2 in _region_crossings(r):
                key = frozenset((e1, e2))
                if key in found:
                    raise StructuralError(f"edges {e1} and {e2} cross in more than one stripe")
                found.add(key)
                pairs.append((e1, e2))
    return pairs


def stripe_oracle(d: StripeDrawing) -> int:
    return len(_crossing_pairs(d))


_BI_BY_SHARED = {key[2]: key for key in BI_KEYS}
_MONO_BY_PAIR = {frozenset(key): key for key in MONO_KEYS}


def stripe_breakdown(d: StripeDrawing) -> CrossingBreakdown:
    mono = dict.fromkeys(MONO_KEYS, 0)
    bi = dict.fromkeys(BI_KEYS, 0)
    for e1, e2 in _crossing_pairs(d):
        p1, p2 = e1.pair(), e2.pair()
        if p1 == p2:
            mono[_MONO_BY_PAIR[p1]] += 1
        else:
            (shared,) = p1 & p2
            bi[_BI_BY_SHARED[shared]] += 1
    return CrossingBreakdown.from_parts(mono, bi)
