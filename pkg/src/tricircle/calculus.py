"""Exact integer primitives for counting crossings from x- and y-labels.

Circles are named ``"M"``, ``"N"`` and ``"P"``.  Vertex labels are 1-based and
only their differences modulo the circle size matter, so no geometry is
represented here.  Every function is a pure function of its arguments.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from types import MappingProxyType
from typing import Mapping, Sequence

CIRCLES = ("M", "N", "P")

# The three rotations (a, b, c) of (M, N, P).
CYCLIC_TRIPLES = (("M", "N", "P"), ("N", "P", "M"), ("P", "M", "N"))
X_PAIRS = (("M", "N"), ("N", "P"), ("P", "M"))
Y_PAIRS = (("M", "N"), ("M", "P"), ("N", "M"), ("N", "P"), ("P", "M"), ("P", "N"))

MONO_KEYS = tuple(a + b for a, b, _ in CYCLIC_TRIPLES)
BI_KEYS = tuple(a + b + c for a, b, c in CYCLIC_TRIPLES)


class InputError(ValueError):
    """Raised when an argument violates an operation's precondition."""


def binom(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise InputError(f"binom needs nonnegative arguments, got ({n}, {k})")
    return comb(n, k)


def _check_label(n: int, label: int) -> None:
    if n < 1:
        raise InputError(f"circle size must be positive, got {n}")
    if not 1 <= label <= n:
        raise InputError(f"label {label} outside 1..{n}")


def cyclic_distance(n: int, k: int, l: int) -> int:
    """Steps from label ``k`` to label ``l`` in labelling direction, in 0..n-1."""
    _check_label(n, k)
    _check_label(n, l)
    return (l - k) % n


def f(n: int, u: int, v: int) -> int:
    """Crossings forced by two label positions ``u``, ``v`` on a circle of size ``n``."""
    d = cyclic_distance(n, u, v)
    return comb(d, 2) + comb(n - d, 2)


@dataclass(frozen=True)
class FMin:
    value: int
    optimal_offsets: frozenset[int]
    gap: int


def f_min(n: int) -> FMin:
    """Minimum of ``f(n, ., .)``, the |u - v| values attaining it, and the
    distance from the minimum to the next attainable value."""
    if n < 2:
        raise InputError(f"f_min needs n >= 2, got {n}")
    value = (n // 2) * ((n - 1) // 2)
    offsets = frozenset({n // 2, (n + 1) // 2})
    return FMin(value, offsets, 1 if n % 2 == 0 else 2)


@dataclass(frozen=True)
class TripartiteSpec:
    m: int
    n: int
    p: int

    def __post_init__(self) -> None:
        for name in ("m", "n", "p"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise InputError(f"{name} must be a positive integer, got {value!r}")

    def size(self, circle: str) -> int:
        try:
            return {"M": self.m, "N": self.n, "P": self.p}[circle]
        except KeyError:
            raise InputError(f"unknown circle {circle!r}") from None

    def sizes(self) -> tuple[int, int, int]:
        return (self.m, self.n, self.p)

    def rotations(self) -> list[tuple[int, int, int]]:
        """Sizes (a, b, c) for each cyclic triple."""
        return [tuple(self.size(c) for c in triple) for triple in CYCLIC_TRIPLES]


@dataclass(frozen=True)
class LabelVector:
    """Labels on circle ``target``, one per vertex of circle ``source``."""

    source: str
    target: str
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.source not in CIRCLES or self.target not in CIRCLES:
            raise InputError(f"unknown circle in ({self.source!r}, {self.target!r})")
        if self.source == self.target:
            raise InputError("source and target circles must differ")
        object.__setattr__(self, "values", tuple(self.values))

    def check(self, spec: TripartiteSpec) -> None:
        if len(self.values) != spec.size(self.source):
            raise InputError(
                f"{self.source}->{self.target} has {len(self.values)} labels, "
                f"expected {spec.size(self.source)}"
            )
        _check_values(spec.size(self.target), self.values)


def _check_values(size: int, values: Sequence[int]) -> None:
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int):
            raise InputError(f"label {v!r} is not an integer")
        _check_label(size, v)


@dataclass(frozen=True)
class DrawingLabels:
    spec: TripartiteSpec
    x: Mapping[tuple[str, str], LabelVector]
    y: Mapping[tuple[str, str], LabelVector]

    def __post_init__(self) -> None:
        if set(self.x) != set(X_PAIRS):
            raise InputError(f"x-families must be exactly {X_PAIRS}, got {sorted(self.x)}")
        if set(self.y) != set(Y_PAIRS):
            raise InputError(f"y-families must be exactly {Y_PAIRS}, got {sorted(self.y)}")
        for families in (self.x, self.y):
            for (src, dst), vec in families.items():
                if (vec.source, vec.target) != (src, dst):
                    raise InputError(f"family keyed {src}{dst} holds {vec.source}{vec.target}")
                vec.check(self.spec)
        object.__setattr__(self, "x", MappingProxyType(dict(self.x)))
        object.__setattr__(self, "y", MappingProxyType(dict(self.y)))


@dataclass(frozen=True)
class CrossingBreakdown:
    """Crossing counts split by type.

    ``mono`` is keyed ``"MN"``, ``"NP"``, ``"PM"``; ``bi`` is keyed by the
    cyclic triple ``"MNP"``, ``"NPM"``, ``"PMN"`` where the last letter is the
    circle shared by the two crossing edges (so ``"MNP"`` counts MP/NP).
    """

    mono: Mapping[str, int]
    bi: Mapping[str, int]
    total: int

    def __post_init__(self) -> None:
        if set(self.mono) != set(MONO_KEYS) or set(self.bi) != set(BI_KEYS):
            raise InputError("breakdown keys must be the fixed cyclic pairs and triples")
        parts = list(self.mono.values()) + list(self.bi.values())
        if any(v < 0 for v in parts):
            raise InputError("crossing counts must be nonnegative")
        if sum(parts) != self.total:
            raise InputError(f"total {self.total} differs from component sum {sum(parts)}")
        object.__setattr__(self, "mono", MappingProxyType(dict(self.mono)))
        object.__setattr__(self, "bi", MappingProxyType(dict(self.bi)))

    @classmethod
    def from_parts(cls, mono: Mapping[str, int], bi: Mapping[str, int]) -> "CrossingBreakdown":
        return cls(mono, bi, sum(mono.values()) + sum(bi.values()))

    def to_dict(self) -> dict:
        return {
            "mono": {k: self.mono[k] for k in MONO_KEYS},
            "bi": {k: self.bi[k] for k in BI_KEYS},
            "total": self.total,
        }


def mono_count(target_size: int, x: LabelVector) -> int:
    """Crossings among edges between two circles, from the x-labels of one side."""
    _check_values(target_size, x.values)
    vals = x.values
    return sum(
        f(target_size, vals[i], vals[j])
        for i in range(len(vals))
        for j in range(i + 1, len(vals))
    )


def bi_count(third_size: int, yA: LabelVector, yB: LabelVector) -> int:
    """AC/BC crossings, from the y-labels of A and B on the shared circle C."""
    if yA.target != yB.target:
        raise InputError(f"y-families target different circles ({yA.target}, {yB.target})")
    _check_values(third_size, yA.values)
    _check_values(third_size, yB.values)
    return sum(f(third_size, u, v) for u in yA.values for v in yB.values)


def total_count(labels: DrawingLabels) -> CrossingBreakdown:
    spec = labels.spec
    mono: dict[str, int] = {}
    bi: dict[str, int] = {}
    for a, b, c in CYCLIC_TRIPLES:
        mono[a + b] = mono_count(spec.size(b), labels.x[(a, b)])
        bi[a + b + c] = bi_count(spec.size(c), labels.y[(a, c)], labels.y[(b, c)])
    return CrossingBreakdown.from_parts(mono, bi)
