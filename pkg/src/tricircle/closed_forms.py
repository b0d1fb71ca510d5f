"""Closed-form bounds and exact values for tripartite-circle crossing numbers."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from types import MappingProxyType
from typing import Mapping, Optional

from .calculus import InputError, TripartiteSpec, total_count
from .constructions import linear_labels

LOWER_METHODS = (
    "theorem_general",
    "theorem_general_plus2",
    "complete_graph_decomposition",
    "exact_k22n",
)
UPPER_METHODS = (
    "theorem_general",
    "linear_construction",
    "improved_remark",
    "exact_k22n",
    "registered_constant",
)


@dataclass(frozen=True)
class KnownValueRegistry:
    cr_complete: Mapping[int, int]
    bespoke_upper: Mapping[tuple[int, int, int], int]
    exact_small: Mapping[tuple[int, int, int], int]

    def __post_init__(self) -> None:
        for name in ("cr_complete", "bespoke_upper", "exact_small"):
            object.__setattr__(self, name, MappingProxyType(dict(getattr(self, name))))


# cr(K_n) is only settled up to n = 12; values beyond are conjectural and absent.
REGISTRY = KnownValueRegistry(
    cr_complete={3: 0, 4: 0, 5: 1, 6: 3, 7: 9, 8: 18, 9: 36, 10: 60, 11: 100, 12: 150},
    bespoke_upper={(3, 3, 3): 42, (4, 4, 4): 175},
    exact_small={(2, 2, 2): 3},
)


def _as_spec(spec) -> TripartiteSpec:
    if isinstance(spec, TripartiteSpec):
        return spec
    return TripartiteSpec(*spec)


def _half_product(c: int) -> int:
    return (c // 2) * ((c - 1) // 2)


def cr2_balanced(n: int) -> int:
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    return n * comb(n, 3)


def cr2(m: int, n: int) -> int:
    """Bipartite-circle crossing number of K_{m,n} (symmetric in m, n)."""
    if m < 1 or n < 1:
        raise InputError(f"sizes must be positive, got ({m}, {n})")
    if m > n:
        m, n = n, m
    marks = [n * (i - 1) // m for i in range(1, m + 1)]
    diffs = [marks[j] - marks[i] for i in range(m) for j in range(i + 1, m)]
    return comb(n, 2) * comb(m, 2) + sum(d * d for d in diffs) - n * sum(diffs)


def lower_general(spec) -> int:
    spec = _as_spec(spec)
    return sum(cr2(a, b) + a * b * _half_product(c) for a, b, c in spec.rotations())


def lower_improved(spec) -> int:
    spec = _as_spec(spec)
    bonus = 2 if min(spec.sizes()) >= 3 else 0
    return lower_general(spec) + bonus


def upper_general(spec) -> int:
    spec = _as_spec(spec)
    return sum(comb(a, 2) * comb(b, 2) + a * b * _half_product(c) for a, b, c in spec.rotations())


def balanced_bounds(n: int) -> tuple[int, int]:
    if n < 3:
        raise InputError(f"balanced bounds need n >= 3, got {n}")
    tail = 3 * n * n * _half_product(n)
    return 3 * n * comb(n, 3) + tail + 2, 3 * comb(n, 2) ** 2 + tail


def k22n_exact(n: int) -> int:
    """Tripartite-circle crossing number of K_{2,2,n}."""
    if n < 2:
        raise InputError(f"K_{{2,2,n}} needs n >= 2, got {n}")
    if n == 2:
        return REGISTRY.exact_small[(2, 2, 2)]
    return 6 * _half_product(n) + 2 * n - 3


@dataclass(frozen=True)
class ImprovedUpper:
    total: int
    mono_per_pair: int
    bi_per_triple: int
    saved: int


def _exact_quarter(numerator: int) -> int:
    q, r = divmod(numerator, 4)
    if r:
        raise ArithmeticError(f"{numerator} is not divisible by 4")
    return q


def improved_upper_balanced(n: int) -> ImprovedUpper:
    """Crossing counts of the split-vertex variant of the balanced construction."""
    if n < 3:
        raise InputError(f"improved balanced bound needs n >= 3, got {n}")
    lo, hi = n // 2, (n + 1) // 2
    if n % 2:
        pair_term = comb(lo, 2) + comb(hi, 2)
        mono = comb(n - 1, 2) * comb(n, 2) + (n - 1) * pair_term
        bi = n * n * pair_term
        total = 3 * _exact_quarter(2 * n**4 - 5 * n**3 + 3 * n**2 + n - 1)
        saved = 3 * _exact_quarter(n**3 - n**2 - n + 1)
    else:
        h = n // 2
        # 2 * (C(h-1,2) n^2 + (n-2) n^2 / 2 + n^2 / 4)
        mono = 2 * comb(h - 1, 2) * n * n + (n - 2) * n * n + n * n // 2
        bi = comb(n - 1, 2) ** 2 + 2 * (n - 1) * (comb(h - 1, 2) + comb(h, 2)) + h * h + (h - 1) ** 2
        total = 3 * _exact_quarter(2 * n**4 - 6 * n**3 + 7 * n**2)
        saved = 3 * (n**3 - 3 * n**2) // 2
    if 3 * (mono + bi) != total:
        raise ArithmeticError(f"component sum {3 * (mono + bi)} != total {total} at n={n}")
    if upper_general((n, n, n)) - total != saved:
        raise ArithmeticError(f"saved-count identity fails at n={n}")
    return ImprovedUpper(total, mono, bi, saved)


def harary_hill(n: int) -> int:
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    return (n // 2) * ((n - 1) // 2) * ((n - 2) // 2) * ((n - 3) // 2) // 4


def lower_via_complete(spec) -> Optional[int]:
    """Lower bound from the complete graph on all vertices; None if cr(K_total) is unknown."""
    spec = _as_spec(spec)
    total = sum(spec.sizes())
    if total not in REGISTRY.cr_complete:
        return None
    return REGISTRY.cr_complete[total] - sum(comb(s, 4) for s in spec.sizes())


@dataclass(frozen=True)
class Bound:
    value: int
    method: str
    candidates: Mapping[str, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"value": self.value, "method": self.method, "candidates": dict(self.candidates)}


@dataclass(frozen=True)
class BoundsReport:
    spec: TripartiteSpec
    lower: Bound
    upper: Bound

    def __post_init__(self) -> None:
        if self.lower.value > self.upper.value:
            raise ArithmeticError(f"lower {self.lower.value} exceeds upper {self.upper.value}")

    def to_dict(self) -> dict:
        return {
            "spec": {"m": self.spec.m, "n": self.spec.n, "p": self.spec.p},
            "lower": self.lower.to_dict(),
            "upper": self.upper.to_dict(),
        }


def _k22n_size(spec: TripartiteSpec) -> Optional[int]:
    a, b, c = sorted(spec.sizes())
    return c if (a, b) == (2, 2) else None


def _pick(candidates: dict[str, int], order: tuple[str, ...], best) -> tuple[int, str]:
    target = best(candidates.values())
    method = next(m for m in order if candidates.get(m) == target)
    return target, method


def best_bounds(spec) -> BoundsReport:
    """Tightest lower and upper bound from every applicable producer."""
    spec = _as_spec(spec)
    lower = {"theorem_general": lower_general(spec)}
    if min(spec.sizes()) >= 3:
        lower["theorem_general_plus2"] = lower_improved(spec)
    via_complete = lower_via_complete(spec)
    if via_complete is not None:
        lower["complete_graph_decomposition"] = via_complete

    upper = {
        "theorem_general": upper_general(spec),
        "linear_construction": total_count(linear_labels(spec)).total,
    }
    balanced = spec.m == spec.n == spec.p
    if balanced and spec.m >= 3:
        upper["improved_remark"] = improved_upper_balanced(spec.m).total
    k = _k22n_size(spec)
    if k is not None:
        lower["exact_k22n"] = upper["exact_k22n"] = k22n_exact(k)
    if balanced and spec.sizes() in REGISTRY.bespoke_upper:
        upper["registered_constant"] = REGISTRY.bespoke_upper[spec.sizes()]

    lo = _pick(lower, LOWER_METHODS, max)
    hi = _pick(upper, UPPER_METHODS, min)
    return BoundsReport(
        spec,
        Bound(lo[0], lo[1], {m: lower[m] for m in LOWER_METHODS if m in lower}),
        Bound(hi[0], hi[1], {m: upper[m] for m in UPPER_METHODS if m in upper}),
    )


@dataclass(frozen=True)
class BalancedRestricted:
    """Lower bound on crossings of a balanced restricted 3-circle drawing of K_N."""

    N: int
    sizes: tuple[int, int, int]
    value: int
    general_value: int
    harary_hill: int

    @property
    def exceeds_hh(self) -> bool:
        return self.value > self.harary_hill


def bcr3_balanced_lower(N: int) -> BalancedRestricted:
    """``value`` uses the best available lower bound on the tripartite part;
    ``general_value`` uses the plain general lower bound for comparison."""
    if N < 6:
        raise InputError(f"N must be at least 6, got {N}")
    q = (N + 1) // 3
    r = N - 3 * q
    sizes = (q, q, q + r)
    chords = 2 * comb(q, 4) + comb(q + r, 4)
    value = best_bounds(sizes).lower.value + chords
    return BalancedRestricted(N, sizes, value, lower_general(sizes) + chords, harary_hill(N))
