"""Exact and bounded tripartite-circle crossing numbers of K_{m,n,p}."""

from .calculus import (
    CrossingBreakdown,
    DrawingLabels,
    InputError,
    LabelVector,
    TripartiteSpec,
    bi_count,
    cyclic_distance,
    f,
    f_min,
    mono_count,
    total_count,
)
from .closed_forms import (
    REGISTRY,
    balanced_bounds,
    bcr3_balanced_lower,
    best_bounds,
    cr2,
    cr2_balanced,
    harary_hill,
    improved_upper_balanced,
    k22n_exact,
    lower_general,
    lower_improved,
    lower_via_complete,
    upper_general,
)
from .constructions import (
    K22nDrawing,
    k22n_construction,
    k22n_green_count,
    k22n_red_count,
    k22n_total,
    linear_labels,
    linear_stripe_model,
)
from .stripes import StructuralError, stripe_breakdown, stripe_oracle
from .verifiers import VerificationReport

__all__ = [name for name in dir() if not name.startswith("_")]
