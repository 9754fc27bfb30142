"""Reproducible chaotic randomness for grid games.

A logistic-map PRNG with validated (x0, r) seeds, seed-replayable grid
placement, an MT19937 baseline, and a statistics suite for comparing the
two, exposed through a CLI and a small HTTP API.
"""

from .logistic import (
    ChaoticSeed,
    DegenerateOrbitError,
    RandomSequence,
    SeedError,
    divergence_profile,
    generate_sequence,
    logistic_step,
    perturb_seed,
)
from .mt19937 import MT19937
from .placement import (
    GridError,
    GridSpec,
    GridTooLargeError,
    PlacementSequence,
    argsort,
    index_to_xy,
    placements,
)
from .stats import (
    BifurcationPoint,
    StatsReport,
    bifurcation_data,
    correlation,
    describe,
    histogram,
    lsrl,
    std_dev,
)

__version__ = "0.1.0"

__all__ = [
    "ChaoticSeed",
    "RandomSequence",
    "SeedError",
    "DegenerateOrbitError",
    "logistic_step",
    "generate_sequence",
    "perturb_seed",
    "divergence_profile",
    "MT19937",
    "GridSpec",
    "GridError",
    "GridTooLargeError",
    "PlacementSequence",
    "argsort",
    "index_to_xy",
    "placements",
    "StatsReport",
    "BifurcationPoint",
    "std_dev",
    "lsrl",
    "histogram",
    "correlation",
    "describe",
    "bifurcation_data",
]
