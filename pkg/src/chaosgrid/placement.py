"""Grid placement: turn a chaotic sequence into a permutation of grid cells.

One value is generated per cell, the argsort of the sequence is the
"random index sequence", and each index maps to (x, y) counting cells
left-to-right, top-to-bottom from a top-left origin. Competition mode
uses the seed verbatim so every replay lands objects on the same cells
in the same order; casual mode perturbs x0 by ~1e-12 first.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable, Literal, Sequence

from .logistic import DEFAULT_BURN_IN, ChaoticSeed, generate_sequence, perturb_seed

DEFAULT_MAX_CELLS = 1_000_000
MAX_CELLS_ENV_VAR = "CHAOS_SEED_MAX_CELLS"

Mode = Literal["competition", "casual"]
MODES = ("competition", "casual")


class GridError(ValueError):
    """Grid dimensions violate the placement preconditions."""


class GridTooLargeError(GridError):
    """Cell count exceeds the configured maximum for full-permutation sorting."""


@dataclass(frozen=True)
class GridSpec:
    """Playing field of `width` cells per row and `height` rows."""

    width: int
    height: int

    def __post_init__(self):
        if not isinstance(self.width, int) or not isinstance(self.height, int):
            raise GridError("width and height must be integers")
        if self.width < 1 or self.height < 1:
            raise GridError("width and height must be >= 1")
        if self.width * self.height < 2:
            raise GridError("grid must have at least 2 cells")

    @property
    def cells(self) -> int:
        return self.width * self.height


@dataclass(frozen=True)
class PlacementSequence:
    """Every grid cell exactly once, in placement order.

    seed_used is the seed that actually generated the sequence (for casual
    mode, the perturbed one), so feeding it back in competition mode
    replays these coordinates exactly.
    """

    coords: tuple[tuple[int, int], ...]
    seed_used: ChaoticSeed
    mode: Mode
    grid: GridSpec


def argsort(values: Sequence[float]) -> list[int]:
    """Indices of values in ascending order; ties keep original order (stable).

    Stability makes the result a valid permutation even when the input
    contains duplicates.
    """
    if len(values) == 0:
        raise ValueError("cannot argsort an empty sequence")
    return sorted(range(len(values)), key=values.__getitem__)


def index_to_xy(z: int, grid: GridSpec) -> tuple[int, int]:
    """Cell index -> (x, y) with x = z mod width, y = z // width, origin top-left."""
    if not 0 <= z < grid.cells:
        raise IndexError(f"cell index {z} out of range for {grid.width}x{grid.height} grid")
    return z % grid.width, z // grid.width


def max_cells_limit() -> int:
    """Grid-size cap; overridable via the CHAOS_SEED_MAX_CELLS env var."""
    raw = os.environ.get(MAX_CELLS_ENV_VAR)
    if raw is None:
        return DEFAULT_MAX_CELLS
    try:
        value = int(raw)
    except ValueError as exc:
        raise GridError(f"{MAX_CELLS_ENV_VAR} must be an integer, got {raw!r}") from exc
    if value < 2:
        raise GridError(f"{MAX_CELLS_ENV_VAR} must be >= 2")
    return value


def placements(
    seed: ChaoticSeed,
    grid: GridSpec,
    mode: Mode = "competition",
    burn_in: int = DEFAULT_BURN_IN,
    entropy: Callable[[float, float], float] | None = None,
    max_cells: int | None = None,
) -> PlacementSequence:
    """Full placement order for `grid` from `seed`.

    Competition mode is fully deterministic (x0 used verbatim); casual
    mode perturbs x0 before generating, drawing from `entropy` (OS source
    by default). The sequence length is the cell count, its argsort gives
    the cell visit order.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    limit = max_cells if max_cells is not None else max_cells_limit()
    if grid.cells > limit:
        raise GridTooLargeError(
            f"{grid.width}x{grid.height} grid has {grid.cells} cells, above the cap of {limit}"
        )
    seed_used = seed if mode == "competition" else perturb_seed(seed, entropy=entropy)
    sequence = generate_sequence(seed_used, grid.cells, burn_in)
    order = argsort(sequence.values)
    coords = tuple(index_to_xy(z, grid) for z in order)
    return PlacementSequence(coords=coords, seed_used=seed_used, mode=mode, grid=grid)
