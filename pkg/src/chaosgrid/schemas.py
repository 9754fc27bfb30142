"""Wire formats shared by the HTTP API and the CLI.

Seeds cross process boundaries as decimal strings with up to 17
significant digits; that is enough to round-trip any binary64 value
bit-exactly, which the replay guarantees depend on. Both the CLI and
the HTTP handlers serialize through the same pydantic models, so their
JSON output is byte-identical for identical parameters.
"""

from __future__ import annotations

from pydantic import BaseModel

from .logistic import DEFAULT_BURN_IN, ChaoticSeed, RandomSequence, SeedError
from .placement import GridSpec, Mode, PlacementSequence, placements
from .stats import StatsReport

SEED_DIGITS = 17


def format_seed_value(value: float) -> str:
    """Canonical wire form of x0 or r: 17-significant-digit decimal string."""
    return format(value, f".{SEED_DIGITS}g")


def parse_seed_value(text: str, name: str) -> float:
    """Parse a seed component off the wire; bad decimals become SeedError."""
    try:
        return float(text)
    except (TypeError, ValueError) as exc:
        raise SeedError(f"{name} is not a decimal number: {text!r}") from exc


class SeedModel(BaseModel):
    x0: str
    r: str

    @classmethod
    def from_seed(cls, seed: ChaoticSeed) -> "SeedModel":
        return cls(x0=format_seed_value(seed.x0), r=format_seed_value(seed.r))

    def to_seed(self) -> ChaoticSeed:
        return ChaoticSeed(x0=parse_seed_value(self.x0, "x0"), r=parse_seed_value(self.r, "r"))


class GridModel(BaseModel):
    width: int
    height: int


class PlacementPayload(BaseModel):
    """The placement wire schema: seed, grid, mode, then cell coordinates."""

    seed: SeedModel
    grid: GridModel
    mode: Mode
    coords: list[tuple[int, int]]

    @classmethod
    def from_placements(
        cls, placed: PlacementSequence, count: int | None = None
    ) -> "PlacementPayload":
        coords = placed.coords if count is None else placed.coords[:count]
        return cls(
            seed=SeedModel.from_seed(placed.seed_used),
            grid=GridModel(width=placed.grid.width, height=placed.grid.height),
            mode=placed.mode,
            coords=list(coords),
        )


class SequencePayload(BaseModel):
    """A generated sequence with the provenance needed to regenerate it."""

    seed: SeedModel
    burn_in: int
    length: int
    values: list[float]

    @classmethod
    def from_sequence(cls, sequence: RandomSequence) -> "SequencePayload":
        return cls(
            seed=SeedModel.from_seed(sequence.seed),
            burn_in=sequence.burn_in,
            length=len(sequence),
            values=list(sequence.values),
        )


class StatsReportModel(BaseModel):
    count: int
    mean: float
    std_dev: float
    lsrl_intercept: float
    lsrl_slope: float
    histogram: list[tuple[float, float, int]]

    @classmethod
    def from_report(cls, report: StatsReport) -> "StatsReportModel":
        return cls(
            count=report.count,
            mean=report.mean,
            std_dev=report.std_dev,
            lsrl_intercept=report.lsrl_intercept,
            lsrl_slope=report.lsrl_slope,
            histogram=report.histogram,
        )


class ComparisonPayload(BaseModel):
    """Machine-readable two-generator comparison report."""

    length: int
    seed: SeedModel
    mt_seed: int
    burn_in: int
    logistic: StatsReportModel
    mt19937: StatsReportModel


class BifurcationPointModel(BaseModel):
    r: float
    samples: list[float]


def render_placement_json(
    x0_text: str,
    r_text: str,
    grid: GridSpec,
    mode: Mode,
    count: int | None = None,
    burn_in: int = DEFAULT_BURN_IN,
) -> str:
    """Validate wire parameters, run the placement engine, serialize.

    Single entry point for both the HTTP handler and the CLI so the two
    produce identical bytes.
    """
    if count is not None and count < 0:
        raise ValueError("count must be >= 0")
    seed = ChaoticSeed(
        x0=parse_seed_value(x0_text, "x0"), r=parse_seed_value(r_text, "r")
    )
    placed = placements(seed, grid, mode, burn_in)
    return PlacementPayload.from_placements(placed, count).model_dump_json()
