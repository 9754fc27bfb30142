"""Logistic-map chaotic core: validated seeds and reproducible sequence generation.

The recurrence x' = r*x*(1-x) is iterated in binary64 with a fixed
evaluation order, so the same seed produces bit-identical streams on any
conforming platform. A seed is the pair (x0, r); it is the whole
reproducibility key.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Sequence

DEFAULT_BURN_IN = 50
R_MIN = 3.57
R_MAX = 4.0

PERTURB_SCALE = 1e-12
PERTURB_MAX_RETRIES = 100


class SeedError(ValueError):
    """Seed parameters outside the accepted ranges."""


class DegenerateOrbitError(RuntimeError):
    """The orbit hit an absorbing value (exact 0.0 or 1.0) and collapsed."""


class EntropyUnavailableError(RuntimeError):
    """No operating-system entropy source could be read."""


class PerturbationExhaustedError(RuntimeError):
    """Every retry of a seed perturbation produced an invalid seed."""


@dataclass(frozen=True)
class ChaoticSeed:
    """Initial state x0 in (0,1) and parameter r in [3.57, 4.0].

    Construction validates; out-of-range values raise SeedError rather
    than being clamped. x0 must also avoid the map's nontrivial fixed
    point 1 - 1/r, where the orbit would be constant.
    """

    x0: float
    r: float

    def __post_init__(self):
        if not isinstance(self.x0, float) or not isinstance(self.r, float):
            raise SeedError("x0 and r must be floats")
        if self.x0 != self.x0 or self.r != self.r:
            raise SeedError("x0 and r must not be NaN")
        if not 0.0 < self.x0 < 1.0:
            raise SeedError("x0 out of (0,1)")
        if not R_MIN <= self.r <= R_MAX:
            raise SeedError(f"r out of [{R_MIN}, {R_MAX}]")
        # Exact comparison: only the exactly-representable fixed point is absorbing.
        if self.x0 == 1.0 - 1.0 / self.r:
            raise SeedError("x0 equals the fixed point 1 - 1/r")


@dataclass(frozen=True)
class RandomSequence:
    """Emitted values plus the provenance needed to regenerate them."""

    values: tuple[float, ...]
    seed: ChaoticSeed
    burn_in: int

    def __len__(self) -> int:
        return len(self.values)


def logistic_step(x: float, r: float) -> float:
    """One map step r*x*(1-x) for x in [0,1], r in [0,4].

    Multiplication order is fixed as (r*x)*(1-x); binary64 results are
    then reproducible bit-for-bit across implementations.
    """
    if not 0.0 <= x <= 1.0:
        raise ValueError("x out of [0,1]")
    if not 0.0 <= r <= 4.0:
        raise ValueError("r out of [0,4]")
    return r * x * (1.0 - x)


def generate_sequence(
    seed: ChaoticSeed, length: int, burn_in: int = DEFAULT_BURN_IN
) -> RandomSequence:
    """Iterate the map from seed.x0, discard `burn_in` values, emit `length` more.

    Deterministic: identical arguments give bit-identical output. Raises
    DegenerateOrbitError if any iterate lands exactly on 0.0 or 1.0 (the
    only absorbing values), which makes the seed unusable.
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    if burn_in < 0:
        raise ValueError("burn_in must be >= 0")
    x = seed.x0
    r = seed.r
    values: list[float] = []
    for i in range(burn_in + length):
        x = r * x * (1.0 - x)
        if x == 0.0 or x == 1.0:
            raise DegenerateOrbitError(
                f"orbit collapsed to {x} at iterate {i + 1} (seed x0={seed.x0!r}, r={seed.r!r})"
            )
        if i >= burn_in:
            values.append(x)
    return RandomSequence(values=tuple(values), seed=seed, burn_in=burn_in)


def _system_uniform(lo: float, hi: float) -> float:
    try:
        return random.SystemRandom().uniform(lo, hi)
    except NotImplementedError as exc:
        raise EntropyUnavailableError("no OS entropy source available") from exc


def perturb_seed(
    seed: ChaoticSeed,
    noise_scale: float = PERTURB_SCALE,
    entropy: Callable[[float, float], float] | None = None,
    max_retries: int = PERTURB_MAX_RETRIES,
) -> ChaoticSeed:
    """Return a copy of `seed` with x0 nudged by u*noise_scale, u uniform in [-1,1].

    `entropy` is a callable (lo, hi) -> float; the default draws from the
    operating system. The perturbed x0 is re-validated; invalid draws are
    retried up to `max_retries` times before PerturbationExhaustedError.
    """
    draw = entropy if entropy is not None else _system_uniform
    for _ in range(max_retries):
        try:
            u = draw(-1.0, 1.0)
        except NotImplementedError as exc:
            raise EntropyUnavailableError("entropy source failed") from exc
        try:
            return ChaoticSeed(x0=seed.x0 + u * noise_scale, r=seed.r)
        except SeedError:
            continue
    raise PerturbationExhaustedError(
        f"no valid perturbation of x0={seed.x0!r} after {max_retries} draws"
    )


def divergence_profile(
    seed_a: ChaoticSeed,
    seed_b: ChaoticSeed,
    length: int,
    burn_in: int = DEFAULT_BURN_IN,
) -> list[float]:
    """Per-index |S_a[i] - S_b[i]| of the two sequences, same burn-in for both."""
    seq_a = generate_sequence(seed_a, length, burn_in)
    seq_b = generate_sequence(seed_b, length, burn_in)
    return [abs(a - b) for a, b in zip(seq_a.values, seq_b.values)]
