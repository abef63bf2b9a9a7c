"""Fruit-fly swarm search over scalar parameters encoded as 2D positions.

Each optimized parameter gets its own swarm of ``sizepop`` flies in the
plane.  A fly's position decodes to a scalar through its distance to the
coordinate origin: ``s = 1 / sqrt(x^2 + y^2)``, clamped into
``[JUDGMENT_FLOOR, 1]`` so the decoded value is always a usable smoothing
weight.  Candidate vectors pair flies across swarms by index; the candidate
with the lowest fitness wins the generation and every swarm jumps to its
winning fly's position before spawning the next generation around it.

Lower fitness is better throughout (the fitness here is a forecast error).

Determinism: all randomness comes from one ``random.Random(seed)`` stream,
consumed in a fixed documented order -- swarm origins first (one x, y pair
per swarm), then per generation one pass over the swarms in parameter order,
within a swarm one pass over flies in index order, within a fly the x offset
before the y offset.  CPython guarantees the Mersenne Twister ``random()``
sequence for a given seed, so runs reproduce bit-for-bit across platforms.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import FlycastError, InvalidParams, OriginSingularity

#: Lower clamp for decoded parameters; avoids exactly-zero smoothing weights.
JUDGMENT_FLOOR = 1e-4

Objective = Callable[[tuple[float, ...]], float]


@dataclass(frozen=True)
class FlyPosition:
    """A fly's location in the search plane."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise InvalidParams(f"fly position must be finite, got ({self.x!r}, {self.y!r})")


@dataclass(frozen=True)
class FoaConfig:
    """Swarm search budget and geometry.

    ``flight_range`` is the half-width of the signed uniform offset added to
    each coordinate every generation (zero is allowed and degenerates to
    re-evaluating the origin).  ``init_low``/``init_high`` bound the uniform
    initial swarm origins.  ``patience`` stops the run after that many
    consecutive generations without strict improvement; ``None`` disables
    early stopping and the search runs all ``maxgen`` generations.
    """

    sizepop: int = 50
    maxgen: int = 20
    flight_range: float = 1.0
    init_low: float = 0.0
    init_high: float = 1.0
    seed: int = 0
    patience: int | None = None

    def __post_init__(self) -> None:
        if self.sizepop < 1:
            raise InvalidParams(f"sizepop must be >= 1, got {self.sizepop}")
        if self.maxgen < 1:
            raise InvalidParams(f"maxgen must be >= 1, got {self.maxgen}")
        if not math.isfinite(self.flight_range) or self.flight_range < 0.0:
            raise InvalidParams(f"flight_range must be >= 0, got {self.flight_range!r}")
        if not self.init_low < self.init_high:
            raise InvalidParams(
                f"init_low must be < init_high, got [{self.init_low!r}, {self.init_high!r}]"
            )
        if self.patience is not None and self.patience < 1:
            raise InvalidParams(f"patience must be >= 1 or None, got {self.patience}")


@dataclass(frozen=True)
class GenerationBest:
    """Best-so-far snapshot recorded after a generation completes."""

    fitness: float
    judgment_values: tuple[float, ...]
    positions: tuple[FlyPosition, ...]


@dataclass(frozen=True)
class OptimizationTrace:
    """One :class:`GenerationBest` per generation run; fitness never increases."""

    best_per_generation: tuple[GenerationBest, ...]
    generations_run: int


def _uniform(rng: random.Random, low: float, high: float) -> float:
    # low + (high - low) * random(): pinned to rng.random(), whose stream is
    # stable across CPython releases for a fixed seed.
    return low + (high - low) * rng.random()


def spawn_generation(
    origin: FlyPosition, config: FoaConfig, rng: random.Random
) -> list[FlyPosition]:
    """Scatter ``sizepop`` flies around ``origin``.

    Consumes exactly ``2 * sizepop`` draws: per fly, the x offset then the
    y offset, each uniform in ``[-flight_range, +flight_range]``.
    """
    fr = config.flight_range
    out = []
    for _ in range(config.sizepop):
        dx = _uniform(rng, -fr, fr)
        dy = _uniform(rng, -fr, fr)
        out.append(FlyPosition(origin.x + dx, origin.y + dy))
    return out


def judgment_value(position: FlyPosition) -> float:
    """Decode a position to a scalar in ``[JUDGMENT_FLOOR, 1]``.

    The raw value is the reciprocal of the fly's distance to the coordinate
    origin; the clamp keeps decoded parameters inside the usable box.
    """
    if position.x == 0.0 and position.y == 0.0:
        raise OriginSingularity("fly sits on the coordinate origin; 1/distance undefined")
    s = 1.0 / math.sqrt(position.x * position.x + position.y * position.y)
    return min(1.0, max(JUDGMENT_FLOOR, s))


def _pinned_position(value: float) -> FlyPosition:
    # A synthetic on-axis position whose decoded judgment value is ~value;
    # used for injected candidates, which carry their values verbatim.
    return FlyPosition(1.0 / value, 0.0)


def run_foa(
    objective: Objective,
    n_params: int,
    config: FoaConfig,
    initial_candidates: Sequence[Sequence[float]] = (),
) -> tuple[tuple[float, ...], OptimizationTrace]:
    """Minimize ``objective`` over ``[JUDGMENT_FLOOR, 1] ** n_params``.

    ``objective`` receives one decoded vector per candidate and returns a
    fitness (lower is better); it may raise any :class:`FlycastError` to mark
    a candidate unusable, which scores as worst-possible fitness.  Each of
    the ``generations_run`` generations evaluates exactly ``sizepop``
    candidates; ties in a generation go to the lowest candidate index.

    ``initial_candidates`` injects known-good vectors into the first
    generation, replacing its first candidates' decoded values (clamped into
    the parameter box).  The returned vector is the best ever evaluated.
    """
    if n_params < 1:
        raise InvalidParams(f"n_params must be >= 1, got {n_params}")
    injected = [
        tuple(min(1.0, max(JUDGMENT_FLOOR, float(v))) for v in cand)
        for cand in initial_candidates
    ]
    for cand in injected:
        if len(cand) != n_params:
            raise InvalidParams(f"injected candidate has {len(cand)} values, expected {n_params}")
    if len(injected) > config.sizepop:
        raise InvalidParams(
            f"{len(injected)} injected candidates exceed sizepop={config.sizepop}"
        )

    rng = random.Random(config.seed)
    origins = [
        FlyPosition(
            _uniform(rng, config.init_low, config.init_high),
            _uniform(rng, config.init_low, config.init_high),
        )
        for _ in range(n_params)
    ]

    best_fitness = math.inf
    best_values: tuple[float, ...] | None = None
    best_positions: tuple[FlyPosition, ...] | None = None
    history: list[GenerationBest] = []
    stale = 0
    generations = 0

    for gen in range(config.maxgen):
        # All draws for the generation happen here, before any evaluation,
        # so evaluations could run concurrently without changing the result.
        swarms = [spawn_generation(origin, config, rng) for origin in origins]

        gen_fit = math.inf
        gen_values: tuple[float, ...] | None = None
        gen_positions: tuple[FlyPosition, ...] | None = None
        for i in range(config.sizepop):
            if gen == 0 and i < len(injected):
                values = injected[i]
                positions = tuple(_pinned_position(v) for v in values)
            else:
                positions = tuple(swarms[p][i] for p in range(n_params))
                values = tuple(judgment_value(pos) for pos in positions)
            try:
                fitness = float(objective(values))
            except FlycastError:
                fitness = math.inf
            if gen_values is None or fitness < gen_fit:
                gen_fit = fitness
                gen_values = values
                gen_positions = positions
        generations += 1

        # Unconditional jump: the swarms regroup on this generation's winner.
        assert gen_positions is not None and gen_values is not None
        origins = list(gen_positions)

        if best_values is None or gen_fit < best_fitness:
            if gen_fit < best_fitness:
                stale = 0
            best_fitness = gen_fit
            best_values = gen_values
            best_positions = gen_positions
        else:
            stale += 1
        history.append(
            GenerationBest(
                fitness=best_fitness,
                judgment_values=best_values,
                positions=best_positions,
            )
        )
        if config.patience is not None and stale >= config.patience:
            break

    assert best_values is not None
    return best_values, OptimizationTrace(
        best_per_generation=tuple(history), generations_run=generations
    )
