"""Deterministic synthetic seasonal series for demos and tests.

Generates ``y[j*L + k] = (base + growth*j) * s[k] * (1 + eps)`` where ``s``
is a fixed cosine bump pattern normalized to mean 1 and ``eps`` is uniform
in ``[-noise, +noise]`` from a seeded generator.  With ``noise=0`` the
series is exactly a linear-in-cycle level times a fixed pattern, which the
seasonal-index model reproduces perfectly.
"""

from __future__ import annotations

import math
import random

from .errors import InvalidParams
from .series import SeasonalSeries, new_series


def synth_generate(
    seed: int,
    cycles: int,
    period: int,
    base: float,
    growth: float = 0.0,
    pattern_spread: float = 0.25,
    noise: float = 0.0,
) -> SeasonalSeries:
    """Build ``cycles * period`` positive points, reproducible per seed.

    ``pattern_spread`` in [0, 1) sets the seasonal swing around 1;
    ``noise`` in [0, 0.2] sets the relative jitter half-width.
    """
    if cycles < 3:
        raise InvalidParams(f"cycles must be >= 3, got {cycles}")
    if period < 2:
        raise InvalidParams(f"period must be >= 2, got {period}")
    if not (math.isfinite(base) and base > 0.0):
        raise InvalidParams(f"base must be > 0, got {base!r}")
    if not math.isfinite(growth):
        raise InvalidParams(f"growth must be finite, got {growth!r}")
    if base + growth * (cycles - 1) <= 0.0:
        raise InvalidParams(
            f"growth {growth!r} drives the level non-positive by cycle {cycles - 1}"
        )
    if not (0.0 <= pattern_spread < 1.0):
        raise InvalidParams(f"pattern_spread must be in [0, 1), got {pattern_spread!r}")
    if not (0.0 <= noise <= 0.2):
        raise InvalidParams(f"noise must be in [0, 0.2], got {noise!r}")

    raw = [1.0 + pattern_spread * math.cos(2.0 * math.pi * k / period) for k in range(period)]
    raw_mean = sum(raw) / period
    pattern = [r / raw_mean for r in raw]

    rng = random.Random(seed)
    values = []
    labels = []
    for j in range(cycles):
        level = base + growth * j
        for k in range(period):
            # One draw per point regardless of noise, so the same seed yields
            # the same underlying shape at every noise setting.
            eps = noise * (2.0 * rng.random() - 1.0)
            values.append(level * pattern[k] * (1.0 + eps))
            labels.append(f"c{j + 1:02d}-p{k + 1:02d}")
    return new_series(values, period, labels)
