"""Benchmark forecasters: seasonal-index model, stock-parameter smoothing,
and an exhaustive grid search used as a quality oracle in tests.
"""

from __future__ import annotations

import itertools
import math
import statistics
from dataclasses import dataclass

from . import holtwinters
from .errors import FlycastError, InvalidParams, NotMultipleOfPeriod, TooShort
from .foa import JUDGMENT_FLOOR
from .holtwinters import DEFAULT_PARAMS, SmoothingParams
from .pipeline import validation_fitness
from .series import SeasonalSeries, SplitSpec, split


@dataclass(frozen=True)
class SiModel:
    """Seasonal decomposition: a linear trend on cycle means times a fixed
    per-position index pattern (indices normalized to mean 1 so the trend
    carries all scale).
    """

    seasonal_indices: tuple[float, ...]
    cycle_means: tuple[float, ...]
    trend_slope: float
    trend_intercept: float


def si_fit(train: SeasonalSeries) -> SiModel:
    """Estimate per-position indices and a least-squares line on cycle means."""
    n = len(train)
    period = train.period
    if n % period != 0:
        raise NotMultipleOfPeriod(
            f"training length {n} is not a multiple of period {period}"
        )
    cycles = n // period
    if cycles < 2:
        raise TooShort(
            f"need at least {2 * period} training points for period {period}, got {n}"
        )
    values = train.values
    cycle_means = tuple(
        sum(values[j * period : (j + 1) * period]) / period for j in range(cycles)
    )
    raw = [
        sum(values[j * period + k] / cycle_means[j] for j in range(cycles)) / cycles
        for k in range(period)
    ]
    raw_mean = sum(raw) / period
    indices = tuple(r / raw_mean for r in raw)
    fit = statistics.linear_regression(range(cycles), cycle_means)
    return SiModel(
        seasonal_indices=indices,
        cycle_means=cycle_means,
        trend_slope=fit.slope,
        trend_intercept=fit.intercept,
    )


def si_fit_forecast(train: SeasonalSeries, horizon: int) -> list[float]:
    """Forecast by extrapolating the cycle-mean line and reapplying indices.

    Future step h (0-based) lands in cycle ``cycles + h // L`` at position
    ``h % L``.
    """
    if horizon < 1:
        raise InvalidParams(f"horizon must be >= 1, got {horizon}")
    model = si_fit(train)
    cycles = len(model.cycle_means)
    period = train.period
    out = []
    for h in range(horizon):
        j = cycles + h // period
        k = h % period
        level = model.trend_intercept + model.trend_slope * j
        out.append(level * model.seasonal_indices[k])
    return out


def default_mhw_forecast(
    train: SeasonalSeries, horizon: int, params: SmoothingParams = DEFAULT_PARAMS
) -> list[float]:
    """Smoothing forecast with stock weights; pure fit-then-forecast."""
    model = holtwinters.fit(train, params)
    return holtwinters.forecast(model, horizon)


def _grid_axis(step: float) -> list[float]:
    # {step, 2*step, ..., 1}: ceil(1/step) points; the epsilon shrug keeps
    # float junk in 1/step from adding or dropping a lattice point.
    count = math.ceil(1.0 / step - 1e-9)
    return [min(1.0, (k + 1) * step) for k in range(count)]


def grid_search_oracle(
    train: SeasonalSeries, step: float
) -> tuple[SmoothingParams, float]:
    """Exhaustively minimize held-out-season error over a parameter lattice.

    Evaluates the floor point ``(1e-4, 1e-4, 1e-4)`` and then every point of
    ``{step, 2*step, ..., 1}^3`` in lexicographic (alpha, beta, gamma) order;
    ties go to the earliest point.  Candidates whose evaluation fails score
    as worst-possible.  Same data protocol as the swarm search, so the two
    optimizers are directly comparable.
    """
    if not (0.0 < step <= 0.5):
        raise InvalidParams(f"grid step must be in (0, 0.5], got {step!r}")
    n = len(train)
    period = train.period
    if n % period != 0:
        raise NotMultipleOfPeriod(
            f"training length {n} is not a multiple of period {period}"
        )
    if n < 3 * period:
        raise TooShort(
            f"need at least {3 * period} training points for period {period}, got {n}"
        )
    inner_train, inner_val, _ = split(train, SplitSpec(n - period, period, 0))

    axis = _grid_axis(step)
    floor = (JUDGMENT_FLOOR, JUDGMENT_FLOOR, JUDGMENT_FLOOR)
    best_params: tuple[float, float, float] | None = None
    best_fit = math.inf
    for triple in itertools.chain([floor], itertools.product(axis, axis, axis)):
        try:
            fitness = validation_fitness(
                inner_train, inner_val, SmoothingParams(*triple)
            )
        except FlycastError:
            fitness = math.inf
        if best_params is None or fitness < best_fit:
            best_fit = fitness
            best_params = triple
    assert best_params is not None
    return SmoothingParams(*best_params), best_fit
