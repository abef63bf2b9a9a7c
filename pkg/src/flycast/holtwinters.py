"""Multiplicative Holt-Winters smoothing: initialization, recursion, forecasting.

The model keeps three components: a deseasonalized level, an additive trend,
and a ring of multiplicative seasonal indices, one per position in the cycle.
Given a new observation ``y`` the components update in this fixed order
(each later line uses the *new* level):

    level = alpha * y / s_old + (1 - alpha) * (level + trend)
    trend = beta * (level_new - level_old) + (1 - beta) * trend
    s_new = gamma * y / level_new + (1 - gamma) * s_old

where ``s_old`` is the seasonal index recorded one full cycle earlier.
A forecast ``h`` steps ahead is ``(level + trend * h)`` times the stored
index for that cycle position; horizons beyond one cycle reuse the final
ring cyclically.

Seasonal indices are never renormalized, neither at initialization nor per
cycle; the recursion is applied exactly as written above.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    DivisionBlowup,
    InvalidParams,
    NonPositiveValue,
    NotMultipleOfPeriod,
    TooShort,
)
from .series import SeasonalSeries

#: Divisor magnitudes below this mark the state as numerically unusable.
DEGENERATE_EPS = 1e-12


@dataclass(frozen=True)
class SmoothingParams:
    """The (alpha, beta, gamma) smoothing weights, each in [0, 1]."""

    alpha: float
    beta: float
    gamma: float

    def __post_init__(self) -> None:
        for name, v in (("alpha", self.alpha), ("beta", self.beta), ("gamma", self.gamma)):
            if not math.isfinite(v) or not 0.0 <= v <= 1.0:
                raise InvalidParams(f"{name} must lie in [0, 1], got {v!r}")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.alpha, self.beta, self.gamma)


#: Textbook default weights, also the MHW baseline configuration.
DEFAULT_PARAMS = SmoothingParams(alpha=0.2, beta=0.1, gamma=0.6)


@dataclass(frozen=True)
class HwState:
    """Smoothing state after absorbing ``t`` observations.

    ``seasonal`` holds the most recent full cycle of indices ordered oldest
    to newest, so ``seasonal[0]`` is the index that the *next* observation's
    level update divides by.
    """

    level: float
    trend: float
    seasonal: tuple[float, ...]
    t: int


@dataclass(frozen=True)
class FittedModel:
    """Final state of a training run plus the parameters that produced it."""

    state: HwState
    params: SmoothingParams
    train_length: int


def initialize(train: SeasonalSeries) -> HwState:
    """Build the starting state from training data.

    The initial level is the overall training mean, the trend starts at zero,
    and each seasonal index is the mean of its cycle position divided by the
    level.  Requires a whole number of cycles and at least two of them, so
    the per-position means actually average across cycles.
    """
    n = len(train)
    L = train.period
    if n % L != 0:
        raise NotMultipleOfPeriod(f"{n} points is not a whole number of {L}-point cycles")
    cycles = n // L
    if cycles < 2:
        raise TooShort(f"initialization needs at least 2 cycles ({2 * L} points), got {n}")

    level = sum(train.values) / n
    seasonal = tuple(
        (sum(train.values[k::L]) / cycles) / level for k in range(L)
    )
    return HwState(level=level, trend=0.0, seasonal=seasonal, t=0)


def step(state: HwState, y: float, params: SmoothingParams) -> HwState:
    """Absorb one observation and return the advanced state.

    Raises :class:`DivisionBlowup` when the incoming seasonal index or the
    updated level falls below ``DEGENERATE_EPS`` in magnitude: the parameter
    combination produced an unusable state and callers (the optimizer in
    particular) should discard it rather than propagate infinities.
    """
    if not math.isfinite(y) or y <= 0.0:
        raise NonPositiveValue(f"observation must be > 0, got {y!r}")
    s_old = state.seasonal[0]
    if abs(s_old) < DEGENERATE_EPS:
        raise DivisionBlowup(f"seasonal index collapsed to {s_old!r} at t={state.t}")
    level = params.alpha * (y / s_old) + (1.0 - params.alpha) * (state.level + state.trend)
    if abs(level) < DEGENERATE_EPS:
        raise DivisionBlowup(f"level collapsed to {level!r} at t={state.t + 1}")
    trend = params.beta * (level - state.level) + (1.0 - params.beta) * state.trend
    s_new = params.gamma * (y / level) + (1.0 - params.gamma) * s_old
    return HwState(
        level=level,
        trend=trend,
        seasonal=state.seasonal[1:] + (s_new,),
        t=state.t + 1,
    )


def fit(train: SeasonalSeries, params: SmoothingParams) -> FittedModel:
    """Initialize on ``train`` and absorb every observation in order.

    Arithmetic is identical to chaining :func:`step`, but the loop runs on
    local floats and a circular buffer; the optimizer's grid and swarm
    evaluations hit this path thousands of times.
    """
    state0 = initialize(train)
    a, b, g = params.alpha, params.beta, params.gamma
    level = state0.level
    trend = state0.trend
    ring = list(state0.seasonal)
    L = train.period
    pos = 0
    t = 0
    for y in train.values:
        s_old = ring[pos]
        if abs(s_old) < DEGENERATE_EPS:
            raise DivisionBlowup(f"seasonal index collapsed to {s_old!r} at t={t}")
        new_level = a * (y / s_old) + (1.0 - a) * (level + trend)
        if abs(new_level) < DEGENERATE_EPS:
            raise DivisionBlowup(f"level collapsed to {new_level!r} at t={t + 1}")
        trend = b * (new_level - level) + (1.0 - b) * trend
        ring[pos] = g * (y / new_level) + (1.0 - g) * s_old
        level = new_level
        pos += 1
        if pos == L:
            pos = 0
        t += 1
    seasonal = tuple(ring[pos:]) + tuple(ring[:pos])
    state = HwState(level=level, trend=trend, seasonal=seasonal, t=t)
    return FittedModel(state=state, params=params, train_length=t)


def forecast(model: FittedModel, m: int) -> list[float]:
    """Forecast ``m`` steps ahead from the fitted state.

    Step ``h`` multiplies the trend-extrapolated level by the stored index
    for its cycle position; the final ring is reused cyclically for horizons
    past one cycle.
    """
    if m < 1:
        raise InvalidParams(f"forecast horizon must be >= 1, got {m}")
    st = model.state
    L = len(st.seasonal)
    return [(st.level + st.trend * h) * st.seasonal[(h - 1) % L] for h in range(1, m + 1)]
