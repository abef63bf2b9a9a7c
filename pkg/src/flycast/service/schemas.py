"""Request and response bodies for the HTTP service.

These models validate shape (types, required fields, known model names);
domain rules such as positivity and length arithmetic stay in the core
package so their violations surface as tagged 400s rather than 422s.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel

ModelName = Literal["foa-mhw", "mhw-default", "si"]

ALL_MODELS: tuple[ModelName, ...] = ("foa-mhw", "mhw-default", "si")


class SeriesIn(BaseModel):
    values: list[float]
    period: int
    labels: list[str] | None = None


class SeriesOut(BaseModel):
    values: list[float]
    period: int
    labels: list[str]


class FoaOptions(BaseModel):
    """Swarm search settings; defaults match the CLI."""

    sizepop: int = 50
    maxgen: int = 20
    flight_range: float = 1.0
    seed: int = 0
    patience: int | None = None


class ParamsIn(BaseModel):
    alpha: float = 0.2
    beta: float = 0.1
    gamma: float = 0.6


class ParamsOut(BaseModel):
    alpha: float
    beta: float
    gamma: float


class ForecastRequest(BaseModel):
    series: SeriesIn
    horizon: int = 6
    models: list[ModelName] = list(ALL_MODELS)
    foa: FoaOptions = FoaOptions()
    default_params: ParamsIn = ParamsIn()
    include_default_seed: bool = True


class TracePoint(BaseModel):
    """Best-so-far snapshot after one optimizer generation (1-based)."""

    generation: int
    best_fitness: float
    alpha: float
    beta: float
    gamma: float


class ModelResult(BaseModel):
    model: ModelName
    params: ParamsOut | None
    forecast: list[float]
    relative_errors: list[float]
    mape: float
    rmse_fitness: float
    rmse_mean: float
    trace: list[TracePoint] | None


class ForecastResponse(BaseModel):
    train_length: int
    test_length: int
    labels: list[str]
    actual: list[float]
    results: list[ModelResult]


class SweepRequest(BaseModel):
    series: SeriesIn
    horizon: int = 6
    models: list[ModelName] = list(ALL_MODELS)
    min_cycles: int = 3
    max_cycles: int = 8
    foa: FoaOptions = FoaOptions()
    default_params: ParamsIn = ParamsIn()
    include_default_seed: bool = True


class SweepRowOut(BaseModel):
    train_length: int
    model: ModelName
    mape: float
    labels: list[str]
    actual: list[float]
    forecast: list[float]
    relative_errors: list[float]


class SweepResponse(BaseModel):
    rows: list[SweepRowOut]


class SynthRequest(BaseModel):
    seed: int = 0
    cycles: int = 9
    period: int = 6
    base: float = 100.0
    growth: float = 5.0
    pattern_spread: float = 0.25
    noise: float = 0.05
