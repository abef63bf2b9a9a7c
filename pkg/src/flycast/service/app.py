"""FastAPI application exposing the forecasting core over HTTP.

Every core exception maps to a 400 whose body carries the error class name,
a coarse ``kind`` (``data``, ``numeric``, or ``usage``), and the message,
so clients can translate failures without parsing prose.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import harness, synth
from ..errors import FlycastError, NumericError, UsageError
from ..foa import FoaConfig, OptimizationTrace
from ..harness import ModelRun
from ..holtwinters import SmoothingParams
from ..series import SeasonalSeries, new_series
from .schemas import (
    ForecastRequest,
    ForecastResponse,
    FoaOptions,
    ModelResult,
    ParamsIn,
    ParamsOut,
    SeriesIn,
    SeriesOut,
    SweepRequest,
    SweepResponse,
    SweepRowOut,
    SynthRequest,
    TracePoint,
)


def _error_kind(exc: FlycastError) -> str:
    if isinstance(exc, NumericError):
        return "numeric"
    if isinstance(exc, UsageError):
        return "usage"
    return "data"


def _to_series(body: SeriesIn) -> SeasonalSeries:
    labels = body.labels
    if labels is None:
        labels = [f"p{i + 1}" for i in range(len(body.values))]
    return new_series(body.values, body.period, labels)


def _to_foa_config(body: FoaOptions) -> FoaConfig:
    return FoaConfig(
        sizepop=body.sizepop,
        maxgen=body.maxgen,
        flight_range=body.flight_range,
        seed=body.seed,
        patience=body.patience,
    )


def _to_params(body: ParamsIn) -> SmoothingParams:
    return SmoothingParams(alpha=body.alpha, beta=body.beta, gamma=body.gamma)


def _trace_points(trace: OptimizationTrace | None) -> list[TracePoint] | None:
    if trace is None:
        return None
    return [
        TracePoint(
            generation=i + 1,
            best_fitness=best.fitness,
            alpha=best.judgment_values[0],
            beta=best.judgment_values[1],
            gamma=best.judgment_values[2],
        )
        for i, best in enumerate(trace.best_per_generation)
    ]


def _model_result(run: ModelRun) -> ModelResult:
    params = None
    if run.params is not None:
        params = ParamsOut(
            alpha=run.params.alpha, beta=run.params.beta, gamma=run.params.gamma
        )
    return ModelResult(
        model=run.model,
        params=params,
        forecast=list(run.forecast),
        relative_errors=list(run.report.relative_errors),
        mape=run.report.mape,
        rmse_fitness=run.report.rmse_fitness,
        rmse_mean=run.rmse_mean,
        trace=_trace_points(run.trace),
    )


def create_app() -> FastAPI:
    app = FastAPI(title="flycast")

    @app.exception_handler(FlycastError)
    async def _flycast_error(request: Request, exc: FlycastError) -> JSONResponse:
        return JSONResponse(
            status_code=400,
            content={
                "error": type(exc).__name__,
                "kind": _error_kind(exc),
                "message": str(exc),
            },
        )

    @app.get("/health")
    async def health() -> dict[str, str]:
        return {"status": "ok"}

    @app.post("/v1/forecast", response_model=ForecastResponse)
    async def forecast(body: ForecastRequest) -> ForecastResponse:
        series = _to_series(body.series)
        # attribute lookup through the module so tests can monkeypatch it
        outcome = harness.run_forecast(
            series,
            horizon=body.horizon,
            models=list(body.models),
            foa=_to_foa_config(body.foa),
            default_params=_to_params(body.default_params),
            include_default_seed=body.include_default_seed,
        )
        test_start = len(series) - outcome.test_length
        return ForecastResponse(
            train_length=outcome.train_length,
            test_length=outcome.test_length,
            labels=list(series.labels[test_start:]),
            actual=list(series.values[test_start:]),
            results=[_model_result(run) for run in outcome.runs],
        )

    @app.post("/v1/sweep", response_model=SweepResponse)
    async def sweep(body: SweepRequest) -> SweepResponse:
        series = _to_series(body.series)
        result = harness.run_sweep(
            series,
            horizon=body.horizon,
            models=list(body.models),
            min_cycles=body.min_cycles,
            max_cycles=body.max_cycles,
            foa=_to_foa_config(body.foa),
            default_params=_to_params(body.default_params),
            include_default_seed=body.include_default_seed,
        )
        return SweepResponse(
            rows=[
                SweepRowOut(
                    train_length=row.train_length,
                    model=row.model,
                    mape=row.mape,
                    labels=list(row.labels),
                    actual=list(row.actual),
                    forecast=list(row.forecast),
                    relative_errors=list(row.relative_errors),
                )
                for row in result.rows
            ]
        )

    @app.post("/v1/synthesize", response_model=SeriesOut)
    async def synthesize(body: SynthRequest) -> SeriesOut:
        series = synth.synth_generate(
            seed=body.seed,
            cycles=body.cycles,
            period=body.period,
            base=body.base,
            growth=body.growth,
            pattern_spread=body.pattern_spread,
            noise=body.noise,
        )
        return SeriesOut(
            values=list(series.values),
            period=series.period,
            labels=list(series.labels),
        )

    return app
