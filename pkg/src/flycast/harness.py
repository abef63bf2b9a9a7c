"""Experiment harness: run the requested models on one series and collect
results, either for a single train/test split or across a sweep of training
lengths.

The split protocol is fixed: the test slice is always the LAST ``horizon``
points.  The sweep shortens training history from the near end, training on
the most recent ``c * L`` points before the test slice, so every training
length is scored against the same held-out points.
"""

from __future__ import annotations

from dataclasses import dataclass

from .baselines import default_mhw_forecast, si_fit_forecast
from .errors import InvalidParams, TooShort, UsageError
from .foa import FoaConfig, OptimizationTrace
from .holtwinters import DEFAULT_PARAMS, SmoothingParams
from .metrics import EvaluationReport, evaluate, mean_rmse
from .pipeline import PipelineConfig, foa_mhw_forecast
from .series import SeasonalSeries, SplitSpec, split

MODEL_FOA = "foa-mhw"
MODEL_DEFAULT = "mhw-default"
MODEL_SI = "si"

#: All model names, in the order they appear in outputs.
CANONICAL_MODELS = (MODEL_FOA, MODEL_DEFAULT, MODEL_SI)


@dataclass(frozen=True)
class ModelRun:
    """One model's forecast against the test slice.

    ``params`` is None for the seasonal-index model, which has no smoothing
    weights.  ``trace`` is set only for the tuned model.
    """

    model: str
    params: SmoothingParams | None
    forecast: tuple[float, ...]
    report: EvaluationReport
    rmse_mean: float
    trace: OptimizationTrace | None


@dataclass(frozen=True)
class ForecastOutcome:
    train_length: int
    test_length: int
    runs: tuple[ModelRun, ...]


@dataclass(frozen=True)
class SweepRow:
    train_length: int
    model: str
    mape: float
    labels: tuple[str, ...]
    actual: tuple[float, ...]
    forecast: tuple[float, ...]
    relative_errors: tuple[float, ...]


@dataclass(frozen=True)
class SweepResult:
    """One row per (training length, model), lengths ascending."""

    rows: tuple[SweepRow, ...]


def _ordered_models(models: tuple[str, ...] | list[str]) -> list[str]:
    requested = list(models)
    if not requested:
        raise UsageError("no models requested")
    for name in requested:
        if name not in CANONICAL_MODELS:
            raise UsageError(
                f"unknown model {name!r}; choose from {', '.join(CANONICAL_MODELS)}"
            )
    return [name for name in CANONICAL_MODELS if name in requested]


def _run_model(
    name: str,
    train: SeasonalSeries,
    test: SeasonalSeries,
    foa: FoaConfig,
    default_params: SmoothingParams,
    include_default_seed: bool,
) -> ModelRun:
    horizon = len(test)
    if name == MODEL_FOA:
        result = foa_mhw_forecast(
            train,
            test,
            PipelineConfig(
                foa=foa,
                horizon=horizon,
                include_default_seed=include_default_seed,
                default_seed_params=default_params,
            ),
        )
        assert result.report is not None
        return ModelRun(
            model=name,
            params=result.optimal_params,
            forecast=result.forecast,
            report=result.report,
            rmse_mean=mean_rmse(test.values, result.forecast),
            trace=result.trace,
        )
    if name == MODEL_DEFAULT:
        predicted = tuple(default_mhw_forecast(train, horizon, default_params))
        return ModelRun(
            model=name,
            params=default_params,
            forecast=predicted,
            report=evaluate(test.values, predicted),
            rmse_mean=mean_rmse(test.values, predicted),
            trace=None,
        )
    if name == MODEL_SI:
        predicted = tuple(si_fit_forecast(train, horizon))
        return ModelRun(
            model=name,
            params=None,
            forecast=predicted,
            report=evaluate(test.values, predicted),
            rmse_mean=mean_rmse(test.values, predicted),
            trace=None,
        )
    raise UsageError(f"unknown model {name!r}")


def run_forecast(
    series: SeasonalSeries,
    horizon: int,
    models: tuple[str, ...] | list[str],
    foa: FoaConfig | None = None,
    default_params: SmoothingParams = DEFAULT_PARAMS,
    include_default_seed: bool = True,
) -> ForecastOutcome:
    """Hold out the last ``horizon`` points and run each requested model."""
    if horizon < 1:
        raise InvalidParams(f"horizon must be >= 1, got {horizon}")
    n = len(series)
    if n <= horizon:
        raise TooShort(f"series has {n} points, all consumed by horizon {horizon}")
    foa = foa if foa is not None else FoaConfig()
    train, _, test = split(series, SplitSpec(n - horizon, 0, horizon))
    runs = tuple(
        _run_model(name, train, test, foa, default_params, include_default_seed)
        for name in _ordered_models(models)
    )
    return ForecastOutcome(train_length=len(train), test_length=len(test), runs=runs)


def run_sweep(
    series: SeasonalSeries,
    horizon: int,
    models: tuple[str, ...] | list[str],
    min_cycles: int,
    max_cycles: int,
    foa: FoaConfig | None = None,
    default_params: SmoothingParams = DEFAULT_PARAMS,
    include_default_seed: bool = True,
) -> SweepResult:
    """Score each model at training lengths ``min_cycles*L .. max_cycles*L``.

    Every window ends right before the fixed test slice; shorter windows
    drop the OLDEST points.
    """
    if horizon < 1:
        raise InvalidParams(f"horizon must be >= 1, got {horizon}")
    if min_cycles < 3:
        raise InvalidParams(f"min_cycles must be >= 3, got {min_cycles}")
    if max_cycles < min_cycles:
        raise InvalidParams(
            f"max_cycles ({max_cycles}) must be >= min_cycles ({min_cycles})"
        )
    n = len(series)
    period = series.period
    if max_cycles * period + horizon > n:
        raise TooShort(
            f"need {max_cycles * period + horizon} points for max_cycles="
            f"{max_cycles} with horizon {horizon}, got {n}"
        )
    foa = foa if foa is not None else FoaConfig()
    ordered = _ordered_models(models)
    test_start = n - horizon
    test = SeasonalSeries(
        values=series.values[test_start:],
        period=period,
        labels=series.labels[test_start:],
    )
    rows = []
    for c in range(min_cycles, max_cycles + 1):
        length = c * period
        train = SeasonalSeries(
            values=series.values[test_start - length : test_start],
            period=period,
            labels=series.labels[test_start - length : test_start],
        )
        for name in ordered:
            run = _run_model(name, train, test, foa, default_params, include_default_seed)
            rows.append(
                SweepRow(
                    train_length=length,
                    model=name,
                    mape=run.report.mape,
                    labels=test.labels,
                    actual=test.values,
                    forecast=run.forecast,
                    relative_errors=run.report.relative_errors,
                )
            )
    return SweepResult(rows=tuple(rows))
