"""End-to-end parameter search: tune smoothing weights, refit, forecast.

The training series is split time-respectingly: everything but the last
season trains candidate models, the last season scores them.  The swarm
search minimizes that validation error; the winning weights are then
refit on the full training series before forecasting.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import holtwinters
from .errors import HorizonMismatch, NoViableCandidate, NotMultipleOfPeriod, TooShort
from .foa import FoaConfig, OptimizationTrace, run_foa
from .holtwinters import DEFAULT_PARAMS, SmoothingParams
from .metrics import EvaluationReport, evaluate, fitness_rmse
from .series import SeasonalSeries, SplitSpec, split


@dataclass(frozen=True)
class PipelineConfig:
    """Knobs for the tuned-forecast pipeline.

    ``include_default_seed`` plants ``default_seed_params`` into the first
    search generation, so the tuned result can never score worse on the
    validation slice than the stock weights it competes against.
    """

    foa: FoaConfig = field(default_factory=FoaConfig)
    horizon: int = 6
    include_default_seed: bool = True
    default_seed_params: SmoothingParams = DEFAULT_PARAMS

    def __post_init__(self) -> None:
        if self.horizon < 1:
            raise HorizonMismatch(f"horizon must be >= 1, got {self.horizon}")


@dataclass(frozen=True)
class PipelineResult:
    optimal_params: SmoothingParams
    forecast: tuple[float, ...]
    report: EvaluationReport | None
    trace: OptimizationTrace


def validation_fitness(
    train: SeasonalSeries, validation: SeasonalSeries, params: SmoothingParams
) -> float:
    """Fit on ``train``, forecast ``len(validation)`` steps, score the error."""
    model = holtwinters.fit(train, params)
    predicted = holtwinters.forecast(model, len(validation))
    return fitness_rmse(validation.values, predicted)


def foa_mhw_fit(
    train: SeasonalSeries, config: PipelineConfig
) -> tuple[SmoothingParams, OptimizationTrace]:
    """Search smoothing weights that minimize error on the held-out season.

    Needs at least three full seasons: two to initialize and update the
    model, one held out for scoring.
    """
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

    def objective(values: tuple[float, ...]) -> float:
        alpha, beta, gamma = values
        return validation_fitness(
            inner_train, inner_val, SmoothingParams(alpha, beta, gamma)
        )

    seeds = []
    if config.include_default_seed:
        seeds.append(config.default_seed_params.as_tuple())
    best_values, trace = run_foa(objective, 3, config.foa, initial_candidates=seeds)
    if not trace.best_per_generation or trace.best_per_generation[-1].fitness == float("inf"):
        raise NoViableCandidate(
            "no candidate produced a finite validation error; the series may be degenerate"
        )
    alpha, beta, gamma = best_values
    return SmoothingParams(alpha, beta, gamma), trace


def foa_mhw_forecast(
    train: SeasonalSeries,
    test: SeasonalSeries | None,
    config: PipelineConfig,
) -> PipelineResult:
    """Tune weights on ``train``, refit on all of it, forecast ``horizon`` steps.

    When ``test`` is given its length must equal the horizon and the result
    carries an accuracy report against it.
    """
    if test is not None and len(test) != config.horizon:
        raise HorizonMismatch(
            f"test slice has {len(test)} points but horizon is {config.horizon}"
        )
    params, trace = foa_mhw_fit(train, config)
    model = holtwinters.fit(train, params)
    predicted = tuple(holtwinters.forecast(model, config.horizon))
    report = None if test is None else evaluate(test.values, predicted)
    return PipelineResult(
        optimal_params=params, forecast=predicted, report=report, trace=trace
    )
