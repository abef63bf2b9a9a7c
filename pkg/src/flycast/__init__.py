"""Seasonal forecasting with swarm-tuned multiplicative exponential smoothing."""

from .errors import DataError, FlycastError, NumericError, UsageError
from .foa import FoaConfig, OptimizationTrace, run_foa
from .holtwinters import DEFAULT_PARAMS, SmoothingParams
from .metrics import evaluate, fitness_rmse, mape, mean_rmse
from .pipeline import PipelineConfig, PipelineResult, foa_mhw_fit, foa_mhw_forecast
from .series import SeasonalSeries, SplitSpec, new_series, split
from .synth import synth_generate

__version__ = "1.0.0"

__all__ = [
    "DataError",
    "DEFAULT_PARAMS",
    "FlycastError",
    "FoaConfig",
    "NumericError",
    "OptimizationTrace",
    "PipelineConfig",
    "PipelineResult",
    "SeasonalSeries",
    "SmoothingParams",
    "SplitSpec",
    "UsageError",
    "evaluate",
    "fitness_rmse",
    "foa_mhw_fit",
    "foa_mhw_forecast",
    "mape",
    "mean_rmse",
    "new_series",
    "run_foa",
    "split",
    "synth_generate",
    "__version__",
]
