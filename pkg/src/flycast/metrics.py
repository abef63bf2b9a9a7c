"""Forecast accuracy metrics: the optimizer's RMSE fitness, MAPE, relative errors.

The fitness used for parameter selection is the square root of the *sum* of
squared errors, without dividing by the number of points.  That is the form
the selection procedure was defined with; since every candidate is scored on
the same number of validation points, it ranks candidates identically to the
conventional root-mean-square error.  :func:`mean_rmse` provides the
conventional sqrt-of-mean variant for reporting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import EmptyInput, LengthMismatch, NonPositiveActual


@dataclass(frozen=True)
class EvaluationReport:
    """Per-point relative errors plus their aggregates for one forecast."""

    relative_errors: tuple[float, ...]
    mape: float
    rmse_fitness: float


def _check_lengths(actual: Sequence[float], predicted: Sequence[float]) -> None:
    if len(actual) != len(predicted):
        raise LengthMismatch(f"{len(actual)} actuals vs {len(predicted)} predictions")
    if len(actual) == 0:
        raise EmptyInput("need at least one point to score")


def fitness_rmse(actual: Sequence[float], predicted: Sequence[float]) -> float:
    """Square root of the sum of squared errors (no 1/N)."""
    _check_lengths(actual, predicted)
    return math.sqrt(sum((y - p) ** 2 for y, p in zip(actual, predicted)))


def mean_rmse(actual: Sequence[float], predicted: Sequence[float]) -> float:
    """Conventional root-mean-square error, for human-facing reports."""
    _check_lengths(actual, predicted)
    return math.sqrt(sum((y - p) ** 2 for y, p in zip(actual, predicted)) / len(actual))


def relative_errors(actual: Sequence[float], predicted: Sequence[float]) -> list[float]:
    """Element-wise ``|predicted - actual| / actual``; actuals must be positive."""
    _check_lengths(actual, predicted)
    out = []
    for i, (y, p) in enumerate(zip(actual, predicted)):
        if not y > 0.0:
            raise NonPositiveActual(f"actual at index {i} is {y!r}; must be > 0")
        out.append(abs(p - y) / y)
    return out


def mape(actual: Sequence[float], predicted: Sequence[float]) -> float:
    """Mean absolute percentage error, returned as a fraction (0.05 = 5%)."""
    rel = relative_errors(actual, predicted)
    return sum(rel) / len(rel)


def evaluate(actual: Sequence[float], predicted: Sequence[float]) -> EvaluationReport:
    """Bundle relative errors, their mean, and the RMSE fitness in one report."""
    rel = relative_errors(actual, predicted)
    return EvaluationReport(
        relative_errors=tuple(rel),
        mape=sum(rel) / len(rel),
        rmse_fitness=fitness_rmse(actual, predicted),
    )
