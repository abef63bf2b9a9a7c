"""Seasonal time-series container and the ordered train/validation/test split."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    EmptyInput,
    LabelLengthMismatch,
    NonPositiveValue,
    PeriodTooSmall,
    SplitLengthMismatch,
)


@dataclass(frozen=True)
class SeasonalSeries:
    """An immutable series of strictly positive observations.

    ``period`` is the number of observations per seasonal cycle (e.g. 6 for
    bimonthly meter readings).  Labels are opaque display strings; no calendar
    arithmetic is ever performed on them.

    Every consumer of a series divides by its values at some point, so
    positivity is enforced here, at construction, rather than at fit time.
    An empty series is allowed (it appears as a degenerate split slice), but
    any value present must be a positive finite real.
    """

    values: tuple[float, ...]
    period: int
    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.period < 2:
            raise PeriodTooSmall(f"period must be >= 2, got {self.period}")
        if len(self.labels) != len(self.values):
            raise LabelLengthMismatch(
                f"{len(self.labels)} labels for {len(self.values)} values"
            )
        for i, v in enumerate(self.values):
            if not math.isfinite(v) or v <= 0.0:
                raise NonPositiveValue(f"value at index {i} is {v!r}; must be > 0")

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class SplitSpec:
    """Contiguous partition sizes: first ``n_train`` points, then validation, then test."""

    n_train: int
    n_validation: int
    n_test: int

    def __post_init__(self) -> None:
        if self.n_train <= 0:
            raise SplitLengthMismatch(f"n_train must be > 0, got {self.n_train}")
        if self.n_validation < 0 or self.n_test < 0:
            raise SplitLengthMismatch("validation and test counts must be >= 0")

    @property
    def total(self) -> int:
        return self.n_train + self.n_validation + self.n_test


def new_series(
    values: Sequence[float], period: int, labels: Sequence[str]
) -> SeasonalSeries:
    """Validate and build a :class:`SeasonalSeries` from plain sequences."""
    if len(values) == 0:
        raise EmptyInput("a series needs at least one value")
    return SeasonalSeries(
        values=tuple(float(v) for v in values),
        period=int(period),
        labels=tuple(str(x) for x in labels),
    )


def split(
    series: SeasonalSeries, spec: SplitSpec
) -> tuple[SeasonalSeries, SeasonalSeries, SeasonalSeries]:
    """Partition a series into contiguous (train, validation, test) slices.

    The slices preserve order and the parent period; concatenating their
    values reproduces the input exactly.
    """
    if spec.total != len(series):
        raise SplitLengthMismatch(
            f"split sizes sum to {spec.total} but the series has {len(series)} points"
        )
    a = spec.n_train
    b = a + spec.n_validation
    return (
        _slice(series, 0, a),
        _slice(series, a, b),
        _slice(series, b, len(series)),
    )


def _slice(series: SeasonalSeries, start: int, stop: int) -> SeasonalSeries:
    return SeasonalSeries(
        values=series.values[start:stop],
        period=series.period,
        labels=series.labels[start:stop],
    )
