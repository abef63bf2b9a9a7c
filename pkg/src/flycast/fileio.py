"""Reading input series and writing sectioned-CSV result files.

Output files are a sequence of flat CSV tables, each introduced by a
``# section: <name>`` comment line and separated by one blank line.
Section names are ``meta`` (key/value run configuration echo), ``results``
(per model, per forecast point), ``trace`` (per-generation optimizer
progress), and ``sweep`` (one row per training length and model).

Floats are serialized with ``repr``, whose shortest-round-trip decimal form
parses back to the identical double, so written files are loss-free and
byte-stable across runs and platforms.  Human-facing percentage columns
(two decimals) sit alongside the full-precision fractions, never instead
of them.
"""

from __future__ import annotations

import csv
import io
import math
from typing import Mapping, Sequence

from .errors import NonPositiveValue, ParseError, UsageError
from .series import SeasonalSeries, new_series

CSV_HEADER = ("label", "value")

CONFIG_KEYS = (
    "period",
    "horizon",
    "sizepop",
    "maxgen",
    "flight_range",
    "seed",
    "default_params",
    "models",
    "output_path",
)


def load_csv(path: str, period: int) -> SeasonalSeries:
    """Read a ``label,value`` CSV into a series, reporting bad lines by number."""
    labels = []
    values = []
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ParseError(f"{path}: line 1: empty file, expected header label,value")
        if tuple(header) != CSV_HEADER:
            raise ParseError(
                f"{path}: line 1: expected header label,value, got {','.join(header)!r}"
            )
        for row in reader:
            line = reader.line_num
            if len(row) != 2:
                raise ParseError(f"{path}: line {line}: expected 2 fields, got {len(row)}")
            label, raw = row
            try:
                value = float(raw)
            except ValueError:
                raise ParseError(f"{path}: line {line}: {raw!r} is not a number") from None
            if not math.isfinite(value):
                raise ParseError(f"{path}: line {line}: {raw!r} is not finite")
            if value <= 0.0:
                raise NonPositiveValue(f"{path}: line {line}: value {raw} must be > 0")
            labels.append(label)
            values.append(value)
    if not values:
        raise ParseError(f"{path}: no data rows")
    return new_series(values, period, labels)


def save_csv(series: SeasonalSeries, path: str) -> None:
    """Write a series as ``label,value`` rows; full float precision."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for label, value in zip(series.labels, series.values):
            writer.writerow([label, repr(value)])


def _fmt(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (list, tuple)):
        return ";".join(_fmt(v) for v in value)
    return str(value)


def _pct(fraction: float) -> str:
    return f"{100.0 * fraction:.2f}"


def _write_section(writer: csv.writer, name: str, header: Sequence[str]) -> None:
    writer.writerow([f"# section: {name}"])
    writer.writerow(list(header))


def write_forecast_output(
    path: str,
    meta: Mapping[str, object],
    labels: Sequence[str],
    actual: Sequence[float],
    results: Sequence[Mapping[str, object]],
) -> None:
    """Write meta, per-point results, and optimizer trace sections.

    ``results`` entries follow the service response shape: keys ``model``,
    ``params`` (mapping or None), ``forecast``, ``relative_errors``,
    ``mape``, ``rmse_fitness``, ``rmse_mean``, ``trace`` (list or None).
    """
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        _write_section(writer, "meta", ["key", "value"])
        for key, value in meta.items():
            writer.writerow([key, _fmt(value)])
        writer.writerow([])

        _write_section(
            writer,
            "results",
            [
                "model",
                "point",
                "label",
                "actual",
                "forecast",
                "relative_error",
                "relative_error_pct",
                "mape",
                "mape_pct",
                "rmse_fitness",
                "rmse_mean",
                "alpha",
                "beta",
                "gamma",
            ],
        )
        for res in results:
            params = res.get("params")
            alpha = _fmt(None if params is None else params["alpha"])
            beta = _fmt(None if params is None else params["beta"])
            gamma = _fmt(None if params is None else params["gamma"])
            mape = float(res["mape"])
            for i, (label, y, p, rel) in enumerate(
                zip(labels, actual, res["forecast"], res["relative_errors"])
            ):
                writer.writerow(
                    [
                        res["model"],
                        i + 1,
                        label,
                        _fmt(float(y)),
                        _fmt(float(p)),
                        _fmt(float(rel)),
                        _pct(float(rel)),
                        _fmt(mape),
                        _pct(mape),
                        _fmt(float(res["rmse_fitness"])),
                        _fmt(float(res["rmse_mean"])),
                        alpha,
                        beta,
                        gamma,
                    ]
                )
        writer.writerow([])

        _write_section(
            writer,
            "trace",
            ["model", "generation", "best_fitness", "alpha", "beta", "gamma"],
        )
        for res in results:
            trace = res.get("trace")
            if not trace:
                continue
            for point in trace:
                writer.writerow(
                    [
                        res["model"],
                        point["generation"],
                        _fmt(float(point["best_fitness"])),
                        _fmt(float(point["alpha"])),
                        _fmt(float(point["beta"])),
                        _fmt(float(point["gamma"])),
                    ]
                )


def write_sweep_output(
    path: str,
    meta: Mapping[str, object],
    rows: Sequence[Mapping[str, object]],
) -> None:
    """Write meta plus one sweep row per (training length, model)."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        _write_section(writer, "meta", ["key", "value"])
        for key, value in meta.items():
            writer.writerow([key, _fmt(value)])
        writer.writerow([])

        _write_section(
            writer,
            "sweep",
            [
                "train_length",
                "model",
                "mape",
                "mape_pct",
                "labels",
                "actual",
                "forecast",
                "relative_errors",
            ],
        )
        for row in rows:
            mape = float(row["mape"])
            writer.writerow(
                [
                    row["train_length"],
                    row["model"],
                    _fmt(mape),
                    _pct(mape),
                    ";".join(str(x) for x in row["labels"]),
                    _fmt([float(v) for v in row["actual"]]),
                    _fmt([float(v) for v in row["forecast"]]),
                    _fmt([float(v) for v in row["relative_errors"]]),
                ]
            )


def read_sections(path: str) -> dict[str, list[dict[str, str]]]:
    """Parse a sectioned-CSV file back into per-section lists of row dicts."""
    sections: dict[str, list[dict[str, str]]] = {}
    current_name: str | None = None
    current_lines: list[str] = []

    def flush() -> None:
        nonlocal current_name, current_lines
        if current_name is None:
            return
        rows = list(csv.reader(io.StringIO("\n".join(current_lines))))
        parsed: list[dict[str, str]] = []
        if rows:
            header = rows[0]
            for row in rows[1:]:
                parsed.append(dict(zip(header, row)))
        sections[current_name] = parsed
        current_name = None
        current_lines = []

    with open(path, "r", encoding="utf-8", newline="") as fh:
        for raw in fh.read().splitlines():
            if raw.startswith("# section: "):
                flush()
                current_name = raw[len("# section: ") :].strip()
            elif raw.strip() == "":
                continue
            elif current_name is not None:
                current_lines.append(raw)
        flush()
    return sections


def _config_int(key: str, raw: str, line: int) -> int:
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"config line {line}: {key} must be an integer, got {raw!r}") from None


def _config_float(key: str, raw: str, line: int) -> float:
    try:
        value = float(raw)
    except ValueError:
        raise UsageError(f"config line {line}: {key} must be a number, got {raw!r}") from None
    if not math.isfinite(value):
        raise UsageError(f"config line {line}: {key} must be finite, got {raw!r}")
    return value


def load_config_file(path: str) -> dict[str, object]:
    """Parse a flat ``key = value`` config file.

    Recognized keys mirror the CLI flags: period, horizon, sizepop, maxgen,
    flight_range, seed, default_params (comma-separated triple), models
    (comma-separated names), output_path.  Unknown keys and malformed lines
    are usage errors.
    """
    out: dict[str, object] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for line_num, raw in enumerate(fh, start=1):
            text = raw.strip()
            if not text or text.startswith("#"):
                continue
            if "=" not in text:
                raise UsageError(f"config line {line_num}: expected key = value, got {text!r}")
            key, _, raw_value = text.partition("=")
            key = key.strip()
            value = raw_value.strip()
            if key not in CONFIG_KEYS:
                raise UsageError(f"config line {line_num}: unknown key {key!r}")
            if key in ("period", "horizon", "sizepop", "maxgen", "seed"):
                out[key] = _config_int(key, value, line_num)
            elif key == "flight_range":
                out[key] = _config_float(key, value, line_num)
            elif key == "default_params":
                parts = [p.strip() for p in value.split(",")]
                if len(parts) != 3:
                    raise UsageError(
                        f"config line {line_num}: default_params needs exactly 3 "
                        f"comma-separated values, got {len(parts)}"
                    )
                out[key] = tuple(_config_float("default_params", p, line_num) for p in parts)
            elif key == "models":
                models = tuple(p.strip() for p in value.split(",") if p.strip())
                if not models:
                    raise UsageError(f"config line {line_num}: models must not be empty")
                out[key] = models
            else:
                out[key] = value
    return out
