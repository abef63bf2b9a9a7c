"""Command-line interface.

The CLI is a thin client: it reads local files, ships the request to the
HTTP service (in-process by default, or a remote server via ``--server``),
and writes the response to a sectioned-CSV output file.  All numeric work
happens behind the service boundary.

Exit codes: 0 success, 2 usage error, 3 data error, 4 numeric failure.
No environment variables are read.
"""

from __future__ import annotations

import argparse
import asyncio
import sys
from dataclasses import dataclass, replace

import httpx

from .errors import DataError, NumericError, UsageError
from .fileio import (
    load_config_file,
    load_csv,
    save_csv,
    write_forecast_output,
    write_sweep_output,
)
from .harness import CANONICAL_MODELS
from .series import new_series
from .service import create_app


@dataclass(frozen=True)
class RunConfig:
    """Resolved settings for one command: defaults, then config file, then flags."""

    period: int = 6
    horizon: int = 6
    sizepop: int = 50
    maxgen: int = 20
    flight_range: float = 1.0
    seed: int = 0
    default_params: tuple[float, float, float] = (0.2, 0.1, 0.6)
    models: tuple[str, ...] = CANONICAL_MODELS
    output_path: str = "results.csv"
    server: str | None = None
    include_default_seed: bool = True


def _parse_models(raw: str) -> tuple[str, ...]:
    models = tuple(p.strip() for p in raw.split(",") if p.strip())
    if not models:
        raise UsageError("models must not be empty")
    for name in models:
        if name not in CANONICAL_MODELS:
            raise UsageError(
                f"unknown model {name!r}; choose from {', '.join(CANONICAL_MODELS)}"
            )
    return models


def _resolve_config(args: argparse.Namespace, default_out: str) -> RunConfig:
    config = replace(RunConfig(), output_path=default_out)
    if getattr(args, "config", None):
        file_values = load_config_file(args.config)
        if "models" in file_values:
            models = tuple(file_values["models"])
            for name in models:
                if name not in CANONICAL_MODELS:
                    raise UsageError(
                        f"config: unknown model {name!r}; "
                        f"choose from {', '.join(CANONICAL_MODELS)}"
                    )
            file_values["models"] = models
        config = replace(config, **file_values)
    overrides = {}
    for field, attr in (
        ("period", "period"),
        ("horizon", "horizon"),
        ("sizepop", "sizepop"),
        ("maxgen", "maxgen"),
        ("flight_range", "flight_range"),
        ("seed", "seed"),
        ("output_path", "out"),
        ("server", "server"),
    ):
        value = getattr(args, attr, None)
        if value is not None:
            overrides[field] = value
    if getattr(args, "models", None) is not None:
        overrides["models"] = _parse_models(args.models)
    return replace(config, **overrides)


async def _post(server: str | None, path: str, payload: dict) -> httpx.Response:
    if server is None:
        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(
            transport=transport, base_url="http://flycast.internal", timeout=None
        ) as client:
            return await client.post(path, json=payload)
    async with httpx.AsyncClient(base_url=server, timeout=600.0) as client:
        return await client.post(path, json=payload)


def _post_json(server: str | None, path: str, payload: dict) -> dict:
    """POST and return the parsed body; request failures become exit codes."""
    try:
        response = asyncio.run(_post(server, path, payload))
    except httpx.HTTPError as exc:
        print(f"error: request failed: {exc}", file=sys.stderr)
        raise SystemExit(2) from None
    if response.status_code == 200:
        return response.json()
    if response.status_code == 400:
        body = response.json()
        print(f"error: {body.get('message', 'request rejected')}", file=sys.stderr)
        kind = body.get("kind")
        raise SystemExit(4 if kind == "numeric" else 3 if kind == "data" else 2)
    if response.status_code == 422:
        print(f"error: invalid request: {response.text}", file=sys.stderr)
        raise SystemExit(2)
    print(f"error: server returned HTTP {response.status_code}", file=sys.stderr)
    raise SystemExit(2)


def _request_body(config: RunConfig, series_payload: dict) -> dict:
    alpha, beta, gamma = config.default_params
    return {
        "series": series_payload,
        "horizon": config.horizon,
        "models": list(config.models),
        "foa": {
            "sizepop": config.sizepop,
            "maxgen": config.maxgen,
            "flight_range": config.flight_range,
            "seed": config.seed,
        },
        "default_params": {"alpha": alpha, "beta": beta, "gamma": gamma},
        "include_default_seed": config.include_default_seed,
    }


def _base_meta(command: str, data_path: str, config: RunConfig) -> dict:
    return {
        "command": command,
        "input": data_path,
        "period": config.period,
        "horizon": config.horizon,
        "sizepop": config.sizepop,
        "maxgen": config.maxgen,
        "flight_range": config.flight_range,
        "seed": config.seed,
        "models": list(config.models),
        "default_params": list(config.default_params),
        "include_default_seed": config.include_default_seed,
    }


def _print_model_lines(results: list[dict]) -> None:
    for res in results:
        params = res["params"]
        if params is None:
            suffix = ""
        else:
            suffix = (
                f"  alpha={params['alpha']:.4f}"
                f" beta={params['beta']:.4f}"
                f" gamma={params['gamma']:.4f}"
            )
        print(
            f"{res['model']}: mape={100.0 * res['mape']:.2f}%"
            f" rmse={res['rmse_mean']:.4f}{suffix}"
        )


def cmd_forecast(config: RunConfig, data_path: str) -> int:
    series = load_csv(data_path, config.period)
    body = _request_body(
        config,
        {
            "values": list(series.values),
            "period": series.period,
            "labels": list(series.labels),
        },
    )
    data = _post_json(config.server, "/v1/forecast", body)
    meta = _base_meta("forecast", data_path, config)
    meta["train_length"] = data["train_length"]
    meta["test_length"] = data["test_length"]
    write_forecast_output(
        config.output_path, meta, data["labels"], data["actual"], data["results"]
    )
    _print_model_lines(data["results"])
    print(f"results written to {config.output_path}")
    return 0


def cmd_sweep(config: RunConfig, data_path: str, min_cycles: int, max_cycles: int) -> int:
    series = load_csv(data_path, config.period)
    body = _request_body(
        config,
        {
            "values": list(series.values),
            "period": series.period,
            "labels": list(series.labels),
        },
    )
    body["min_cycles"] = min_cycles
    body["max_cycles"] = max_cycles
    data = _post_json(config.server, "/v1/sweep", body)
    meta = _base_meta("sweep", data_path, config)
    meta["min_cycles"] = min_cycles
    meta["max_cycles"] = max_cycles
    write_sweep_output(config.output_path, meta, data["rows"])
    for row in data["rows"]:
        print(
            f"train={row['train_length']} {row['model']}:"
            f" mape={100.0 * row['mape']:.2f}%"
        )
    print(f"sweep written to {config.output_path}")
    return 0


def cmd_synth(args: argparse.Namespace) -> int:
    payload = {
        "seed": args.seed,
        "cycles": args.cycles,
        "period": args.period,
        "base": args.base,
        "growth": args.growth,
        "pattern_spread": args.pattern_spread,
        "noise": args.noise,
    }
    data = _post_json(args.server, "/v1/synthesize", payload)
    series = new_series(data["values"], data["period"], data["labels"])
    save_csv(series, args.out)
    print(f"{len(series)} points written to {args.out}")
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def _forecast_entry(args: argparse.Namespace) -> int:
    config = _resolve_config(args, default_out="results.csv")
    return cmd_forecast(config, args.data)


def _sweep_entry(args: argparse.Namespace) -> int:
    config = _resolve_config(args, default_out="sweep.csv")
    return cmd_sweep(config, args.data, args.min_cycles, args.max_cycles)


def _add_common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("data", help="input CSV with header label,value")
    sub.add_argument("--config", help="config file with key = value lines")
    sub.add_argument("--period", type=int, help="observations per seasonal cycle")
    sub.add_argument("--horizon", type=int, help="points held out and forecast")
    sub.add_argument("--sizepop", type=int, help="swarm size per generation")
    sub.add_argument("--maxgen", type=int, help="number of search generations")
    sub.add_argument("--flight-range", type=float, dest="flight_range",
                     help="random flight half-width")
    sub.add_argument("--seed", type=int, help="optimizer random seed")
    sub.add_argument("--models", help="comma-separated: foa-mhw,mhw-default,si")
    sub.add_argument("--out", help="output file path")
    sub.add_argument("--server", help="base URL of a running server "
                                      "(default: run in-process)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flycast",
        description="Seasonal forecasting with swarm-tuned exponential smoothing.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_fc = sub.add_parser("forecast", help="hold out the last points and forecast them")
    _add_common_flags(p_fc)
    p_fc.set_defaults(func=_forecast_entry)

    p_sw = sub.add_parser("sweep", help="score models across training lengths")
    _add_common_flags(p_sw)
    p_sw.add_argument("--min-cycles", type=int, default=3, dest="min_cycles",
                      help="shortest training history, in cycles (default 3)")
    p_sw.add_argument("--max-cycles", type=int, default=8, dest="max_cycles",
                      help="longest training history, in cycles (default 8)")
    p_sw.set_defaults(func=_sweep_entry)

    p_sy = sub.add_parser("synth", help="generate a synthetic seasonal series CSV")
    p_sy.add_argument("--out", default="synth.csv", help="output CSV path")
    p_sy.add_argument("--seed", type=int, default=0)
    p_sy.add_argument("--cycles", type=int, default=9)
    p_sy.add_argument("--period", type=int, default=6)
    p_sy.add_argument("--base", type=float, default=100.0)
    p_sy.add_argument("--growth", type=float, default=5.0)
    p_sy.add_argument("--pattern-spread", type=float, default=0.25, dest="pattern_spread")
    p_sy.add_argument("--noise", type=float, default=0.05)
    p_sy.add_argument("--server", help="base URL of a running server")
    p_sy.set_defaults(func=cmd_synth)

    p_srv = sub.add_parser("serve", help="run the HTTP service")
    p_srv.add_argument("--host", default="127.0.0.1")
    p_srv.add_argument("--port", type=int, default=8000)
    p_srv.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit:
        raise
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except NumericError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
