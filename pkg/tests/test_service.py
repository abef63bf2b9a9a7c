"""HTTP layer tests via the in-process test client."""

import pytest
from fastapi.testclient import TestClient

import flycast.harness
from flycast.errors import DivisionBlowup
from flycast.metrics import mape
from flycast.service import create_app
from flycast.synth import synth_generate


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


@pytest.fixture(scope="module")
def series_54():
    s = synth_generate(seed=7, cycles=9, period=6, base=100, growth=5,
                       pattern_spread=0.25, noise=0.05)
    return {"values": list(s.values), "period": 6, "labels": list(s.labels)}


def forecast_body(series, **overrides):
    body = {
        "series": series,
        "horizon": 6,
        "models": ["foa-mhw", "mhw-default", "si"],
        "foa": {"sizepop": 15, "maxgen": 8, "flight_range": 1.0, "seed": 0},
    }
    body.update(overrides)
    return body


def test_health(client):
    r = client.get("/health")
    assert r.status_code == 200
    assert r.json() == {"status": "ok"}


def test_forecast_happy_path(client, series_54):
    r = client.post("/v1/forecast", json=forecast_body(series_54))
    assert r.status_code == 200
    data = r.json()
    assert data["train_length"] == 48
    assert data["test_length"] == 6
    assert [m["model"] for m in data["results"]] == ["foa-mhw", "mhw-default", "si"]
    assert data["actual"] == series_54["values"][48:]
    assert data["labels"] == series_54["labels"][48:]


def test_forecast_mape_consistent_with_payload(client, series_54):
    r = client.post("/v1/forecast", json=forecast_body(series_54))
    data = r.json()
    for res in data["results"]:
        assert res["mape"] == mape(data["actual"], res["forecast"])
        assert len(res["forecast"]) == 6
        assert len(res["relative_errors"]) == 6


def test_trace_only_on_tuned_model(client, series_54):
    r = client.post("/v1/forecast", json=forecast_body(series_54))
    by_model = {m["model"]: m for m in r.json()["results"]}
    assert by_model["foa-mhw"]["trace"] is not None
    assert len(by_model["foa-mhw"]["trace"]) == 8
    assert by_model["foa-mhw"]["trace"][0]["generation"] == 1
    assert by_model["mhw-default"]["trace"] is None
    assert by_model["si"]["trace"] is None
    assert by_model["si"]["params"] is None


def test_model_order_is_canonical(client, series_54):
    body = forecast_body(series_54, models=["si", "foa-mhw"])
    r = client.post("/v1/forecast", json=body)
    assert [m["model"] for m in r.json()["results"]] == ["foa-mhw", "si"]


def test_labels_default_when_omitted(client):
    s = synth_generate(seed=1, cycles=4, period=2, base=10, noise=0.0)
    body = forecast_body(
        {"values": list(s.values), "period": 2}, horizon=2, models=["si"]
    )
    r = client.post("/v1/forecast", json=body)
    assert r.status_code == 200
    assert r.json()["labels"] == ["p7", "p8"]


def test_forecast_deterministic(client, series_54):
    a = client.post("/v1/forecast", json=forecast_body(series_54))
    b = client.post("/v1/forecast", json=forecast_body(series_54))
    assert a.json() == b.json()


def test_sweep_happy_path(client, series_54):
    body = forecast_body(series_54, min_cycles=3, max_cycles=8)
    r = client.post("/v1/sweep", json=body)
    assert r.status_code == 200
    rows = r.json()["rows"]
    assert len(rows) == 18
    assert [row["train_length"] for row in rows[:3]] == [18, 18, 18]
    assert sorted({row["train_length"] for row in rows}) == [18, 24, 30, 36, 42, 48]
    assert [row["model"] for row in rows[:3]] == ["foa-mhw", "mhw-default", "si"]


def test_sweep_single_length(client, series_54):
    body = forecast_body(series_54, models=["si"], min_cycles=4, max_cycles=4)
    r = client.post("/v1/sweep", json=body)
    rows = r.json()["rows"]
    assert len(rows) == 1
    assert rows[0]["train_length"] == 24


def test_sweep_too_long_is_data_error(client, series_54):
    body = forecast_body(series_54, min_cycles=3, max_cycles=9)
    r = client.post("/v1/sweep", json=body)
    assert r.status_code == 400
    assert r.json()["kind"] == "data"


def test_synthesize_matches_library(client):
    r = client.post("/v1/synthesize", json={
        "seed": 5, "cycles": 4, "period": 3, "base": 42.0,
        "growth": 1.0, "pattern_spread": 0.1, "noise": 0.05,
    })
    assert r.status_code == 200
    s = synth_generate(seed=5, cycles=4, period=3, base=42.0, growth=1.0,
                       pattern_spread=0.1, noise=0.05)
    assert r.json() == {
        "values": list(s.values), "period": 3, "labels": list(s.labels)
    }


def test_synthesize_rejects_bad_params(client):
    r = client.post("/v1/synthesize", json={"cycles": 2})
    assert r.status_code == 400
    body = r.json()
    assert body["kind"] == "data"
    assert body["error"] == "InvalidParams"


def test_non_positive_series_is_data_error(client):
    body = forecast_body({"values": [1.0, -2.0, 3.0, 4.0], "period": 2})
    r = client.post("/v1/forecast", json=body)
    assert r.status_code == 400
    body = r.json()
    assert body["kind"] == "data"
    assert body["error"] == "NonPositiveValue"
    assert "index 1" in body["message"]


def test_too_short_series_is_data_error(client):
    body = forecast_body({"values": [5.0] * 4, "period": 2}, horizon=2)
    r = client.post("/v1/forecast", json=body)
    assert r.status_code == 400
    assert r.json()["error"] == "TooShort"


def test_numeric_failure_maps_to_numeric_kind(client, series_54, monkeypatch):
    def boom(*args, **kwargs):
        raise DivisionBlowup("smoothing state degenerated")

    monkeypatch.setattr(flycast.harness, "run_forecast", boom)
    r = client.post("/v1/forecast", json=forecast_body(series_54))
    assert r.status_code == 400
    body = r.json()
    assert body["kind"] == "numeric"
    assert body["error"] == "DivisionBlowup"


@pytest.mark.parametrize(
    "mutate",
    [
        lambda b: b.update(models=["nope"]),
        lambda b: b.pop("series"),
        lambda b: b.update(horizon="six"),
        lambda b: b.update(series={"values": "abc", "period": 2}),
    ],
)
def test_shape_errors_are_422(client, series_54, mutate):
    body = forecast_body(series_54)
    mutate(body)
    r = client.post("/v1/forecast", json=body)
    assert r.status_code == 422
