"""Acceptance gate: the ten headline behaviors, one test per criterion.

Each test prints a PASS line on success; run with -v (or -s) for the
per-criterion report.  Runtime bounds are asserted where the behavior
is only useful if it is fast.
"""

import math
import random
import time

import pytest

from flycast.baselines import default_mhw_forecast, grid_search_oracle, si_fit_forecast
from flycast.cli import main as cli_main
from flycast.fileio import read_sections, save_csv
from flycast.foa import FoaConfig
from flycast.holtwinters import DEFAULT_PARAMS, SmoothingParams, fit, forecast
from flycast.metrics import mape
from flycast.pipeline import (
    PipelineConfig,
    foa_mhw_fit,
    foa_mhw_forecast,
    validation_fitness,
)
from flycast.series import SplitSpec, new_series, split
from flycast.synth import synth_generate

from _oracles import naive_hw

# Traces collected by criteria 4 and 5, checked for monotonicity by 6.
COLLECTED_TRACES = []


def _run_cli(argv):
    try:
        return cli_main(argv)
    except SystemExit as exc:
        return exc.code


def test_criterion_01_mape_reproduces_reference_table_means():
    started = time.perf_counter()
    # Six frozen relative-error columns with their stated summary MAPEs (%).
    cases = [
        ("a/si", [0.0540, 0.0216, 0.0152, 0.0482, 0.0815, 0.0426], 4.38),
        ("a/default", [0.0700, 0.0184, 0.0328, 0.0682, 0.0635, 0.0181], 4.52),
        ("a/tuned", [0.0720, 0.0329, 0.0154, 0.0166, 0.0039, 0.0784], 3.65),
        ("b/si", [0.0768, 0.1135, 0.1022, 0.0615, 0.0786, 0.1104], 9.05),
        ("b/default", [0.0260, 0.0548, 0.0526, 0.0419, 0.0119, 0.0037], 3.18),
        ("b/tuned", [0.0233, 0.0041, 0.0006, 0.0423, 0.0196, 0.0234], 1.89),
    ]
    for name, fractions, stated_pct in cases:
        # mape is a plain mean of relative errors; feed it actual/forecast
        # pairs that reproduce each per-point fraction exactly.
        actual = [1.0] * len(fractions)
        predicted = [1.0 + f for f in fractions]
        got_pct = 100.0 * mape(actual, predicted)
        assert abs(got_pct - stated_pct) <= 0.01, (name, got_pct, stated_pct)
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0
    print(f"PASS: criterion 1 - six reference error columns average to their "
          f"stated MAPEs within 0.01pp ({elapsed:.3f}s)")


def test_criterion_02_fit_matches_straight_line_recursion_oracle():
    started = time.perf_counter()
    rng = random.Random(4242)
    checked = 0
    for _ in range(50):
        period = rng.choice([2, 4, 6])
        cycles = rng.randint(2, 8)
        values = [rng.uniform(5.0, 200.0) for _ in range(cycles * period)]
        params = SmoothingParams(rng.random(), rng.random(), rng.random())
        series = new_series(values, period, [str(i) for i in range(len(values))])

        model = fit(series, params)
        level, trend, ring, _ = naive_hw(
            values, period, params.alpha, params.beta, params.gamma, horizon=1
        )

        assert model.state.level == pytest.approx(level, rel=1e-12)
        assert model.state.trend == pytest.approx(trend, rel=1e-12, abs=1e-12)
        for got, want in zip(model.state.seasonal, ring):
            assert got == pytest.approx(want, rel=1e-12)
        checked += 1
    elapsed = time.perf_counter() - started
    assert checked == 50
    assert elapsed < 5.0
    print(f"PASS: criterion 2 - fit state matches the independent recursion "
          f"on 50 random series within 1e-12 ({elapsed:.3f}s)")


def test_criterion_03_constant_series_is_a_fixed_point_everywhere():
    period = 6
    value = 7.3
    rng = random.Random(31)
    triples = [SmoothingParams(rng.random(), rng.random(), rng.random())
               for _ in range(20)]

    for cycles in (2, 3, 4):
        n = cycles * period
        series = new_series([value] * n, period, [str(i) for i in range(n)])

        for params in triples:
            predicted = forecast(fit(series, params), period)
            assert all(abs(p - value) <= 1e-12 for p in predicted)

        assert all(abs(p - value) <= 1e-12
                   for p in default_mhw_forecast(series, period))
        assert all(abs(p - value) <= 1e-12
                   for p in si_fit_forecast(series, period))

    # The tuned pipeline needs a cycle of validation on top of the two-cycle
    # initialization minimum, so its fixed-point check starts at 3 cycles.
    for cycles in (3, 4):
        total = (cycles + 1) * period
        full = new_series([value] * total, period, [str(i) for i in range(total)])
        train, _, test = split(full, SplitSpec(cycles * period, 0, period))
        config = PipelineConfig(foa=FoaConfig(sizepop=15, maxgen=6, seed=1),
                                horizon=period)
        result = foa_mhw_forecast(train, test, config)
        assert all(abs(p - value) <= 1e-12 for p in result.forecast)
        assert result.report.mape <= 1e-12
    print("PASS: criterion 3 - constant series reproduced within 1e-12 by raw "
          "smoothing (20 param draws), defaults, seasonal-index, and the tuned "
          "pipeline; pipeline MAPE 0")


def test_criterion_04_tuned_validation_rmse_close_to_grid_oracle():
    started = time.perf_counter()
    wins = 0
    ratios = []
    for seed in range(201, 211):
        series = synth_generate(seed=seed, cycles=8, period=6, base=100.0,
                                growth=5.0, pattern_spread=0.25, noise=0.05)
        params, trace = foa_mhw_fit(
            series, PipelineConfig(foa=FoaConfig(seed=seed), horizon=6)
        )
        COLLECTED_TRACES.append(trace)
        tuned = trace.best_per_generation[-1].fitness

        _, grid_fit = grid_search_oracle(series, step=0.05)
        ratios.append(tuned / grid_fit)
        if tuned <= 1.05 * grid_fit:
            wins += 1
    elapsed = time.perf_counter() - started
    assert wins >= 9, ratios
    assert elapsed < 60.0
    print(f"PASS: criterion 4 - tuned RMSE within 1.05x of the 0.05-step grid "
          f"on {wins}/10 seeded series, worst ratio {max(ratios):.4f} "
          f"({elapsed:.3f}s)")


def test_criterion_05_tuned_never_loses_to_default_candidate():
    meta = random.Random(99)
    failures = 0
    for i in range(100):
        cycles = meta.randint(4, 8)
        period = meta.choice([2, 4, 6])
        series = synth_generate(
            seed=meta.randrange(10 ** 6),
            cycles=cycles,
            period=period,
            base=meta.uniform(50.0, 150.0),
            growth=meta.uniform(-2.0, 5.0),
            pattern_spread=meta.uniform(0.0, 0.4),
            noise=meta.uniform(0.0, 0.15),
        )
        config = PipelineConfig(
            foa=FoaConfig(sizepop=20, maxgen=8, seed=i), horizon=period
        )
        _, trace = foa_mhw_fit(series, config)
        COLLECTED_TRACES.append(trace)

        n = len(series)
        train, validation, _ = split(series, SplitSpec(n - period, period, 0))
        baseline = validation_fitness(train, validation, DEFAULT_PARAMS)
        if trace.best_per_generation[-1].fitness > baseline:
            failures += 1
    assert failures == 0
    print("PASS: criterion 5 - tuned fitness <= default-parameter fitness on "
          "100/100 random series (default injected as a starting candidate)")


def test_criterion_06_best_so_far_fitness_never_increases():
    traces = list(COLLECTED_TRACES)
    if not traces:
        # Running this test in isolation: collect a few fresh runs.
        for seed in (201, 202, 203):
            series = synth_generate(seed=seed, cycles=8, period=6, base=100.0,
                                    growth=5.0, pattern_spread=0.25, noise=0.05)
            _, trace = foa_mhw_fit(
                series, PipelineConfig(foa=FoaConfig(seed=seed), horizon=6)
            )
            traces.append(trace)

    violations = 0
    for trace in traces:
        fitnesses = [g.fitness for g in trace.best_per_generation]
        for earlier, later in zip(fitnesses, fitnesses[1:]):
            if later > earlier:
                violations += 1
    assert violations == 0
    print(f"PASS: criterion 6 - best-so-far fitness non-increasing in all "
          f"{len(traces)} collected optimization traces")


def test_criterion_07_three_cycle_training_works_and_is_accurate():
    started = time.perf_counter()
    period = 6

    # Tuning completes on a bare 18-point series.
    bare = synth_generate(seed=5, cycles=3, period=period, base=90.0,
                          growth=3.0, pattern_spread=0.2, noise=0.0)
    assert len(bare) == 18
    params, _ = foa_mhw_fit(bare, PipelineConfig(horizon=period))
    assert all(math.isfinite(v) for v in params.as_tuple())

    # Trained on exactly 18 points, tested on the following cycle.
    full = synth_generate(seed=5, cycles=4, period=period, base=90.0,
                          growth=3.0, pattern_spread=0.2, noise=0.0)
    train, _, test = split(full, SplitSpec(18, 0, period))
    result = foa_mhw_forecast(train, test, PipelineConfig(horizon=period))
    elapsed = time.perf_counter() - started

    assert math.isfinite(result.report.mape)
    assert result.report.mape < 0.05
    assert elapsed < 10.0
    print(f"PASS: criterion 7 - 18-point training run completes; noise-free "
          f"growth test MAPE {100 * result.report.mape:.3f}% < 5% "
          f"({elapsed:.3f}s)")


def test_criterion_08_repeat_runs_write_byte_identical_files(tmp_path):
    series = synth_generate(seed=7, cycles=9, period=6, base=100.0,
                            growth=5.0, pattern_spread=0.25, noise=0.05)
    data = tmp_path / "data.csv"
    save_csv(series, str(data))

    outputs = []
    for name in ("f1.csv", "f2.csv"):
        out = tmp_path / name
        assert _run_cli(["forecast", str(data), "--period", "6", "--seed", "0",
                         "--out", str(out)]) == 0
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]

    outputs = []
    for name in ("s1.csv", "s2.csv"):
        out = tmp_path / name
        assert _run_cli(["sweep", str(data), "--period", "6", "--seed", "0",
                         "--maxgen", "8", "--out", str(out)]) == 0
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]
    print("PASS: criterion 8 - forecast and sweep outputs byte-identical "
          "across consecutive seeded runs")


def test_criterion_09_seasonal_index_model_is_exact_on_clean_data():
    period = 4
    horizon = period
    worst = 0.0
    for seed in (0, 1, 17, 23):
        for growth in (2.5, -1.0):
            full = synth_generate(seed=seed, cycles=6, period=period,
                                  base=80.0, growth=growth,
                                  pattern_spread=0.3, noise=0.0)
            train, _, test = split(full, SplitSpec(20, 0, horizon))
            predicted = si_fit_forecast(train, horizon)
            err = mape(list(test.values), predicted)
            worst = max(worst, err)
    assert worst < 1e-9
    print(f"PASS: criterion 9 - seasonal-index continuation MAPE on clean "
          f"trended data is {worst:.2e} < 1e-9 across 8 series")


def test_criterion_10_sweep_emits_six_lengths_per_model(tmp_path):
    series = synth_generate(seed=7, cycles=9, period=6, base=100.0,
                            growth=5.0, pattern_spread=0.25, noise=0.05)
    assert len(series) == 54
    data = tmp_path / "data.csv"
    save_csv(series, str(data))
    out = tmp_path / "sweep.csv"
    assert _run_cli(["sweep", str(data), "--period", "6", "--min-cycles", "3",
                     "--max-cycles", "8", "--seed", "0", "--maxgen", "8",
                     "--out", str(out)]) == 0

    rows = read_sections(str(out))["sweep"]
    models = {r["model"] for r in rows}
    lengths = sorted({int(r["train_length"]) for r in rows})
    assert lengths == [18, 24, 30, 36, 42, 48]
    assert len(rows) == 6 * len(models)
    per_model = {m: sum(1 for r in rows if r["model"] == m) for m in models}
    assert all(count == 6 for count in per_model.values())
    print(f"PASS: criterion 10 - sweep wrote 6 training lengths x "
          f"{len(models)} models = {len(rows)} rows, lengths 18..48")
