import math

import pytest

from twolane import scenario
from twolane.bertable import parse_ber_table, synthetic_ber_table
from twolane.scenario import (
    ScenarioError,
    SWEEP_COLUMNS,
    binomial_tail_above,
    classify_aux_technology,
    parse_scenario,
    plan_point,
    read_sweep_csv,
    simulate,
    sweep,
    write_sim_csv,
    write_sweep_csv,
)

from conftest import scenario_text


def flat_table(p_e=0.2, distances=(200, 650, 2000), channel="B", modulation="16PSK"):
    rows = "\n".join(f"{channel},{modulation},{d},{p_e}" for d in distances)
    return parse_ber_table(f"channel_id,modulation,distance_cm,p_e\n{rows}\n")


# -------------------------------------------------------------------- parsing


def test_parse_scenario_full():
    sc = parse_scenario(scenario_text())
    assert sc.k == 30 and sc.s == 8 and sc.code_rate == 0.8
    assert sc.channel == "B" and sc.modulation == "16PSK"
    assert sc.main_rate == 8e11
    assert sc.aux_policy == "fixed" and sc.aux_distance_cm == 150
    assert sc.seed == 7
    assert len(sc.distances_cm()) == 37


def test_parse_scenario_comments_and_blank_lines():
    text = "# heading\n\n" + scenario_text() + "\n# trailing\n"
    sc = parse_scenario(text)
    assert sc.k == 30


def test_parse_scenario_baud_form():
    text = scenario_text().replace(
        "main_rate_bps = 800000000000.0", "baud_rate = 25e9\nbits_per_symbol = 4"
    )
    sc = parse_scenario(text)
    assert sc.main_rate == 1e11


def test_parse_scenario_rejects_both_rate_forms():
    text = scenario_text(extra="baud_rate = 25e9")
    with pytest.raises(ScenarioError, match="not both"):
        parse_scenario(text)


def test_parse_scenario_rejects_missing_rate():
    text = "\n".join(
        ln for ln in scenario_text().splitlines() if not ln.startswith("main_rate_bps")
    )
    with pytest.raises(ScenarioError, match="rate missing"):
        parse_scenario(text)


def test_parse_scenario_rejects_missing_keys():
    with pytest.raises(ScenarioError, match="missing keys"):
        parse_scenario("K = 30\n")


def test_parse_scenario_rejects_unknown_and_duplicate_keys():
    with pytest.raises(ScenarioError, match="unknown key"):
        parse_scenario(scenario_text(extra="bogus = 1"))
    with pytest.raises(ScenarioError, match="duplicate"):
        parse_scenario(scenario_text(extra="K = 31"))


def test_parse_scenario_fixed_policy_needs_distance():
    with pytest.raises(ScenarioError, match="requires d_aux_cm"):
        parse_scenario(scenario_text(aux_policy="fixed", aux_cm=None))


def test_parse_scenario_rejects_bad_grid():
    with pytest.raises(ScenarioError, match="step"):
        parse_scenario(scenario_text(d_step=0))
    with pytest.raises(ScenarioError, match="stop"):
        parse_scenario(scenario_text(d_start=500, d_stop=200))


def test_single_point_grid():
    sc = parse_scenario(scenario_text(d_start=650, d_stop=650))
    assert sc.distances_cm() == [650.0]


# ---------------------------------------------------------------------- sweep


def test_sweep_single_point_matches_plan_chain():
    sc = parse_scenario(scenario_text(d_start=650, d_stop=650))
    rows, errors = sweep(sc, flat_table(p_e=0.2))
    assert not errors
    (row,) = rows
    assert row.p_e == 0.2
    assert row.redundancy == 18
    assert row.total_rate == pytest.approx(0.5, rel=1e-12)
    assert row.overhead == pytest.approx(0.5, rel=1e-12)
    assert row.p_residual_symbol == pytest.approx(0.5821232558667687, rel=1e-12)


def test_sweep_all_below_threshold_needs_no_redundancy():
    sc = parse_scenario(scenario_text(d_start=200, d_stop=2000, d_step=900))
    rows, errors = sweep(sc, flat_table(p_e=0.01, distances=(200, 1100, 2000)))
    assert not errors
    assert all(r.redundancy == 0 for r in rows)
    assert all(r.aux_rate_bps == 0.0 for r in rows)
    assert all(r.t_aux_s == 0.0 for r in rows)


def test_sweep_records_row_errors_and_continues():
    # a 100 m auxiliary lane is infeasible until d_main approaches 100 m
    sc = parse_scenario(
        scenario_text(d_start=200, d_stop=2000, d_step=900, aux_cm=10000)
    )
    rows, errors = sweep(sc, flat_table(p_e=0.2, distances=(200, 1100, 2000)))
    assert len(rows) + len(errors) == 3
    assert errors and all("feasibility bound" in e.message for e in errors)


def test_sweep_rows_are_order_independent():
    sc = parse_scenario(scenario_text())
    table = synthetic_ber_table()
    rows, _ = sweep(sc, table)
    by_distance = {r.d_main_cm: r for r in rows}
    for d in reversed(sc.distances_cm()):
        assert plan_point(sc, table, d) == by_distance[d]


def test_sweep_redundancy_consistent_with_residual_ser():
    sc = parse_scenario(scenario_text())
    rows, _ = sweep(sc, synthetic_ber_table())
    for r in rows:
        assert r.redundancy == max(0, math.ceil(r.p_residual_symbol * 30 - 1e-9))


def test_sweep_equal_distance_policy_rate_ratio():
    sc = parse_scenario(scenario_text(aux_policy="equal_to_main", aux_cm=None))
    rows, errors = sweep(sc, synthetic_ber_table())
    assert not errors
    for r in rows:
        if r.redundancy > 0:
            assert r.aux_rate_bps == pytest.approx(
                8e11 * r.redundancy / 30, rel=1e-12
            )


def test_sweep_csv_round_trip(tmp_path):
    sc = parse_scenario(scenario_text())
    rows, _ = sweep(sc, synthetic_ber_table())
    path = tmp_path / "sweep.csv"
    write_sweep_csv(rows, path)
    text = path.read_text(encoding="utf-8")
    assert text.splitlines()[0] == ",".join(SWEEP_COLUMNS)
    assert "\r" not in text
    assert read_sweep_csv(path) == rows


# ------------------------------------------------------------------- classify


@pytest.mark.parametrize(
    "rate,label",
    [
        (0.0, "none"),
        (1e6, "WLAN-802.11n"),
        (600e6, "WLAN-802.11n"),
        (600e6 + 1, "FSO"),
        (3.2e9, "FSO"),
        (10e9, "FSO"),
        (4.217e10, "fiber"),
        (100e9, "fiber"),
        (1.079e12, "THz"),
    ],
)
def test_classify_aux_technology(rate, label):
    assert classify_aux_technology(rate) == label


def test_classify_rejects_negative():
    with pytest.raises(ValueError):
        classify_aux_technology(-1.0)


# ----------------------------------------------------------------- simulation


def test_binomial_tail_matches_scipy():
    from scipy.stats import binom

    for k, p, r in [(30, 0.2, 3), (30, 0.5822, 18), (10, 0.0, 0), (10, 1.0, 5), (30, 0.3, 30)]:
        assert binomial_tail_above(k, p, r) == pytest.approx(
            float(binom.sf(r, k, p)), abs=1e-12
        )


def test_simulate_lossless_point():
    sc = parse_scenario(scenario_text(d_start=650, d_stop=650))
    rows, errors = simulate(sc, flat_table(p_e=0.0), generations=50)
    assert not errors
    (row,) = rows
    assert row.decode_failure_rate == 0.0
    assert row.observed_erasure_rate == 0.0
    assert row.redundancy == 0
    assert row.analytic_failure_rate == 0.0


def test_simulate_deterministic_csv_bytes(tmp_path):
    sc = parse_scenario(scenario_text(d_start=650, d_stop=750))
    table = flat_table(p_e=0.2, distances=(650, 700, 750))
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    rows1, _ = simulate(sc, table, generations=100, seed=42)
    rows2, _ = simulate(sc, table, generations=100, seed=42)
    write_sim_csv(rows1, out1)
    write_sim_csv(rows2, out2)
    assert out1.read_bytes() == out2.read_bytes()


def test_simulate_failure_rate_near_analytic_tail():
    sc = parse_scenario(scenario_text(d_start=650, d_stop=650, seed=9))
    # p_e chosen so the derived plan lands at a small redundancy with a
    # visible failure tail: residual_ser ~ 0.0664 -> R = 2
    rows, _ = simulate(sc, flat_table(p_e=0.105), generations=3000)
    (row,) = rows
    tail = row.analytic_failure_rate
    sigma = math.sqrt(tail * (1 - tail) / 3000)
    assert row.redundancy == 2
    assert abs(row.decode_failure_rate - tail) <= 3 * sigma + 0.004
