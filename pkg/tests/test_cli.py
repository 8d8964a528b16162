import pytest

from twolane import cli
from twolane.bertable import save_ber_table, synthetic_ber_table
from twolane.scenario import SIM_COLUMNS, SWEEP_COLUMNS, read_sweep_csv

from conftest import scenario_text


@pytest.fixture
def workdir(tmp_path):
    save_ber_table(synthetic_ber_table(), tmp_path / "ber.csv")
    (tmp_path / "scn.scn").write_text(
        scenario_text(extra="ber_table = ber.csv"), encoding="utf-8"
    )
    return tmp_path


def test_classify_prints_label(capsys):
    assert cli.main(["classify", "3.2e9"]) == 0
    assert capsys.readouterr().out.strip() == "FSO"


def test_classify_zero(capsys):
    assert cli.main(["classify", "0"]) == 0
    assert capsys.readouterr().out.strip() == "none"


def test_classify_negative_is_validation_error(capsys):
    assert cli.main(["classify", "--", "-5"]) == 1
    assert "error" in capsys.readouterr().err


def test_plan_single_row_to_stdout(workdir, capsys):
    rc = cli.main(["plan", "--scenario", str(workdir / "scn.scn"), "--d-main-cm", "650"])
    assert rc == 0
    captured = capsys.readouterr()
    lines = captured.out.strip().splitlines()
    assert lines[0] == ",".join(SWEEP_COLUMNS)
    assert len(lines) == 2
    assert lines[1].startswith("650.0,")
    assert "aux technology:" in captured.err


def test_plan_defaults_to_sweep_start(workdir, capsys):
    rc = cli.main(["plan", "--scenario", str(workdir / "scn.scn")])
    assert rc == 0
    assert capsys.readouterr().out.splitlines()[1].startswith("200.0,")


def test_plan_infeasible_point_is_exit_2(workdir, tmp_path, capsys):
    (tmp_path / "bad.scn").write_text(
        scenario_text(aux_cm=10000, extra="ber_table = ber.csv"), encoding="utf-8"
    )
    rc = cli.main(["plan", "--scenario", str(tmp_path / "bad.scn"), "--d-main-cm", "200"])
    assert rc == 2
    assert "feasibility bound" in capsys.readouterr().err


def test_sweep_writes_csv(workdir, capsys):
    out = workdir / "out.csv"
    rc = cli.main(["sweep", "--scenario", str(workdir / "scn.scn"), "--out", str(out)])
    assert rc == 0
    rows = read_sweep_csv(out)
    assert len(rows) == 37
    assert "wrote 37 rows" in capsys.readouterr().out


def test_sweep_uses_builtin_table(tmp_path, capsys):
    (tmp_path / "scn.scn").write_text(
        scenario_text(extra="ber_table = builtin"), encoding="utf-8"
    )
    out = tmp_path / "out.csv"
    rc = cli.main(["sweep", "--scenario", str(tmp_path / "scn.scn"), "--out", str(out)])
    assert rc == 0
    assert len(read_sweep_csv(out)) == 37


def test_sweep_all_points_infeasible_is_exit_2(workdir, tmp_path, capsys):
    (tmp_path / "bad.scn").write_text(
        scenario_text(aux_cm=1e6, extra=f"ber_table = {workdir / 'ber.csv'}"),
        encoding="utf-8",
    )
    rc = cli.main(["sweep", "--scenario", str(tmp_path / "bad.scn")])
    assert rc == 2
    assert "every sweep point is infeasible" in capsys.readouterr().err


def test_sweep_missing_table_point_is_validation_error(workdir, capsys):
    (workdir / "offgrid.scn").write_text(
        scenario_text(d_start=225, d_stop=225, extra="ber_table = ber.csv"),
        encoding="utf-8",
    )
    rc = cli.main(["sweep", "--scenario", str(workdir / "offgrid.scn")])
    assert rc == 1
    assert "no table point" in capsys.readouterr().err


def test_sweep_interpolate_flag_allows_offgrid(workdir, capsys):
    (workdir / "offgrid.scn").write_text(
        scenario_text(d_start=225, d_stop=225, extra="ber_table = ber.csv"),
        encoding="utf-8",
    )
    rc = cli.main(
        ["sweep", "--scenario", str(workdir / "offgrid.scn"), "--interpolate"]
    )
    assert rc == 0
    assert capsys.readouterr().out.splitlines()[1].startswith("225.0,")


def test_simulate_writes_csv(workdir):
    out = workdir / "sim.csv"
    rc = cli.main(
        [
            "simulate",
            "--scenario",
            str(workdir / "scn.scn"),
            "--out",
            str(out),
            "--generations",
            "20",
            "--seed",
            "5",
        ]
    )
    assert rc == 0
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0] == ",".join(SIM_COLUMNS)
    assert len(lines) == 38


def test_simulate_bit_level_mode(workdir, capsys):
    (workdir / "one.scn").write_text(
        scenario_text(d_start=650, d_stop=650, extra="ber_table = ber.csv"),
        encoding="utf-8",
    )
    rc = cli.main(
        [
            "simulate",
            "--scenario",
            str(workdir / "one.scn"),
            "--generations",
            "20",
            "--mode",
            "bit-level",
        ]
    )
    assert rc == 0
    assert len(capsys.readouterr().out.splitlines()) == 2


def test_missing_scenario_file_is_validation_error(capsys):
    assert cli.main(["sweep", "--scenario", "/nonexistent/path.scn"]) == 1
    assert "error" in capsys.readouterr().err


def test_bad_ber_table_is_validation_error(workdir, capsys):
    (workdir / "bad.csv").write_text("garbage\n", encoding="utf-8")
    rc = cli.main(
        [
            "sweep",
            "--scenario",
            str(workdir / "scn.scn"),
            "--ber-table",
            str(workdir / "bad.csv"),
        ]
    )
    assert rc == 1
    assert "header" in capsys.readouterr().err
