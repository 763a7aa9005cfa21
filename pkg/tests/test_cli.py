import csv
import io
import json

import pytest

from tetranacci.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_seq_basic_window(capsys):
    code, out, _ = run(capsys, "seq", "--zeta", "1", "--eta", "1",
                       "--g", "0,0,0,1", "--lo", "-2", "--hi", "4")
    assert code == 0
    data = json.loads(out)
    assert data["meta"]["command"] == "seq"
    last = data["rows"][-1]
    assert last["j"] == 4
    assert complex(last["recursion"]) == 4.0  # eta^3 + 2 zeta eta + eta at (1,1)


def test_seq_degenerate_point_zero_deviation(capsys):
    code, out, _ = run(capsys, "seq", "--zeta", "-3", "--eta", "2",
                       "--g", "1,0.5,-2,0.25", "--lo", "-8", "--hi", "8")
    assert code == 0
    data = json.loads(out)
    assert all(float(r["deviation"]) <= 1e-8 for r in data["rows"])


def test_seq_empty_range_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["seq", "--zeta", "1", "--eta", "1", "--g", "0,0,0,1",
              "--lo", "4", "--hi", "2"])
    assert exc.value.code == 2


def test_seq_csv_header(capsys):
    code, out, _ = run(capsys, "seq", "--zeta", "1", "--eta", "1",
                       "--g", "0,0,0,1", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["j", "recursion", "closed", "deviation"]


def test_seq_single_mode_columns(capsys):
    code, out, _ = run(capsys, "seq", "--zeta", "1", "--eta", "1",
                       "--g", "0,0,0,1", "--mode", "recursion")
    assert code == 0
    row = json.loads(out)["rows"][0]
    assert "closed" not in row and "deviation" not in row


def test_spectrum_n4_t1_zero(capsys):
    code, out, _ = run(capsys, "spectrum", "--n", "4", "--t1", "0", "--t2", "1")
    assert code == 0
    energies = sorted(float(r["e"]) for r in json.loads(out)["rows"])
    assert energies == pytest.approx([-1, -1, 1, 1], abs=1e-10)


def test_spectrum_sweep_row_count(capsys):
    code, out, _ = run(capsys, "spectrum", "--n", "4", "--t2", "1",
                       "--sweep-eta", "-6:6:11")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert len(rows) == 4 * 11
    assert {"eta", "zeta", "e", "arrow"} <= set(rows[0])


def test_crossings_counts(capsys):
    code, out, _ = run(capsys, "crossings", "--n", "20")
    assert code == 0
    data = json.loads(out)
    assert data["meta"]["count"] == 100 and len(data["rows"]) == 100
    code, out, _ = run(capsys, "crossings", "--n", "21")
    assert json.loads(out)["meta"]["count"] == 110


def test_crossings_csv_count_line(capsys):
    code, out, _ = run(capsys, "crossings", "--n", "4", "--format", "csv")
    assert code == 0
    assert out.rstrip().splitlines()[-1] == "count: 4"


def test_arrow_grid(capsys):
    code, out, _ = run(capsys, "arrow", "--eta-grid", "-6:6:5",
                       "--zeta-grid", "-6:6:5")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert len(rows) == 25
    by_point = {(float(r["eta"]), float(r["zeta"])): r["arrow"] for r in rows}
    assert by_point[(0.0, 0.0)] == "inside"
    assert by_point[(6.0, 0.0)] == "outside"


def test_kitaev_rows(capsys):
    code, out, _ = run(capsys, "kitaev", "--n", "4", "--t", "1",
                       "--delta", "0.5", "--mu-grid", "0:1:3")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert len(rows) == 3 * 8  # 2N energies per mu
    assert {"mu", "e", "zeta", "eta"} <= set(rows[0])


def test_transport_transmission_grid(capsys):
    code, out, _ = run(capsys, "transport", "--n", "5", "--t1", "1",
                       "--t2", "0.8", "--gamma-l", "0.5", "--gamma-r", "0.5",
                       "--e-grid", "-2:2:9")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert len(rows) == 9
    assert all(0.0 <= float(r["transmission"]) <= 1.0 + 1e-9 for r in rows)


def test_transport_current_grid(capsys):
    code, out, _ = run(capsys, "transport", "--n", "4", "--t1", "1",
                       "--t2", "0.8", "--v-grid", "0:1:3")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert float(rows[0]["current"]) == 0.0


def test_transport_requires_one_grid(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["transport", "--n", "4"])
    assert exc.value.code == 2


def test_verify_suites_pass(capsys):
    for suite in ("lemmata", "oracle"):
        code, out, err = run(capsys, "verify", "--suite", suite, "--seed", "1")
        assert code == 0
        assert "FAIL" not in err


def test_verify_deterministic_output(capsys):
    _, out1, _ = run(capsys, "verify", "--suite", "closed-form", "--seed", "7")
    _, out2, _ = run(capsys, "verify", "--suite", "closed-form", "--seed", "7")
    assert out1 == out2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "rows.json"
    code, out, _ = run(capsys, "seq", "--zeta", "1", "--eta", "1",
                       "--g", "0,0,0,1", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["meta"]["command"] == "seq"


def test_numerical_failure_exit_code(capsys):
    # decoupled leads at an exact eigenvalue -> singular boundary system
    code, _, err = run(capsys, "transport", "--n", "4", "--t1", "0",
                       "--t2", "1", "--gamma-l", "0", "--gamma-r", "0",
                       "--e-grid", "-1:-1:1")
    assert code == 4
    assert "numerical failure" in err
