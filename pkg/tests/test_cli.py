import json
import subprocess
import sys

import numpy as np
import pytest

from solvpot.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return [line.split(",") for line in text.splitlines() if line and not line.startswith("#")]


def test_spectrum_scarf1_count(capsys):
    code, out, _ = run(capsys, "spectrum", "--family", "scarf1", "--A", "3", "--B", "1", "--count", "3")
    assert code == 0
    assert [float(r[2]) for r in rows(out)] == [9.0, 16.0, 25.0]


def test_spectrum_scarf2_swapped(capsys):
    code, out, _ = run(capsys, "spectrum", "--family", "scarf2", "--A", "4", "--B", "2.7",
                       "--branch", "swapped")
    assert code == 0
    assert [float(r[2]) for r in rows(out)] == pytest.approx([-4.84, -1.44, -0.04], abs=1e-12)


def test_spectrum_gpt_both_numeric(capsys):
    code, out, _ = run(capsys, "spectrum", "--family", "gpt", "--A", "2", "--B", "5",
                       "--branch", "both", "--numeric")
    assert code == 0
    data = rows(out)
    assert len(data) == 7
    for r in data:
        assert float(r[4]) <= 1e-3 * abs(float(r[2])), r


def test_csv_header_and_precision(capsys):
    code, out, _ = run(capsys, "eval", "--family", "gpt", "--A", "2", "--B", "5",
                       "--x-min", "0.5", "--x-max", "1", "--n-points", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("#")
    assert any(line.startswith("# columns: x,re,im") for line in lines)
    first = rows(out)[0]
    assert first[0] == "0.5"
    value = float(first[1])
    assert "%.17g" % value == first[1]


def test_json_single_object(capsys):
    code, out, _ = run(capsys, "poles", "--family", "gpt", "--A", "2", "--B", "5", "--branch", "both",
                       "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) >= {"spec", "results", "checks"}
    kappas = [r["kappa"] for r in doc["results"]]
    assert kappas == pytest.approx([4.5, 3.5, 2.5, 2, 1.5, 1, 0.5], abs=1e-8)


def test_potential_dump_tail(capsys):
    code, out, _ = run(capsys, "eval", "--family", "gpt", "--A", "2", "--B", "5",
                       "--x-min", "0.1", "--x-max", "10", "--n-points", "512")
    assert code == 0
    v = np.array([float(r[1]) for r in rows(out)])
    tail = v[v.argmin():]
    assert np.all(tail < 0) and np.all(np.diff(tail) > 0)
    assert abs(tail[-1]) < 1e-2 * abs(tail[0])


def test_wavefunction_ground_nodeless(capsys):
    code, out, _ = run(capsys, "eval", "--family", "gpt", "--A", "2", "--B", "5",
                       "--what", "wavefunction", "--n", "0", "--x-min", "0.01", "--x-max", "10")
    assert code == 0
    psi = np.array([float(r[1]) for r in rows(out)])
    assert np.all(psi > 0) or np.all(psi < 0)


def test_scatter_swap_compare(capsys):
    code, out, _ = run(capsys, "scatter", "--family", "scarf2", "--swap-compare", "--format", "json")
    assert code == 0
    check = [c for c in json.loads(out)["checks"] if c["name"] == "t swap invariance"][0]
    assert check["quantity"] <= 1e-12 and check["pass"]


def test_algebra_verb(capsys):
    code, out, _ = run(capsys, "algebra", "--family", "scarf1", "--A", "3", "--B", "1", "--m", "1",
                       "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert all(c["pass"] for c in doc["checks"])
    assert [r["E"] for r in doc["results"]][:3] == [9, 16, 25]


def test_singular_exit_1(capsys):
    code, _, err = run(capsys, "eval", "--family", "gpt", "--A", "2", "--B", "5", "--m", "1",
                       "--branch", "swapped")
    assert code == 1
    assert "singular" in err


@pytest.mark.parametrize("argv", [
    ["spectrum", "--family", "gpt", "--A", "2"],
    ["spectrum", "--family", "gpt", "--A", "-1", "--B", "5"],
    ["verify", "--tol", "nope=1"],
    ["verify", "--tol", "swap"],
    ["poles", "--family", "scarf1", "--A", "3", "--B", "1"],
])
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_argparse_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["spectrum", "--family", "nope"])
    assert exc.value.code == 2


def test_empty_poles_warning(capsys):
    code, out, _ = run(capsys, "poles", "--family", "gpt", "--A", "2", "--B", "5",
                       "--kappa-min", "5", "--kappa-max", "6")
    assert code == 0
    assert "warning" in out and rows(out) == []


def test_verify_swap_and_algebra(capsys):
    for suite in ("swap", "algebra"):
        code, out, _ = run(capsys, "verify", "--suite", suite, "--format", "json")
        doc = json.loads(out)
        assert code == 0 and doc["checks"] and all(c["pass"] for c in doc["checks"])
        assert all(c["provenance"] for c in doc["checks"])


def test_verify_numeric_union_records(capsys):
    _, out, _ = run(capsys, "verify", "--suite", "numeric", "--format", "json")
    union = [c for c in json.loads(out)["checks"] if c["name"].startswith("union spectrum")]
    assert union
    for c in union:
        assert c["pass"], c


def test_tolerance_override_precedence(capsys, monkeypatch):
    monkeypatch.setenv("SOLVPOT_TOL_SWAP", "0.5")
    _, out, _ = run(capsys, "verify", "--suite", "swap", "--format", "json")
    assert json.loads(out)["spec"]["tolerances"]["swap"] == 0.5
    _, out, _ = run(capsys, "verify", "--suite", "swap", "--format", "json", "--tol", "swap=1e-3")
    assert json.loads(out)["spec"]["tolerances"]["swap"] == 1e-3


def test_deterministic_output(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (a, b):
        assert main(["scatter", "--family", "gpt", "--A", "2", "--B", "5", "--out", str(path),
                     "--seed", "3"]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "solvpot", "spectrum", "--family", "gpt",
                          "--A", "2", "--B", "5"], capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert [float(r[2]) for r in rows(res.stdout)] == [-4.0, -1.0]
