import csv
import io
import json
import math
import subprocess
import sys

import pytest

from corona_spectra.cli import main
from corona_spectra.graph import cycle, parse_edge_list, parse_graph6, to_graph6


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_counts(capsys):
    assert run_json(capsys, "counts", "cycle:4", "cycle:3") == (0, {"vertices": 16, "edges": 52})


def test_product_edge_list(capsys):
    code, out = run(capsys, "product", "complete:2", "complete:1")
    g = parse_edge_list(out)
    assert code == 0 and (g.order, g.size) == (4, 5)


def test_product_to_file(tmp_path, capsys):
    target = tmp_path / "p.g6"
    code, out = run(capsys, "product", "complete:1", "complete:3", "--format", "g6", "--out", str(target))
    assert code == 0 and out == ""
    assert parse_graph6(target.read_text().strip()).size == 6


def test_product_dot(capsys):
    _, out = run(capsys, "product", "complete:1", "complete:1", "--format", "dot")
    assert "0 -- 1;" in out


@pytest.mark.parametrize("method", ["formula", "direct"])
def test_spectrum_laplacian(capsys, method):
    code, vals = run_json(capsys, "spectrum", "--kind", "laplacian", "--method", method, "complete:2", "complete:1")
    assert code == 0
    assert vals == pytest.approx([0.0, 2.0, 4.0, 4.0], abs=1e-10)


def test_spectrum_adjacency(capsys):
    _, vals = run_json(capsys, "spectrum", "complete:2", "complete:1")
    s = math.sqrt(17)
    assert vals == pytest.approx([(1 - s) / 2, -1, 0, (1 + s) / 2], abs=1e-10)


def test_coronal(capsys):
    _, out = run_json(capsys, "coronal", "path:3")
    assert out["numerator"]["coefficients"] == [4, 3]
    assert out["denominator"]["text"] == "x^2 - 2"
    assert out["d"] == 2


def test_charpoly(capsys):
    _, out = run_json(capsys, "charpoly", "star:4")
    assert out["charpoly"]["text"] == "x^5 - 4x^3"


def test_kirchhoff_both_paths(capsys):
    _, out = run_json(capsys, "kirchhoff", "complete:1", "complete:3")
    assert out["formula"] == pytest.approx(3.0, abs=1e-10)
    assert out["direct"] == pytest.approx(3.0, abs=1e-10)
    _, only = run_json(capsys, "kirchhoff", "--method", "direct", "complete:2", "complete:1")
    assert list(only) == ["direct"]


def test_spanning_trees(capsys):
    assert run_json(capsys, "spanning-trees", "complete:1", "complete:3") == (0, {"formula": 16, "direct": 16})


def test_energy_and_cospectral(capsys):
    _, e = run_json(capsys, "energy", "complete:4")
    assert e["energy"] == 6.0
    _, c = run_json(capsys, "cospectral", "star:4", "cycle:4+complete:1")
    assert c == {"cospectral": True}
    _, c = run_json(capsys, "cospectral", "--kind", "laplacian", "star:4", "cycle:4+complete:1")
    assert c == {"cospectral": False}


def test_integral(capsys):
    _, out = run_json(capsys, "integral", "complete:4")
    assert out == {"integral": True, "integer_eigenvalues": [-1, -1, -1, 3]}


def test_equienergetic_pair(capsys):
    code, out = run_json(capsys, "equienergetic-pair", "complete:2", "cycle:6", "cycle:3+cycle:3")
    assert code == 0
    assert out["energy_a"] == pytest.approx(out["energy_b"], rel=1e-8)
    assert out["charpoly_a"] != out["charpoly_b"]


def test_csv_output(capsys):
    _, out = run(capsys, "counts", "cycle:4", "cycle:3", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows == [["vertices", "edges"], ["16", "52"]]
    _, out = run(capsys, "spectrum", "--format", "csv", "complete:1", "complete:1")
    assert out.splitlines()[0] == "value" and len(out.splitlines()) == 3


def test_graph6_file_input(tmp_path, capsys):
    path = tmp_path / "c5.g6"
    path.write_text(to_graph6(cycle(5)) + "\n")
    assert run_json(capsys, "counts", str(path), "complete:1")[1] == {"vertices": 10, "edges": 20}


def test_computation_error_exit_1(capsys):
    code, out = run_json(capsys, "kirchhoff", "path:3", "complete:1")
    assert code == 1 and out["error"] == "NotRegular"


@pytest.mark.parametrize("argv", [
    ["counts", "nosuchfamily:3", "complete:1"],
    ["counts", "missing.g6", "complete:1"],
    ["spectrum", "--kind", "weird", "complete:1", "complete:1"],
    ["verify", "--n1-max", "0"],
    [],
])
def test_usage_error_exit_2(argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


def test_verify_small(capsys):
    code = main(["verify", "--seed", "3", "--pairs", "5"])
    captured = capsys.readouterr()
    report = json.loads(captured.out)
    assert code == 0 and report["fail_count"] == 0 and report["seed"] == 3
    assert "passed" in captured.err


def test_verify_csv(capsys):
    main(["verify", "--pairs", "3", "--format", "csv"])
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    assert rows and {"pair", "check", "passed"} <= set(rows[0])


def test_env_tolerance_makes_suite_fail(monkeypatch, capsys):
    monkeypatch.setenv("CORONA_SPECTRA_TOL", "-1")
    code = main(["verify", "--pairs", "2"])
    report = json.loads(capsys.readouterr().out)
    assert code == 1 and report["fail_count"] > 0
    assert all(e["tolerance"] == -1.0 for e in report["entries"] if e["check"].startswith("spectrum"))


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "corona_spectra", "counts", "complete:2", "complete:1"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout) == {"vertices": 4, "edges": 5}
