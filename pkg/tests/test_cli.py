"""Command line interface: exit codes, formats, determinism."""

import json

from curvesat.cli import main

EX1_D4 = "y^4 + x*z^3"


def run(capsys, argv):
    rc = main(argv)
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_analyze_poly_text(capsys):
    rc, out, err = run(capsys, ["analyze", "--poly", EX1_D4])
    assert rc == 0
    assert "NEARLY_FREE" in out
    assert err == ""


def test_analyze_json_fields(capsys):
    rc, out, _ = run(capsys, ["analyze", "--poly", "x*y",
                              "--format", "json"])
    assert rc == 0
    data = json.loads(out)
    assert data["schemaVersion"] == 1
    assert data["input"] == {"kind": "poly", "poly": "x*y", "forms": None}
    assert data["classification"]["kind"] == "CONCURRENT_LINES"
    assert data["invariants"]["tau"] == 1
    assert data["betti"]["saturated"] == {"a": [1, 1], "b": [2]}
    assert data["betti"]["jacobian"] is None
    assert data["timing"] is None


def test_analyze_output_is_deterministic(capsys):
    _, first, _ = run(capsys, ["analyze", "--poly", EX1_D4,
                               "--format", "json"])
    _, second, _ = run(capsys, ["analyze", "--poly", EX1_D4,
                                "--format", "json"])
    assert first == second


def test_analyze_kmax_override_echoed(capsys):
    rc, out, _ = run(capsys, ["analyze", "--poly", "x*y",
                              "--kmax", "5", "--format", "json"])
    assert rc == 0
    assert json.loads(out)["kmax"] == 5


def test_analyze_catalog_entry(capsys):
    rc, out, _ = run(capsys, ["analyze", "--catalog", "triangle",
                              "--format", "json"])
    assert rc == 0
    data = json.loads(out)
    assert data["name"] == "triangle"
    assert data["input"]["kind"] == "arrangement"
    assert data["classification"]["kind"] == "FREE"
    assert data["combinatorics"]["tau"] == 3


def test_analyze_arrangement_file(tmp_path, capsys):
    path = tmp_path / "lines.txt"
    path.write_text("# three concurrent lines\nx\ny\nx + y\n")
    rc, out, _ = run(capsys, ["analyze", "--arrangement", str(path),
                              "--format", "json"])
    assert rc == 0
    data = json.loads(out)
    assert data["input"]["forms"] == ["x", "y", "x + y"]
    assert data["classification"]["kind"] == "CONCURRENT_LINES"


def test_parse_error_exit_code(capsys):
    rc, _, err = run(capsys, ["analyze", "--poly", "x + y^2"])
    assert rc == 2
    assert "error:" in err


def test_non_reduced_exit_code(capsys):
    rc, _, err = run(capsys, ["analyze", "--poly", "x^2*y"])
    assert rc == 3
    assert "error:" in err


def test_unknown_catalog_exit_code(capsys):
    rc, _, err = run(capsys, ["analyze", "--catalog", "no-such-entry"])
    assert rc == 4
    assert "error:" in err


def test_missing_arrangement_file_exit_code(tmp_path, capsys):
    rc, _, err = run(capsys, ["analyze",
                              "--arrangement", str(tmp_path / "nope.txt")])
    assert rc == 4
    assert "error:" in err


def test_catalog_list(capsys):
    rc, out, _ = run(capsys, ["catalog", "list"])
    assert rc == 0
    names = [line.split()[0] for line in out.splitlines() if line.strip()]
    assert "ziegler-A" in names
    assert "triangle" in names
    assert "nf-d4-k1" in names


def test_suite_single_property(capsys):
    # one full-catalog pass; JSON and filtering details are covered on
    # the library object in test_suite.py
    rc, out, _ = run(capsys, ["suite", "--random", "0",
                              "--only", "duality"])
    assert rc == 0
    assert "property duality:" in out
    assert "suite: PASS" in out
