from __future__ import annotations

import json

import pytest

from matchforge.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--family", "g", "--n", "3")
    assert code == 0 and json.loads(out) == {"phi": "168"}


@pytest.mark.parametrize("method", ["recurrence", "explicit", "enum"])
def test_count_methods(capsys, method):
    code, out, _ = run(capsys, "count", "--family", "g", "--n", "4", "--method", method)
    assert code == 0 and json.loads(out) == {"phi": "880"}


def test_forcing_poly_enum(capsys):
    code, out, _ = run(capsys, "forcing-poly", "--family", "g", "--n", "1", "--method", "enum")
    assert code == 0
    assert json.loads(out) == {"var": "x", "terms": [[1, "2"], [2, "4"]]}


@pytest.mark.parametrize("method", ["enum", "structural", "recurrence", "explicit", "oracle"])
def test_antiforcing_poly_methods_agree(capsys, method):
    code, out, _ = run(capsys, "antiforcing-poly", "--family", "g", "--n", "1", "--method", method)
    assert code == 0
    assert json.loads(out)["terms"] == [[1, "1"], [2, "3"], [3, "2"]]


def test_csv_output(capsys):
    code, out, _ = run(capsys, "forcing-poly", "--family", "g", "--n", "2", "--out", "csv")
    assert code == 0
    assert out.splitlines() == ["exponent,coefficient", "2,4", "3,12", "4,16"]


def test_h_family(capsys):
    code, out, _ = run(capsys, "forcing-poly", "--family", "h", "--n", "2")
    assert json.loads(out)["terms"] == [[1, "1"], [2, "1"], [3, "8"], [4, "16"]]


def test_limits(capsys):
    code, out, _ = run(capsys, "limits", "--n", "50")
    data = json.loads(out)
    assert code == 0
    assert abs(float(data["ratio_idf"]) - 1.6832816) < 1e-3
    assert abs(float(data["ratio_afsum"]) - 2.1933629) < 1e-3


def test_idf_and_afsum(capsys):
    for method in ("recurrence", "explicit", "enum"):
        _, out, _ = run(capsys, "idf", "--n", "4", "--method", method)
        assert json.loads(out) == {"n": 4, "idf": "5948"}
    _, out, _ = run(capsys, "afsum", "--n", "3", "--method", "enum")
    assert json.loads(out) == {"n": 3, "afsum": "1105"}


def test_spectrum(capsys):
    _, out, _ = run(capsys, "spectrum", "--family", "g", "--n", "3")
    data = json.loads(out)
    assert (data["forcing"]["min"], data["forcing"]["max"]) == (3, 6)
    assert (data["antiforcing"]["min"], data["antiforcing"]["max"]) == (3, 9)


def test_family(capsys):
    _, out, _ = run(capsys, "family", "--family", "h", "--n", "1")
    data = json.loads(out)
    assert (data["vertices"], data["edges"], data["faces"]) == (8, 10, 3)
    assert data["violations"] == []


def test_poly_from_cells(capsys, tmp_path):
    f = tmp_path / "cells.json"
    f.write_text("[[0,0],[0,1]]")
    code, out, _ = run(capsys, "poly", "--cells", str(f))
    data = json.loads(out)
    assert code == 0 and data["phi"] == "3"
    assert data["forcing"]["terms"] == [[1, "3"]]
    ascii_file = tmp_path / "cells.txt"
    ascii_file.write_text("##\n")
    _, out2, _ = run(capsys, "poly", "--cells", str(ascii_file))
    assert json.loads(out2) == data


def test_af_command(capsys, tmp_path, g1, g1_matchings):
    f = tmp_path / "m.json"
    f.write_text(json.dumps(g1_matchings["M_1"].pairs()))
    for method in ("enum", "structural", "oracle"):
        code, out, _ = run(capsys, "af", "--family", "g", "--n", "1", "--matching", str(f), "--method", method)
        assert code == 0 and json.loads(out)["af"] == 3 and json.loads(out)["f"] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["count"],
        ["count", "--family", "g"],
        ["count", "--family", "g", "--n", "2", "--method", "structural"],
        ["antiforcing-poly", "--family", "h", "--n", "2", "--method", "explicit"],
        ["limits", "--n", "0"],
        ["forcing-poly", "--family", "g", "--n", "1", "--threads", "0"],
        ["af", "--family", "g", "--n", "1"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_size_limit_is_reported(capsys):
    code, _, err = run(capsys, "forcing-poly", "--family", "g", "--n", "2", "--method", "oracle", "--oracle-max", "3")
    assert code == 1 and "SizeLimitExceeded" in err


def test_bad_cells_file(capsys, tmp_path):
    f = tmp_path / "bad.json"
    f.write_text("[[0,0],[0,2]]")
    code, _, err = run(capsys, "poly", "--cells", str(f))
    assert code == 1 and "DisconnectedCells" in err


def test_verify_command(capsys):
    code, out, _ = run(capsys, "verify", "--n", "2", "--oracle-n", "1")
    data = json.loads(out)
    assert code == 0 and data["status"] == "pass" and data["failed"] == 0


def test_verify_failure_exit_code(capsys, monkeypatch):
    import matchforge.cli as cli
    from matchforge.verify import verify_all

    monkeypatch.setattr(cli, "verify_all", lambda n, o: verify_all(n, o, overrides={"phi_closed": lambda n: 0}))
    code, out, err = run(capsys, "verify", "--n", "1", "--oracle-n", "0")
    assert code == 3 and "phi recurrence vs closed form" in err


def test_cache_round_trip(capsys, tmp_path, monkeypatch):
    path = tmp_path / "cache.json"
    monkeypatch.setenv("MATCHFORGE_CACHE", str(path))
    first = run(capsys, "antiforcing-poly", "--family", "g", "--n", "2", "--method", "enum")
    assert path.exists()
    second = run(capsys, "antiforcing-poly", "--family", "g", "--n", "2", "--method", "enum", "--self-test")
    assert first == second


def test_threads_flag_deterministic(capsys):
    a = run(capsys, "forcing-poly", "--family", "g", "--n", "3", "--method", "enum")
    b = run(capsys, "forcing-poly", "--family", "g", "--n", "3", "--method", "enum", "--threads", "2")
    assert a == b
