"""Command-line contract: exit codes, formats, reproducibility."""

import json

import pytest

from omd.cli import main
from omd.formats import loads_design
from omd.room import _cached_room
from omd.verify import verify


def test_generate_json_to_stdout(capsys):
    assert main(["generate", "--n", "12", "--k", "2"]) == 0
    out, err = capsys.readouterr()
    data = json.loads(out)
    assert data["side"] == 11
    assert data["meta"]["provenance"] == "hex-split"
    assert "built (12, 2)" in err


def test_generate_design_actually_verifies(capsys):
    assert main(["generate", "--n", "16", "--k", "2"]) == 0
    out, _ = capsys.readouterr()
    arr = loads_design(out)
    assert verify(arr).passed


def test_generate_writes_file_and_notes_stdout(tmp_path, capsys):
    path = tmp_path / "design.json"
    assert main(["generate", "--n", "8", "--k", "2", "--out", str(path)]) == 0
    out, err = capsys.readouterr()
    assert "built (8, 2)" in out
    assert err == ""
    assert json.loads(path.read_text())["n"] == 8


@pytest.mark.parametrize("n,k", [(6, 1), (10, 2)])
def test_generate_nonexistent_exits_two(n, k, capsys):
    assert main(["generate", "--n", str(n), "--k", str(k)]) == 2
    _, err = capsys.readouterr()
    assert "nonexistent" in err


def test_generate_grid_format(capsys):
    assert main(["generate", "--n", "8", "--k", "1", "--format", "grid"]) == 0
    out, _ = capsys.readouterr()
    lines = out.splitlines()
    assert len(lines) == 7
    assert all(line.count("|") == 6 for line in lines)


def test_generate_latex_format(capsys):
    assert main(["generate", "--n", "4", "--k", "2", "--format", "latex"]) == 0
    out, _ = capsys.readouterr()
    assert out.startswith("\\begin{array}")


def test_generate_latex_refuses_large(capsys):
    assert main(["generate", "--n", "32", "--k", "2", "--format", "latex"]) == 4
    _, err = capsys.readouterr()
    assert "cannot render" in err


def test_round_trip_verify_passes(tmp_path, capsys):
    path = tmp_path / "d.json"
    assert main(["generate", "--n", "16", "--k", "2", "--out", str(path)]) == 0
    capsys.readouterr()
    assert main(["verify", str(path)]) == 0
    out, _ = capsys.readouterr()
    assert "verdict: valid" in out
    assert "[PASS] pair-coverage" in out
    assert "[PASS] transversal exact-point-coverage" in out


def test_verify_corrupted_design_exits_one(tmp_path, capsys):
    path = tmp_path / "d.json"
    main(["generate", "--n", "12", "--k", "2", "--out", str(path)])
    data = json.loads(path.read_text())
    del data["cells"][0]
    path.write_text(json.dumps(data))
    capsys.readouterr()
    assert main(["verify", str(path)]) == 1
    out, _ = capsys.readouterr()
    assert "verdict: INVALID" in out
    assert "[FAIL]" in out


def test_verify_bad_meta_transversal_exits_one(tmp_path, capsys):
    path = tmp_path / "d.json"
    main(["generate", "--n", "4", "--k", "2", "--out", str(path)])
    data = json.loads(path.read_text())
    data["meta"]["transversal"] = [[0, 0], [1, 1], [2, 2]]
    path.write_text(json.dumps(data))
    capsys.readouterr()
    assert main(["verify", str(path)]) == 1
    out, _ = capsys.readouterr()
    assert "[FAIL] transversal exact-point-coverage" in out


def test_verify_malformed_json_exits_four(tmp_path, capsys):
    path = tmp_path / "junk.json"
    path.write_text("{{{")
    assert main(["verify", str(path)]) == 4
    _, err = capsys.readouterr()
    assert "parse error" in err


def test_verify_missing_file_exits_four(tmp_path):
    assert main(["verify", str(tmp_path / "absent.json")]) == 4


def test_verify_malformed_meta_cells_exits_four(tmp_path, capsys):
    path = tmp_path / "d.json"
    main(["generate", "--n", "4", "--k", "2", "--out", str(path)])
    data = json.loads(path.read_text())
    data["meta"]["transversal"] = [[0]]
    path.write_text(json.dumps(data))
    capsys.readouterr()
    assert main(["verify", str(path)]) == 4


def test_bad_flags_exit_four(capsys):
    assert main(["generate", "--n", "abc", "--k", "1"]) == 4
    assert main([]) == 4
    capsys.readouterr()


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    capsys.readouterr()


@pytest.mark.parametrize("n,k", [(16, 2), (10, 1)])
def test_generate_is_byte_identical(n, k, tmp_path, capsys):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for path in paths:
        _cached_room.cache_clear()
        args = ["generate", "--n", str(n), "--k", str(k), "--seed", "3"]
        assert main(args + ["--out", str(path)]) == 0
    capsys.readouterr()
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_sweep_single_row(capsys):
    assert main(["sweep", "--n-max", "2", "--k-max", "1"]) == 0
    out, _ = capsys.readouterr()
    lines = out.splitlines()
    assert lines[0].split() == ["n", "k", "path", "side", "blocks", "status"]
    assert lines[1].split() == ["2", "1", "room", "1", "1", "verified"]


def test_sweep_small_range(capsys):
    assert main(["sweep", "--n-max", "24", "--k-max", "3"]) == 0
    out, _ = capsys.readouterr()
    rows = [line.split() for line in out.splitlines()[1:]]
    assert len(rows) == 22
    by_params = {(int(r[0]), int(r[1])): r for r in rows}
    assert by_params[(4, 1)][-1] == "nonexistent"
    assert by_params[(6, 1)][-1] == "nonexistent"
    others = [r for r in rows if (int(r[0]), int(r[1])) not in {(4, 1), (6, 1)}]
    assert all(r[-1] == "verified" for r in others)
    paths = {r[2] for r in others}
    assert {"room", "diagonal", "quad-split", "hex-split"} <= paths
    assert any(p.startswith("product(") for p in paths)


def test_sweep_writes_table_file(tmp_path, capsys):
    path = tmp_path / "table.txt"
    assert main(["sweep", "--n-max", "8", "--k-max", "2", "--out", str(path)]) == 0
    capsys.readouterr()
    assert "verified" in path.read_text()
