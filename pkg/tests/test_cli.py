import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from frieze import load_frieze
from frieze_cli import run
from tests.conftest import OCTAGON_ARRAY

ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture
def octagon_file(tmp_path, octagon_spec_path, capsys):
    """The glued octagon as a frieze file."""
    path = tmp_path / "octagon_frieze.json"
    assert run(["glue", "--in", str(octagon_spec_path), "--out", str(path)]) == 0
    capsys.readouterr()
    return path


def lines(capsys):
    return capsys.readouterr().out.splitlines()


def test_glue_writes_frieze_file(tmp_path, octagon_spec_path, octagon, capsys):
    path = tmp_path / "out.json"
    assert run(["glue", "--in", str(octagon_spec_path), "--out", str(path)]) == 0
    assert "✅ Frieze saved to:" in capsys.readouterr().out
    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["dissection"] == [[1, 4], [5, 8]]
    assert data["values"]["2,6"] == "4"
    assert data["values"]["1,6"] == "2"
    assert load_frieze(str(path)) == octagon


def test_glue_to_stdout(octagon_spec_path, capsys):
    assert run(["glue", "--in", str(octagon_spec_path)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data["values"]) == 28


def test_glue_rejects_frieze_files(octagon_file, capsys):
    assert run(["glue", "--in", str(octagon_file)]) == 2
    assert "❌ Error" in capsys.readouterr().err


def test_det(octagon_spec_path, octagon_file, capsys):
    assert run(["det", "--in", str(octagon_spec_path)]) == 0
    assert lines(capsys) == ["-27"]
    assert run(["det", "--in", str(octagon_file), "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["det"] == "-27"


def test_det_factor(octagon_file, capsys):
    assert run(["det", "--in", str(octagon_file), "--factor", "d=1,4"]) == 0
    out = lines(capsys)
    assert out[0] == "-27"
    assert out[-1] == "PASS"
    assert any(line.startswith("det(M_P) = -3") for line in out)
    assert any(line.startswith("det(M_Q) = -9") for line in out)


def test_det_factor_on_boundary_edge(octagon_file, capsys):
    assert run(["det", "--in", str(octagon_file), "--factor", "1,2"]) == 2
    assert "❌ Error" in capsys.readouterr().err


def test_render(octagon_file, capsys):
    assert run(["render", "--in", str(octagon_file), "--rows", "1..8"]) == 0
    assert capsys.readouterr().out == OCTAGON_ARRAY + "\n"
    assert run(["render", "--in", str(octagon_file)]) == 0
    assert capsys.readouterr().out == OCTAGON_ARRAY + "\n"
    assert run(["render", "--in", str(octagon_file), "--rows", "1-8"]) == 2


def test_matrix(octagon_file, capsys):
    assert run(["matrix", "--in", str(octagon_file)]) == 0
    out = lines(capsys)
    assert len(out) == 8
    assert out[0] == "0 1 1 1 1 2 2 1"


def test_check_exit_codes(octagon_file, capsys):
    assert run(["check", "--in", str(octagon_file), "--weak"]) == 0
    assert "✅ weak_frieze" in capsys.readouterr().out
    assert run(["check", "--in", str(octagon_file)]) == 0
    capsys.readouterr()
    assert run(["check", "--in", str(octagon_file), "--full"]) == 1
    assert "❌ frieze" in capsys.readouterr().out


def test_check_json_and_csv(octagon_file, capsys):
    assert run(["check", "--in", str(octagon_file), "--full", "--json"]) == 1
    report = json.loads(capsys.readouterr().out)
    assert report["passed"] is False
    check = report["checks"][0]
    assert check["check_name"] == "frieze"
    assert check["checked"] == 70
    assert [1, 2, 3, 4] in [v["location"] for v in check["violations"]]

    assert run(["check", "--in", str(octagon_file), "--full", "--output", "csv"]) == 1
    rows = capsys.readouterr().out.splitlines()
    assert rows[0] == "Check Name,Status,Location,LHS,RHS,Message"
    assert len(rows) == 1 + len(check["violations"])


def test_check_perturbed_frieze(octagon_file, tmp_path, capsys):
    data = json.loads(octagon_file.read_text(encoding="utf-8"))
    data["values"]["2,6"] = "5"
    broken = tmp_path / "broken.json"
    broken.write_text(json.dumps(data), encoding="utf-8")
    assert run(["check", "--in", str(broken), "--json"]) == 1
    violations = json.loads(capsys.readouterr().out)["checks"][0]["violations"]
    assert sorted(v["location"] for v in violations) == [[1, 2, 4, 6], [2, 5, 6, 8]]


def test_check_diamond_rule(tmp_path, capsys):
    square = {
        "n": 4,
        "dissection": [[1, 3]],
        "values": {"1,2": "1", "1,3": "1", "1,4": "1", "2,3": "1", "2,4": "2", "3,4": "1"},
    }
    path = tmp_path / "square.json"
    path.write_text(json.dumps(square), encoding="utf-8")
    assert run(["check", "--in", str(path), "--diamond"]) == 0
    assert run(["check", "--in", str(path), "--overlap"]) == 0
    square["values"]["2,4"] = "3"
    path.write_text(json.dumps(square), encoding="utf-8")
    assert run(["check", "--in", str(path), "--diamond", "--json"]) == 1


def test_stdin_input(octagon_spec_path, monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO(octagon_spec_path.read_text(encoding="utf-8")))
    assert run(["det", "--in", "-"]) == 0
    assert lines(capsys) == ["-27"]


def test_symbolic_input(tmp_path, capsys):
    spec = {
        "n": 4,
        "scalar_mode": "symbolic",
        "variables": ["a", "b", "c", "d", "e"],
        "dissection": [[1, 3]],
        "pieces": [
            {"vertices": [1, 2, 3], "values": {"1,2": "a", "2,3": "b", "1,3": "c"}},
            {"vertices": [1, 3, 4], "values": {"1,3": "c", "3,4": "d", "1,4": "e"}},
        ],
    }
    path = tmp_path / "symbolic.json"
    path.write_text(json.dumps(spec), encoding="utf-8")
    assert run(["glue", "--in", str(path)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["scalar_mode"] == "symbolic"
    assert data["values"]["2,4"] == "(a*d + b*e)/(c)"
    assert run(["check", "--in", str(path), "--full"]) == 0


@pytest.mark.parametrize("content, message", [
    ("not json", "not valid JSON"),
    ('{"n": 6, "dissection": [[1, 4], [2, 5]], "default": "1"}', "cross"),
    ('{"n": 4, "dissection": [[1, 2]], "default": "1"}', "boundary"),
    ('{"n": 4, "values": {"1,2": "1/0"}, "default": "1"}', ""),
    ('{"n": 4}', "no value"),
])
def test_bad_input(tmp_path, capsys, content, message):
    path = tmp_path / "bad.json"
    path.write_text(content, encoding="utf-8")
    assert run(["det", "--in", str(path)]) == 2
    err = capsys.readouterr().err
    assert "❌ Error" in err
    assert message in err


def test_missing_file_and_usage_errors(tmp_path, capsys):
    assert run(["det", "--in", str(tmp_path / "missing.json")]) == 2
    assert "❌ Error" in capsys.readouterr().err
    assert run(["det"]) == 2
    assert run(["frobnicate"]) == 2


def test_gallery_bhj(capsys):
    assert run(["gallery", "bhj", "--n", "8", "--cells", "4,4,4"]) == 0
    out = lines(capsys)
    assert "det(M_f) = -27" in out
    assert out[-1] == "PASS"
    assert run(["gallery", "bhj", "--n", "6", "--all"]) == 0
    assert lines(capsys)[-1] == "PASS"
    assert run(["gallery", "bhj", "--n", "8", "--cells", "4,4"]) == 2
    assert run(["gallery", "bhj", "--n", "8"]) == 2


def test_gallery_cc_and_bm(capsys):
    assert run(["gallery", "cc", "--n", "6"]) == 0
    assert lines(capsys)[0].startswith("14 triangulations of the 6-gon")
    assert run(["gallery", "bm", "--n", "5"]) == 0
    assert lines(capsys)[-1] == "PASS"
    assert run(["gallery", "bm", "--n", "5", "--triangulation", "1,3 3,5", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["passed"] is True
    assert run(["gallery", "bm", "--n", "5", "--triangulation", "1,3"]) == 2


def test_gallery_maldonado_and_random(capsys):
    assert run(["gallery", "maldonado", "--n", "6", "--seed", "3"]) == 0
    assert lines(capsys)[-1] == "PASS"
    assert run(["gallery", "random", "--n", "9", "--seed", "4", "--json"]) == 0
    first = json.loads(capsys.readouterr().out)
    assert first["passed"] is True
    assert first["attempts"] >= 1
    assert run(["gallery", "random", "--n", "9", "--seed", "4", "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == first


def test_gallery_random_accepts_negative_seed(capsys):
    assert run(["gallery", "random", "--n", "6", "--seed", "-1", "--json"]) == 0
    first = json.loads(capsys.readouterr().out)
    assert first["passed"] is True
    assert run(["gallery", "random", "--n", "6", "--seed", "-1", "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == first
    assert run(["gallery", "maldonado", "--n", "6", "--seed", "-7"]) == 0
    assert lines(capsys)[0].endswith("seed = -7")


def test_gallery_seed_defaults_to_setting(monkeypatch, capsys):
    monkeypatch.setenv("FRIEZE_DEFAULT_SEED", "4")
    assert run(["gallery", "random", "--n", "9", "--json"]) == 0
    implicit = json.loads(capsys.readouterr().out)
    assert run(["gallery", "random", "--n", "9", "--seed", "4", "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == implicit
    assert run(["gallery", "maldonado", "--n", "5"]) == 0
    assert lines(capsys)[0].endswith("seed = 4")


def test_entry_point_smoke():
    result = subprocess.run(
        [sys.executable, str(ROOT / "frieze_cli.py"), "gallery", "bhj", "--n", "8", "--cells", "4,4,4"],
        capture_output=True,
        text=True,
        cwd=ROOT,
    )
    assert result.returncode == 0
    assert result.stdout.splitlines()[-1] == "PASS"
