import json

import pytest

from conftest import FIXTURE_NAMES, FIXTURES
from fatcone.cli import main


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, data, name="z.json"):
    p = tmp_path / name
    p.write_text(json.dumps(data) if not isinstance(data, str) else data)
    return p


DOUBLE = {"ambient_dim": 2, "field": "q", "points": [{"coords": ["0", "0", "1"], "mult": 2}]}


def test_resolve_double_point(tmp_path, capsys):
    code, out, _ = run(capsys, "resolve", write(tmp_path, DOUBLE))
    assert code == 0
    lines = out.splitlines()
    assert lines[:3] == ["     0  1", "2:   3  .", "3:   .  2"]
    assert "poincare: 3*T^2 + 2*X*T^3" in lines
    assert "minimal: yes" in lines


def test_resolve_verify(tmp_path, capsys):
    code, out, _ = run(capsys, "resolve", write(tmp_path, DOUBLE), "--verify", "--bound", "6")
    assert code == 0
    assert "exactness: ok (degrees <= 6)" in out and "complex: ok" in out


def test_empty_scheme(tmp_path, capsys):
    path = write(tmp_path, {"ambient_dim": 2, "points": []})
    code, out, _ = run(capsys, "resolve", path)
    assert code == 0
    assert out.splitlines()[0].strip().startswith("0")
    assert "poincare: 1" in out
    code, out, _ = run(capsys, "oracle", path, "--json")
    assert json.loads(out)["poincare"] == "1"


def test_point_off_hyperplane(tmp_path, capsys):
    bad = {"ambient_dim": 2, "points": [{"coords": [1, 0, 1], "mult": 1}]}
    code, _, err = run(capsys, "resolve", write(tmp_path, bad))
    assert code == 2
    assert "point 0 [1:0:1]" in err


@pytest.mark.parametrize(
    "payload",
    [
        "{not json",
        "[1, 2, 3]",
        {"ambient_dim": 2, "points": [{"coords": [0, 0, 0], "mult": 1}]},
        {"ambient_dim": 2, "points": [{"coords": [0, 1], "mult": 1}]},
        {"ambient_dim": 2, "points": [{"coords": [0, 0, 1], "mult": -1}]},
        {"ambient_dim": 2, "field": "gf:4", "points": []},
        {"ambient_dim": 2, "codim": "two", "points": []},
    ],
)
def test_bad_input_exit_code(tmp_path, capsys, payload):
    code, _, err = run(capsys, "resolve", write(tmp_path, payload))
    assert code == 2
    assert err.startswith("fatcone: error:")


def test_missing_file(tmp_path, capsys):
    code, _, err = run(capsys, "oracle", tmp_path / "nope.json")
    assert code == 2 and "cannot read" in err


def test_field_override(tmp_path, capsys):
    code, out, _ = run(capsys, "resolve", write(tmp_path, DOUBLE), "--field", "gf:3", "--json")
    assert code == 0
    assert json.loads(out)["poincare_constructed"] == "3*T^2 + 2*X*T^3"
    code, _, _ = run(capsys, "resolve", write(tmp_path, DOUBLE), "--field", "gf:6")
    assert code == 2


def test_criterion_output(capsys):
    code, out, _ = run(capsys, "criterion", FIXTURES / "vertices_p3_m221.json")
    assert code == 0
    assert out.splitlines()[0].startswith("level 1: holds")
    code, out, _ = run(capsys, "criterion", FIXTURES / "vertices_p3_m221.json", "--json")
    levels = json.loads(out)["levels"]
    assert [lv["level"] for lv in levels] == [1, 2] and all(lv["holds"] for lv in levels)


def test_verify_output(capsys):
    code, out, _ = run(capsys, "verify", FIXTURES / "collinear2_p2_m22.json", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["complex_ok"] and data["exactness_ok"] and data["ideal_ok"]


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_resolve_oracle_formula_agree(name, capsys):
    path = FIXTURES / f"{name}.json"
    expected = json.loads(path.read_text())["expected_poincare"]
    _, out, _ = run(capsys, "resolve", path, "--json")
    rep = json.loads(out)
    _, out, _ = run(capsys, "oracle", path, "--json")
    assert json.loads(out)["poincare"] == rep["poincare_constructed"] == expected
    if json.loads(path.read_text()).get("codim", 1) == 1:
        _, out, _ = run(capsys, "formula", path, "--json")
        assert json.loads(out)["poincare_formula"] == expected


def test_json_roundtrip(capsys):
    path = FIXTURES / "four_p3_m2211.json"
    _, first, _ = run(capsys, "resolve", path, "--json")
    data = json.loads(first)
    assert json.dumps(data, sort_keys=True, indent=2) + "\n" == first
    _, second, _ = run(capsys, "resolve", path, "--json")
    assert first == second


def test_minimize_flag_with_forced_failure(tmp_path, capsys, monkeypatch):
    from fatcone import hypercone

    monkeypatch.setattr(hypercone, "check_R1_containment", lambda I, J: False)
    code, out, _ = run(capsys, "resolve", write(tmp_path, DOUBLE), "--minimize")
    assert code == 0
    assert "criterion: no no" in out


def test_unknown_verb():
    with pytest.raises(SystemExit):
        main(["frobnicate", "x.json"])
