import json
import sys
from pathlib import Path

import pytest
from typer.testing import CliRunner

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))

from src.cli.app import app, run

SPECS = ROOT / "data" / "specs"

runner = CliRunner()


def _json(result):
    assert result.stdout.strip(), result.output
    return json.loads(result.stdout)


def test_solve_fine_two_and_three():
    result = runner.invoke(app, ["solve-fine", "2", "--json"])
    assert result.exit_code == 0
    payload = _json(result)
    assert payload["count"] == 4
    assert [s["label"] for s in payload["solutions"]] == ["X_e", "X_b", "X_a", "X_ab"]

    result = runner.invoke(app, ["solve-fine", "3", "--json"])
    assert result.exit_code == 0
    assert _json(result)["count"] == 0


def test_size_cap_is_an_input_error():
    result = runner.invoke(app, ["--max-n", "2", "solve-fine", "3"])
    assert result.exit_code == 2


def test_demo_fine_m2():
    result = runner.invoke(app, ["demo", "fine-m2", "--json"])
    assert result.exit_code == 0
    payload = _json(result)
    assert payload["ok"] is True
    assert [c["kind"] for c in payload["cases"]] == [
        "symplectic", "transpose", "transpose", "transpose"
    ]


@pytest.mark.parametrize("name", ["symplectic-blocks", "transpose-blocks"])
def test_demo_patterns(name):
    result = runner.invoke(app, ["demo", name, "--json"])
    assert result.exit_code == 0
    assert all(r["ok"] for r in _json(result)["rows"])


def test_build_then_check(tmp_path):
    result = runner.invoke(app, ["build", str(SPECS / "six_by_six.json"), "--json"])
    assert result.exit_code == 0
    built = _json(result)
    assert built["kind"] == "transpose" and built["graded"] is True
    assert built["tuple"] == [[0, 0, 0], [1, 0, 0], [1, 0, 0]]

    out = tmp_path / "built.json"
    out.write_text(json.dumps(built), encoding="utf-8")
    result = runner.invoke(app, ["check", str(out), "--json"])
    assert result.exit_code == 0
    checked = _json(result)
    assert checked["kind"] == "transpose"
    assert checked["graded"] is True and checked["ok"] is True


def test_check_with_replaced_phi(tmp_path):
    built = _json(runner.invoke(app, ["build", str(SPECS / "six_by_six.json"), "--json"]))
    source = tmp_path / "built.json"
    source.write_text(json.dumps(built), encoding="utf-8")
    # swapping elementary positions 1 and 2 sends E13 (degree c) to E32 (degree e)
    perm = {0: 2, 1: 3, 2: 0, 3: 1, 4: 4, 5: 5}
    rows = [[1 if perm[i] == j else 0 for j in range(6)] for i in range(6)]
    phi = tmp_path / "phi.json"
    phi.write_text(json.dumps({"field": 1, "rows": rows}), encoding="utf-8")
    result = runner.invoke(app, ["check", str(source), "--phi", str(phi), "--json"])
    assert result.exit_code == 1
    assert _json(result)["graded"] is False


def test_check_singular_phi(tmp_path):
    payload = {
        "grading": {"group": {"invariant_factors": [2]}, "tuple": [[0], [1]]},
        "phi": {"rows": [[1, 1], [1, 1]]},
    }
    result = runner.invoke(app, ["check", json.dumps(payload), "--json"])
    assert result.exit_code == 1
    assert _json(result)["antiautomorphism"] is False


def test_check_size_mismatch():
    payload = {
        "grading": {"group": {"invariant_factors": [2]}, "tuple": [[0], [1]]},
        "phi": {"rows": [[1]]},
    }
    result = runner.invoke(app, ["check", json.dumps(payload)])
    assert result.exit_code == 2


def test_build_invalid_spec():
    result = runner.invoke(app, ["build", str(SPECS / "invalid_mixed_t.json"), "--json"])
    assert result.exit_code == 1
    payload = _json(result)
    assert payload["valid"] is False
    assert "differs from" in payload["diagnostics"][0]


def test_build_symplectic_example():
    result = runner.invoke(app, ["build", str(SPECS / "fine_m2_symplectic.json"), "--json"])
    assert result.exit_code == 0
    assert _json(result)["kind"] == "symplectic"


def test_parse_errors_exit_2():
    assert runner.invoke(app, ["build", "{not json"]).exit_code == 2
    assert runner.invoke(app, ["build", '{"group": {"invariant_factors": [0]}}']).exit_code == 2
    assert runner.invoke(app, ["build", str(SPECS / "missing.json")]).exit_code == 2


def test_hk_command():
    result = runner.invoke(app, ["hk", str(SPECS / "six_by_six.json"), "--json"])
    assert result.exit_code == 0
    payload = _json(result)
    assert payload["ok"] is True
    assert payload["hk"]["dim_h"] == 21 and payload["hk"]["dim_k"] == 15


def test_enumerate_json_lines():
    result = runner.invoke(
        app, ["enumerate", "--group", "2,2", "--size", "1", "--fine", "1", "--json"]
    )
    assert result.exit_code == 0
    lines = [json.loads(x) for x in result.stdout.splitlines() if x.strip()]
    assert len(lines) == 4
    assert all(r["ok"] for r in lines)


def test_enumerate_table_output():
    result = runner.invoke(app, ["enumerate", "--group", "trivial", "--size", "2", "--fine", "0"])
    assert result.exit_code == 0
    assert "spec(s) over trivial" in result.stdout


def test_run_returns_exit_codes():
    assert run(["solve-fine", "2", "--json"]) == 0
    assert run(["build", "{not json"]) == 2
    assert run(["no-such-command"]) == 2


def test_spec_option_reads_a_file(tmp_path):
    path = tmp_path / "spec.json"
    path.write_text((SPECS / "six_by_six.json").read_text(encoding="utf-8"), encoding="utf-8")
    result = runner.invoke(app, ["build", "--spec", str(path), "--json"])
    assert result.exit_code == 0
    assert _json(result)["kind"] == "transpose"

    result = runner.invoke(app, ["hk", "--spec", str(path), "--json"])
    assert result.exit_code == 0
    assert _json(result)["hk"]["dim_h"] == 21


def test_missing_spec_is_an_input_error():
    assert runner.invoke(app, ["build"]).exit_code == 2
    assert run(["hk"]) == 2


def test_run_usage_errors_return_2():
    assert run(["build", "--no-such-flag"]) == 2
    assert run(["--max-n", "0", "solve-fine", "2"]) == 2
