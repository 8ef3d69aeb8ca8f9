"""The command line entry points."""

import io
import json

import pytest

from symgame.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_json_reports_both_orders(capsys):
    code, out, _ = run(capsys, "solve", "--graph", "P5", "--json")
    data = json.loads(out)
    assert code == 0 and data["maxmin"] == data["minmax"] == data["value"] == 2


def test_ef(capsys):
    code, out, _ = run(capsys, "ef", "--g0", "C3", "--g1", "C4")
    assert code == 0 and out.strip() == "D(C3, C4) = 1"


def test_play_transcript(capsys, tmp_path):
    path = tmp_path / "t.json"
    code, out, _ = run(capsys, "play", "--graph", "P9", "--a", "breaker-path", "--b", "greedy-copy",
                       "--transcript", str(path))
    assert code == 0 and "winner A" in out
    assert json.loads(path.read_text())["outcome"]["winner"] == "A"


def test_play_human(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("1\n2\n"))
    code, out, _ = run(capsys, "play", "--graph", "P4", "--human", "A", "--b", "mirror")
    assert code == 0 and "winner: B" in out


def test_bounds_is_byte_identical(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"family": "path", "ns": "9..13", "seeds": [0, 1], "b_strategy": "random"}))
    _, first, _ = run(capsys, "bounds", "--config", str(cfg))
    _, second, _ = run(capsys, "bounds", "--config", str(cfg), "--workers", "2")
    assert first == second and first.count("\n") == 7


def test_bounds_flags_override_config(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"family": "path", "ns": [9]}))
    _, out, _ = run(capsys, "bounds", "--config", str(cfg), "--seeds", "5")
    assert out.splitlines()[1].split(",")[5] == "5"


def test_parameter_errors_exit_2(capsys):
    code, _, err = run(capsys, "play", "--graph", "P5", "--a", "mirror")
    assert code == 2 and "error" in err


def test_verify_subset(capsys):
    code, out, _ = run(capsys, "verify", "--only", "1,3")
    assert code == 0 and "criterion  1" in out and "criterion  3" in out


def test_verify_names_first_failure(capsys, monkeypatch):
    from symgame import acceptance

    fake = acceptance.CriterionResult(9, "forced red", False, {"summary": "x"})
    monkeypatch.setattr(acceptance, "run_acceptance", lambda only=None: [fake])
    code, _, err = run(capsys, "verify")
    assert code == 1 and "criterion: 9" in err
