"""Experiment config, CSV layout and determinism of the bounds table."""

import json

import pytest

from symgame.errors import ParameterError
from symgame.experiments import (CSV_HEADER, ExperimentConfig, lower_bound, parse_range, rows_to_csv,
                                 run_experiment, upper_bound)


def test_parse_range():
    assert parse_range("9..15") == [9, 10, 11, 12, 13, 14, 15]
    assert parse_range("9,11") == [9, 11]
    assert parse_range("9..25:8") == [9, 17, 25]


def test_bounds_formulas():
    assert lower_bound("path", 17) == pytest.approx(1.0)
    assert lower_bound("cycle", 8) == pytest.approx(1.0)
    assert upper_bound(16) == pytest.approx(56.0)


def test_config_round_trip(tmp_path):
    c = ExperimentConfig(family="cycle", ns=[9, 11], a_strategy="breaker-cycle", seeds=[0, 1])
    p = tmp_path / "c.json"
    p.write_text(c.to_json())
    assert ExperimentConfig.from_json(str(p)) == c


def test_config_rejects_unknown_fields(tmp_path):
    p = tmp_path / "c.json"
    p.write_text(json.dumps({"family": "path", "colour": "red"}))
    with pytest.raises(ParameterError):
        ExperimentConfig.from_json(str(p))


def test_override_keeps_unset_fields():
    c = ExperimentConfig(ns=[9]).override(seeds=[3], family=None)
    assert c.seeds == [3] and c.family == "path" and c.ns == [9]


@pytest.mark.parametrize("kw", [{"family": "complete"}, {"a_strategy": "mirror"}, {"b_strategy": "nope"},
                                {"seeds": []}])
def test_validate(kw):
    with pytest.raises(ParameterError):
        ExperimentConfig(**kw).validate()


def test_csv_is_byte_identical_across_runs_and_workers():
    c = ExperimentConfig(ns=[9, 11, 13, 15], seeds=[0, 1], b_strategy="random")
    one = rows_to_csv(run_experiment(c))
    two = rows_to_csv(run_experiment(c.override(workers=2)))
    assert one == two
    lines = one.splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    assert len(lines) == 9
    assert lines[1].startswith("9,path,sym,breaker-path,random,0,")


def test_rows_carry_four_decimals_and_pass_flag():
    rows = run_experiment(ExperimentConfig(family="cycle", ns=[17], a_strategy="random",
                                           b_strategy="translated", seeds=[0]))
    fields = rows_to_csv(rows).splitlines()[1].split(",")
    assert fields[7] == "1.5437" and fields[9] in ("true", "false") and fields[10] == ""
    assert rows[0].passed == rows[0].recompute_pass()
