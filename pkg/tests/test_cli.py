import json

import pytest

from narayana_lab.cli import main

try:
    import jsonschema
except ImportError:  # pragma: no cover
    jsonschema = None


def run_cli(*argv, env=None, monkeypatch=None):
    if env and monkeypatch:
        for k, v in env.items():
            monkeypatch.setenv(k, v)
    return main(list(argv))


def test_eval_examples(capsys):
    assert main(["eval", "P{3,4}"]) == 0
    assert capsys.readouterr().out == "4*q^2 - 20*q + 20\n"
    assert main(["eval", "h2[3]"]) == 0
    assert capsys.readouterr().out == "6\n"


def test_eval_parse_error(capsys):
    assert main(["eval", "h2[Q"]) == 2
    err = capsys.readouterr().err
    assert "offset 4" in err


def test_eval_formats(capsys):
    assert main(["eval", "h2[3]", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc == {"expr": "h2[3]", "result": "6"}
    assert main(["eval", "P{3,4}", "--format", "csv"]) == 0
    assert capsys.readouterr().out == "20, -20, 4\n"


def test_table_rows(capsys):
    assert main(["table", "narayana", "--max-n", "4"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[4] == "4: q^3 + 6*q^2 + 6*q + 1"
    assert main(["table", "schroeder-large", "--max-n", "4", "--format", "csv"]) == 0
    assert capsys.readouterr().out.splitlines() == [
        "0, 1",
        "1, 2",
        "2, 6",
        "3, 22",
        "4, 90",
    ]
    assert main(["table", "power-sum", "--max-n", "2"]) == 0
    assert capsys.readouterr().out.splitlines() == ["1: 1", "2: 2*q + 1"]


def test_table_csv_coefficients(capsys):
    assert main(["table", "narayana", "--max-n", "4", "--format", "csv"]) == 0
    assert capsys.readouterr().out.splitlines()[4] == "4, 1, 6, 6, 1"


def test_table_at_q(capsys):
    assert main(["table", "narayana", "--max-n", "3", "--at-q", "1/2"]) == 0
    assert capsys.readouterr().out.splitlines() == ["0: 1", "1: 1", "2: 3/2", "3: 11/4"]
    assert main(["table", "catalan", "--max-n", "3", "--at-q", "2"]) == 2


def test_table_cap(capsys):
    assert main(["table", "narayana", "--max-n", "201"]) == 2


def test_table_unknown_name():
    with pytest.raises(SystemExit) as info:
        main(["table", "no-such", "--max-n", "3"])
    assert info.value.code == 2


def test_cf(capsys):
    assert main(["cf", "--depth", "4"]) == 0
    assert capsys.readouterr().out == "1, q, 1, q\n"
    assert main(["cf", "--depth", "21"]) == 2


def test_hl(capsys):
    assert main(["hl", "--r", "3", "--n", "4"]) == 0
    assert capsys.readouterr().out == "4*q^2 - 20*q + 20\n"
    assert main(["hl", "--r", "1", "--n", "1"]) == 0
    assert capsys.readouterr().out == "1\n"
    assert main(["hl", "--r", "31", "--n", "2"]) == 2


def test_verify_single_id(tmp_path, capsys):
    report = tmp_path / "report.json"
    code = main(["verify", "--id", "thm7", "--max-n", "6", "--report", str(report)])
    assert code == 0
    doc = json.loads(report.read_text())
    assert doc["counts"] == {"pass": 12, "fail": 0}
    assert len(doc["results"]) == 12
    if jsonschema is not None:
        from importlib.resources import files

        schema = json.loads(
            files("narayana_lab").joinpath("report_schema.json").read_text()
        )
        jsonschema.validate(doc, schema)


def test_verify_unknown_id(capsys):
    assert main(["verify", "--id", "no-such"]) == 2


def test_verify_unwritable_report(tmp_path, capsys):
    target = tmp_path / "missing-dir" / "report.json"
    code = main(
        ["verify", "--id", "catalan-ratio", "--max-n", "4", "--report", str(target)]
    )
    assert code == 3


def test_verify_stdout_deterministic(capsys):
    argv = ["verify", "--id", "lemma3-a", "--max-n", "5", "--seed", "11"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    second = capsys.readouterr().out
    assert first == second
    doc = json.loads(first)
    assert doc["seed"] == 11
    assert doc["counts"]["fail"] == 0


def test_verify_seed_env_default(capsys, monkeypatch):
    monkeypatch.setenv("NARAYANA_LAB_SEED", "99")
    assert main(["verify", "--id", "catalan-ratio", "--max-n", "4"]) == 0
    assert json.loads(capsys.readouterr().out)["seed"] == 99
    monkeypatch.setenv("NARAYANA_LAB_SEED", "not-a-number")
    assert main(["verify", "--id", "catalan-ratio", "--max-n", "4"]) == 2


def test_verify_jobs(capsys):
    assert main(["verify", "--id", "thm7", "--max-n", "5", "--jobs", "4"]) == 0
    capsys.readouterr()
    assert main(["verify", "--id", "thm7", "--max-n", "5", "--jobs", "0"]) == 2


def test_usage_error_exit_codes():
    with pytest.raises(SystemExit) as info:
        main(["table", "narayana"])  # missing --max-n
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2


def test_rational_argument_rejects_floats():
    with pytest.raises(SystemExit) as info:
        main(["table", "narayana", "--max-n", "3", "--at-q", "0.5"])
    assert info.value.code == 2


def test_table_json_shape(capsys):
    assert main(["table", "narayana", "--max-n", "2", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["rows"][2] == {"n": 2, "coefficients": [1, 1]}
    assert main(["table", "catalan", "--max-n", "2", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["rows"] == [
        {"n": 0, "value": 1},
        {"n": 1, "value": 1},
        {"n": 2, "value": 2},
    ]
