import json

from click.testing import CliRunner

from dqv.catalog import CHECKS
from dqv.cli import main


def run(*args):
    return CliRunner().invoke(main, list(args))


def test_list_names_every_check():
    result = run("list")
    assert result.exit_code == 0
    for cid in CHECKS:
        assert cid in result.output


def test_check_pass_exit_zero():
    result = run("check", "pentagon-h2")
    assert result.exit_code == 0
    assert "PASS" in result.output


def test_check_fail_exit_one():
    result = run("check", "hexagon-h1-left", "--flags", "symmetric")
    assert result.exit_code == 1
    assert "FAIL" in result.output


def test_check_unknown_exit_two():
    result = run("check", "no-such-check")
    assert result.exit_code == 2


def test_normalize_command():
    result = run("normalize", "t[(1,2),3]", "--flags", "strict")
    assert result.exit_code == 0
    assert result.output.strip() == "t[1,3] + t[2,3]"


def test_normalize_rejects_bad_flag():
    result = run("normalize", "t[1,2]", "--flags", "nope")
    assert result.exit_code == 2


def test_report_json(tmp_path):
    out = tmp_path / "report.json"
    result = run("report", "--format", "json", "--out", str(out))
    assert result.exit_code == 0
    doc = json.loads(out.read_text())
    assert doc["all_passed"] is True
    assert len(doc["results"]) >= 17


def test_report_text():
    result = run("report", "--format", "text")
    assert result.exit_code == 0
    assert "all passed" in result.output


def test_oracle_command():
    result = run("oracle", "--seed", "4", "--instances", "2")
    assert result.exit_code == 0
    assert result.output.count("PASS") == 2
