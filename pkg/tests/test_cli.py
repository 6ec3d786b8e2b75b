import json
import subprocess
import sys
from fractions import Fraction

import pytest

from rrgl import cli
from rrgl.qseries import TruncatedSeries
from rrgl.report import Report


def run(capsys, *argv):
    code = cli.main([*argv, "--json"])
    out = capsys.readouterr().out
    return code, Report.from_json(out)


def test_gordon_example(capsys):
    code, rep = run(capsys, "gordon", "--k", "2", "--i", "2", "--trunc", "40")
    assert code == 0 and rep.passed
    case = rep.details["cases"][0]
    sum_side = TruncatedSeries.from_json(case["sum_side"])
    prod_side = TruncatedSeries.from_json(case["product_side"])
    assert sum_side == prod_side and sum_side.trunc == 40
    assert [sum_side[j] for j in range(7)] == [1, 1, 1, 1, 2, 2, 3]


def test_census_example(capsys):
    code, rep = run(capsys, "census", "--n", "2", "--q", "2")
    assert code == 0
    assert rep.details["num_classes"] == 3
    assert sorted(c["count"] for c in rep.details["classes"]) == [1, 2, 3]


def test_census_threads(capsys):
    code, rep = run(capsys, "census", "--n", "2", "--q", "3", "--threads", "2")
    assert code == 0 and rep.details["total"] == 48


def test_glnq_prob_example(capsys):
    code, rep = run(capsys, "glnq-prob", "--n", "2", "--q", "2", "--k", "2")
    assert code == 0
    assert rep.details["value"] == "1/2"
    assert Fraction(rep.details["by_census"]) == Fraction(1, 2)


@pytest.mark.parametrize(
    "argv",
    [
        ["lemma-product", "--q", "3"],
        ["class-sizes", "--n", "3", "--q", "2"],
        ["limit", "--q", "3", "--k", "2", "--n", "6"],
        ["semisimple", "--n", "2", "--q", "3"],
        ["hall-littlewood", "--n", "3", "--q", "2"],
        ["theorem4", "--q", "3", "--k", "3"],
    ],
)
def test_subcommands_pass(capsys, argv):
    code, rep = run(capsys, *argv)
    assert code == 0 and rep.status == "pass" and rep.command == argv[0]
    assert rep.timing_ms >= 0


def test_limit_interval_schema(capsys):
    _, rep = run(capsys, "limit", "--q", "3", "--tol", "1/100000000")
    lo, hi = (Fraction(rep.details["interval"][e]) for e in ("lo", "hi"))
    assert 0 < hi - lo <= Fraction(1, 10**8)
    assert rep.parameters["tol"] == "1/100000000"


def test_report_roundtrip(capsys):
    _, rep = run(capsys, "theorem4")
    again = Report.from_json(rep.to_json())
    assert again == rep
    assert json.loads(rep.to_json())["details"]["consistent"] is True


def test_human_summary(capsys):
    assert cli.main(["census", "--n", "2", "--q", "2"]) == 0
    assert "3 classes" in capsys.readouterr().out


def test_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(cli, "run_gordon", lambda k, i, trunc: (False, {"cases": []}))
    code, rep = run(capsys, "gordon")
    assert code == 1 and rep.status == "fail"


@pytest.mark.parametrize(
    "argv",
    [["nonsense"], ["gordon", "--bogus", "1"], ["census", "--n", "x"], []],
)
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        cli.main(argv)
    assert exc.value.code == 2


@pytest.mark.parametrize(
    "argv",
    [["limit", "--tol", "-1"], ["limit", "--tol", "abc"], ["census", "--n", "3", "--q", "4"]],
)
def test_bad_values_exit_2(capsys, argv):
    assert cli.main(argv) == 2
    assert "error" in capsys.readouterr().err


@pytest.mark.slow
def test_all_subcommand_as_process():
    proc = subprocess.run([sys.executable, "-m", "rrgl", "all", "--json"], capture_output=True, text=True, timeout=600)
    assert proc.returncode == 0, proc.stderr
    assert Report.from_json(proc.stdout).passed
