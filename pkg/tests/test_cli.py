import json
import runpy
import sys

import pytest

from hkltower.cli.main import main
from hkltower.managers.check_manager import CheckManager
from hkltower.settings import EXIT_OK, EXIT_USAGE


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_first_relation(capsys):
    code, out = run(capsys, "relation", "--n", "19")
    assert code == EXIT_OK
    assert out.strip() == "108 λ = 1 Hn + 14 Hh + 78 Hu"


def test_gritsenko_relation(capsys):
    code, out = run(capsys, "relation", "--n", "10", "--which", "gritsenko")
    assert code == EXIT_OK
    assert out.strip() == "Hh = 8 λ"


def test_relation_as_json(capsys):
    code, out = run(capsys, "relation", "--n", "19", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out)["Hu"] == "78"


def test_pullback(capsys):
    code, out = run(capsys, "pullback", "--map", "f", "--n", "19", "--class", "Hh")
    assert code == EXIT_OK
    assert out.strip() == "-2 λ + 1 Hh on F(18)"


def test_rank_table(capsys):
    code, out = run(capsys, "rank", "--min", "3", "--max", "6")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0].split()[0] == "N"
    assert len(lines) == 2 + 4


def test_rank_tsv(capsys):
    code, out = run(capsys, "rank", "--min", "19", "--max", "19", "--format", "tsv")
    assert code == EXIT_OK
    header, row = out.strip().split("\n")
    values = dict(zip(header.split("\t"), row.split("\t")))
    assert values["rank"] == "3"


def test_walls_json(capsys):
    code, out = run(capsys, "walls", "--n", "19", "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert [wall["k"] for wall in payload["walls"]] == [1, 2, 3, 4, 5, 6, 7, 9]


def test_walls_note_below_fifteen(capsys):
    code, out = run(capsys, "walls", "--n", "14")
    assert code == EXIT_OK
    assert "Hh = 1 Hu" in out


def test_canonical(capsys):
    code, out = run(capsys, "canonical", "--space", "F(19)")
    assert code == EXIT_OK
    assert out.strip() == "19 λ - 1/2 Hn - 1/2 Hh - 1/2 Hu on F(19)"


def test_restrict(capsys):
    code, out = run(
        capsys, "restrict", "--n", "19", "--path", "f,f", "--beta", "1/5"
    )
    assert code == EXIT_OK
    assert out.strip() == "3/5 λ + 1/10 Hh on F(17)"


def test_classify(capsys):
    code, out = run(
        capsys,
        "classify",
        "--n",
        "7",
        "--u",
        "1",
        "-1",
        "0",
        "0",
        "--d",
        "0",
        "0",
        "0",
        "0",
        "0",
        "--format",
        "json",
    )
    assert code == EXIT_OK
    assert json.loads(out)["kind"] == "nodal"


def test_tower_marks_centers(capsys):
    code, out = run(capsys, "tower", "--n", "19", "--format", "json")
    assert code == EXIT_OK
    rows = json.loads(out)
    # two centers share t = 1
    assert sum(row["center"] for row in rows) == 9


def test_audit(capsys):
    code, out = run(capsys, "audit", "--n", "19", "--beta", "1/10", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out)["passes"] is True


@pytest.mark.parametrize(
    "argv",
    [
        ["walls", "--n", "2"],
        ["bogus"],
        ["relation"],
        ["pullback", "--map", "f", "--n", "19", "--class", "2**Hh"],
        ["pullback", "--map", "l", "--n", "20", "--class", "Hh"],
        ["rank", "--min", "6", "--max", "5"],
        ["audit", "--n", "19", "--beta", "x"],
        ["relation", "--n", "30"],
        ["relation", "--n", "18", "--decoration", "zeta"],
    ],
)
def test_usage_errors(argv, capsys):
    assert main(argv) == EXIT_USAGE


def test_check_suite(capsys):
    CheckManager().clear()
    code, out = run(capsys, "check", "--suite", "relations")
    assert code == EXIT_OK
    assert out.splitlines()[-1].startswith("1/1")


def test_format_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("HKL_FORMAT", "json")
    code, out = run(capsys, "relation", "--n", "19")
    assert code == EXIT_OK
    assert json.loads(out)["lambda_coeff"] == "108"


def test_zeta_decoration_at_fourteen(capsys):
    code, out = run(capsys, "relation", "--n", "14", "--decoration", "zeta")
    assert code == EXIT_OK
    assert out.strip() == "288 λ = 1 Hn + 24 Hu"


def test_module_runs_as_script(capsys, monkeypatch):
    monkeypatch.setattr(sys, "argv", ["hkltower", "relation", "--n", "19"])
    with pytest.raises(SystemExit) as exit_info:
        runpy.run_module("hkltower.cli.main", run_name="__main__")
    assert exit_info.value.code == EXIT_OK
    assert capsys.readouterr().out.strip() == "108 λ = 1 Hn + 14 Hh + 78 Hu"
