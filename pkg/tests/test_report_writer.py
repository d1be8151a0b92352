import json

from hkltower.enums.output_format import OutputFormat
from hkltower.file_managers.report_writer import cell, render

ROWS = [{"N": 19, "mu": 78, "ok": True}, {"N": 20, "mu": 33, "ok": None}]
COLUMNS = ("N", "mu", "ok")


def test_cell():
    assert cell(None) == "-"
    assert cell(False) == "no"
    assert cell([1, "a"]) == "1; a"
    assert cell({"Hh": "1/2"}) == "Hh=1/2"


def test_render_table():
    lines = render(ROWS, ROWS, COLUMNS, OutputFormat.table).splitlines()
    assert lines[0] == "N   mu  ok"
    assert lines[1] == "--  --  ---"
    assert lines[2] == "19  78  yes"
    assert lines[3] == "20  33  -"


def test_render_tsv():
    text = render(ROWS, ROWS, COLUMNS, OutputFormat.tsv)
    assert text.splitlines() == ["N\tmu\tok", "19\t78\tyes", "20\t33\t-"]


def test_render_json_is_sorted():
    text = render({"b": 1, "a": "λ"}, [], (), "json")
    assert json.loads(text) == {"a": "λ", "b": 1}
    assert text.index('"a"') < text.index('"b"')
    assert "λ" in text
