import logging

import pytest
import sympy

from hkltower.enums.output_format import OutputFormat
from hkltower.exceptions import ClassExpressionError, RangeError, require_range
from hkltower.rationals import as_rational, floor_of, format_rational
from hkltower.settings import default_output_format, log_level


def test_default_output_format(monkeypatch):
    monkeypatch.delenv("HKL_FORMAT", raising=False)
    assert default_output_format() is OutputFormat.table
    monkeypatch.setenv("HKL_FORMAT", "TSV")
    assert default_output_format() is OutputFormat.tsv
    monkeypatch.setenv("HKL_FORMAT", "yaml")
    assert default_output_format() is OutputFormat.table


def test_log_level(monkeypatch):
    monkeypatch.setenv("HKL_LOG_LEVEL", "debug")
    assert log_level() == logging.DEBUG
    monkeypatch.setenv("HKL_LOG_LEVEL", "chatty")
    assert log_level() == logging.WARNING


@pytest.mark.parametrize(
    "value, expected",
    [
        (3, sympy.Integer(3)),
        ("1/9", sympy.Rational(1, 9)),
        (" -2 / 4 ", sympy.Rational(-1, 2)),
    ],
)
def test_as_rational(value, expected):
    assert as_rational(value) == expected


@pytest.mark.parametrize("value", ["0.5", "1/0", True, 0.5, "x"])
def test_as_rational_rejects(value):
    with pytest.raises(ClassExpressionError):
        as_rational(value)


def test_format_and_floor():
    assert format_rational(sympy.Rational(6, 3)) == "2"
    assert format_rational("-3/6") == "-1/2"
    assert floor_of(sympy.Rational(-1, 2)) == -1


def test_require_range():
    require_range("N", 3, 3, 25)
    with pytest.raises(RangeError):
        require_range("N", 26, 3, 25)
    with pytest.raises(RangeError):
        require_range("N", 2, 3)
