"""
Unit tests for helpers in pydilworth.utils
"""

import json
import logging
import os
from fractions import Fraction

import pytest

from pydilworth.utils.decorators import EXIT_INPUT_ERROR, command_handler, parameter_validator
from pydilworth.utils.logger import RunLog, configure_logging
from pydilworth.utils.utilities import (
    create_run_folder,
    dump_json,
    format_float,
    format_rational,
    iter_bits,
    log2_rational,
    mask_of,
    parse_limits,
    parse_rational,
    popcount,
)


def test_bit_helpers():
    assert list(iter_bits(0b101001)) == [0, 3, 5]
    assert list(iter_bits(0)) == []
    assert mask_of([0, 3, 5]) == 0b101001
    assert popcount(0b101001) == 3
    # rows wider than a machine word
    assert list(iter_bits(1 << 200 | 1)) == [0, 200]


def test_rational_round_trip_and_errors():
    assert format_rational(Fraction(5, 2)) == "5/2"
    assert format_rational(Fraction(4, 2)) == "2"
    assert parse_rational("5/2") == Fraction(5, 2)
    assert parse_rational(" 6 / 4 ") == Fraction(3, 2)
    assert parse_rational(7) == Fraction(7)

    with pytest.raises(ValueError):
        parse_rational("2.5")
    with pytest.raises(ValueError):
        parse_rational("1/0")


def test_log2_rational():
    assert log2_rational(Fraction(1, 8)) == -3.0
    assert log2_rational(4) == 2.0
    with pytest.raises(ValueError):
        log2_rational(0)


def test_format_float():
    assert format_float(2.0) == "2"
    assert format_float(1 / 3, digits=3) == "0.333"
    assert format_float(float("nan")) == "nan"


def test_parse_limits():
    assert parse_limits("max_vertices=4096, budget_seconds=2.5") == {"max_vertices": 4096, "budget_seconds": 2.5}
    assert parse_limits("") == {}

    with pytest.raises(ValueError):
        parse_limits("max_vertices")
    with pytest.raises(ValueError):
        parse_limits("max_vertices=lots")
    with pytest.raises(ValueError):
        parse_limits("max_vertices=0")


def test_dump_json_is_deterministic():
    text = dump_json({"b": 1, "a": [1, 2]})
    assert text.endswith("\n")
    assert text.index('"a"') < text.index('"b"')
    assert json.loads(text) == {"a": [1, 2], "b": 1}


def test_create_run_folder(tmp_path):
    base = tmp_path / "runs"
    base.mkdir()

    run1 = create_run_folder(str(base))
    assert os.path.isdir(run1)
    assert os.path.basename(os.path.normpath(run1)) == "run1"

    run2 = create_run_folder(str(base))
    assert os.path.isdir(run2)
    assert os.path.basename(os.path.normpath(run2)) == "run2"


def test_parameter_validator_rejects_bad_values():
    @parameter_validator(t=lambda t: t >= 1)
    def square(t, scale=1):
        return t * t * scale

    assert square(3) == 9
    assert square(t=2, scale=2) == 8
    with pytest.raises(ValueError, match="'t'"):
        square(0)


def test_command_handler_maps_errors_to_exit_status(capsys):
    @command_handler(suppress_traceback=True)
    def bad_input():
        raise ValueError("Edge (1, 1) is a self-loop")

    @command_handler()
    def fine():
        return 0

    assert fine() == 0
    assert bad_input() == EXIT_INPUT_ERROR
    report = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert report["error"] == "ValueError"
    assert "self-loop" in report["message"]
    assert report["hint"]


def test_command_handler_reports_partial_count(capsys):
    from pydilworth.fractional import EnumerationLimitError

    @command_handler()
    def overflow():
        raise EnumerationLimitError("Maximal-set enumeration exceeded 10 sets", 11)

    assert overflow() == EXIT_INPUT_ERROR
    report = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert report["partial_count"] == 11


def test_configure_logging_levels(tmp_path):
    log_file = tmp_path / "run.log"
    package_logger = configure_logging(2, str(log_file))
    try:
        assert package_logger.level == logging.DEBUG
        logging.getLogger("pydilworth.test").debug("hello ledger")
        for handler in package_logger.handlers:
            handler.flush()
        assert "hello ledger" in log_file.read_text()
    finally:
        configure_logging(0)
    assert package_logger.level == logging.WARNING


def test_run_log_records_artifacts(tmp_path):
    ledger = RunLog(str(tmp_path), command="pydilworth gen C 3")
    artifact = tmp_path / "graph.txt"
    artifact.write_text("n 3\n0 1\n1 2\n2 0\n")

    digest = ledger.record_artifact(str(artifact))
    ledger.separator()

    text = (tmp_path / "run_log.txt").read_text()
    assert "Command: pydilworth gen C 3" in text
    assert f"sha256={digest}" in text
    assert ledger.artifacts == [(str(artifact), digest)]
