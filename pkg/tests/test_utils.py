"""Tests for utils module."""
import pytest

from metacyclic_units import utils


TEST_MESSAGE = "This is a test message"


@pytest.fixture()
def writer():
    return utils.ReportWriter()


# utils.set_verbose
@pytest.mark.usefixtures("constants")
def test_set_verbose_true():
    utils.set_verbose(True)
    assert utils.VERBOSE is True


@pytest.mark.usefixtures("constants")
def test_set_verbose_false():
    utils.set_verbose(False)
    assert utils.VERBOSE is False


# utils.verbose
@pytest.mark.usefixtures("constants")
def test_verbose_unmodified(capsys):
    utils.set_verbose(False)
    utils.verbose(TEST_MESSAGE)
    assert capsys.readouterr().err == ""


@pytest.mark.usefixtures("constants")
def test_verbose_verbose(capsys):
    utils.set_verbose(True)
    utils.verbose(TEST_MESSAGE)
    captured = capsys.readouterr()
    assert captured.err == f"{TEST_MESSAGE}\n"
    assert captured.out == ""


# utils.ReportWriter
def test_reportwriter_init(writer):
    assert writer.render() == ""


def test_reportwriter_blank_line(writer):
    writer.blank_line()
    assert writer.render() == "\n"


def test_reportwriter_add_output_line_breaks(writer):
    line_breaks = 3
    writer.add_output(TEST_MESSAGE, line_breaks=line_breaks)
    assert writer.render() == f"{TEST_MESSAGE}\n\n\n"


def test_reportwriter_add_output_indent_by(writer):
    writer.add_output(TEST_MESSAGE, indent_by=4)
    assert writer.render() == f"    {TEST_MESSAGE}\n"


def test_reportwriter_csv_table(writer):
    writer.csv_table(["a", "b"], [["1", "2"], ["3", "4"]], title="Numbers")
    q = utils.QUOTE
    expected_output = (
        ".. csv-table:: Numbers\n"
        '    :header: "a", "b"\n'
        f"    :quote: {q}\n"
        "\n"
        f"    {q}1{q}, {q}2{q}\n"
        f"    {q}3{q}, {q}4{q}\n"
    )
    assert writer.render() == expected_output


def test_reportwriter_csv_table_untitled(writer):
    writer.csv_table(["a"], [])
    assert writer.render().startswith(".. csv-table::\n")
