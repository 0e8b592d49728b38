"""Generic utils used throughout the module."""
import sys
from typing import List, Sequence

# Increments of how much we indent reST content when indenting.
INDENT_DEPTH = 4

# The csv-table parser for restructuredtext does not allow for escaping so use
# a unicode character that looks like a quote but will not be in any report.
QUOTE = "“"


# VERBOSE is global state for all the code.
# By making it a global variable, the code "admits that" it is global;
# rather than cluttering up method parameters passing the value around.
VERBOSE = False


def verbose(message: str) -> None:
    """Print message to stderr only if VERBOSE."""
    if not VERBOSE:
        return
    print(message, file=sys.stderr)


def set_verbose(value: bool) -> None:
    """Set the value for VERBOSE outside this module."""
    global VERBOSE
    VERBOSE = value


class ReportWriter(object):
    """Easy reST-flavoured report builder."""

    def __init__(self) -> None:
        self._output: List[str] = []

    def add_output(self, line: str, line_breaks: int = 1, indent_by: int = 0) -> None:
        """Add output to the report.

        Args:
            line: The line to be written
            line_breaks: The number of line breaks to include
            indent_by: The number of spaces to indent the line.
        """
        line_breaks_str = "\n" * line_breaks
        self._output.append(f"{' ' * indent_by}{line}{line_breaks_str}")

    def blank_line(self) -> None:
        """Write a single blank line."""
        self.add_output("")

    def csv_table(
        self, headers: Sequence[str], rows: Sequence[Sequence[str]], title: str = ""
    ) -> None:
        """
        Add a reST ``csv-table`` directive.

        Args:
            headers: Column headings
            rows: Table body, one sequence of cells per row
            title: Optional table caption
        """
        self.add_output(f".. csv-table:: {title}".rstrip())
        header_str = '", "'.join(headers)
        self.add_output(f':header: "{header_str}"', indent_by=INDENT_DEPTH)
        self.add_output(f":quote: {QUOTE}", line_breaks=2, indent_by=INDENT_DEPTH)
        for row in rows:
            row_str = f"{QUOTE}, {QUOTE}".join(row)
            self.add_output(f"{QUOTE}{row_str}{QUOTE}", indent_by=INDENT_DEPTH)

    def render(self) -> str:
        """Return everything written so far as one string."""
        return "".join(self._output)
