"""Errors definitions."""

class Error(Exception):
    """Top error class. All errors should derive this class.

    Attributes:
        message (str): Error message.
    """

    def __init__(self, message):
        Exception.__init__(self, message)
        self.message = message


class GeometryError(Error):
    """Invalid point or curve."""


class MatrixError(Error):
    """Invalid matrix shape or block structure."""


class PreconditionError(Error):
    """Operation called outside its documented domain."""


class ArrangementError(Error):
    """Arrangement graph cannot be walked."""


class SettingsError(Error):
    """Invalid configuration file or environment value."""


class FormatError(Error):
    """Malformed input file.

    Attributes:
        path (str): File path, None for anonymous streams.

        line (int): 1-based line number, None when unknown.

        message (str): Error message.
    """

    path = None
    line = None

    def __init__(self, message, path=None, line=None):
        Error.__init__(self, message)
        self.path = path
        self.line = line

    def __str__(self):
        return "FormatError: path=%s, line=%s, message=%s" % (
            self.path, self.line, self.message)

    def __repr__(self):
        return "FormatError(message=%r, path=%r, line=%r)" % (
            self.message, self.path, self.line)


class BudgetExceeded(Error):
    """Benchmark time budget exhausted.

    Attributes:
        rows (list): Rows measured before the budget ran out.
    """

    rows = None

    def __init__(self, message, rows):
        Error.__init__(self, message)
        self.rows = rows
