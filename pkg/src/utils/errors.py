"""
Exception hierarchy for gridbond.

Every error raised on purpose by the package derives from GridBondError so
the command-line front end can map it to an exit code.
"""


class GridBondError(Exception):
    """Base class for all errors raised by gridbond."""
    pass


class InvalidVertex(GridBondError):
    """Exception raised when a vertex is out of range or already deleted."""
    pass


class InvalidColumn(GridBondError):
    """Exception raised when a column index is out of range."""
    pass


class EdgeNotPresent(GridBondError):
    """Exception raised when an edge is not a present edge of the graph."""
    pass


class InvalidSymmetry(GridBondError):
    """Exception raised when a transpose is requested on a non-square grid."""
    pass


class InvalidInput(GridBondError):
    """Exception raised when an operation's precondition is violated."""
    pass


class TooLarge(GridBondError):
    """Exception raised when an instance exceeds a configured solver cap."""
    pass


class NoneAvailable(GridBondError):
    """Exception raised when no closed-form witness covers a grid."""
    pass


class ParseError(GridBondError):
    """Exception raised when a vertex or edge name cannot be parsed."""
    pass


# Exit codes of the command-line front end.
EXIT_OK = 0
EXIT_ASSERT_FAIL = 1
EXIT_USAGE = 2
EXIT_TOO_LARGE = 3


def exit_code_for(error: BaseException) -> int:
    """
    Map an exception to the command-line exit code.

    Args:
        error: The exception raised by a command.

    Returns:
        int: 3 for TooLarge, 2 for any other GridBondError, 1 otherwise.
    """
    if isinstance(error, TooLarge):
        return EXIT_TOO_LARGE
    if isinstance(error, GridBondError):
        return EXIT_USAGE
    return EXIT_ASSERT_FAIL
