"""Exception hierarchy.

Each exception carries a stable ``code`` string; the CLI maps the exception
family to an exit status.
"""


class TorusModuliError(ValueError):
    code = "ERROR"
    exit_status = 1

    def __init__(self, message, code=None):
        super().__init__(message)
        if code is not None:
            self.code = code


class ParseError(TorusModuliError):
    code = "PARSE_ERROR"
    exit_status = 2


class DegenerateError(TorusModuliError):
    """Coincident points where distinct ones are required (or 0/0 forms)."""

    code = "DEGENERATE"
    exit_status = 3


class NotAdmissibleError(TorusModuliError):
    code = "NOT_ADMISSIBLE"
    exit_status = 4


class RegionError(TorusModuliError):
    """A moduli coordinate outside the domain of an operation."""

    code = "NOT_IN_P"
    exit_status = 5


class Ads3Error(TorusModuliError):
    code = "ADS3_ERROR"
    exit_status = 7
