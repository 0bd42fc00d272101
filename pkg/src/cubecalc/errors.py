"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations


class CubecalcError(Exception):
    """Base class for every error raised by cubecalc."""

    exit_code = 1


class ParseError(CubecalcError, ValueError):
    """Malformed DIMACS or polynomial document input."""

    exit_code = 3

    def __init__(self, message: str, line: int | None = None, path: str | None = None):
        self.line = line
        self.path = path
        where = []
        if line is not None:
            where.append(f"line {line}")
        if path is not None:
            where.append(path)
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)


class PreconditionError(CubecalcError, ValueError):
    """An operation was called on an input outside its contract."""

    exit_code = 4


class ResourceLimitError(CubecalcError, RuntimeError):
    """A configured term, factor or variable cap was exceeded."""

    exit_code = 5
