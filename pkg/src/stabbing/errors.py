"""Exception types shared across the package."""


class GeometryError(ValueError):
    """Invalid geometric input: degenerate polygon, singular map, unknown direction."""


class GuardExceededError(RuntimeError):
    """An exhaustive routine refused to run because the search space is too large."""


class KernelInvariantError(RuntimeError):
    """The kernel solver found its size invariant violated (precondition broken upstream)."""


class LayoutMismatchError(ValueError):
    """A strip layout does not describe the instance it was paired with."""


class ParseError(ValueError):
    """Malformed instance file; carries the 1-based line and column."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + message)
