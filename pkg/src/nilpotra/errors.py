"""Exception hierarchy shared by every nilpotra module.

The command-line driver maps these classes onto exit codes, so every failure a
user can provoke is raised as one of them.
"""

from typing import Optional


class NilpotraError(Exception):
    """Base class of all nilpotra errors."""


class WordSyntaxError(NilpotraError, ValueError):
    """A word or substitution text does not follow the grammar."""

    def __init__(
        self,
        message: str,
        position: int,
        line: Optional[int] = None,
        column: Optional[int] = None,
    ) -> None:
        self.position = position
        self.line = line
        self.column = column
        where = f"position {position}"
        if line is not None and column is not None:
            where += f" (line {line}, column {column})"
        super().__init__(f"{message} at {where}")


class GeneratorRangeError(NilpotraError, ValueError):
    """A generator index is not in 1..rank."""

    def __init__(self, index: object, rank: Optional[int] = None) -> None:
        self.index = index
        self.rank = rank
        if rank is None:
            super().__init__(f"generator index {index!r} must be a positive integer")
        else:
            super().__init__(f"generator x{index} is out of range 1..{rank}")


class WordOverflowError(NilpotraError, OverflowError):
    """A word exponent left the signed 64-bit range."""


class ResourceLimitError(NilpotraError):
    """A configured resource cap was exceeded."""

    def __init__(self, limit_name: str, limit: int, observed: int) -> None:
        self.limit_name = limit_name
        self.limit = limit
        self.observed = observed
        super().__init__(f"{limit_name} exceeded: {observed} > {limit}")


class ContextMismatchError(NilpotraError, ValueError):
    """Operands belong to different free nilpotent groups."""


class NotAnAutomorphismError(NilpotraError, ValueError):
    """An endomorphism was used where an automorphism is required."""


class PreconditionError(NilpotraError, ValueError):
    """An operation was called outside of its domain."""


class CollectionError(NilpotraError, ArithmeticError):
    """The normal form solver reached an inconsistent state."""
