"""Exception types shared across the package."""

from __future__ import annotations


class ScholarNetError(Exception):
    """Base class for every error raised by scholarnet."""


class MalformedRow(ScholarNetError):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class DuplicatePubId(ScholarNetError):
    def __init__(self, pub_id: str, line: int | None = None):
        self.pub_id = pub_id
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"duplicate pub_id {pub_id!r}{where}")


class EmptyName(ScholarNetError):
    pass


class UnknownAuthor(ScholarNetError):
    def __init__(self, author_id):
        self.author_id = author_id
        super().__init__(f"unknown author id {author_id!r}")


class LengthMismatch(ScholarNetError):
    pass


class DegenerateInput(ScholarNetError):
    """Raised when a rank correlation is undefined (constant input)."""


class InsufficientData(ScholarNetError):
    pass


class UnknownMeasure(ScholarNetError):
    def __init__(self, name: str, choices=()):
        self.name = name
        msg = f"unknown measure {name!r}"
        if choices:
            msg += f"; choose from {', '.join(choices)}"
        super().__init__(msg)
