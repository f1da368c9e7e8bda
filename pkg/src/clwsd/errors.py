from __future__ import annotations


class FormatError(ValueError):
    """Raised when an input file violates its line grammar.

    ``line`` is 1-based; ``None`` for whole-file problems such as a
    row count that disagrees with the header.
    """

    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        self.reason = message
        where = source or "<stream>"
        if line is not None:
            where = f"{where}:{line}"
        super().__init__(f"{where}: {message}")


class ScoringError(ValueError):
    """Answers cannot be scored against the given gold key."""
