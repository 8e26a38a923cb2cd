"""Exception hierarchy shared across the package."""

from __future__ import annotations


class OpenBookKitError(Exception):
    pass


class DimensionError(OpenBookKitError, ValueError):
    """A homology vector does not match the basis it is used with."""


class CoCoreError(OpenBookKitError, ValueError):
    """A stabilization curve does not cross the new co-core exactly once."""


class PlacementError(OpenBookKitError, ValueError):
    def __init__(self, message: str, violations: tuple = ()) -> None:
        super().__init__(message)
        self.violations = tuple(violations)


class FramingError(OpenBookKitError, ValueError):
    pass


class ReplayError(OpenBookKitError):
    """Replaying a certificate did not reproduce what it records."""


class InterchangeError(OpenBookKitError, ValueError):
    pass


class WordSpecError(OpenBookKitError, ValueError):
    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


class UnsupportedDocumentError(OpenBookKitError, ValueError):
    """A command received a document kind it does not handle."""
