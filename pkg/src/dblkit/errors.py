"""Exception hierarchy. Everything the library raises on bad input derives from DblkitError."""

from __future__ import annotations


class DblkitError(Exception):
    pass


class MalformedTable(DblkitError):
    """A table refers to ids that were never declared."""


class ClosureExceeded(DblkitError):
    """An operation produced a value outside the declared finite carrier or size bound."""


class MiddleMismatch(DblkitError):
    """Profunctors composed over different middle categories."""


class MissingPullback(DblkitError):
    pass


class MissingPushout(DblkitError):
    pass


class BoundaryMismatch(DblkitError):
    """Cells whose boundaries do not line up were combined."""


class BudgetExceeded(DblkitError):
    """An exhaustive search would exceed its configured budget."""


class NotStrict(DblkitError):
    pass


class PreconditionFailed(DblkitError):
    """A hypothesis of a checked proposition does not hold.

    ``hypothesis`` names the failing assumption so callers (and the CLI) can report it.
    """

    def __init__(self, hypothesis: str, message: str | None = None):
        self.hypothesis = hypothesis
        super().__init__(message or f"precondition failed: {hypothesis}")


class ConstructionFailed(DblkitError):
    pass


class ElaborationError(DblkitError):
    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(d.message for d in self.diagnostics) or "elaboration failed")


class CrossCheckFailed(AssertionError):
    """Two independently computed verdicts that must agree did not. Always a library bug."""
