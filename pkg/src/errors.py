"""
Exception hierarchy
"""


class GsatError(Exception):
    """Base class for all toolkit errors"""


class InputError(GsatError, ValueError):
    """Malformed or out-of-range user input"""


class StructuralError(GsatError, RuntimeError):
    """A construction did not behave as finite-type theory requires"""


class VerificationFailure(GsatError, AssertionError):
    """A verified statement turned out false"""

    def __init__(self, message, details=None):
        super().__init__(message)
        self.details = details or {}
