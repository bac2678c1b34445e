"""Exception hierarchy shared by all modules.

Every error carries a short machine-readable ``code`` so the command line
front end can report it as ``{"error": code, "detail": ...}``.
"""


class TropicalError(Exception):
    code = "Error"
    #: exit status used by the command line front end
    exit_status = 2


class ValidationError(TropicalError):
    code = "ValidationError"


class ParseError(ValidationError):
    code = "ParseError"


class SchemaMismatch(ValidationError):
    code = "SchemaMismatch"


class UnsupportedOperation(ValidationError):
    code = "UnsupportedOperation"


class DimensionTooLarge(ValidationError):
    code = "DimensionTooLarge"


class DegenerateInput(ValidationError):
    code = "DegenerateInput"


class NotContained(ValidationError):
    code = "NotContained"


class UnknownElement(ValidationError):
    code = "UnknownElement"


class NotGraded(ValidationError):
    code = "NotGraded"


class NotEulerian(ValidationError):
    code = "NotEulerian"


class InvalidMatroid(ValidationError):
    code = "InvalidMatroid"


class LoopError(ValidationError):
    code = "LoopError"


class NotAFlat(ValidationError):
    code = "NotAFlat"


class NotAFan(ValidationError):
    code = "NotAFan"


class MissingLabel(ValidationError):
    code = "MissingLabel"


class MultiplicityUnsupported(ValidationError):
    code = "MultiplicityUnsupported"


class InconsistentGraph(ValidationError):
    code = "InconsistentGraph"


class RecessionFanChanged(ValidationError):
    code = "RecessionFanChanged"


class InvariantViolation(TropicalError):
    """A computed quantity contradicts a theorem; this is a bug or a broken
    precondition, never a user typo."""

    code = "InvariantViolation"
    exit_status = 3


class NonExactDivision(InvariantViolation):
    code = "NonExactDivision"


class NonNegativityViolation(InvariantViolation):
    code = "NonNegativityViolation"


class NegativeHodgeNumber(InvariantViolation):
    code = "NegativeHodgeNumber"
