"""Exception hierarchy.  Each class carries the CLI exit code it maps to."""


class DiagramError(Exception):
    code = 1
    kind = "error"

    def __init__(self, message, where=None):
        super().__init__(message)
        self.message = message
        self.where = where

    def __str__(self):
        if self.where is None:
            return self.message
        return f"{self.where}: {self.message}"


class ParseError(DiagramError):
    code = 2
    kind = "parse_error"


class ValidationError(DiagramError):
    code = 3
    kind = "validation_error"


class AdmissibilityError(DiagramError):
    code = 4
    kind = "admissibility_error"


class ConsistencyError(DiagramError):
    """Two independent routes to the same number disagreed."""

    code = 5
    kind = "internal_consistency_failure"
