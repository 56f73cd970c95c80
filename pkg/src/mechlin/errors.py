"""Error taxonomy shared by the library, CLI, and service.

Every failure that callers are expected to branch on carries a stable
``code`` string.  The HTTP layer maps these to 400-with-body, the CLI
maps them to exit status 1, and library callers can catch the base
class or a concrete subclass.
"""

from __future__ import annotations


class MechlinError(Exception):
    """Base class for all engine errors.

    Attributes:
        code: stable machine-readable identifier, never renamed.
        detail: human-readable message.
    """

    code = "Error"

    def __init__(self, detail: str = ""):
        super().__init__(detail)
        self.detail = detail


class DivisionByZero(MechlinError):
    code = "DivisionByZero"


class ShapeMismatch(MechlinError):
    code = "ShapeMismatch"


class ZeroPivot(MechlinError):
    """Raised by elimination with pivoting disabled when a pivot vanishes."""

    code = "ZeroPivot"

    def __init__(self, k: int, detail: str = ""):
        super().__init__(detail or f"zero pivot at elimination step {k}")
        self.k = k


class Singular(MechlinError):
    code = "Singular"


class SingularBlock(MechlinError):
    """Leading block is singular where a block factoring needs it invertible."""

    code = "SingularBlock"


class RankDeficient(MechlinError):
    code = "RankDeficient"

    def __init__(self, detail: str = "", col: int = -1):
        super().__init__(detail or "matrix is rank deficient")
        self.col = col


class NotPositiveDefinite(MechlinError):
    code = "NotPositiveDefinite"

    def __init__(self, k: int, detail: str = ""):
        super().__init__(detail or f"leading minor {k} is not positive")
        self.k = k


class NotSkewSymmetric(MechlinError):
    code = "NotSkewSymmetric"


class NonlinearError(MechlinError):
    """Equation text contains a product or power of unknowns."""

    code = "NonlinearError"


class ParseError(MechlinError):
    code = "SyntaxError"

    def __init__(self, detail: str, position: int = -1):
        super().__init__(detail)
        self.position = position


class VariableMismatch(MechlinError):
    code = "VariableMismatch"


class NonConvergence(MechlinError):
    code = "NonConvergence"


class ConstructionError(MechlinError):
    """An internal self-check of a constructed object failed."""

    code = "ConstructionError"


class NoValidOption(MechlinError):
    code = "NoValidOption"


class NotFound(MechlinError):
    code = "NotFound"


class InvalidArgument(MechlinError):
    code = "InvalidArgument"
