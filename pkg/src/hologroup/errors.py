"""Exception types shared across the package.

Every error that a caller is expected to catch derives from HoloError.
The CLI maps these onto its exit-code contract, so new error types
should be added here rather than raising bare ValueErrors from the
numeric modules.
"""


class HoloError(Exception):
    """Base class for all hologroup domain errors."""


class DimensionMismatch(HoloError):
    """Vector, word, or domain dimensions disagree."""


class SingularPoint(HoloError):
    """A coordinate inversion received the value 0."""


class NonInvertibleStep(HoloError):
    """A generator step is singular (zero diagonal entry, singular matrix)."""


class NotUnimodular(HoloError):
    """An integer exponent matrix has determinant other than +1 or -1."""

    def __init__(self, det: int):
        super().__init__(f"determinant is {det}, expected +1 or -1")
        self.det = det


class NotDiagonal(HoloError):
    """Diagonal extraction failed its multi-point consistency check."""

    def __init__(self, message: str, point=None):
        super().__init__(message)
        self.point = point


class InvalidAxis(HoloError):
    """Contour axis is not one of the domain's deleted coordinates."""


class OutsideDomain(HoloError):
    """A point that must lie in the domain does not."""


class ZeroOnContour(HoloError):
    """The tracked coordinate function vanishes on the contour."""


class BudgetExhausted(HoloError):
    """Adaptive refinement hit its sample budget without converging."""


class OutOfRange(HoloError):
    """Path parameter t lies outside [0, 1]."""


class DomainNotPreserved(HoloError):
    """Operation requires a word that maps the domain into itself."""


class SceneError(HoloError):
    """A scene file is malformed (schema, names, or dimensions)."""
