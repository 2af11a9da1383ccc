"""Exception types shared across the package."""


class GeometryError(Exception):
    """Base class for every error raised by this package."""


class ScalarParseError(GeometryError):
    """Syntax error in a scalar expression; carries the character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ScalarDomainError(GeometryError):
    """Division by zero, evaluation at a pole, or a malformed scalar."""


class DegenerateMetric(GeometryError):
    """A Gram matrix required to be invertible has zero determinant."""


class InconsistentSystem(GeometryError):
    """A linear system has no solution."""


class UnderdeterminedSystem(GeometryError):
    """A linear system has more than one solution where one was required."""


class InvalidFrame(GeometryError):
    """A submanifold frame violates one of its defining certificates."""


class RadicalRankNotOne(InvalidFrame):
    """The null space of the induced metric is not spanned by xi alone."""


class ScreenDegenerate(InvalidFrame):
    """The induced metric restricted to the screen basis is degenerate."""


class NoSuchN(InvalidFrame):
    """The defining system for the lightlike transversal N is unsolvable."""


class NotRSTHL(GeometryError):
    """phi of the radical generator does not span the screen transversal."""


class NotAscreen(GeometryError):
    """The structure vector has a component outside Rad(TM) + ltr(TM)."""


class MuZero(GeometryError):
    """The scalar mu extracted from the frame vanishes."""


class DecompositionInconsistent(GeometryError):
    """A Gauss-Weingarten split produced components that violate its frame."""


class NoTotallyRealSection(GeometryError):
    """No frame pair spans a nondegenerate totally real section."""


class CrossCheckMismatch(GeometryError):
    """Two independent constructions of the same object disagree."""


class NotEtaEinstein(GeometryError):
    """Ric is not a combination of g and the square of the structure form."""


class NotEinstein(GeometryError):
    """The companion Ricci tensor is not proportional to its metric."""


class ModelError(GeometryError):
    """A model file violates the schema; names the offending field path."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
