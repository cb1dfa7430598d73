"""Exception hierarchy shared by all jbdet modules."""


class JbdetError(Exception):
    """Base class for everything raised deliberately by this package."""


class DomainError(JbdetError):
    """Input violates a documented precondition (shape, level, predicate)."""


class LevelMismatchError(DomainError):
    """Two Cayley-Dickson elements of different levels were combined."""


class NumericError(JbdetError):
    """A numerical routine failed to reach its accuracy contract."""


class SingularError(NumericError):
    """Inversion of a singular element was requested."""


class UnsupportedInputError(JbdetError):
    """The input is valid but outside the constructive reach of the library."""


class ConsistencyError(JbdetError):
    """An internal cross-check failed; carries the worst residual seen."""

    def __init__(self, message: str, residual: float = float("nan")):
        super().__init__(message)
        self.residual = residual
