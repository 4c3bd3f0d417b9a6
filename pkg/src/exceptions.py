class TraceLabError(ValueError):
    """Base class of all errors raised by trace_lab operations."""


# ===== exact linear algebra =====
class FieldMismatch(TraceLabError):
    pass


class DimensionMismatch(TraceLabError):
    pass


class SingularMatrix(TraceLabError):
    pass


# ===== algebras and modules =====
class MissingIdempotents(TraceLabError):
    pass


class AlgebraMismatch(TraceLabError):
    pass


class CompositionMismatch(TraceLabError):
    pass


class NotIdempotent(TraceLabError):
    pass


class NotProjective(TraceLabError):
    pass


class NotIntertwiner(TraceLabError):
    pass


class NotSubmodule(TraceLabError):
    pass


class ShapeMismatch(TraceLabError):
    pass


# ===== Hopf layer =====
class HopfMismatch(TraceLabError):
    pass


class AntipodeNotInvertible(TraceLabError):
    pass


class IntegralNotFound(TraceLabError):
    pass


class FrobeniusStructureError(TraceLabError):
    """Raised when (H, g, lambda) does not define a symmetric Frobenius structure."""


class NotPivotal(FrobeniusStructureError):
    pass


class NotUnimodular(FrobeniusStructureError):
    pass


class NotSymmetric(FrobeniusStructureError):
    pass


class Degenerate(FrobeniusStructureError):
    pass


class DegenerateGram(TraceLabError):
    pass


# ===== input =====
class WorkspaceError(TraceLabError):
    def __init__(self, location, message):
        super(WorkspaceError, self).__init__(f'{location}: {message}')
        self.location = location
        self.message = message
