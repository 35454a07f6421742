"""Exception types raised across the package."""


class IndexOutOfRange(IndexError):
    """A vertex index is outside ``0..n-1``."""


class SelfLoop(ValueError):
    pass


class EmptyGraph(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


class NotC0PError(ValueError):
    """The graph's augmented adjacency matrix lacks the consecutive-zeros property."""


class StructureViolation(RuntimeError):
    """A derived (C1, C2, U) structure broke one of its invariants."""


class ConstructionFailure(RuntimeError):
    """A witness set failed verification after construction."""


class CapExceeded(ValueError):
    """Instance too large for an exhaustive search."""


class SpecViolation(ValueError):
    pass


class GraphFormatError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
