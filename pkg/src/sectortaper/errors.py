"""Exception types raised across the package."""


class SectorTaperError(Exception):
    """Base class for all package errors."""


class DimensionError(SectorTaperError, ValueError):
    """Operands act on different numbers of qubits, or an index is out of range."""


class SizeLimitError(SectorTaperError):
    """A dense/basis-enumerating operation was asked to exceed the matrix limit."""


class ReductionError(SectorTaperError):
    """A qubit-elimination step was attempted on an operator that does not admit it.

    ``terms`` holds the offending Pauli labels (if any) and ``trace`` the
    stages completed before the failure, when raised from a full pipeline.
    """

    def __init__(self, message, terms=(), trace=None):
        super().__init__(message)
        self.terms = tuple(terms)
        self.trace = trace


class NotReducibleError(ReductionError):
    """The operator's support is larger than half of its Hilbert space."""


class ParseError(SectorTaperError):
    """Malformed input text; carries a 1-based line and column."""

    def __init__(self, message, line, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.reason = message
        self.line = line
        self.column = column
