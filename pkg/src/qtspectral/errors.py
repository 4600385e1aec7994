"""Shared exception types."""


class QTSpectralError(Exception):
    """Base class for all library errors."""


class FieldError(QTSpectralError):
    """Invalid finite field construction or element operation."""


class OracleBudgetError(QTSpectralError):
    """An exhaustive search would exceed its configured budget."""


class PoolSizeError(QTSpectralError):
    """The eigenvalue set is too large for exhaustive subset enumeration."""


class RecordScopeError(QTSpectralError):
    """A defining-set bound record lies outside the eigenvalue set."""


class InternalCheckError(QTSpectralError):
    """A structural identity that must hold by construction failed."""
