"""Exception hierarchy.

``UsageError`` subclasses map to CLI exit code 2, ``DomainError``
subclasses to exit code 1.
"""


class DimmonoidError(Exception):
    pass


class UsageError(DimmonoidError, ValueError):
    pass


class ParseError(UsageError):
    pass


class DimensionError(UsageError):
    pass


class CapacityError(UsageError):
    pass


class ConfigurationError(UsageError):
    pass


class DomainError(DimmonoidError):
    """An input that is well formed but outside the operation's domain."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotMemberError(DomainError):
    pass


class AdmissibilityError(DomainError):
    pass


class NotFullAffineError(DomainError):
    pass


class InternalError(DimmonoidError):
    """A structural property that must always hold was violated."""
