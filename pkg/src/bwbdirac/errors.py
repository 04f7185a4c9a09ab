"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation (bad type label,
    non-integral weight, non-dominant highest weight, ...)."""


class CapExceeded(DomainError):
    """A configured enumeration cap would be exceeded."""


class InternalConsistencyError(RuntimeError):
    """Two independent computations disagree.

    Raised when a cross-check that the theory guarantees fails; this always
    points at an implementation bug and must never be swallowed.
    """
