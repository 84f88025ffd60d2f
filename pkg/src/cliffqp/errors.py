"""Exception types shared across the package."""


class DomainError(ValueError):
    """A value violates a mathematical precondition (e.g. inverting zero)."""


class UsageError(ValueError):
    """Arguments are malformed or mutually inconsistent (e.g. shape mismatch)."""


class UnsupportedRingError(TypeError):
    """The operation needs a field (or other ring feature) the ring lacks."""


class EligibilityError(DomainError):
    """The construction does not exist for this rank/characteristic combination."""
