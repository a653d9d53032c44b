"""Exception types shared across the package."""


class LengthMismatchError(ValueError):
    """Two sequences were required to have equal length and do not."""


class SymbolError(ValueError):
    """A symbol is not a member of the alphabet in use."""


class ModelError(ValueError):
    """A variation model or instance is malformed for the requested use."""


class InconsistencyError(RuntimeError):
    """Responses contradict the attack's assumptions (dishonest oracle or
    a secret that violates the variation model)."""


class SearchSpaceError(ValueError):
    """An exhaustive search was refused because the space exceeds the limit."""
