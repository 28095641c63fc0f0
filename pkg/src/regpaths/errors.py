"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the domain of an operation."""


class UnbalancedError(DomainError):
    """A word does not factor into balanced blocks.

    ``position`` is the 0-based index into the expanded word where the
    factorization broke down (``len(word)`` if the word ended early).
    """

    def __init__(self, message, position):
        super().__init__(f"{message} (position {position})")
        self.position = position


class ConditionOneError(DomainError):
    """No associated word: a two-letter restriction is unbalanced or a
    refinement condition fails."""

    def __init__(self, message, restriction):
        super().__init__(message)
        self.restriction = restriction


class BudgetExceeded(RuntimeError):
    """An enumeration ran past its configured budget."""
