"""Exception hierarchy shared by all modules.

The CLI maps these onto exit codes, so every failure raised by the library
should be one of them.
"""


class KhError(Exception):
    """Base class for library errors."""


class ContractError(KhError, ValueError):
    """An argument violates a documented precondition (shape, length, index)."""


class ValidationError(KhError, ValueError):
    """An input diagram or graph fails validation.

    ``violations`` holds the individual human-readable problems.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations) or "invalid input")


class UnsupportedInputError(KhError, ValueError):
    """Input is well formed but outside what the construction handles (e.g. loops)."""


class ResourceLimitError(KhError):
    """A configured size guard would be exceeded."""


class ComplexIntegrityError(KhError, RuntimeError):
    """A chain complex failed d^2 = 0; indicates a convention bug."""
