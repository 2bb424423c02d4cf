"""Exception hierarchy shared by every module."""


class DiscordError(Exception):
    """Base class for all package errors."""


class DimensionError(DiscordError, ValueError):
    """Matrix has an unsupported or mismatched dimension."""


class ValidationError(DiscordError, ValueError):
    """Input matrix is not Hermitian, unit-trace or positive semidefinite."""


class ParameterError(DiscordError, ValueError):
    """State-family parameters fall outside their valid region."""


class NumericalError(DiscordError, ArithmeticError):
    """A numerical routine produced a result outside its guaranteed bounds."""
