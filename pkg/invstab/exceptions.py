"""invstab Exceptions."""


class InvStabError(Exception):
    """Base Exception for invstab exceptions."""


class InvalidInputError(InvStabError):
    """Raise if an argument violates a precondition."""


class ParsePolynomialError(InvalidInputError):
    """Invalid polynomial expression."""


class FieldDivisionByZeroError(InvStabError, ZeroDivisionError):
    """Raise if zero is inverted in a field."""


class InexactDivisionError(InvStabError):
    """Raise if a ring division leaves a remainder."""


class UnsupportedCharacteristicError(InvStabError):
    """Raise if the field characteristic divides the degree."""


class SizeLimitError(InvStabError):
    """Raise if a coefficient, degree or depth guard is exceeded."""

    def __init__(self, message: str, index: int | None = None) -> None:
        """Initialize with the offending iteration index."""
        super().__init__(message)
        self.index = index


class InconsistencyError(InvStabError):
    """Raise if an identity that must hold was refuted."""
