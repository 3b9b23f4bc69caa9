"""invstab - inverse stability of binomials z^d + c."""

from .const import SCHEMA_VERSION

__all__ = ("SCHEMA_VERSION",)
