"""Conversion of results into JSON representable values."""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Any

from ..arith.polyring import Polynomial


def to_jsonable(value: Any) -> Any:  # noqa: PLR0911
    """Return value with Fractions, polynomials and tuples made JSON friendly.

    Fractions become ints when integral and 'a/b' strings otherwise,
    polynomials become their text form and tuples become lists.
    """
    if value is None or isinstance(value, bool | str):
        return value
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return value.numerator
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, Polynomial):
        return str(value)
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, list | tuple):
        return [to_jsonable(item) for item in value]
    if hasattr(value, "as_dict"):
        return value.as_dict()
    raise TypeError(f"Can't serialize {value!r}")
