"""Parsing of command line values."""

from __future__ import annotations

from fractions import Fraction
import re
from tokenize import TokenError

from sympy import Poly, Symbol
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)
from sympy.polys.polyerrors import PolynomialError

from ..arith.finite_field import FieldCtx
from ..arith.polyring import Polynomial, t_poly
from ..exceptions import ParsePolynomialError

_T = Symbol("t")
_GRAMMAR = re.compile(r"[0-9t+\-*/^()\s]+")
_TRANSFORMATIONS = (*standard_transformations, convert_xor)


def parse_t_polynomial(text: str) -> Polynomial[Fraction]:
    """Parse an expression such as 't^2+1' or '(t+1)^3/2' into Q[t]."""
    if not _GRAMMAR.fullmatch(text) or re.search(r"t\s*t", text):
        raise ParsePolynomialError(f"Invalid polynomial in t: {text!r}")
    try:
        expr = parse_expr(
            text,
            local_dict={"t": _T},
            transformations=_TRANSFORMATIONS,
            evaluate=True,
        )
        poly = Poly(expr, _T)
    except (
        SyntaxError,
        TokenError,
        TypeError,
        ZeroDivisionError,
        PolynomialError,
    ) as err:
        raise ParsePolynomialError(f"Invalid polynomial in t: {text!r}") from err
    coeffs = []
    for coeff in reversed(poly.all_coeffs()):
        if not coeff.is_Rational:
            raise ParsePolynomialError(
                f"Coefficient {coeff} of {text!r} is not rational"
            )
        coeffs.append(Fraction(int(coeff.p), int(coeff.q)))
    return t_poly(coeffs)


def parse_int(text: str) -> int:
    """Parse a signed integer."""
    try:
        return int(text.strip())
    except ValueError as err:
        raise ParsePolynomialError(f"Invalid integer: {text!r}") from err


def parse_field_element(text: str, ctx: FieldCtx | None = None) -> int | list[int]:
    """Parse an integer representative or a comma separated coefficient list.

    Coefficient lists are low degree first, optionally wrapped in brackets.
    """
    stripped = text.strip().removeprefix("[").removesuffix("]")
    if "," in stripped:
        value: int | list[int] = [parse_int(part) for part in stripped.split(",")]
    else:
        value = parse_int(stripped)
    if ctx is None:
        return value
    return ctx.to_json(ctx.convert(value))  # type: ignore[return-value]
