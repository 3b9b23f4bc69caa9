"""Sufficient conditions for inverse stability over Q and Q(t)."""

from __future__ import annotations

from fractions import Fraction
import logging
from typing import Any

from ..arith.polyring import (
    QT,
    Polynomial,
    are_coprime,
    is_pth_power_up_to_unit_ft,
    mason_stothers_check,
)
from ..arith.scalars import int_is_pth_power_up_to_unit, prime_divisors, rational_root
from ..const import MAX_DIGITS
from ..criteria.irreducibility import binomial_irred_ft, binomial_irred_q
from ..dynamics.xseq import IdentityReport, xseq_generate
from ..exceptions import InconsistencyError, InvalidInputError, SizeLimitError
from .verdict import Verdict, VerdictKind

_LOGGER = logging.getLogger(__name__)


def guarantee_z(d: int, c: int) -> Verdict:
    """Check the sufficient condition for inverse stability of z^d + c over Q.

    Guaranteed when z^d + c is irreducible and c is not +-m^p for any prime
    p | d. The corollary form (d odd, or d even and c not a square) is
    evaluated alongside and must agree.
    """
    context: dict[str, Any] = {"ring": "z", "d": d, "c": c}
    if d < 2:
        return Verdict(
            VerdictKind.INVALID_INPUT, reason=f"d={d} must be >= 2", **context
        )
    if c == 0:
        return Verdict(
            VerdictKind.INVALID_INPUT, reason="c = 0 is excluded", **context
        )

    certificate = binomial_irred_q(d, c)
    hypotheses = [f"z^{d} + {c} irreducible over Q: {certificate.is_irreducible}"]
    if not certificate.is_irreducible:
        return Verdict(
            VerdictKind.NOT_APPLICABLE,
            reason=f"z^{d} + {c} is reducible over Q: {certificate.condition}",
            witness=certificate.witness,
            certificate=certificate.as_dict(),
            hypotheses=tuple(hypotheses),
            **context,
        )

    violations = []
    if abs(c) == 1:
        violations.append(f"c = {c} is a unit")
    for p in prime_divisors(d):
        power = int_is_pth_power_up_to_unit(c, p)
        hypotheses.append(f"c not a unit times a {p}-th power: {not power}")
        if power:
            violations.append(f"c = {c} is a unit times a {p}-th power")
    general_holds = not violations

    if d % 2:
        cor_path = "d odd"
        cor_holds = True
    else:
        cor_path = "d even and c not a square"
        cor_holds = rational_root(c, 2) is None
    hypotheses.append(f"corollary path ({cor_path}): {cor_holds}")
    if general_holds != cor_holds:
        raise InconsistencyError(
            f"Hypothesis check {general_holds} and corollary path {cor_holds} disagree"
        )

    if general_holds:
        return Verdict(
            VerdictKind.GUARANTEED,
            reason=f"irreducible and {cor_path}",
            certificate=certificate.as_dict(),
            hypotheses=tuple(hypotheses),
            details={"corollary_path": cor_path},
            **context,
        )
    return Verdict(
        VerdictKind.NOT_APPLICABLE,
        reason="; ".join(violations),
        certificate=certificate.as_dict(),
        hypotheses=tuple(hypotheses),
        **context,
    )


def verify_thm24_internals(
    d: int,
    c: Polynomial[Fraction],
    count: int,
    *,
    max_digits: int = MAX_DIGITS,
) -> IdentityReport:
    """Check the x_n facts behind inverse stability over Q(t) for n <= count.

    deg x_n = (d^n - 1)/(d - 1) deg c, gcd(x_{2k}, c) = 1, x_{2k} is not a unit
    times a p-th power for p | d, and the coprime sum
    (-1)^d c x_{2k+1}^d + x_{2k}^(d^2) = x_{2k+2} obeys Mason-Stothers.
    """
    _require_ft_params(d, c)
    report = IdentityReport(f"x_n over Q[t] d={d} c={c}")
    try:
        seq = xseq_generate(QT, d, c, count, max_digits=max_digits)
        terms = list(seq.terms)
    except SizeLimitError as err:
        report.notes.append(f"size guard stopped the sequence at x_{err.index}")
        terms = list(xseq_generate(QT, d, c, (err.index or 2) - 1).terms)

    primes = prime_divisors(d)
    if any(is_pth_power_up_to_unit_ft(c, p) for p in primes):
        report.notes.append(
            "c is a unit times a p-th power for some p | d: "
            "checked through even indices"
        )
    for n, value in enumerate(terms, start=1):
        expected = (d**n - 1) // (d - 1) * c.degree
        report.add(
            "degree-law", n, value.degree == expected, f"{value.degree} vs {expected}"
        )
    for n in range(2, len(terms) + 1, 2):
        value = terms[n - 1]
        report.add("gcd-with-c", n, are_coprime(value, c))
        report.add(
            "even-not-power",
            n,
            not any(is_pth_power_up_to_unit_ft(value, p) for p in primes),
        )
    sign = -1 if d % 2 else 1
    for n in range(2, len(terms) - 1, 2):
        a = (c * terms[n] ** d).scale(Fraction(sign))
        b = terms[n - 1] ** (d * d)
        try:
            holds = mason_stothers_check(a, b, terms[n + 1])
        except InvalidInputError as err:
            report.add("mason-stothers", n + 2, False, str(err))
        else:
            report.add("mason-stothers", n + 2, holds)
    return report


def _require_ft_params(d: int, c: Polynomial[Fraction]) -> None:
    if d < 3:
        raise InvalidInputError(f"d={d}: Q(t) guarantee needs d >= 3")
    if c.is_constant:
        raise InvalidInputError("c must be a nonconstant polynomial in t")


def guarantee_ft(
    d: int,
    c: Polynomial[Fraction],
    *,
    internals_depth: int | None = None,
) -> Verdict:
    """Check the sufficient condition for inverse stability of z^d + c over Q(t).

    With internals_depth the x_n facts are verified too and attached under
    details.
    """
    context: dict[str, Any] = {"ring": "ft", "d": d, "c": c}
    try:
        _require_ft_params(d, c)
    except InvalidInputError as err:
        return Verdict(VerdictKind.INVALID_INPUT, reason=str(err), **context)

    certificate = binomial_irred_ft(d, c)
    hypotheses = (
        "d >= 3",
        "c nonconstant",
        f"z^{d} + c irreducible over Q(t): {certificate.is_irreducible}",
    )
    if not certificate.is_irreducible:
        return Verdict(
            VerdictKind.NOT_APPLICABLE,
            reason=f"z^{d} + c is reducible over Q(t): {certificate.condition}",
            witness=certificate.witness,
            certificate=certificate.as_dict(),
            hypotheses=hypotheses,
            **context,
        )
    details = {}
    if internals_depth:
        internals = verify_thm24_internals(d, c, internals_depth)
        if not internals.ok:
            _LOGGER.warning("x_n checks failed for d=%d c=%s", d, c)
        details["internals"] = internals.as_dict()
    return Verdict(
        VerdictKind.GUARANTEED,
        reason=f"z^{d} + c irreducible over Q(t) with d >= 3 and c nonconstant",
        certificate=certificate.as_dict(),
        hypotheses=hypotheses,
        details=details,
        **context,
    )
