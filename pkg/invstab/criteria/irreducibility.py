"""Irreducibility criteria over F_q, Q and Q(t)."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from functools import lru_cache
import logging
from math import gcd
from typing import Any

from sympy import prime, primefactors

from ..arith.domain import RationalField
from ..arith.finite_field import FieldCtx, PrimeFieldCtx, is_m_free
from ..arith.polyring import (
    Polynomial,
    are_coprime,
    poly_gcd,
    primitive_integer_coeffs,
    pth_root_ft,
)
from ..arith.scalars import Rational, prime_divisors, radical, rational_root
from ..const import PRIME_BUDGET
from ..exceptions import InvalidInputError
from ..utils.serialize import to_jsonable

_LOGGER = logging.getLogger(__name__)

# Content of the lower coefficients is only factored for extra Eisenstein
# primes below this size.
_EISENSTEIN_FACTOR_LIMIT = 10**12


class Irreducibility(StrEnum):
    """Outcome of an irreducibility test."""

    IRREDUCIBLE = "Irreducible"
    REDUCIBLE = "Reducible"
    INCONCLUSIVE = "Inconclusive"


class CertificateMethod(StrEnum):
    """How an irreducibility outcome was obtained."""

    BINOMIAL_CRITERION = "BinomialCriterion"
    RABIN = "Rabin"
    MOD_P_REDUCTION = "ModPReduction"
    EISENSTEIN = "Eisenstein"
    FACTORIZATION = "Factorization"


@dataclass(frozen=True, slots=True)
class IrreducibilityCertificate:
    """Irreducibility outcome with the evidence behind it."""

    verdict: Irreducibility
    method: CertificateMethod
    witness: Any = None
    prime: int | None = None
    condition: str | None = None

    @property
    def is_irreducible(self) -> bool:
        """Return True for an Irreducible verdict."""
        return self.verdict is Irreducibility.IRREDUCIBLE

    @property
    def is_reducible(self) -> bool:
        """Return True for a Reducible verdict."""
        return self.verdict is Irreducibility.REDUCIBLE

    def as_dict(self) -> dict[str, Any]:
        """Return a JSON representable dict."""
        return {
            "verdict": self.verdict.value,
            "method": self.method.value,
            "prime": self.prime,
            "witness": to_jsonable(self.witness),
            "condition": self.condition,
        }


def _irreducible(method: CertificateMethod, **kwargs: Any) -> IrreducibilityCertificate:
    return IrreducibilityCertificate(Irreducibility.IRREDUCIBLE, method, **kwargs)


def _reducible(method: CertificateMethod, **kwargs: Any) -> IrreducibilityCertificate:
    return IrreducibilityCertificate(Irreducibility.REDUCIBLE, method, **kwargs)


def binomial_irred_q(d: int, a: Rational) -> IrreducibilityCertificate:
    """Decide irreducibility of z^d + a over Q by the binomial criterion."""
    if d < 2:
        raise InvalidInputError(f"d={d} must be >= 2")
    a = Fraction(a)
    if a == 0:
        raise InvalidInputError("a = 0 is excluded")
    for p in prime_divisors(d):
        root = rational_root(-a, p)
        if root is not None:
            return _reducible(
                CertificateMethod.BINOMIAL_CRITERION,
                witness=root,
                prime=p,
                condition=f"-a = ({root})^{p} is a {p}-th power",
            )
    if d % 4 == 0:
        root = rational_root(a / 4, 4)
        if root is not None:
            return _reducible(
                CertificateMethod.BINOMIAL_CRITERION,
                witness=root,
                prime=2,
                condition=f"a = 4*({root})^4 lies in 4K^4",
            )
    return _irreducible(CertificateMethod.BINOMIAL_CRITERION)


def binomial_irred_fq(ctx: FieldCtx, t: int, b: object) -> IrreducibilityCertificate:
    """Decide irreducibility of x^t - b over F_q.

    Irreducible iff rad(t) | q - 1, b is rad(t)-free and q = 1 (mod 4)
    whenever 4 | t.
    """
    if t < 2:
        raise InvalidInputError(f"t={t} must be >= 2")
    value = ctx.convert(b)
    if ctx.is_zero(value):  # type: ignore[arg-type]
        return _reducible(
            CertificateMethod.BINOMIAL_CRITERION,
            witness=Polynomial.monomial(ctx, 1),
            condition="b = 0: z divides x^t",
        )
    q = ctx.order
    rad = radical(t)
    if (q - 1) % rad:
        ell = next(ell for ell in prime_divisors(t) if (q - 1) % ell)
        return _reducible(
            CertificateMethod.BINOMIAL_CRITERION,
            witness=ell,
            prime=ell,
            condition=f"(i) rad(t)={rad} does not divide q-1={q - 1}",
        )
    for ell in prime_divisors(t):
        if not is_m_free(ctx, value, ell):
            return _reducible(
                CertificateMethod.BINOMIAL_CRITERION,
                witness=ell,
                prime=ell,
                condition=f"(ii) b is an {ell}-th power",
            )
    if t % 4 == 0 and q % 4 != 1:
        return _reducible(
            CertificateMethod.BINOMIAL_CRITERION,
            witness=4,
            prime=2,
            condition=f"(iii) 4 | t but q={q} is not 1 mod 4",
        )
    return _irreducible(CertificateMethod.BINOMIAL_CRITERION)


def binomial_irred_ft(d: int, a: Polynomial[Fraction]) -> IrreducibilityCertificate:
    """Decide irreducibility of z^d + a over Q(t) for a in Q[t]."""
    if d < 2:
        raise InvalidInputError(f"d={d} must be >= 2")
    if not isinstance(a.domain, RationalField):
        raise InvalidInputError("a must be a polynomial over Q")
    if a.is_zero:
        raise InvalidInputError("a = 0 is excluded")
    for p in prime_divisors(d):
        root = pth_root_ft(-a, p)
        if root is not None:
            return _reducible(
                CertificateMethod.BINOMIAL_CRITERION,
                witness=root,
                prime=p,
                condition=f"-a = ({root})^{p} is a {p}-th power",
            )
    if d % 4 == 0:
        root = pth_root_ft(a.scale(Fraction(1, 4)), 4)
        if root is not None:
            return _reducible(
                CertificateMethod.BINOMIAL_CRITERION,
                witness=root,
                prime=2,
                condition=f"a = 4*({root})^4 lies in 4K^4",
            )
    return _irreducible(CertificateMethod.BINOMIAL_CRITERION)


def frobenius_monomial_base[T](
    f: Polynomial[T],
    q: int,
) -> list[Polynomial[T]]:
    """Return z^(i*q) mod f for i = 0..deg(f) - 1."""
    n = f.degree
    base = [Polynomial(f.domain, (f.domain.one,), f.var)]
    if n < 2:
        return base[:n]
    z_q = Polynomial.monomial(f.domain, 1, var=f.var).pow_mod(q, f)
    base.append(z_q)
    for _ in range(2, n):
        base.append((base[-1] * z_q) % f)
    return base


def frobenius_map[T](
    h: Polynomial[T],
    f: Polynomial[T],
    base: Sequence[Polynomial[T]],
) -> Polynomial[T]:
    """Return h^q mod f given the Frobenius monomial base of f."""
    h = h % f
    dom = f.domain
    n = f.degree
    acc = [dom.zero] * n
    for coef, row in zip(h.coeffs, base, strict=False):
        if dom.is_zero(coef):
            continue
        for j, value in enumerate(row.coeffs):
            acc[j] = dom.add(acc[j], dom.mul(coef, value))
    return Polynomial(dom, tuple(acc), f.var)


def rabin_irred_fq[T](ctx: FieldCtx, f: Polynomial[T]) -> IrreducibilityCertificate:
    """Rabin's irreducibility test over F_q."""
    if f.domain != ctx:
        raise InvalidInputError("Polynomial and field context differ")
    n = f.degree
    if n < 1:
        raise InvalidInputError("Rabin's test needs degree >= 1")
    if not f.is_monic:
        f = f.monic()
    if n == 1:
        return _irreducible(CertificateMethod.RABIN)
    base = frobenius_monomial_base(f, ctx.order)
    z = Polynomial.monomial(ctx, 1, var=f.var)
    indices = {n // ell for ell in prime_divisors(n)}
    h = base[1]
    for i in range(1, n):
        if i in indices:
            common = poly_gcd(h - z, f)
            if common.degree > 0:
                _LOGGER.debug(
                    "Rabin: gcd(z^(q^%d) - z, f) has degree %d", i, common.degree
                )
                return _reducible(
                    CertificateMethod.RABIN,
                    witness=common if common.degree < n else None,
                    condition=f"factor of degree dividing {i}",
                )
        h = frobenius_map(h, f, base)
    if h != z % f:
        return _reducible(CertificateMethod.RABIN, condition="z^(q^n) != z mod f")
    return _irreducible(CertificateMethod.RABIN)


@lru_cache(maxsize=16)
def default_prime_budget(size: int = PRIME_BUDGET) -> tuple[int, ...]:
    """Return the first size primes."""
    return tuple(int(prime(i)) for i in range(1, size + 1))


def _is_eisenstein(coeffs: Sequence[int], p: int) -> bool:
    if coeffs[-1] % p == 0 or coeffs[0] % (p * p) == 0:
        return False
    return all(value % p == 0 for value in coeffs[:-1])


def _eisenstein_primes(coeffs: Sequence[int], budget: Sequence[int]) -> list[int]:
    candidates = list(budget)
    content = gcd(*coeffs[:-1])
    if 1 < content < _EISENSTEIN_FACTOR_LIMIT:
        candidates.extend(int(p) for p in primefactors(content) if p not in budget)
    return candidates


def certify_irred_q(
    f: Polynomial[object],
    prime_budget: Sequence[int] | None = None,
) -> IrreducibilityCertificate:
    """Certify irreducibility over Q of a primitive integer polynomial.

    Eisenstein is tried on f and its reversal, then f mod p for each budget
    prime with Rabin's test. This path never reports Reducible.
    """
    if f.is_zero or f.degree < 1:
        raise InvalidInputError("Certification needs degree >= 1")
    coeffs = list(primitive_integer_coeffs(f))
    raw = [Fraction(coef) for coef in f.coeffs]  # type: ignore[arg-type]
    if any(value.denominator != 1 for value in raw) or gcd(*(int(v) for v in raw)) != 1:
        raise InvalidInputError(f"{f} is not a primitive integer polynomial")
    budget = tuple(prime_budget) if prime_budget is not None else default_prime_budget()

    for p in _eisenstein_primes(coeffs, budget):
        if _is_eisenstein(coeffs, p):
            return _irreducible(CertificateMethod.EISENSTEIN, prime=p, witness=p)
    if coeffs[0]:
        reverse = coeffs[::-1]
        for p in _eisenstein_primes(reverse, budget):
            if _is_eisenstein(reverse, p):
                return _irreducible(
                    CertificateMethod.EISENSTEIN,
                    prime=p,
                    witness=p,
                    condition="reversed polynomial",
                )

    for p in budget:
        if coeffs[-1] % p == 0:
            continue
        ctx = PrimeFieldCtx(p)
        reduced = Polynomial(ctx, tuple(value % p for value in coeffs), f.var)
        if not are_coprime(reduced, reduced.derivative()):
            _LOGGER.debug("Skipping p=%d: reduction is not squarefree", p)
            continue
        if rabin_irred_fq(ctx, reduced).is_irreducible:
            return _irreducible(CertificateMethod.MOD_P_REDUCTION, prime=p, witness=p)
    return IrreducibilityCertificate(
        Irreducibility.INCONCLUSIVE,
        CertificateMethod.MOD_P_REDUCTION,
        condition=f"no certifying prime among {len(budget)} budget primes",
    )
