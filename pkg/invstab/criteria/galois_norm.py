"""Norms of Moebius values in binomial extensions and along the iterate tower."""

from __future__ import annotations

from dataclasses import dataclass, field
import logging

from ..arith.finite_field import ExtElem, ExtFieldCtx, PrimeFieldCtx, ext_norm
from ..const import DEGREE_CEILING
from ..dynamics.iterate import iter_reduced_iterates
from ..dynamics.xseq import IdentityReport, xseq_generate
from ..exceptions import FieldDivisionByZeroError, InconsistencyError, InvalidInputError
from .irreducibility import binomial_irred_fq, rabin_irred_fq

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class BinomialExtension:
    """F_p(gamma) with gamma a root of the irreducible z^d + m.

    The base must be a prime field F_p.
    """

    base: PrimeFieldCtx
    m: int
    d: int
    ext: ExtFieldCtx = field(init=False, compare=False)

    def __post_init__(self) -> None:
        """Validate irreducibility and build the extension."""
        if not isinstance(self.base, PrimeFieldCtx):
            raise InvalidInputError(
                f"Binomial extensions need a prime base field, not {self.base!r}"
            )
        m = self.m % self.base.p
        object.__setattr__(self, "m", m)
        certificate = binomial_irred_fq(self.base, self.d, -m)
        if not certificate.is_irreducible:
            raise InvalidInputError(
                f"z^{self.d} + {m} is reducible over F_{self.base.p}: "
                f"{certificate.condition}"
            )
        modulus = (m,) + (0,) * (self.d - 1) + (1,)
        object.__setattr__(
            self, "ext", ExtFieldCtx(self.base, modulus, check_modulus=False)
        )

    @property
    def gamma(self) -> ExtElem:
        """Return the residue class of z."""
        return self.ext.gen

    def linear(self, a: int, b: int) -> ExtElem:
        """Return a*gamma + b."""
        ext = self.ext
        return ext.add(ext.mul(ext.embed(a), self.gamma), ext.embed(b))


def norm_mobius(
    extension: BinomialExtension,
    a: int,
    b: int,
    e: int,
    t: int,
    *,
    verify: bool = True,
) -> int:
    """Return N((a gamma + b)/(e gamma + t)) by the closed form.

    The closed form is (b^d + (-1)^d m a^d) / (t^d + (-1)^d m e^d). With
    verify the value is compared with the product of Frobenius conjugates.
    """
    base = extension.base
    d = extension.d
    a, b, e, t = (base.convert(value) for value in (a, b, e, t))
    if base.mul(a, e) == 0:
        raise InvalidInputError("a*e = 0 is excluded")
    sign_m = base.mul(base.sign_power(d), extension.m)
    numer = base.add(base.pow(b, d), base.mul(sign_m, base.pow(a, d)))
    denom = base.add(base.pow(t, d), base.mul(sign_m, base.pow(e, d)))
    if denom == 0:
        raise FieldDivisionByZeroError("t^d + (-1)^d m e^d vanishes")
    value = base.exquo(numer, denom)
    if verify:
        direct = norm_mobius_by_conjugates(extension, a, b, e, t)
        if direct != value:
            raise InconsistencyError(
                f"Closed form {value} != conjugate product {direct} for {(a, b, e, t)}"
            )
    return value


def norm_mobius_by_conjugates(
    extension: BinomialExtension,
    a: int,
    b: int,
    e: int,
    t: int,
) -> int:
    """Return N((a gamma + b)/(e gamma + t)) as a ratio of conjugate products."""
    ext = extension.ext
    numer = ext.norm_by_conjugates(extension.linear(a, b))
    denom = ext.norm_by_conjugates(extension.linear(e, t))
    return extension.base.exquo(numer, denom)


def verify_norm_chain(
    p: int,
    d: int,
    c: int,
    depth: int,
    *,
    degree_ceiling: int = DEGREE_CEILING,
) -> IdentityReport:
    """Check N(c - 1/beta_n) = (-1)^d x_{n+1}/x_n in F_p(beta_n) = F_p[z]/(g_n).

    Levels where g_n is reducible or x_n vanishes are noted and skipped;
    levels above the degree ceiling stop the walk.
    """
    base = PrimeFieldCtx(p)
    report = IdentityReport(f"norm chain p={p} d={d} c={c}")
    seq = xseq_generate(base, d, c, depth + 1)
    sign = base.sign_power(d)
    c_value = base.convert(c)
    for iterate in iter_reduced_iterates(base, d, c):
        n = iterate.n
        if n > depth:
            break
        if iterate.g.degree > degree_ceiling:
            report.notes.append(f"n={n}: degree {iterate.g.degree} above ceiling")
            break
        if not rabin_irred_fq(base, iterate.g).is_irreducible:
            report.notes.append(f"n={n}: g_n reducible, level skipped")
            continue
        if base.is_zero(seq.x(n)):
            report.notes.append(f"n={n}: x_n = 0, level skipped")
            continue
        ext = ExtFieldCtx(base, iterate.g.coeffs, check_modulus=False)
        beta = ext.gen
        value = ext.sub(ext.embed(c_value), ext.inv(beta))
        lhs = ext_norm(ext, value)
        rhs = base.mul(sign, base.exquo(seq.x(n + 1), seq.x(n)))
        _LOGGER.debug("Norm chain n=%d: %d vs %d", n, lhs, rhs)
        report.add("norm-chain", n, lhs == rhs, f"{lhs} vs {rhs}")
    return report
