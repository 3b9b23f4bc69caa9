"""Quadratic character sums and the Fermat prime enumeration of stable z^(2^n) + c."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import logging
from typing import Any, NamedTuple

from ..arith.finite_field import PrimeFieldCtx
from ..arith.polyring import Polynomial, are_coprime
from ..arith.scalars import is_prime, legendre
from ..dynamics.xseq import xseq_generate
from ..exceptions import InconsistencyError, InvalidInputError
from ..stability.decide import decide_fq
from ..stability.verdict import Verdict, VerdictKind
from ..utils.workers import ordered_map

_LOGGER = logging.getLogger(__name__)


def _require_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise InvalidInputError(f"p={p} is not an odd prime")


class CharSum(NamedTuple):
    """A character sum and whether it obeys |S| <= 2 sqrt(p)."""

    value: int
    within_bound: bool


def cubic_char_sum(p: int, f: Polynomial[int] | list[int]) -> CharSum:
    """Return sum over F_p of chi(f(x)) for a cubic f with distinct roots."""
    _require_odd_prime(p)
    ctx = PrimeFieldCtx(p)
    if not isinstance(f, Polynomial):
        f = Polynomial.from_coeffs(ctx, f)
    elif f.domain != ctx:
        f = f.reduce(ctx)
    if f.degree != 3:
        raise InvalidInputError(f"{f} is not a cubic over F_{p}")
    if not are_coprime(f, f.derivative()):
        raise InvalidInputError(f"{f} has a repeated root")
    value = sum(legendre(f(x), p) for x in range(p))
    within = value * value <= 4 * p
    if not within:
        _LOGGER.warning("Cubic sum %d for %s exceeds 2*sqrt(%d)", value, f, p)
    return CharSum(value, within)


def quad_char_sum(p: int, a: int, b: int, c: int) -> int:
    """Return sum over F_p of chi(a x^2 + b x + c).

    The direct sum is checked against -chi(a) for a nonzero discriminant and
    chi(a)(p - 1) otherwise.
    """
    _require_odd_prime(p)
    if a % p == 0:
        raise InvalidInputError("a = 0 is excluded")
    direct = sum(legendre(a * x * x + b * x + c, p) for x in range(p))
    chi_a = legendre(a, p)
    closed = -chi_a if (b * b - 4 * a * c) % p else chi_a * (p - 1)
    if direct != closed:
        raise InconsistencyError(
            f"Sum {direct} != closed form {closed} for {(p, a, b, c)}"
        )
    return direct


def fermat_exponent(p: int) -> int:
    """Return n with p = 2^(n+1) + 1 prime and n >= 3."""
    m = p - 1
    if p < 17 or m & (m - 1) or not is_prime(p):
        raise InvalidInputError(
            f"p={p} is not a prime of the form 2^(n+1) + 1 with n >= 3"
        )
    return m.bit_length() - 2


def cor28_bound(p: int) -> int:
    """Return floor((sqrt(p) - 1)^2 / 8) exactly."""
    # k <= (sqrt(p)-1)^2/8  iff  p + 1 - 8k >= 2 sqrt(p)  with both sides >= 0
    k = (p + 1) // 8
    while k > 0:
        rest = p + 1 - 8 * k
        if rest >= 0 and rest * rest >= 4 * p:
            return k
        k -= 1
    return 0


def indicator_sum(p: int) -> Fraction:
    """Return the sum of (chi(x-1)+1)(1-chi(x))(1-chi(x+1))/8 term by term."""
    total = Fraction(0)
    for x in range(p):
        u, v, w = legendre(x - 1, p), legendre(x, p), legendre(x + 1, p)
        terms = (1, u, -v, -w, -u * v, -u * w, v * w, u * v * w)
        total += Fraction(sum(terms), 8)
    if total.denominator != 1:
        raise InconsistencyError(f"Indicator sum {total} is not integral")
    return total


def qualifying_c(p: int) -> list[int]:
    """Return c in F_p with chi(c-1) = 1 and chi(c) = chi(c+1) = -1."""
    return [
        c
        for c in range(p)
        if legendre(c - 1, p) == 1 and legendre(c, p) == -1 and legendre(c + 1, p) == -1
    ]


def x_pattern(p: int, c: int) -> tuple[int, ...]:
    """Return the expected x_1..x_5 pattern c, 1-c, c+1, 1-c, c+1 mod p."""
    return tuple(value % p for value in (c, 1 - c, c + 1, 1 - c, c + 1))


@dataclass(slots=True)
class Cor28Report:
    """Enumeration of c with z^(2^n) + c inversely stable over F_p, p = 2^(n+1) + 1."""

    p: int
    n: int
    qualifying_c: list[int]
    cubic_sum: int
    bound: int
    indicator_total: int
    per_c_verdicts: list[Verdict] = field(default_factory=list)
    x_pattern_ok: dict[int, bool] = field(default_factory=dict)

    @property
    def d(self) -> int:
        """Return 2^n."""
        return 2**self.n

    @property
    def S(self) -> int:  # noqa: N802
        """Return the number of qualifying c."""
        return len(self.qualifying_c)

    @property
    def identity_ok(self) -> bool:
        """Return True if 8S = p + 1 + cubic_sum and the indicator sum agrees."""
        identity = 8 * self.S == self.p + 1 + self.cubic_sum
        return identity and self.indicator_total == self.S

    @property
    def bound_ok(self) -> bool:
        """Return True if S reaches the lower bound."""
        return self.S >= self.bound

    @property
    def all_stable(self) -> bool:
        """Return True if every decided c is inversely stable."""
        return all(v.kind is VerdictKind.INVERSELY_STABLE for v in self.per_c_verdicts)

    @property
    def ok(self) -> bool:
        """Return True if every check of the report passed."""
        return (
            self.identity_ok
            and self.bound_ok
            and self.all_stable
            and all(self.x_pattern_ok.values())
        )

    def rows(self) -> list[dict[str, Any]]:
        """Return one CSV row per qualifying c."""
        verdicts = dict(zip(self.qualifying_c, self.per_c_verdicts, strict=False))
        p = self.p
        return [
            {
                "c": c,
                "legendre(c-1)": legendre(c - 1, p),
                "legendre(c)": legendre(c, p),
                "legendre(c+1)": legendre(c + 1, p),
                "verdict": verdicts[c].kind.value if c in verdicts else "",
            }
            for c in self.qualifying_c
        ]

    def as_dict(self) -> dict[str, Any]:
        """Return a JSON representable dict."""
        return {
            "p": self.p,
            "n": self.n,
            "d": self.d,
            "qualifying_c": list(self.qualifying_c),
            "S": self.S,
            "bound": self.bound,
            "cubic_sum": self.cubic_sum,
            "identity_ok": self.identity_ok,
            "bound_ok": self.bound_ok,
            "x_pattern_ok": {str(c): ok for c, ok in self.x_pattern_ok.items()},
            "per_c_verdicts": [v.as_dict() for v in self.per_c_verdicts],
        }


def enumerate_cor28(
    p: int,
    *,
    verify_stability: bool = True,
    step_cap: int | None = None,
    threads: int | None = None,
) -> Cor28Report:
    """Enumerate the qualifying c for a Fermat prime p >= 17."""
    n = fermat_exponent(p)
    cubic = cubic_char_sum(p, [0, -1, 0, 1])
    qualifying = qualifying_c(p)
    report = Cor28Report(
        p=p,
        n=n,
        qualifying_c=qualifying,
        cubic_sum=cubic.value,
        bound=cor28_bound(p),
        indicator_total=int(indicator_sum(p)),
    )
    ctx = PrimeFieldCtx(p)
    for c in qualifying:
        terms = xseq_generate(ctx, 2**n, c, 5).terms
        report.x_pattern_ok[c] = terms == x_pattern(p, c)
    if verify_stability:
        report.per_c_verdicts = ordered_map(
            lambda c: decide_fq(p, 1, 2**n, c, step_cap=step_cap),
            qualifying,
            threads,
        )
    _LOGGER.debug("p=%d: S=%d bound=%d", p, report.S, report.bound)
    return report
