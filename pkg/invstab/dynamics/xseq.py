"""The sequence x_{n+2} = (-1)^d c x_{n+1}^d + x_n^(d^2).

x_1 = c and x_2 = (-1)^d (c^(d+1) + 1).

The sequence is generic over exact rings; over a finite field the pair
(x_n, x_{n+1}) walks a finite functional graph, which pair_cycle_scan turns
into a complete list of the ratios x_{n+1}/x_n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction
import logging
from math import gcd
from typing import NamedTuple

from ..arith.domain import ZZ, Domain
from ..arith.finite_field import FieldCtx
from ..arith.scalars import (
    int_is_pth_power_up_to_unit,
    prime_divisors,
    rat_is_pth_power,
)
from ..const import MAX_DIGITS, STEP_CAP
from ..exceptions import InvalidInputError, SizeLimitError
from .iterate import orbit_pairs

_LOGGER = logging.getLogger(__name__)


class XMatState[T](NamedTuple):
    """Matrix A_j = [[x, y], [z, w]]."""

    j: int
    x: T
    y: T
    z: T
    w: T


def xmat_initial[T](domain: Domain[T], c: object) -> XMatState[T]:
    """Return A_1 = [[c, -1], [1, 0]]."""
    return XMatState(
        1, domain.convert(c), domain.neg(domain.one), domain.one, domain.zero
    )


def xmat_next[T](
    domain: Domain[T], state: XMatState[T], d: int, c: object
) -> XMatState[T]:
    """Return A_{j+1} from A_j."""
    c = domain.convert(c)
    sign = domain.sign_power(d)
    x_pow = domain.pow(state.x, d)
    y_pow = domain.pow(state.y, d)
    z_pow = domain.pow(state.z, d)
    w_pow = domain.pow(state.w, d)
    sign_c = domain.mul(sign, c)
    return XMatState(
        state.j + 1,
        domain.add(domain.mul(sign_c, x_pow), y_pow),
        domain.mul(domain.neg(sign), x_pow),
        domain.add(domain.mul(sign_c, z_pow), w_pow),
        domain.mul(domain.neg(sign), z_pow),
    )


class XSeq[T](NamedTuple):
    """The terms x_1..x_N of the sequence."""

    d: int
    c: T
    terms: tuple[T, ...]

    def x(self, n: int) -> T:
        """Return x_n, 1-based."""
        if n < 1:
            raise IndexError(n)
        return self.terms[n - 1]


def xseq_generate[T](
    domain: Domain[T],
    d: int,
    c: object,
    count: int,
    *,
    max_digits: int = MAX_DIGITS,
) -> XSeq[T]:
    """Return x_1..x_count over domain.

    Raises SizeLimitError naming the first term over max_digits.
    """
    if count < 1:
        raise InvalidInputError(f"count={count} must be >= 1")
    if d < 2:
        raise InvalidInputError(f"d={d} must be >= 2")
    c = domain.convert(c)
    sign = domain.sign_power(d)
    sign_c = domain.mul(sign, c)
    terms = [c, domain.mul(sign, domain.add(domain.pow(c, d + 1), domain.one))]
    while len(terms) < count:
        terms.append(
            domain.add(
                domain.mul(sign_c, domain.pow(terms[-1], d)),
                domain.pow(terms[-2], d * d),
            )
        )
        if domain.digits(terms[-1]) > max_digits:
            raise SizeLimitError(
                f"x_{len(terms)} exceeds {max_digits} digits", index=len(terms)
            )
    return XSeq(d, c, tuple(terms[:count]))


class CheckResult(NamedTuple):
    """One identity check."""

    name: str
    index: int
    ok: bool
    detail: str = ""


@dataclass(slots=True)
class IdentityReport:
    """Outcome of a batch of identity checks."""

    title: str
    checks: list[CheckResult] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        """Return True if every check passed."""
        return all(check.ok for check in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        """Return the failed checks."""
        return [check for check in self.checks if not check.ok]

    def add(self, name: str, index: int, ok: bool, detail: str = "") -> None:
        """Record a check."""
        if not ok:
            _LOGGER.warning(
                "%s: check %s failed at n=%d %s", self.title, name, index, detail
            )
        self.checks.append(CheckResult(name, index, ok, detail))

    def as_dict(self) -> dict[str, object]:
        """Return a JSON representable dict."""
        return {
            "title": self.title,
            "ok": self.ok,
            "checks": [check._asdict() for check in self.checks],
            "notes": list(self.notes),
        }


def verify_lemma33(d: int, c: int, count: int) -> IdentityReport:
    """Check the divisibility and coprimality identities of x_n over Z for n <= count.

    gcd(x_{n+1}, x_n) = 1, z_{n+1} = (-1)^d x_n, c | x_{2n-1} with
    gcd(x_{2n-1}/c, c) = 1, c | x_{2n} - (-1)^d, and when c is not +-m^p for
    any p | d, x_{2n-1} is not +-m^p and no ratio x_{n+1}/x_n is +-r^p.
    """
    if c == 0:
        raise InvalidInputError("c = 0 is excluded")
    report = IdentityReport(f"x_n identities d={d} c={c}")
    seq = xseq_generate(ZZ, d, c, count + 1)
    sign = -1 if d % 2 else 1

    state = xmat_initial(ZZ, c)
    for n in range(1, count + 1):
        report.add("xmat-x", n, state.x == seq.x(n))
        nxt = xmat_next(ZZ, state, d, c)
        report.add("z-next", n, nxt.z == sign * seq.x(n))
        report.add("gcd-consecutive", n, gcd(seq.x(n + 1), seq.x(n)) == 1)
        state = nxt

    pairs = orbit_pairs(ZZ, d, c, count + 3)
    for index in range(1, count + 2):
        if index % 2:
            b_value = pairs[index][1]  # b_{index+1}
            report.add("orbit-odd", index, seq.x(index) == b_value)
        else:
            b_value = pairs[index][1]
            report.add("orbit-even", index, seq.x(index) == sign * b_value)

    if abs(c) == 1:
        report.notes.append(
            "c is a unit of Z: divisibility and power checks skipped"
        )
        return report

    for index in range(1, count + 2):
        value = seq.x(index)
        if index % 2:
            divisible = value % c == 0
            report.add("c-divides-odd", index, divisible)
            if divisible:
                report.add("cofactor-coprime", index, gcd(value // c, c) == 1)
        else:
            report.add("c-divides-even", index, (value - sign) % c == 0)

    primes = prime_divisors(d)
    if any(int_is_pth_power_up_to_unit(c, p) for p in primes):
        report.notes.append(
            f"c={c} is a unit times a p-th power for some p | d: power checks skipped"
        )
        return report
    for index in range(1, count + 2, 2):
        value = seq.x(index)
        report.add(
            "odd-not-power",
            index,
            value != 0
            and not any(int_is_pth_power_up_to_unit(value, p) for p in primes),
        )
    if any(value == 0 for value in seq.terms):
        report.notes.append("a term vanishes: ratio checks skipped")
        return report
    for n in range(1, count + 1):
        ratio = Fraction(seq.x(n + 1), seq.x(n))
        report.add(
            "ratio-not-power",
            n,
            not any(
                rat_is_pth_power(ratio, p) or rat_is_pth_power(-ratio, p)
                for p in primes
            ),
            str(ratio),
        )
    return report


class ScanStatus(StrEnum):
    """How a pair cycle scan ended."""

    CYCLE = "Cycle"
    ZERO_TERM = "ZeroTerm"
    CAP_EXCEEDED = "CapExceeded"


@dataclass(frozen=True, slots=True)
class PairCycleScan[T]:
    """Result of walking (x_n, x_{n+1}) until a pair repeats.

    states[i] is (x_{i+1}, x_{i+2}); states[preperiod:] is one full cycle and
    ratios[i] = x_{i+2}/x_{i+1}, so ratios covers every n >= 1.
    """

    status: ScanStatus
    preperiod: int | None = None
    period: int | None = None
    states: tuple[tuple[T, T], ...] = ()
    ratios: tuple[T, ...] = ()
    zero_index: int | None = None

    @property
    def ratio_set(self) -> list[T]:
        """Return the distinct ratios in order of first appearance."""
        return list(dict.fromkeys(self.ratios))


def pair_cycle_scan[T](
    ctx: FieldCtx,
    d: int,
    c: object,
    step_cap: int | None = None,
) -> PairCycleScan[T]:
    """Walk (a, b) -> (b, (-1)^d c b^d + a^(d^2)) from (x_1, x_2) to a repeat."""
    if step_cap is None:
        step_cap = STEP_CAP
    if step_cap < 1:
        raise InvalidInputError(f"step_cap={step_cap} must be >= 1")
    if d < 2:
        raise InvalidInputError(f"d={d} must be >= 2")
    c = ctx.convert(c)
    if ctx.is_zero(c):  # type: ignore[arg-type]
        return PairCycleScan(ScanStatus.ZERO_TERM, zero_index=1)
    sign = ctx.sign_power(d)
    sign_c = ctx.mul(sign, c)  # type: ignore[arg-type]
    a = c
    b = ctx.mul(sign, ctx.add(ctx.pow(c, d + 1), ctx.one))  # type: ignore[arg-type]
    d_sq = d * d
    seen: dict[tuple[T, T], int] = {}
    states: list[tuple[T, T]] = []
    n = 1
    while True:
        if ctx.is_zero(b):  # type: ignore[arg-type]
            _LOGGER.debug("x_%d = 0 for d=%d c=%s", n + 1, d, c)
            return PairCycleScan(ScanStatus.ZERO_TERM, zero_index=n + 1)
        pair = (a, b)
        if pair in seen:
            start = seen[pair]
            ratios = tuple(ctx.exquo(y, x) for x, y in states)  # type: ignore[arg-type]
            return PairCycleScan(
                ScanStatus.CYCLE,
                preperiod=start - 1,
                period=n - start,
                states=tuple(states),
                ratios=ratios,
            )
        if len(states) >= step_cap:
            _LOGGER.debug("Pair scan hit the cap of %d states", step_cap)
            return PairCycleScan(ScanStatus.CAP_EXCEEDED, states=tuple(states))
        seen[pair] = n
        states.append(pair)
        step = ctx.mul(sign_c, ctx.pow(b, d))  # type: ignore[arg-type]
        a, b = b, ctx.add(step, ctx.pow(a, d_sq))  # type: ignore[arg-type]
        n += 1
