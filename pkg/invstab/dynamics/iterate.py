"""Reduced iterates of Phi(z) = 1/(z^d + c) and the orbit of infinity."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from enum import StrEnum
import logging
from typing import NamedTuple

from ..arith.domain import Domain
from ..arith.finite_field import FieldCtx
from ..arith.polyring import Polynomial, are_coprime
from ..const import MAX_DIGITS, Q_DEPTH_CAP
from ..exceptions import (
    InconsistencyError,
    InvalidInputError,
    SizeLimitError,
    UnsupportedCharacteristicError,
)

_LOGGER = logging.getLogger(__name__)


def require_phi_params[T](domain: Domain[T], d: int, c: object) -> T:
    """Validate d and c for phi(z) = z^d + c and return c in the domain."""
    if d < 2:
        raise InvalidInputError(f"d={d} must be >= 2")
    char = domain.characteristic
    if char and d % char == 0:
        raise UnsupportedCharacteristicError(
            f"Characteristic {char} divides d={d}"
        )
    value = domain.convert(c)
    if domain.is_zero(value):
        raise InvalidInputError("c = 0 is excluded: z^d is reducible")
    return value


@dataclass(frozen=True, slots=True)
class ReducedIterate[T]:
    """Phi^(n) = f / g in lowest terms with g monic."""

    n: int
    f: Polynomial[T]
    g: Polynomial[T]

    def __post_init__(self) -> None:
        """Check the reduced form."""
        if not self.g.is_monic:
            raise InconsistencyError(f"g_{self.n} is not monic")
        if not are_coprime(self.f, self.g):
            raise InconsistencyError(f"f_{self.n} and g_{self.n} share a factor")


def iter_reduced_iterates[T](
    domain: Domain[T],
    d: int,
    c: object,
    *,
    max_digits: int = MAX_DIGITS,
) -> Iterator[ReducedIterate[T]]:
    """Yield the reduced iterates n = 1, 2, ... without end.

    f_{n+1} = g_n^d / u and g_{n+1} = (f_n^d + c g_n^d) / u where u makes
    g_{n+1} monic.
    """
    if not domain.is_field:
        raise InvalidInputError(f"Iteration needs a field, not {domain!r}")
    c = require_phi_params(domain, d, c)
    f = Polynomial(domain, (domain.one,))
    g = Polynomial.binomial(domain, d, c)
    n = 1
    while True:
        yield ReducedIterate(n, f, g)
        g_pow = g**d
        numer = g_pow
        denom = f**d + g_pow.scale(c)
        unit_inv = domain.inv(denom.lc)
        f, g = numer.scale(unit_inv), denom.scale(unit_inv)
        n += 1
        if domain.characteristic == 0 and f.digits() + g.digits() > max_digits:
            raise SizeLimitError(
                f"Iterate {n} exceeds {max_digits} coefficient digits", index=n
            )


def iterate_phi[T](
    domain: Domain[T],
    d: int,
    c: object,
    n: int,
    *,
    max_depth: int | None = None,
    max_digits: int = MAX_DIGITS,
) -> ReducedIterate[T]:
    """Return the reduced iterate Phi^(n) = f_n / g_n.

    Over fields of characteristic 0 the depth is capped, Q_DEPTH_CAP by
    default.
    """
    if n < 1:
        raise InvalidInputError(f"n={n} must be >= 1")
    if max_depth is None and domain.characteristic == 0:
        max_depth = Q_DEPTH_CAP
    if max_depth is not None and n > max_depth:
        raise SizeLimitError(f"Depth {n} exceeds the cap {max_depth}", index=n)
    for iterate in iter_reduced_iterates(domain, d, c, max_digits=max_digits):
        if iterate.n == n:
            return iterate
    raise AssertionError("unreachable")


class ProjPoint(NamedTuple):
    """Point [x : y] of P^1, normalized to y = 1 or to [1 : 0]."""

    x: object
    y: object

    @classmethod
    def normalized[T](cls, domain: Domain[T], x: T, y: T) -> ProjPoint:
        """Return the canonical representative of [x : y]."""
        if domain.is_zero(y):
            if domain.is_zero(x):
                raise InvalidInputError("[0 : 0] is not a point")
            return cls(domain.one, domain.zero)
        return cls(domain.exquo(x, y), domain.one)

    @classmethod
    def infinity[T](cls, domain: Domain[T]) -> ProjPoint:
        """Return [1 : 0]."""
        return cls(domain.one, domain.zero)


def apply_phi[T](domain: Domain[T], d: int, c: T, point: ProjPoint) -> ProjPoint:
    """Return Phi([x : y]) = [y^d : x^d + c y^d]."""
    y_pow = domain.pow(point.y, d)  # type: ignore[arg-type]
    x_pow = domain.pow(point.x, d)  # type: ignore[arg-type]
    return ProjPoint.normalized(domain, y_pow, domain.add(x_pow, domain.mul(c, y_pow)))


def infinity_orbit[T](
    domain: Domain[T], d: int, c: object, count: int
) -> list[ProjPoint]:
    """Return Phi^(n)(infinity) for n = 1..count."""
    c = require_phi_params(domain, d, c)
    point = ProjPoint.infinity(domain)
    orbit = []
    for _ in range(count):
        point = apply_phi(domain, d, c, point)
        orbit.append(point)
    return orbit


def orbit_pairs[T](
    domain: Domain[T], d: int, c: object, count: int
) -> list[tuple[T, T]]:
    """Return the unnormalized orbit (a_n, b_n), n = 1..count, of infinity.

    a_1 = 0, b_1 = 1, a_{n+1} = b_n^d, b_{n+1} = a_n^d + c b_n^d.
    """
    c = require_phi_params(domain, d, c)
    a, b = domain.zero, domain.one
    pairs = []
    for _ in range(count):
        pairs.append((a, b))
        b_pow = domain.pow(b, d)
        a, b = b_pow, domain.add(domain.pow(a, d), domain.mul(c, b_pow))
    return pairs


class Periodicity(StrEnum):
    """Outcome of the periodicity test for infinity."""

    PERIODIC = "Periodic"
    NOT_PERIODIC = "NotPeriodic"
    CAP_EXCEEDED = "CapExceeded"


@dataclass(frozen=True, slots=True)
class InfinityPeriodicity:
    """Result of is_infinity_periodic.

    For NOT_PERIODIC, the orbit enters a cycle at index preperiod and the
    cycle, of length period, avoids infinity.
    """

    status: Periodicity
    period: int | None = None
    preperiod: int | None = None
    steps: int = 0


def is_infinity_periodic(
    ctx: FieldCtx,
    d: int,
    c: object,
    cap: int | None = None,
) -> InfinityPeriodicity:
    """Return whether infinity is periodic under Phi over F_q."""
    c = require_phi_params(ctx, d, c)
    if cap is None:
        cap = ctx.order + 1
    if cap < 1:
        raise InvalidInputError(f"cap={cap} must be >= 1")
    infinity = ProjPoint.infinity(ctx)
    seen: dict[ProjPoint, int] = {}
    point = infinity
    for n in range(1, cap + 1):
        point = apply_phi(ctx, d, c, point)
        if point == infinity:
            return InfinityPeriodicity(Periodicity.PERIODIC, period=n, steps=n)
        if point in seen:
            start = seen[point]
            return InfinityPeriodicity(
                Periodicity.NOT_PERIODIC,
                period=n - start,
                preperiod=start,
                steps=n,
            )
        seen[point] = n
    _LOGGER.debug("Orbit of infinity not closed after %d steps", cap)
    return InfinityPeriodicity(Periodicity.CAP_EXCEEDED, steps=cap)
