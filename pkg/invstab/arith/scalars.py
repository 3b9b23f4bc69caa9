"""Integer and rational power predicates over Z and Q.

Python ``int`` is the arbitrary precision integer and ``fractions.Fraction``
the reduced rational with positive denominator, so both carriers are canonical
by construction. Exact roots come from :func:`sympy.integer_nthroot`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from sympy import integer_nthroot, isprime, primefactors

from ..exceptions import InvalidInputError

type Rational = int | Fraction


@lru_cache(maxsize=4096)
def is_prime(n: int) -> bool:
    """Return True if n is prime."""
    return n >= 2 and bool(isprime(n))


def require_prime(p: int, *, name: str = "p") -> None:
    """Raise InvalidInputError unless p is prime."""
    if not is_prime(p):
        raise InvalidInputError(f"{name}={p} is not prime")


@lru_cache(maxsize=4096)
def prime_divisors(n: int) -> tuple[int, ...]:
    """Return the distinct primes dividing n in increasing order."""
    if n == 0:
        raise InvalidInputError("0 has no finite set of prime divisors")
    return tuple(primefactors(abs(n)))


def radical(n: int) -> int:
    """Return rad(n), the product of the distinct primes dividing n."""
    rad = 1
    for prime in prime_divisors(n):
        rad *= prime
    return rad


def integer_root(n: int, k: int) -> int | None:
    """Return the exact k-th root of n, or None if n is not a k-th power in Z.

    Negative n only has roots for odd k.
    """
    if n < 0:
        if k % 2 == 0:
            return None
        root = integer_root(-n, k)
        return None if root is None else -root
    root, exact = integer_nthroot(n, k)
    return int(root) if exact else None


def rational_root(x: Rational, k: int) -> Fraction | None:
    """Return y in Q with y^k = x, or None."""
    x = Fraction(x)
    num = integer_root(x.numerator, k)
    if num is None:
        return None
    den = integer_root(x.denominator, k)
    if den is None:
        return None
    return Fraction(num, den)


def int_is_pth_power_up_to_unit(n: int, p: int) -> bool:
    """Return True if n = u * m^p with u in {+1, -1} and m in Z."""
    require_prime(p)
    if n == 0:
        raise InvalidInputError("0 is excluded from the unit power test")
    return integer_root(abs(n), p) is not None


def rat_is_pth_power(x: Rational, p: int) -> bool:
    """Return True if x = y^p for some y in Q."""
    if x == 0:
        raise InvalidInputError("0 is excluded from the p-th power test")
    return rational_root(x, p) is not None


def rat_in_4k4(x: Rational) -> bool:
    """Return True if x = 4 y^4 for some y in Q."""
    if x == 0:
        raise InvalidInputError("0 is excluded from the 4K^4 test")
    return rational_root(Fraction(x) / 4, 4) is not None


def legendre(a: int, p: int) -> int:
    """Return the Legendre symbol (a/p) by Euler's criterion."""
    if p == 2 or not is_prime(p):
        raise InvalidInputError(f"p={p} is not an odd prime")
    residue = pow(a % p, (p - 1) // 2, p)
    if residue == 0:
        return 0
    return 1 if residue == 1 else -1
