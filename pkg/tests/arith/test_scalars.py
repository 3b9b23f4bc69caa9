"""Test integer and rational power predicates."""

from fractions import Fraction
from random import Random

import pytest

from invstab.arith.scalars import (
    int_is_pth_power_up_to_unit,
    is_prime,
    legendre,
    prime_divisors,
    radical,
    rat_in_4k4,
    rat_is_pth_power,
    rational_root,
)
from invstab.exceptions import InvalidInputError


@pytest.mark.parametrize(
    ("n", "p", "expected"),
    [(-8, 3, True), (4, 2, True), (12, 2, False), (-4, 2, True), (1, 5, True)],
)
def test_int_is_pth_power_up_to_unit(n: int, p: int, expected: bool) -> None:
    """Test unit times p-th power detection over Z."""
    assert int_is_pth_power_up_to_unit(n, p) is expected


def test_int_is_pth_power_rejects_bad_input() -> None:
    """Zero and composite exponents are rejected."""
    with pytest.raises(InvalidInputError):
        int_is_pth_power_up_to_unit(0, 2)
    with pytest.raises(InvalidInputError):
        int_is_pth_power_up_to_unit(16, 4)


@pytest.mark.parametrize(
    ("x", "p", "expected"),
    [
        (Fraction(8, 27), 3, True),
        (-4, 2, False),
        (2, 2, False),
        (Fraction(-1, 8), 3, True),
    ],
)
def test_rat_is_pth_power(x: Fraction | int, p: int, expected: bool) -> None:
    """Test p-th power detection over Q."""
    assert rat_is_pth_power(x, p) is expected


@pytest.mark.parametrize(
    ("x", "expected"), [(4, True), (64, True), (8, False), (-4, False)]
)
def test_rat_in_4k4(x: int, expected: bool) -> None:
    """Test membership in 4K^4."""
    assert rat_in_4k4(x) is expected


def test_zero_rejected() -> None:
    """Zero has no meaningful power class."""
    with pytest.raises(InvalidInputError):
        rat_is_pth_power(0, 2)
    with pytest.raises(InvalidInputError):
        rat_in_4k4(0)


@pytest.mark.parametrize(
    ("a", "p", "expected"),
    [(2, 17, 1), (3, 17, -1), (17, 17, 0), (-1, 5, 1), (-1, 7, -1)],
)
def test_legendre(a: int, p: int, expected: int) -> None:
    """Test the Legendre symbol."""
    assert legendre(a, p) == expected


@pytest.mark.parametrize("p", [2, 9, 1])
def test_legendre_bad_modulus(p: int) -> None:
    """Even or composite moduli are rejected."""
    with pytest.raises(InvalidInputError):
        legendre(1, p)


def test_legendre_matches_squares() -> None:
    """Legendre symbol agrees with the set of squares mod 17."""
    squares = {x * x % 17 for x in range(1, 17)}
    assert squares == {1, 2, 4, 8, 9, 13, 15, 16}
    for a in range(1, 17):
        assert legendre(a, 17) == (1 if a in squares else -1)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17, 19, 23, 29, 31])
def test_legendre_multiplicative(p: int) -> None:
    """chi(ab) = chi(a) chi(b)."""
    for a in range(1, p):
        for b in range(1, p):
            assert legendre(a * b, p) == legendre(a, p) * legendre(b, p)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_pth_power_random(p: int) -> None:
    """n^p is a p-th power and n^p * q is not for primes q not dividing n."""
    rng = Random(p)
    for _ in range(200):
        n = rng.randint(1, 10**6) * rng.choice((1, -1))
        q = rng.choice((7, 11, 13, 1_000_003))
        assert int_is_pth_power_up_to_unit(n**p, p)
        if n % q:
            assert not int_is_pth_power_up_to_unit(n**p * q, p)


def test_divisors_and_radical() -> None:
    """Test prime divisors and the radical."""
    assert prime_divisors(12) == (2, 3)
    assert prime_divisors(-45) == (3, 5)
    assert radical(8) == 2
    assert radical(360) == 30
    assert radical(1) == 1
    with pytest.raises(InvalidInputError):
        prime_divisors(0)


def test_rational_root() -> None:
    """Exact roots of rationals."""
    assert rational_root(Fraction(-8, 27), 3) == Fraction(-2, 3)
    assert rational_root(Fraction(4, 9), 2) == Fraction(2, 3)
    assert rational_root(-4, 2) is None
    assert rational_root(Fraction(2, 9), 2) is None


def test_is_prime() -> None:
    """Primality through sympy."""
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert is_prime(65537)
    assert not is_prime(2**64 + 1)
