"""Exact coefficient domains.

A domain owns the arithmetic of its elements and the dense vector kernels
(convolution, long division) that :class:`~invstab.arith.polyring.Polynomial`
runs on top of them. Finite fields override the kernels with plain integer
loops; everything else uses the generic versions below.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction

from ..exceptions import FieldDivisionByZeroError, InexactDivisionError

# log10(2) scaled, used to estimate decimal digits from bit lengths without
# converting huge integers to str.
_LOG10_2_NUM = 30103
_LOG10_2_DEN = 100_000


def int_digits(value: int) -> int:
    """Return an estimate of the decimal digits of value."""
    return (abs(value).bit_length() * _LOG10_2_NUM) // _LOG10_2_DEN + 1


class Domain[T](ABC):
    """Abstract base class for an exact coefficient domain."""

    __slots__ = ()

    @property
    @abstractmethod
    def characteristic(self) -> int:
        """Return the characteristic."""

    @property
    @abstractmethod
    def is_field(self) -> bool:
        """Return True if every nonzero element is invertible."""

    @property
    @abstractmethod
    def zero(self) -> T:
        """Return the additive identity."""

    @property
    @abstractmethod
    def one(self) -> T:
        """Return the multiplicative identity."""

    @abstractmethod
    def convert(self, value: object) -> T:
        """Convert an int, Fraction or native element into the domain."""

    @abstractmethod
    def add(self, a: T, b: T) -> T:
        """Return a + b."""

    @abstractmethod
    def sub(self, a: T, b: T) -> T:
        """Return a - b."""

    @abstractmethod
    def mul(self, a: T, b: T) -> T:
        """Return a * b."""

    @abstractmethod
    def neg(self, a: T) -> T:
        """Return -a."""

    @abstractmethod
    def exquo(self, a: T, b: T) -> T:
        """Return a / b, raising if the division is not exact."""

    def is_zero(self, a: T) -> bool:
        """Return True if a is the zero element."""
        return a == self.zero

    def inv(self, a: T) -> T:
        """Return the inverse of a."""
        return self.exquo(self.one, a)

    def pow(self, a: T, n: int) -> T:
        """Return a^n by square and multiply."""
        if n < 0:
            return self.pow(self.inv(a), -n)
        result = self.one
        while n:
            if n & 1:
                result = self.mul(result, a)
            n >>= 1
            if n:
                a = self.mul(a, a)
        return result

    def sign_power(self, n: int) -> T:
        """Return (-1)^n."""
        return self.one if n % 2 == 0 else self.neg(self.one)

    def digits(self, a: T) -> int:  # noqa: ARG002
        """Return a decimal size estimate used by growth guards."""
        return 0

    def format(self, a: T) -> str:
        """Return a human readable representation."""
        return str(a)

    def to_json(self, a: T) -> object:
        """Return a JSON representable form of a."""
        return a

    def convolve(self, a: Sequence[T], b: Sequence[T]) -> list[T]:
        """Return the coefficient list of the product of two polynomials."""
        if not a or not b:
            return []
        out = [self.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if self.is_zero(x):
                continue
            for j, y in enumerate(b):
                out[i + j] = self.add(out[i + j], self.mul(x, y))
        return out

    def divmod_coeffs(
        self,
        a: Sequence[T],
        b: Sequence[T],
    ) -> tuple[list[T], list[T]]:
        """Return quotient and remainder coefficient lists of a / b."""
        if not b:
            raise FieldDivisionByZeroError("Polynomial division by zero")
        db = len(b) - 1
        rem = list(a)
        quo = [self.zero] * max(len(a) - db, 0)
        lead_b = b[-1]
        for i in range(len(a) - 1 - db, -1, -1):
            lead = rem[i + db]
            if self.is_zero(lead):
                continue
            coef = self.exquo(lead, lead_b)
            quo[i] = coef
            for j in range(db + 1):
                rem[i + j] = self.sub(rem[i + j], self.mul(coef, b[j]))
        return quo, rem[:db]

    def elements(self) -> Iterator[T]:
        """Iterate over all elements of a finite domain."""
        raise NotImplementedError(f"{self!r} is not finite")


@dataclass(frozen=True, slots=True)
class IntegerRing(Domain[int]):
    """The ring Z with Python ints."""

    @property
    def characteristic(self) -> int:
        """Return the characteristic."""
        return 0

    @property
    def is_field(self) -> bool:
        """Z is not a field."""
        return False

    @property
    def zero(self) -> int:
        """Return 0."""
        return 0

    @property
    def one(self) -> int:
        """Return 1."""
        return 1

    def convert(self, value: object) -> int:
        """Convert an integral value."""
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise InexactDivisionError(f"{value} is not an integer")
            return value.numerator
        if isinstance(value, int):
            return value
        raise TypeError(f"Can't convert {value!r} to an integer")

    def add(self, a: int, b: int) -> int:
        """Return a + b."""
        return a + b

    def sub(self, a: int, b: int) -> int:
        """Return a - b."""
        return a - b

    def mul(self, a: int, b: int) -> int:
        """Return a * b."""
        return a * b

    def neg(self, a: int) -> int:
        """Return -a."""
        return -a

    def exquo(self, a: int, b: int) -> int:
        """Return the exact quotient a / b."""
        if b == 0:
            raise FieldDivisionByZeroError("Integer division by zero")
        quo, rem = divmod(a, b)
        if rem:
            raise InexactDivisionError(f"{b} does not divide {a}")
        return quo

    def pow(self, a: int, n: int) -> int:
        """Return a^n."""
        if n < 0:
            return self.exquo(1, a) ** -n
        return a**n

    def digits(self, a: int) -> int:
        """Return the decimal size of a."""
        return int_digits(a)


@dataclass(frozen=True, slots=True)
class RationalField(Domain[Fraction]):
    """The field Q with fractions.Fraction."""

    @property
    def characteristic(self) -> int:
        """Return the characteristic."""
        return 0

    @property
    def is_field(self) -> bool:
        """Q is a field."""
        return True

    @property
    def zero(self) -> Fraction:
        """Return 0."""
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        """Return 1."""
        return Fraction(1)

    def convert(self, value: object) -> Fraction:
        """Convert an int, Fraction or 'a/b' string."""
        if isinstance(value, int | Fraction | str):
            return Fraction(value)
        raise TypeError(f"Can't convert {value!r} to a rational")

    def add(self, a: Fraction, b: Fraction) -> Fraction:
        """Return a + b."""
        return a + b

    def sub(self, a: Fraction, b: Fraction) -> Fraction:
        """Return a - b."""
        return a - b

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        """Return a * b."""
        return a * b

    def neg(self, a: Fraction) -> Fraction:
        """Return -a."""
        return -a

    def exquo(self, a: Fraction, b: Fraction) -> Fraction:
        """Return a / b."""
        if b == 0:
            raise FieldDivisionByZeroError("Rational division by zero")
        return Fraction(a) / b

    def pow(self, a: Fraction, n: int) -> Fraction:
        """Return a^n."""
        if n < 0 and a == 0:
            raise FieldDivisionByZeroError("Rational division by zero")
        return Fraction(a) ** n

    def digits(self, a: Fraction) -> int:
        """Return the decimal size of numerator and denominator."""
        return int_digits(a.numerator) + int_digits(a.denominator)

    def to_json(self, a: Fraction) -> object:
        """Return an int or an 'a/b' string."""
        if a.denominator == 1:
            return a.numerator
        return f"{a.numerator}/{a.denominator}"


ZZ = IntegerRing()
QQ = RationalField()
