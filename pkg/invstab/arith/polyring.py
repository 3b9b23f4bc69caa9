"""Dense univariate polynomials over exact coefficient domains."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
import logging
from math import gcd, lcm
from random import Random

from ..exceptions import (
    FieldDivisionByZeroError,
    InexactDivisionError,
    InvalidInputError,
)
from .domain import QQ, ZZ, Domain, IntegerRing, RationalField
from .finite_field import PrimeFieldCtx
from .scalars import rational_root, require_prime

_LOGGER = logging.getLogger(__name__)

# Primes used for the modular coprimality shortcut over Q.
_COPRIME_PRIMES = (2**61 - 1, 2**31 - 1, 1_000_000_007)


@dataclass(frozen=True, slots=True)
class Polynomial[T]:
    """Polynomial with coefficients low degree first.

    Trailing zeros are stripped, so the zero polynomial has no coefficients
    and degree -1. Coefficients must already be canonical in the domain; use
    from_coeffs to convert raw values.
    """

    domain: Domain[T]
    coeffs: tuple[T, ...] = ()
    var: str = field(default="z", compare=False)

    def __post_init__(self) -> None:
        """Strip trailing zeros."""
        coeffs = tuple(self.coeffs)
        end = len(coeffs)
        is_zero = self.domain.is_zero
        while end and is_zero(coeffs[end - 1]):
            end -= 1
        object.__setattr__(self, "coeffs", coeffs[:end])

    @classmethod
    def from_coeffs(
        cls,
        domain: Domain[T],
        coeffs: Iterable[object],
        var: str = "z",
    ) -> Polynomial[T]:
        """Create a polynomial converting every coefficient into the domain."""
        return cls(domain, tuple(domain.convert(coef) for coef in coeffs), var)

    @classmethod
    def constant(
        cls, domain: Domain[T], value: object, var: str = "z"
    ) -> Polynomial[T]:
        """Create a constant polynomial."""
        return cls(domain, (domain.convert(value),), var)

    @classmethod
    def monomial(
        cls,
        domain: Domain[T],
        degree: int,
        coef: object = 1,
        var: str = "z",
    ) -> Polynomial[T]:
        """Create coef * var^degree."""
        return cls(domain, (domain.zero,) * degree + (domain.convert(coef),), var)

    @classmethod
    def binomial(
        cls,
        domain: Domain[T],
        degree: int,
        constant: object,
        var: str = "z",
    ) -> Polynomial[T]:
        """Create var^degree + constant."""
        if degree < 1:
            raise InvalidInputError(f"Binomial degree {degree} must be >= 1")
        return cls(
            domain,
            (domain.convert(constant),) + (domain.zero,) * (degree - 1) + (domain.one,),
            var,
        )

    @property
    def degree(self) -> int:
        """Return the degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> T:
        """Return the leading coefficient."""
        if not self.coeffs:
            return self.domain.zero
        return self.coeffs[-1]

    @property
    def is_zero(self) -> bool:
        """Return True for the zero polynomial."""
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        """Return True if the degree is at most 0."""
        return len(self.coeffs) <= 1

    @property
    def is_monic(self) -> bool:
        """Return True if the leading coefficient is one."""
        return bool(self.coeffs) and self.coeffs[-1] == self.domain.one

    def _new(self, coeffs: Iterable[T]) -> Polynomial[T]:
        return Polynomial(self.domain, tuple(coeffs), self.var)

    def _coerce(self, other: object) -> Polynomial[T]:
        if isinstance(other, Polynomial) and other.domain == self.domain:
            return other
        return self._new((self.domain.convert(other),))

    def __add__(self, other: object) -> Polynomial[T]:
        """Return self + other."""
        other = self._coerce(other)
        dom = self.domain
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return self._new(
            [dom.add(x, b[i]) for i, x in enumerate(a[: len(b)])] + list(a[len(b) :])
        )

    __radd__ = __add__

    def __neg__(self) -> Polynomial[T]:
        """Return -self."""
        return self._new(self.domain.neg(x) for x in self.coeffs)

    def __sub__(self, other: object) -> Polynomial[T]:
        """Return self - other."""
        return self + (-self._coerce(other))

    def __rsub__(self, other: object) -> Polynomial[T]:
        """Return other - self."""
        return self._coerce(other) - self

    def __mul__(self, other: object) -> Polynomial[T]:
        """Return self * other."""
        other = self._coerce(other)
        return self._new(self.domain.convolve(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Polynomial[T]:
        """Return self^exponent for exponent >= 0."""
        if exponent < 0:
            raise InvalidInputError("Negative polynomial exponent")
        result = self._new((self.domain.one,))
        base = self
        while exponent:
            if exponent & 1:
                result *= base
            exponent >>= 1
            if exponent:
                base *= base
        return result

    def __divmod__(self, other: object) -> tuple[Polynomial[T], Polynomial[T]]:
        """Return quotient and remainder."""
        other = self._coerce(other)
        if other.is_zero:
            raise FieldDivisionByZeroError("Polynomial division by zero")
        quo, rem = self.domain.divmod_coeffs(self.coeffs, other.coeffs)
        return self._new(quo), self._new(rem)

    def __floordiv__(self, other: object) -> Polynomial[T]:
        """Return the quotient."""
        return divmod(self, other)[0]

    def __mod__(self, other: object) -> Polynomial[T]:
        """Return the remainder."""
        return divmod(self, other)[1]

    def exquo(self, other: object) -> Polynomial[T]:
        """Return self / other, raising if the division leaves a remainder."""
        quo, rem = divmod(self, other)
        if not rem.is_zero:
            raise InexactDivisionError(f"{other} does not divide {self}")
        return quo

    def scale(self, value: T) -> Polynomial[T]:
        """Multiply every coefficient by a domain element."""
        mul = self.domain.mul
        return self._new(mul(value, x) for x in self.coeffs)

    def monic(self) -> Polynomial[T]:
        """Return the polynomial divided by its leading coefficient."""
        if self.is_zero:
            raise InvalidInputError("The zero polynomial has no monic associate")
        if self.is_monic:
            return self
        return self.scale(self.domain.inv(self.lc))

    def derivative(self) -> Polynomial[T]:
        """Return the formal derivative."""
        dom = self.domain
        return self._new(
            dom.mul(dom.convert(i), coef) for i, coef in enumerate(self.coeffs) if i
        )

    def compose(self, other: Polynomial[T]) -> Polynomial[T]:
        """Return self(other(z))."""
        result = self._new(())
        for coef in reversed(self.coeffs):
            result = result * other + self._new((coef,))
        return result

    def __call__(self, value: T) -> T:
        """Evaluate at a domain element."""
        dom = self.domain
        result = dom.zero
        for coef in reversed(self.coeffs):
            result = dom.add(dom.mul(result, value), coef)
        return result

    def pow_mod(self, exponent: int, modulus: Polynomial[T]) -> Polynomial[T]:
        """Return self^exponent mod modulus."""
        result = self._new((self.domain.one,)) % modulus
        base = self % modulus
        while exponent:
            if exponent & 1:
                result = (result * base) % modulus
            exponent >>= 1
            if exponent:
                base = (base * base) % modulus
        return result

    def reduce(self, domain: Domain[object]) -> Polynomial[object]:
        """Map the coefficients into another domain."""
        return Polynomial.from_coeffs(domain, self.coeffs, self.var)

    def digits(self) -> int:
        """Return the total decimal size of the coefficients."""
        return sum(self.domain.digits(coef) for coef in self.coeffs)

    def to_json(self) -> list[object]:
        """Return the coefficient list, low degree first."""
        return [self.domain.to_json(coef) for coef in self.coeffs]

    def __str__(self) -> str:
        """Return a readable form, highest degree first."""
        if self.is_zero:
            return "0"
        terms: list[str] = []
        for degree in range(self.degree, -1, -1):
            coef = self.coeffs[degree]
            if self.domain.is_zero(coef):
                continue
            negative = isinstance(coef, int | Fraction) and coef < 0
            magnitude = -coef if negative else coef  # type: ignore[operator]
            text = self.domain.format(magnitude)
            if any(sym in text for sym in "+-/ "):
                text = f"({text})"
            if degree == 0:
                term = text
            else:
                mono = self.var if degree == 1 else f"{self.var}^{degree}"
                term = mono if text == "1" else f"{text}*{mono}"
            if terms:
                terms.append(f"- {term}" if negative else f"+ {term}")
            else:
                terms.append(f"-{term}" if negative else term)
        return " ".join(terms)


type RationalPoly = Polynomial[Fraction]


@dataclass(frozen=True, slots=True)
class PolynomialRing(Domain[RationalPoly]):
    """The ring Q[t], used as a coefficient domain."""

    base: RationalField = QQ
    var: str = "t"

    @property
    def characteristic(self) -> int:
        """Return 0."""
        return 0

    @property
    def is_field(self) -> bool:
        """Q[t] is not a field."""
        return False

    @property
    def zero(self) -> RationalPoly:
        """Return 0."""
        return Polynomial(self.base, (), self.var)

    @property
    def one(self) -> RationalPoly:
        """Return 1."""
        return Polynomial(self.base, (Fraction(1),), self.var)

    def convert(self, value: object) -> RationalPoly:
        """Convert a rational constant or a polynomial over Q."""
        if isinstance(value, Polynomial):
            if value.domain != self.base:
                raise TypeError(f"Can't convert {value!r} to Q[{self.var}]")
            return value
        return Polynomial(self.base, (self.base.convert(value),), self.var)

    def add(self, a: RationalPoly, b: RationalPoly) -> RationalPoly:
        """Return a + b."""
        return a + b

    def sub(self, a: RationalPoly, b: RationalPoly) -> RationalPoly:
        """Return a - b."""
        return a - b

    def mul(self, a: RationalPoly, b: RationalPoly) -> RationalPoly:
        """Return a * b."""
        return a * b

    def neg(self, a: RationalPoly) -> RationalPoly:
        """Return -a."""
        return -a

    def exquo(self, a: RationalPoly, b: RationalPoly) -> RationalPoly:
        """Return the exact quotient."""
        return a.exquo(b)

    def pow(self, a: RationalPoly, n: int) -> RationalPoly:
        """Return a^n."""
        return a**n

    def is_zero(self, a: RationalPoly) -> bool:
        """Return True for the zero polynomial."""
        return a.is_zero

    def digits(self, a: RationalPoly) -> int:
        """Return the total decimal size of the coefficients."""
        return a.digits()

    def format(self, a: RationalPoly) -> str:
        """Return the polynomial as text."""
        return str(a)

    def to_json(self, a: RationalPoly) -> object:
        """Return the polynomial as text."""
        return str(a)


QT = PolynomialRing()


def t_poly(coeffs: Iterable[object]) -> RationalPoly:
    """Return a polynomial in t over Q from coefficients, low degree first."""
    return Polynomial.from_coeffs(QQ, coeffs, "t")


def primitive_integer_coeffs(f: Polynomial[object]) -> tuple[int, ...]:
    """Return the primitive integer polynomial proportional to f.

    The leading coefficient of the result is positive.
    """
    if not isinstance(f.domain, RationalField | IntegerRing):
        raise InvalidInputError("Integer coefficients need a polynomial over Z or Q")
    if f.is_zero:
        return ()
    values = [Fraction(coef) for coef in f.coeffs]  # type: ignore[arg-type]
    denom = lcm(*(value.denominator for value in values))
    ints = [value.numerator * (denom // value.denominator) for value in values]
    content = gcd(*ints)
    if ints[-1] < 0:
        content = -content
    return tuple(value // content for value in ints)


def _primitive(coeffs: list[int]) -> list[int]:
    content = gcd(*coeffs)
    return [value // content for value in coeffs] if content > 1 else coeffs


def _integer_prem(a: Sequence[int], b: Sequence[int]) -> list[int]:
    rem = list(a)
    db = len(b) - 1
    lead_b = b[-1]
    while rem and len(rem) - 1 >= db:
        lead = rem[-1]
        shift = len(rem) - 1 - db
        rem = [value * lead_b for value in rem]
        for j, value in enumerate(b):
            rem[shift + j] -= lead * value
        while rem and rem[-1] == 0:
            rem.pop()
    return rem


def _rational_gcd(f: RationalPoly, g: RationalPoly) -> RationalPoly:
    """Return the monic gcd over Q by a primitive remainder sequence over Z."""
    a = list(primitive_integer_coeffs(f))
    b = list(primitive_integer_coeffs(g))
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _integer_prem(a, b)
        if b:
            b = _primitive(b)
    return Polynomial.from_coeffs(QQ, a, f.var).monic()


def poly_gcd[T](f: Polynomial[T], g: Polynomial[T]) -> Polynomial[T]:
    """Return the monic greatest common divisor over a field."""
    if f.is_zero and g.is_zero:
        raise InvalidInputError("gcd(0, 0) is undefined")
    if not f.domain.is_field:
        raise InvalidInputError(f"gcd needs coefficients in a field, not {f.domain!r}")
    if f.is_zero:
        return g.monic()
    if g.is_zero:
        return f.monic()
    if isinstance(f.domain, RationalField):
        return _rational_gcd(f, g)
    a, b = f, g
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def are_coprime(f: Polynomial[object], g: Polynomial[object]) -> bool:
    """Return True if gcd(f, g) = 1.

    Over Q the test is tried modulo large primes not dividing the leading
    coefficients first; a trivial gcd there proves coprimality over Q.
    """
    if f.is_zero and g.is_zero:
        return False
    if isinstance(f.domain, IntegerRing):
        f, g = f.reduce(QQ), g.reduce(QQ)
    if isinstance(f.domain, RationalField) and not (f.is_zero or g.is_zero):
        a = primitive_integer_coeffs(f)
        b = primitive_integer_coeffs(g)
        lead = a[-1] * b[-1]
        for prime in _COPRIME_PRIMES:
            if lead % prime == 0:
                continue
            ctx = PrimeFieldCtx(prime)
            f_mod = Polynomial(ctx, tuple(value % prime for value in a))
            g_mod = Polynomial(ctx, tuple(value % prime for value in b))
            if poly_gcd(f_mod, g_mod).degree == 0:
                return True
            _LOGGER.debug("Modular gcd mod %d nontrivial, using exact gcd", prime)
            break
    return poly_gcd(f, g).degree == 0


@dataclass(frozen=True, slots=True)
class SquarefreeDecomposition[T]:
    """f = unit * prod(part^multiplicity) with monic squarefree coprime parts."""

    unit: T
    parts: tuple[tuple[Polynomial[T], int], ...]

    def reconstruct(self, domain: Domain[T], var: str = "z") -> Polynomial[T]:
        """Multiply the decomposition back together."""
        result = Polynomial(domain, (self.unit,), var)
        for part, multiplicity in self.parts:
            result *= part**multiplicity
        return result

    @property
    def multiplicities(self) -> tuple[int, ...]:
        """Return the multiplicities in increasing order."""
        return tuple(multiplicity for _, multiplicity in self.parts)


def _require_char0_field(f: Polynomial[object]) -> None:
    if f.domain.characteristic != 0 or not f.domain.is_field:
        raise InvalidInputError(
            f"Coefficients must lie in a field of characteristic 0, not {f.domain!r}"
        )
    if f.is_zero:
        raise InvalidInputError("The zero polynomial is excluded")


def yun_squarefree[T](f: Polynomial[T]) -> SquarefreeDecomposition[T]:
    """Return the squarefree decomposition of f by Yun's algorithm."""
    _require_char0_field(f)
    unit = f.lc
    monic = f.monic()
    if monic.degree == 0:
        return SquarefreeDecomposition(unit, ())
    parts: list[tuple[Polynomial[T], int]] = []
    deriv = monic.derivative()
    common = poly_gcd(monic, deriv)
    rest = monic.exquo(common)
    delta = deriv.exquo(common) - rest.derivative()
    multiplicity = 1
    while rest.degree > 0:
        factor = poly_gcd(rest, delta)
        rest = rest.exquo(factor)
        delta = delta.exquo(factor) - rest.derivative()
        if factor.degree > 0:
            parts.append((factor, multiplicity))
        multiplicity += 1
    return SquarefreeDecomposition(unit, tuple(parts))


def n0_distinct_roots(f: Polynomial[object]) -> int:
    """Return the number of distinct roots of f in an algebraic closure."""
    _require_char0_field(f)
    if f.degree == 0:
        return 0
    return f.degree - poly_gcd(f, f.derivative()).degree


def is_pth_power_up_to_unit_ft(f: RationalPoly, p: int) -> bool:
    """Return True if f = u * g^p with u in Q^* and g in Q[t]."""
    require_prime(p)
    multiplicities = yun_squarefree(f).multiplicities
    return all(multiplicity % p == 0 for multiplicity in multiplicities)


def pth_root_ft(f: RationalPoly, k: int) -> RationalPoly | None:
    """Return g in Q[t] with g^k = f, or None."""
    if k < 1:
        raise InvalidInputError(f"Root index k={k} must be >= 1")
    decomposition = yun_squarefree(f)
    if any(multiplicity % k for multiplicity in decomposition.multiplicities):
        return None
    unit_root = rational_root(decomposition.unit, k)
    if unit_root is None:
        return None
    root = Polynomial(f.domain, (f.domain.convert(unit_root),), f.var)
    for part, multiplicity in decomposition.parts:
        root *= part ** (multiplicity // k)
    return root


def mason_stothers_check(
    a: RationalPoly,
    b: RationalPoly,
    c: RationalPoly,
) -> bool:
    """Return whether max deg(a, b, c) <= n0(abc) - 1 for a coprime sum a + b = c."""
    for name, poly in (("a", a), ("b", b), ("c", c)):
        if poly.is_zero:
            raise InvalidInputError(f"{name} = 0: the triple must be nonzero")
        _require_char0_field(poly)
    if a + b != c:
        raise InvalidInputError("a + b != c")
    for label, left, right in (("a, b", a, b), ("a, c", a, c), ("b, c", b, c)):
        if not are_coprime(left, right):
            raise InvalidInputError(
                f"gcd({label}) != 1: triple is not pairwise coprime"
            )
    if a.is_constant and b.is_constant and c.is_constant:
        raise InvalidInputError("All derivatives vanish: a, b, c are constant")
    # n0 is additive over pairwise coprime factors
    n0 = n0_distinct_roots(a) + n0_distinct_roots(b) + n0_distinct_roots(c)
    return max(a.degree, b.degree, c.degree) <= n0 - 1


def _random_int_poly(rng: Random, max_degree: int, var: str) -> RationalPoly:
    degree = rng.randint(0, max_degree)
    coeffs = [rng.randint(-9, 9) for _ in range(degree)]
    coeffs.append(rng.choice([-3, -2, -1, 1, 2, 3]))
    return Polynomial.from_coeffs(QQ, coeffs, var)


def random_coprime_triple(
    rng: Random,
    max_degree: int = 20,
    var: str = "t",
) -> tuple[RationalPoly, RationalPoly, RationalPoly]:
    """Return a random pairwise coprime triple (a, b, a + b) over Q."""
    while True:
        a = _random_int_poly(rng, max_degree, var)
        b = _random_int_poly(rng, max_degree, var)
        c = a + b
        if c.is_zero or (a.is_constant and b.is_constant):
            continue
        # gcd(a, b) = 1 implies gcd(a, a + b) = gcd(b, a + b) = 1
        if are_coprime(a, b):
            return a, b, c


def integer_poly(coeffs: Iterable[int], var: str = "z") -> Polynomial[int]:
    """Return a polynomial over Z from coefficients, low degree first."""
    return Polynomial.from_coeffs(ZZ, coeffs, var)
