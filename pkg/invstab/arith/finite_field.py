"""Prime and extension field arithmetic."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
import logging

from ..const import MAX_FIELD_MODULUS
from ..exceptions import FieldDivisionByZeroError, InconsistencyError, InvalidInputError
from .domain import Domain
from .scalars import prime_divisors, require_prime

_LOGGER = logging.getLogger(__name__)

type ExtElem = tuple[int, ...]
type FieldElem = int | ExtElem


@dataclass(frozen=True, slots=True)
class PrimeFieldCtx(Domain[int]):
    """The prime field F_p with elements as ints in range(p)."""

    p: int

    def __post_init__(self) -> None:
        """Validate the modulus."""
        require_prime(self.p)
        if self.p >= MAX_FIELD_MODULUS:
            raise InvalidInputError(f"p={self.p} exceeds the 64-bit modulus ceiling")

    @property
    def characteristic(self) -> int:
        """Return p."""
        return self.p

    @property
    def order(self) -> int:
        """Return the number of elements."""
        return self.p

    @property
    def degree(self) -> int:
        """Return the degree over the prime field."""
        return 1

    @property
    def is_field(self) -> bool:
        """F_p is a field."""
        return True

    @property
    def zero(self) -> int:
        """Return 0."""
        return 0

    @property
    def one(self) -> int:
        """Return 1."""
        return 1

    @property
    def prime_field(self) -> PrimeFieldCtx:
        """Return the prime subfield."""
        return self

    def convert(self, value: object) -> int:
        """Reduce an int or Fraction modulo p."""
        if isinstance(value, Fraction):
            return self.mul(value.numerator % self.p, self.inv(value.denominator))
        if isinstance(value, int):
            return value % self.p
        raise TypeError(f"Can't convert {value!r} to F_{self.p}")

    def add(self, a: int, b: int) -> int:
        """Return a + b."""
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        """Return a - b."""
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        """Return a * b."""
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        """Return -a."""
        return -a % self.p

    def inv(self, a: int) -> int:
        """Return the inverse of a."""
        a %= self.p
        if a == 0:
            raise FieldDivisionByZeroError(f"0 has no inverse in F_{self.p}")
        return pow(a, -1, self.p)

    def exquo(self, a: int, b: int) -> int:
        """Return a / b."""
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        """Return a^n."""
        if n < 0:
            return pow(self.inv(a), -n, self.p)
        return pow(a, n, self.p)

    def is_zero(self, a: int) -> bool:
        """Return True if a is 0."""
        return a % self.p == 0

    def elements(self) -> Iterator[int]:
        """Iterate over F_p in increasing order."""
        return iter(range(self.p))

    def nonzero_elements(self) -> Iterator[int]:
        """Iterate over F_p^*."""
        return iter(range(1, self.p))

    def element_from_index(self, index: int) -> int:
        """Return the element with the given index."""
        return index % self.p

    def convolve(self, a: Sequence[int], b: Sequence[int]) -> list[int]:
        """Multiply coefficient lists by Kronecker substitution."""
        if not a or not b:
            return []
        p = self.p
        bits = 2 * (p - 1).bit_length() + max(len(a), len(b)).bit_length()
        width = (bits + 7) // 8
        packed_a = int.from_bytes(
            b"".join(coef.to_bytes(width, "little") for coef in a), "little"
        )
        packed_b = int.from_bytes(
            b"".join(coef.to_bytes(width, "little") for coef in b), "little"
        )
        size = len(a) + len(b) - 1
        raw = (packed_a * packed_b).to_bytes(size * width, "little")
        return [
            int.from_bytes(raw[i * width : (i + 1) * width], "little") % p
            for i in range(size)
        ]

    def divmod_coeffs(
        self,
        a: Sequence[int],
        b: Sequence[int],
    ) -> tuple[list[int], list[int]]:
        """Long division with inline integer arithmetic."""
        if not b:
            raise FieldDivisionByZeroError("Polynomial division by zero")
        p = self.p
        db = len(b) - 1
        rem = list(a)
        quo = [0] * max(len(a) - db, 0)
        inv_lead = self.inv(b[-1])
        for i in range(len(a) - 1 - db, -1, -1):
            lead = rem[i + db]
            if not lead:
                continue
            coef = lead * inv_lead % p
            quo[i] = coef
            for j in range(db):
                rem[i + j] = (rem[i + j] - coef * b[j]) % p
            rem[i + db] = 0
        return quo, rem[:db]


@dataclass(frozen=True, slots=True)
class ExtFieldCtx(Domain[ExtElem]):
    """F_{p^k} = F_p[z]/(modulus) with elements as coefficient tuples.

    The base is always a prime field; towers are not built. The modulus is
    given low degree first and must be monic and irreducible.
    """

    base: PrimeFieldCtx
    modulus: tuple[int, ...]
    check_modulus: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self) -> None:
        """Validate the base and the modulus."""
        if not isinstance(self.base, PrimeFieldCtx):
            raise InvalidInputError(
                f"Extensions are built over a prime field, not {self.base!r}"
            )
        p = self.base.p
        modulus = tuple(coef % p for coef in self.modulus)
        if len(modulus) < 2 or modulus[-1] != 1:
            raise InvalidInputError(
                f"Modulus {self.modulus} must be monic of degree >= 1"
            )
        object.__setattr__(self, "modulus", modulus)
        if self.check_modulus and not _modulus_is_irreducible(self.base, modulus):
            raise InvalidInputError(f"Modulus {modulus} is reducible over F_{p}")

    @classmethod
    def find(cls, base: PrimeFieldCtx, k: int) -> ExtFieldCtx:
        """Return F_{p^k} with the first irreducible modulus found.

        Binomials z^k - b are tried first, then all monic polynomials in
        lexicographic order of their lower coefficients.
        """
        return cls(base, _find_modulus(base.p, k), check_modulus=False)

    @property
    def k(self) -> int:
        """Return the extension degree."""
        return len(self.modulus) - 1

    @property
    def degree(self) -> int:
        """Return the extension degree."""
        return self.k

    @property
    def characteristic(self) -> int:
        """Return p."""
        return self.base.p

    @property
    def order(self) -> int:
        """Return p^k."""
        return self.base.p**self.k

    @property
    def is_field(self) -> bool:
        """F_{p^k} is a field."""
        return True

    @property
    def zero(self) -> ExtElem:
        """Return 0."""
        return (0,) * self.k

    @property
    def one(self) -> ExtElem:
        """Return 1."""
        return (1,) + (0,) * (self.k - 1)

    @property
    def gen(self) -> ExtElem:
        """Return the residue class of z."""
        if self.k == 1:
            return (-self.modulus[0] % self.base.p,)
        return (0, 1) + (0,) * (self.k - 2)

    @property
    def prime_field(self) -> PrimeFieldCtx:
        """Return the prime subfield."""
        return self.base

    def embed(self, value: int) -> ExtElem:
        """Embed a base field element."""
        return (value % self.base.p,) + (0,) * (self.k - 1)

    def in_base(self, a: ExtElem) -> bool:
        """Return True if a lies in the prime field."""
        return not any(a[1:])

    def convert(self, value: object) -> ExtElem:
        """Convert an int, Fraction or coefficient sequence."""
        if isinstance(value, int | Fraction):
            return self.embed(self.base.convert(value))
        if isinstance(value, tuple | list):
            if len(value) > self.k:
                raise InvalidInputError(
                    f"Element {value} has more than {self.k} coefficients"
                )
            coeffs = tuple(self.base.convert(coef) for coef in value)
            return coeffs + (0,) * (self.k - len(coeffs))
        raise TypeError(f"Can't convert {value!r} to F_{self.order}")

    def add(self, a: ExtElem, b: ExtElem) -> ExtElem:
        """Return a + b."""
        p = self.base.p
        return tuple((x + y) % p for x, y in zip(a, b, strict=True))

    def sub(self, a: ExtElem, b: ExtElem) -> ExtElem:
        """Return a - b."""
        p = self.base.p
        return tuple((x - y) % p for x, y in zip(a, b, strict=True))

    def neg(self, a: ExtElem) -> ExtElem:
        """Return -a."""
        p = self.base.p
        return tuple(-x % p for x in a)

    def mul(self, a: ExtElem, b: ExtElem) -> ExtElem:
        """Return a * b reduced modulo the defining polynomial."""
        return self._reduce(self.base.convolve(a, b))

    def _reduce(self, coeffs: list[int]) -> ExtElem:
        p = self.base.p
        k = self.k
        modulus = self.modulus
        for i in range(len(coeffs) - 1, k - 1, -1):
            coef = coeffs[i]
            if not coef:
                continue
            shift = i - k
            for j in range(k):
                coeffs[shift + j] = (coeffs[shift + j] - coef * modulus[j]) % p
            coeffs[i] = 0
        coeffs = coeffs[:k]
        return tuple(coeffs) + (0,) * (k - len(coeffs))

    def is_zero(self, a: ExtElem) -> bool:
        """Return True if a is 0."""
        return not any(a)

    def inv(self, a: ExtElem) -> ExtElem:
        """Return a^(q-2)."""
        if self.is_zero(a):
            raise FieldDivisionByZeroError(f"0 has no inverse in F_{self.order}")
        return self.pow(a, self.order - 2)

    def exquo(self, a: ExtElem, b: ExtElem) -> ExtElem:
        """Return a / b."""
        return self.mul(a, self.inv(b))

    def pow(self, a: ExtElem, n: int) -> ExtElem:
        """Return a^n."""
        if n < 0:
            return self.pow(self.inv(a), -n)
        return Domain.pow(self, a, n)

    def frobenius(self, a: ExtElem, i: int = 1) -> ExtElem:
        """Return a^(p^i)."""
        return self.pow(a, self.base.p ** (i % self.k))

    def norm_by_conjugates(self, a: ExtElem) -> int:
        """Return the norm to F_p as the product of the Frobenius conjugates."""
        result = self.one
        conjugate = a
        for _ in range(self.k):
            result = self.mul(result, conjugate)
            conjugate = self.frobenius(conjugate)
        if not self.in_base(result):
            raise InconsistencyError(f"Conjugate product {result} is not in F_p")
        return result[0]

    def elements(self) -> Iterator[ExtElem]:
        """Iterate over F_{p^k} in index order."""
        for digits in product(range(self.base.p), repeat=self.k):
            yield tuple(reversed(digits))

    def nonzero_elements(self) -> Iterator[ExtElem]:
        """Iterate over F_{p^k}^*."""
        return (a for a in self.elements() if any(a))

    def element_from_index(self, index: int) -> ExtElem:
        """Return the element whose coefficients are the base-p digits of index."""
        p = self.base.p
        index %= self.order
        digits = []
        for _ in range(self.k):
            index, digit = divmod(index, p)
            digits.append(digit)
        return tuple(digits)

    def element_index(self, a: ExtElem) -> int:
        """Return the base-p index of a."""
        index = 0
        for coef in reversed(a):
            index = index * self.base.p + coef
        return index

    def format(self, a: ExtElem) -> str:
        """Return the element as a polynomial in g."""
        terms = []
        for i, coef in enumerate(a):
            if not coef:
                continue
            if i == 0:
                terms.append(str(coef))
            else:
                mono = "g" if i == 1 else f"g^{i}"
                terms.append(mono if coef == 1 else f"{coef}*{mono}")
        return "+".join(terms) or "0"

    def to_json(self, a: ExtElem) -> object:
        """Return the coefficient list."""
        return list(a)


type FieldCtx = PrimeFieldCtx | ExtFieldCtx


def _modulus_is_irreducible(base: PrimeFieldCtx, modulus: tuple[int, ...]) -> bool:
    # irreducibility imports this module
    from ..criteria.irreducibility import rabin_irred_fq  # noqa: PLC0415
    from .polyring import Polynomial  # noqa: PLC0415

    return rabin_irred_fq(base, Polynomial(base, modulus)).is_irreducible


@lru_cache(maxsize=256)
def _find_modulus(p: int, k: int) -> tuple[int, ...]:
    if k < 1:
        raise InvalidInputError(f"Extension degree k={k} must be >= 1")
    base = PrimeFieldCtx(p)
    if k == 1:
        return (0, 1)
    for b in range(1, p):
        modulus = (-b % p,) + (0,) * (k - 1) + (1,)
        if _modulus_is_irreducible(base, modulus):
            _LOGGER.debug("F_%d^%d via binomial modulus %s", p, k, modulus)
            return modulus
    for digits in product(range(p), repeat=k):
        modulus = (*reversed(digits), 1)
        if modulus[0] and _modulus_is_irreducible(base, modulus):
            _LOGGER.debug("F_%d^%d via modulus %s", p, k, modulus)
            return modulus
    raise InconsistencyError(f"No irreducible polynomial of degree {k} over F_{p}")


def field_for(p: int, k: int = 1) -> FieldCtx:
    """Return F_p for k = 1, otherwise F_{p^k} via ExtFieldCtx.find."""
    base = PrimeFieldCtx(p)
    if k == 1:
        return base
    if k < 1:
        raise InvalidInputError(f"Extension degree k={k} must be >= 1")
    return ExtFieldCtx.find(base, k)


def field_arith[T](ctx: Domain[T], op: str, *elems: T | int) -> T:
    """Apply add, sub, mul, inv or pow to field elements.

    For pow the last argument is the integer exponent.
    """
    match op:
        case "add":
            a, b = elems
            return ctx.add(a, b)  # type: ignore[arg-type]
        case "sub":
            a, b = elems
            return ctx.sub(a, b)  # type: ignore[arg-type]
        case "mul":
            a, b = elems
            return ctx.mul(a, b)  # type: ignore[arg-type]
        case "inv":
            (a,) = elems
            return ctx.inv(a)  # type: ignore[arg-type]
        case "pow":
            a, n = elems
            return ctx.pow(a, n)  # type: ignore[arg-type]
    raise InvalidInputError(f"Unknown field operation {op!r}")


def is_m_free[T](ctx: FieldCtx, alpha: T, m: int) -> bool:
    """Return True if alpha is not an l-th power for any prime l dividing m."""
    q = ctx.order
    if m < 1 or (q - 1) % m:
        raise InvalidInputError(f"m={m} does not divide q-1={q - 1}")
    if ctx.is_zero(alpha):  # type: ignore[arg-type]
        raise InvalidInputError("0 is excluded from the m-free test")
    if m == 1:
        return True
    one = ctx.one
    return all(
        ctx.pow(alpha, (q - 1) // ell) != one  # type: ignore[arg-type]
        for ell in prime_divisors(m)
    )


def ext_norm(ctx: FieldCtx, alpha: FieldElem) -> int:
    """Return the norm of alpha to the prime field F_p.

    The norm is alpha^((p^k - 1)/(p - 1)). Every ExtFieldCtx lies directly
    over its prime field, so this is the norm from F_{p^k} to F_p; a norm to
    an intermediate field F_q, q = p^j, is not provided.
    """
    if isinstance(ctx, PrimeFieldCtx):
        return alpha % ctx.p  # type: ignore[operator]
    p = ctx.base.p
    value = ctx.pow(alpha, (ctx.order - 1) // (p - 1))  # type: ignore[arg-type]
    if not ctx.in_base(value):
        raise InconsistencyError(f"Norm {value} is not in F_{p}")
    return value[0]
