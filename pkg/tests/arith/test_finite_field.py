"""Test prime fields and their extensions."""

from fractions import Fraction
from itertools import product

import pytest

from invstab.arith.finite_field import (
    ExtFieldCtx,
    PrimeFieldCtx,
    ext_norm,
    field_arith,
    field_for,
    is_m_free,
)
from invstab.exceptions import FieldDivisionByZeroError, InvalidInputError


def test_prime_field_arith(f5: PrimeFieldCtx) -> None:
    """Test F_5 arithmetic."""
    assert field_arith(f5, "inv", 2) == 3
    assert field_arith(f5, "pow", 2, 4) == 1
    assert field_arith(f5, "add", 3, 4) == 2
    assert field_arith(f5, "mul", 3, 4) == 2
    assert f5.convert(-1) == 4
    assert f5.convert(Fraction(1, 2)) == 3
    with pytest.raises(FieldDivisionByZeroError):
        field_arith(f5, "inv", 0)
    with pytest.raises(InvalidInputError):
        field_arith(f5, "sqrt", 4)


@pytest.mark.parametrize("p", [4, 1, 2**64 + 13])
def test_prime_field_rejects(p: int) -> None:
    """Non-primes and oversized moduli are rejected."""
    with pytest.raises(InvalidInputError):
        PrimeFieldCtx(p)


def test_f9_relation(f9: ExtFieldCtx) -> None:
    """F_9 is found as F_3[g]/(g^2 + 1)."""
    assert f9.modulus == (1, 0, 1)
    assert f9.order == 9
    gamma = f9.gen
    assert field_arith(f9, "mul", gamma, gamma) == f9.convert(-1)
    assert f9.format(f9.convert([2, 1])) == "2+g"
    assert f9.to_json(gamma) == [0, 1]


def test_ext_inverse(f9: ExtFieldCtx) -> None:
    """Every nonzero element has an inverse."""
    for a in f9.nonzero_elements():
        assert f9.mul(a, f9.inv(a)) == f9.one
    with pytest.raises(FieldDivisionByZeroError):
        f9.inv(f9.zero)


def test_ext_reducible_modulus(f3: PrimeFieldCtx) -> None:
    """A reducible modulus is rejected."""
    with pytest.raises(InvalidInputError):
        ExtFieldCtx(f3, (2, 0, 1))
    with pytest.raises(InvalidInputError):
        ExtFieldCtx(f3, (1, 0, 2))


def test_element_indexing(f9: ExtFieldCtx) -> None:
    """Indices are base-p digits, low coefficient first."""
    elements = list(f9.elements())
    assert len(elements) == 9
    assert elements[:4] == [(0, 0), (1, 0), (2, 0), (0, 1)]
    for index, element in enumerate(elements):
        assert f9.element_from_index(index) == element
        assert f9.element_index(element) == index


def test_frobenius_is_field_map(f9: ExtFieldCtx) -> None:
    """Frobenius is additive and multiplicative, and of order k."""
    for a, b in product(f9.elements(), repeat=2):
        assert f9.frobenius(f9.add(a, b)) == f9.add(f9.frobenius(a), f9.frobenius(b))
        assert f9.frobenius(f9.mul(a, b)) == f9.mul(f9.frobenius(a), f9.frobenius(b))
    for a in f9.elements():
        assert f9.frobenius(a, 2) == a


@pytest.mark.parametrize(
    ("p", "a", "m", "expected"),
    [(5, 2, 2, True), (17, 16, 2, False), (7, 3, 3, True), (7, 6, 3, False)],
)
def test_is_m_free(p: int, a: int, m: int, expected: bool) -> None:
    """Test m-freeness over prime fields."""
    assert is_m_free(PrimeFieldCtx(p), a, m) is expected


def test_is_m_free_trivial(f9: ExtFieldCtx) -> None:
    """Every nonzero element is 1-free."""
    assert all(is_m_free(f9, a, 1) for a in f9.nonzero_elements())


def test_is_m_free_rejects(f5: PrimeFieldCtx) -> None:
    """m must divide q - 1 and alpha must be nonzero."""
    with pytest.raises(InvalidInputError):
        is_m_free(f5, 2, 3)
    with pytest.raises(InvalidInputError):
        is_m_free(f5, 0, 2)


def test_ext_norm(f9: ExtFieldCtx) -> None:
    """Norm of F_9 over F_3."""
    gamma = f9.gen
    assert ext_norm(f9, gamma) == 1
    assert ext_norm(f9, f9.convert([1, 1])) == 2
    assert ext_norm(f9, f9.embed(2)) == 1
    for a in f9.nonzero_elements():
        assert ext_norm(f9, a) == f9.norm_by_conjugates(a)


def test_ext_norm_base_power() -> None:
    """An embedded base element has norm alpha^k."""
    ctx = field_for(5, 3)
    assert isinstance(ctx, ExtFieldCtx)
    for a in range(1, 5):
        assert ext_norm(ctx, ctx.embed(a)) == pow(a, 3, 5)


@pytest.mark.parametrize(("p", "k"), [(2, 2), (2, 3), (3, 3), (5, 2), (7, 2)])
def test_field_for_orders(p: int, k: int) -> None:
    """Extension fields have p^k elements and satisfy Lagrange."""
    ctx = field_for(p, k)
    assert ctx.order == p**k
    assert sum(1 for _ in ctx.nonzero_elements()) == p**k - 1
    assert ctx.pow(ctx.gen, p**k - 1) == ctx.one


@pytest.mark.parametrize(
    ("q", "n", "m"),
    [(3, 2, 2), (3, 3, 2), (5, 2, 2), (5, 3, 2), (5, 2, 4), (7, 2, 3), (7, 2, 6)],
)
def test_is_m_free_descends_by_norm(q: int, n: int, m: int) -> None:
    """alpha is m-free in F_{q^n} iff its norm is m-free in F_q, for m | q - 1."""
    base = PrimeFieldCtx(q)
    ext = field_for(q, n)
    for alpha in ext.nonzero_elements():
        norm = ext_norm(ext, alpha)
        assert norm != 0
        assert is_m_free(ext, alpha, m) is is_m_free(base, norm, m), alpha


def test_ext_over_extension_rejected(f9: ExtFieldCtx) -> None:
    """Extensions are only built over a prime field."""
    with pytest.raises(InvalidInputError):
        ExtFieldCtx(f9, (1, 0, 1))  # type: ignore[arg-type]
