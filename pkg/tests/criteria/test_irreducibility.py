"""Test the irreducibility criteria and certificates."""

from fractions import Fraction
from random import Random

import pytest
from sympy import Poly, Symbol

from invstab.arith.finite_field import ExtFieldCtx, PrimeFieldCtx
from invstab.arith.polyring import Polynomial, integer_poly, t_poly
from invstab.criteria.irreducibility import (
    CertificateMethod,
    Irreducibility,
    binomial_irred_fq,
    binomial_irred_ft,
    binomial_irred_q,
    certify_irred_q,
    default_prime_budget,
    rabin_irred_fq,
)
from invstab.exceptions import InvalidInputError


@pytest.mark.parametrize(
    ("d", "a", "verdict", "witness", "prime"),
    [
        (2, 1, Irreducibility.IRREDUCIBLE, None, None),
        (3, 2, Irreducibility.IRREDUCIBLE, None, None),
        (3, -8, Irreducibility.REDUCIBLE, 2, 3),
        (2, -4, Irreducibility.REDUCIBLE, 2, 2),
        (2, Fraction(-9, 4), Irreducibility.REDUCIBLE, Fraction(3, 2), 2),
        (4, 4, Irreducibility.REDUCIBLE, 1, 2),
        (4, -4, Irreducibility.REDUCIBLE, 2, 2),
        (4, 2, Irreducibility.IRREDUCIBLE, None, None),
        (6, 27, Irreducibility.REDUCIBLE, -3, 3),
    ],
)
def test_binomial_irred_q(
    d: int,
    a: int | Fraction,
    verdict: Irreducibility,
    witness: Fraction | None,
    prime: int | None,
) -> None:
    """Test the binomial criterion over Q."""
    certificate = binomial_irred_q(d, a)
    assert certificate.verdict is verdict
    assert certificate.method is CertificateMethod.BINOMIAL_CRITERION
    assert certificate.witness == witness
    assert certificate.prime == prime


@pytest.mark.parametrize(("d", "a"), [(1, 2), (2, 0)])
def test_binomial_irred_q_rejects(d: int, a: int) -> None:
    """d < 2 and a = 0 are rejected."""
    with pytest.raises(InvalidInputError):
        binomial_irred_q(d, a)


@pytest.mark.parametrize(
    ("p", "t", "b", "verdict", "witness"),
    [
        (5, 2, 3, Irreducibility.IRREDUCIBLE, None),
        (5, 2, 4, Irreducibility.REDUCIBLE, 2),
        (5, 3, 2, Irreducibility.REDUCIBLE, 3),
        (7, 4, 3, Irreducibility.REDUCIBLE, 4),
        (7, 3, 3, Irreducibility.IRREDUCIBLE, None),
        (7, 3, 6, Irreducibility.REDUCIBLE, 3),
        (13, 4, 2, Irreducibility.IRREDUCIBLE, None),
    ],
)
def test_binomial_irred_fq(
    p: int, t: int, b: int, verdict: Irreducibility, witness: int | None
) -> None:
    """Test the binomial criterion over F_p."""
    certificate = binomial_irred_fq(PrimeFieldCtx(p), t, b)
    assert certificate.verdict is verdict
    assert certificate.witness == witness


def test_binomial_irred_fq_zero(f5: PrimeFieldCtx) -> None:
    """b = 0 gives the factor z."""
    certificate = binomial_irred_fq(f5, 3, 0)
    assert certificate.is_reducible
    assert certificate.witness == Polynomial(f5, (0, 1))


@pytest.mark.parametrize("p", [3, 5, 7, 13])
@pytest.mark.parametrize("t", [2, 3, 4, 6])
def test_binomial_criterion_matches_rabin(p: int, t: int) -> None:
    """The binomial criterion agrees with Rabin's test over F_p."""
    ctx = PrimeFieldCtx(p)
    for b in range(1, p):
        f = Polynomial.binomial(ctx, t, ctx.neg(b))
        expected = rabin_irred_fq(ctx, f).verdict
        assert binomial_irred_fq(ctx, t, b).verdict is expected, b


def test_binomial_criterion_extension(f9: ExtFieldCtx) -> None:
    """The binomial criterion agrees with Rabin's test over F_9."""
    for b in f9.nonzero_elements():
        for t in (2, 4):
            f = Polynomial.binomial(f9, t, f9.neg(b))
            assert (
                binomial_irred_fq(f9, t, b).verdict is rabin_irred_fq(f9, f).verdict
            )


@pytest.mark.parametrize(
    ("d", "a", "verdict", "witness"),
    [
        (3, t_poly([0, 1]), Irreducibility.IRREDUCIBLE, None),
        (2, t_poly([0, 1]), Irreducibility.IRREDUCIBLE, None),
        (2, t_poly([0, 0, -1]), Irreducibility.REDUCIBLE, t_poly([0, 1])),
        (2, t_poly([0, 0, -4]), Irreducibility.REDUCIBLE, t_poly([0, 2])),
        (3, t_poly([0, 0, 0, 8]), Irreducibility.REDUCIBLE, t_poly([0, -2])),
        (4, t_poly([0, 0, 0, 0, 4]), Irreducibility.REDUCIBLE, t_poly([0, 1])),
    ],
)
def test_binomial_irred_ft(
    d: int,
    a: Polynomial[Fraction],
    verdict: Irreducibility,
    witness: Polynomial[Fraction] | None,
) -> None:
    """Test the binomial criterion over Q(t)."""
    certificate = binomial_irred_ft(d, a)
    assert certificate.verdict is verdict
    assert certificate.witness == witness


def test_binomial_irred_ft_rejects() -> None:
    """Zero and integer coefficients are rejected."""
    with pytest.raises(InvalidInputError):
        binomial_irred_ft(2, t_poly([0]))
    with pytest.raises(InvalidInputError):
        binomial_irred_ft(2, integer_poly([0, 1]))


@pytest.mark.parametrize(
    ("coeffs", "verdict"),
    [
        ((1, 0, 1), Irreducibility.REDUCIBLE),
        ((2, 0, 1), Irreducibility.IRREDUCIBLE),
        ((1, 1, 1), Irreducibility.IRREDUCIBLE),
        ((2, 1, 0, 1), Irreducibility.REDUCIBLE),
        ((2, 3, 0, 1), Irreducibility.IRREDUCIBLE),
    ],
)
def test_rabin(
    f5: PrimeFieldCtx, coeffs: tuple[int, ...], verdict: Irreducibility
) -> None:
    """Test Rabin's test over F_5."""
    assert rabin_irred_fq(f5, Polynomial(f5, coeffs)).verdict is verdict


def test_rabin_witness(f5: PrimeFieldCtx) -> None:
    """A proper factor is returned for reducible inputs."""
    f = Polynomial(f5, (1, 1)) * Polynomial(f5, (2, 0, 1))
    certificate = rabin_irred_fq(f5, f)
    assert certificate.is_reducible
    assert certificate.witness == Polynomial(f5, (1, 1))


def test_rabin_linear_and_rejects(f5: PrimeFieldCtx, f3: PrimeFieldCtx) -> None:
    """Linear polynomials are irreducible; constants and mixed fields are not."""
    f2 = PrimeFieldCtx(2)
    assert rabin_irred_fq(f2, Polynomial(f2, (0, 1))).is_irreducible
    assert rabin_irred_fq(f5, Polynomial(f5, (3, 2))).is_irreducible
    with pytest.raises(InvalidInputError):
        rabin_irred_fq(f5, Polynomial(f5, (3,)))
    with pytest.raises(InvalidInputError):
        rabin_irred_fq(f3, Polynomial(f5, (1, 1)))


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_rabin_matches_sympy(p: int) -> None:
    """Rabin's test agrees with sympy over F_p."""
    ctx = PrimeFieldCtx(p)
    z = Symbol("z")
    rng = Random(p)
    for _ in range(60):
        degree = rng.randint(1, 6)
        coeffs = [rng.randrange(p) for _ in range(degree)] + [1]
        expected = Poly(coeffs[::-1], z, modulus=p).is_irreducible
        certificate = rabin_irred_fq(ctx, Polynomial(ctx, tuple(coeffs)))
        assert certificate.is_irreducible is expected, coeffs


def test_certify_never_contradicts_sympy() -> None:
    """Certified polynomials are irreducible over Q."""
    z = Symbol("z")
    rng = Random(11)
    for _ in range(40):
        degree = rng.randint(2, 5)
        coeffs = [rng.randint(-6, 6) for _ in range(degree)] + [1]
        if coeffs[0] == 0:
            continue
        certificate = certify_irred_q(integer_poly(coeffs))
        if certificate.is_irreducible:
            assert Poly(coeffs[::-1], z).is_irreducible, coeffs


def test_default_prime_budget() -> None:
    """The budget holds the first primes."""
    assert default_prime_budget(5) == (2, 3, 5, 7, 11)


@pytest.mark.parametrize(
    ("coeffs", "method", "prime"),
    [
        ((2, 0, 2, 0, 1), CertificateMethod.EISENSTEIN, 2),
        ((2, 0, 0, 1), CertificateMethod.EISENSTEIN, 2),
        ((1, 0, 0, 3), CertificateMethod.EISENSTEIN, 3),
        ((1, 1, 1), CertificateMethod.MOD_P_REDUCTION, 2),
    ],
)
def test_certify_irred_q(
    coeffs: tuple[int, ...], method: CertificateMethod, prime: int
) -> None:
    """Certification by Eisenstein or a prime reduction."""
    certificate = certify_irred_q(integer_poly(coeffs))
    assert certificate.is_irreducible
    assert certificate.method is method
    assert certificate.prime == prime


def test_certify_inconclusive() -> None:
    """z^4 + 1 is reducible modulo every prime."""
    certificate = certify_irred_q(integer_poly([1, 0, 0, 0, 1]))
    assert certificate.verdict is Irreducibility.INCONCLUSIVE
    assert not certificate.is_reducible


def test_certify_rejects() -> None:
    """Non-primitive and constant inputs are rejected."""
    with pytest.raises(InvalidInputError):
        certify_irred_q(integer_poly([2, 0, 2]))
    with pytest.raises(InvalidInputError):
        certify_irred_q(integer_poly([5]))


def test_certificate_as_dict() -> None:
    """Certificates serialize to JSON friendly dicts."""
    assert binomial_irred_q(2, Fraction(-9, 4)).as_dict() == {
        "verdict": "Reducible",
        "method": "BinomialCriterion",
        "prime": 2,
        "witness": "3/2",
        "condition": "-a = (3/2)^2 is a 2-th power",
    }
