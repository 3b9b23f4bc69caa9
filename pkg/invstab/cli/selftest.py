"""Self-test suites run by the selftest command."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from itertools import product
import logging
from random import Random
from typing import Any

from ..arith.domain import QQ
from ..arith.finite_field import PrimeFieldCtx, ext_norm, field_for, is_m_free
from ..arith.polyring import (
    Polynomial,
    are_coprime,
    integer_poly,
    mason_stothers_check,
    primitive_integer_coeffs,
    random_coprime_triple,
    t_poly,
)
from ..arith.scalars import prime_divisors
from ..criteria.charsums import cubic_char_sum, enumerate_cor28, quad_char_sum
from ..criteria.galois_norm import BinomialExtension, norm_mobius, verify_norm_chain
from ..criteria.irreducibility import binomial_irred_fq, certify_irred_q
from ..dynamics.iterate import iterate_phi
from ..dynamics.xseq import verify_lemma33
from ..exceptions import InvalidInputError, InvStabError
from ..stability.crossval import crossvalidate_grid
from ..stability.guarantee import guarantee_ft, guarantee_z, verify_thm24_internals
from ..stability.verdict import VerdictKind

_LOGGER = logging.getLogger(__name__)


@dataclass(slots=True)
class SuiteResult:
    """Outcome of one self-test suite."""

    name: str
    title: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        """Return True if nothing failed."""
        return not self.failures

    def check(self, ok: bool, label: str) -> None:
        """Count a check and remember its label on failure."""
        self.checks += 1
        if not ok:
            _LOGGER.warning("%s: %s failed", self.name, label)
            self.failures.append(label)

    def as_dict(self) -> dict[str, Any]:
        """Return a JSON representable dict."""
        return {
            "suite": self.name,
            "title": self.title,
            "ok": self.ok,
            "checks": self.checks,
            "failures": list(self.failures),
            "notes": list(self.notes),
        }


@dataclass(frozen=True, slots=True)
class SuiteContext:
    """Settings shared by the suites."""

    seed: int = 0
    threads: int | None = None
    depth: int = 3


def suite_lemma33(ctx: SuiteContext) -> SuiteResult:  # noqa: ARG001
    """x_n identities over Z."""
    result = SuiteResult(
        "lemma33", "x_n divisibility, coprimality and orbit identities over Z"
    )
    for d, c in product((2, 3), (2, 3, 5, 6, 7)):
        report = verify_lemma33(d, c, 5)
        result.check(report.ok and bool(report.checks), f"d={d} c={c}")
    unit = verify_lemma33(2, 1, 3)
    result.check(unit.ok and bool(unit.notes), "d=2 c=1 notes the unit hypothesis")
    return result


def suite_norm(ctx: SuiteContext) -> SuiteResult:
    """Norm closed form against conjugate products."""
    result = SuiteResult("norm", "Moebius norm closed form and the norm chain over F_q")
    rng = Random(ctx.seed)
    for p, d in product((3, 5), (2, 3)):
        base = PrimeFieldCtx(p)
        for m in range(1, p):
            if not binomial_irred_fq(base, d, -m).is_irreducible:
                continue
            extension = BinomialExtension(base, m, d)
            for a, b, e, t in product(range(p), repeat=4):
                if a * e % p == 0:
                    continue
                sign_m = (-1) ** d * m
                if (pow(t, d) + sign_m * pow(e, d)) % p == 0:
                    continue
                try:
                    norm_mobius(extension, a, b, e, t)
                except InvStabError as err:
                    result.check(False, f"F_{p} d={d} m={m} {(a, b, e, t)}: {err}")
                else:
                    result.check(True, "")
            ext = extension.ext
            elements = list(ext.nonzero_elements())
            for _ in range(20):
                x, y = rng.choice(elements), rng.choice(elements)
                result.check(
                    ext_norm(ext, ext.mul(x, y))
                    == base.mul(ext_norm(ext, x), ext_norm(ext, y)),
                    f"norm multiplicativity F_{p} d={d} m={m}",
                )
    for p, d, c in ((5, 2, 2), (7, 3, 3), (13, 3, 2), (17, 2, 3)):
        report = verify_norm_chain(p, d, c, 3)
        result.check(report.ok, f"norm chain p={p} d={d} c={c}")
    return result


def suite_charsum(ctx: SuiteContext) -> SuiteResult:  # noqa: ARG001
    """Quadratic and cubic character sums."""
    result = SuiteResult("charsum", "quadratic closed form and cubic Weil bound")
    for p in (3, 5, 7, 11, 13):
        for a, b, c in product(range(1, p), range(p), range(p)):
            try:
                quad_char_sum(p, a, b, c)
            except InvStabError as err:
                result.check(False, str(err))
            else:
                result.check(True, "")
    for p in (5, 7, 11, 13, 17, 19, 23, 29, 31):
        base = PrimeFieldCtx(p)
        for a0, a1, a2 in product(range(p), repeat=3):
            cubic = Polynomial(base, (a0, a1, a2, 1))
            if not are_coprime(cubic, cubic.derivative()):
                continue
            result.check(cubic_char_sum(p, cubic).within_bound, f"p={p} f={cubic}")
    return result


def crossval_cases() -> list[tuple[int, int, int]]:
    """Return the (p, k, d) grid with rad(d) | q - 1."""
    cases = []
    for p, k in ((5, 1), (7, 1), (3, 2), (13, 1), (17, 1)):
        q = p**k
        cases.extend(
            (p, k, d)
            for d in (2, 3, 4)
            if all((q - 1) % ell == 0 for ell in prime_divisors(d))
        )
    return cases


def suite_crossval(ctx: SuiteContext) -> SuiteResult:
    """Decision procedure against Rabin on g_1..g_depth."""
    result = SuiteResult(
        "crossval", "ratio test decision against direct irreducibility"
    )
    for report in crossvalidate_grid(crossval_cases(), ctx.depth, threads=ctx.threads):
        label = f"F_{report.p}^{report.k} d={report.d} c={report.verdict.c}"
        result.check(report.ok, label)
        if report.verdict.kind is VerdictKind.INFINITY_PERIODIC:
            result.check(False, f"{label}: x_n = 0 for irreducible phi")
    return result


def _is_m_free_brute(ctx: Any, alpha: Any, m: int) -> bool:
    elements = list(ctx.nonzero_elements())
    for e in range(2, m + 1):
        if m % e:
            continue
        if any(ctx.pow(beta, e) == alpha for beta in elements):
            return False
    return True


def suite_mfree(ctx: SuiteContext) -> SuiteResult:  # noqa: ARG001
    """Power residue test against the definition."""
    result = SuiteResult("mfree", "m-free test against exhaustive root search")
    for q in range(2, 50):
        factors = prime_divisors(q)
        if len(factors) != 1:
            continue
        p = factors[0]
        k = 0
        while p**k < q:
            k += 1
        field_ctx = field_for(p, k)
        for m in range(1, q):
            if (q - 1) % m:
                continue
            for alpha in field_ctx.nonzero_elements():
                expected = _is_m_free_brute(field_ctx, alpha, m)
                result.check(
                    is_m_free(field_ctx, alpha, m) == expected,
                    f"q={q} m={m} alpha={alpha}",
                )
    return result


def suite_mason(ctx: SuiteContext) -> SuiteResult:
    """Mason-Stothers on random coprime triples."""
    result = SuiteResult("mason", "polynomial abc inequality on random coprime triples")
    rng = Random(ctx.seed)
    for index in range(500):
        a, b, c = random_coprime_triple(rng, 20)
        result.check(mason_stothers_check(a, b, c), f"triple {index}")
    a, b, c = t_poly([0, 0, 1]), t_poly([1, 2]), t_poly([1, 2, 1])
    result.check(mason_stothers_check(a, b, c), "equality case")
    return result


def suite_guarantee(ctx: SuiteContext) -> SuiteResult:  # noqa: ARG001
    """Guarantees over Q and Q(t) with bounded depth certification."""
    result = SuiteResult("guarantee", "guarantees over Q and Q(t)")
    for d, c in ((3, 2), (2, 3), (5, 3), (3, -4)):
        verdict = guarantee_z(d, c)
        result.check(verdict.kind is VerdictKind.GUARANTEED, f"guarantee_z({d}, {c})")
        for n in (1, 2, 3):
            g = iterate_phi(QQ, d, c, n).g
            certificate = certify_irred_q(integer_poly(primitive_integer_coeffs(g)))
            result.check(not certificate.is_reducible, f"g_{n} for ({d}, {c}) refuted")
            if (d, c) != (3, -4) and n > 1:
                result.check(
                    certificate.is_irreducible, f"g_{n} for ({d}, {c}) certified"
                )
            result.notes.append(f"g_{n} for ({d}, {c}): {certificate.method.value}")
    result.check(
        guarantee_z(2, 4).kind is VerdictKind.NOT_APPLICABLE, "guarantee_z(2, 4)"
    )
    t = t_poly([0, 1])
    for c in (t, t_poly([1, 0, 1])):
        result.check(
            guarantee_ft(3, c).kind is VerdictKind.GUARANTEED, f"guarantee_ft(3, {c})"
        )
        result.check(verify_thm24_internals(3, c, 4).ok, f"x_n facts for c={c}")
    result.check(
        guarantee_ft(3, t**3).kind is VerdictKind.NOT_APPLICABLE, "guarantee_ft(3, t^3)"
    )
    result.check(
        guarantee_ft(2, t).kind is VerdictKind.INVALID_INPUT, "guarantee_ft(2, t)"
    )
    return result


def suite_cor28(ctx: SuiteContext) -> SuiteResult:
    """Fermat prime enumeration."""
    result = SuiteResult("cor28", "qualifying c over Fermat primes")
    for p in (17, 257):
        report = enumerate_cor28(p, threads=ctx.threads)
        if p == 17:
            result.check(report.qualifying_c == [5, 10], "p=17 qualifying c")
        result.check(report.identity_ok, f"p={p} identity")
        result.check(report.bound_ok, f"p={p} bound")
        result.check(report.all_stable, f"p={p} stability")
        result.check(all(report.x_pattern_ok.values()), f"p={p} x pattern")
    return result


SUITES: dict[str, Callable[[SuiteContext], SuiteResult]] = {
    "lemma33": suite_lemma33,
    "norm": suite_norm,
    "charsum": suite_charsum,
    "crossval": suite_crossval,
    "mfree": suite_mfree,
    "mason": suite_mason,
    "guarantee": suite_guarantee,
    "cor28": suite_cor28,
}
ALL_SUITES = "all"


def run_selftest(
    suite: str = ALL_SUITES,
    *,
    seed: int = 0,
    threads: int | None = None,
    depth: int = 3,
) -> list[SuiteResult]:
    """Run one suite, or every suite in a fixed order."""
    if suite != ALL_SUITES and suite not in SUITES:
        raise InvalidInputError(f"Unknown suite {suite!r}")
    names = list(SUITES) if suite == ALL_SUITES else [suite]
    ctx = SuiteContext(seed=seed, threads=threads, depth=depth)
    results = []
    for name in names:
        _LOGGER.info("Running suite %s", name)
        result = SUITES[name](ctx)
        _LOGGER.info(
            "Suite %s: %d checks, %d failures",
            name,
            result.checks,
            len(result.failures),
        )
        results.append(result)
    return results
