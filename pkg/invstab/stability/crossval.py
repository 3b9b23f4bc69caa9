"""Cross-validation of decide_fq against direct irreducibility tests of g_n."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
import logging
from typing import Any, NamedTuple

from ..arith.finite_field import field_for
from ..const import DEGREE_CEILING
from ..criteria.irreducibility import Irreducibility, rabin_irred_fq
from ..dynamics.iterate import iter_reduced_iterates
from ..utils.workers import ordered_map
from .decide import decide_fq
from .verdict import Verdict, VerdictKind

_LOGGER = logging.getLogger(__name__)


class CrossValidationRow(NamedTuple):
    """Comparison at one depth m."""

    depth: int
    degree: int
    rabin: Irreducibility | None
    observed: bool
    predicted: bool | None
    agree: bool


@dataclass(slots=True)
class CrossValidationReport:
    """Rabin test of g_1..g_m next to the prediction of the ratio test."""

    p: int
    k: int
    d: int
    c: Any
    max_depth: int
    verdict: Verdict
    rows: list[CrossValidationRow] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def disagreements(self) -> list[CrossValidationRow]:
        """Return the rows where prediction and observation differ."""
        return [row for row in self.rows if not row.agree]

    @property
    def ok(self) -> bool:
        """Return True if no row disagrees."""
        return not self.disagreements

    @property
    def truncated(self) -> bool:
        """Return True if fewer depths than requested were compared."""
        return len(self.rows) < self.max_depth

    def as_dict(self) -> dict[str, Any]:
        """Return a JSON representable dict."""
        return {
            "field": {"p": self.p, "k": self.k},
            "d": self.d,
            "c": self.verdict.c,
            "max_depth": self.max_depth,
            "verdict": self.verdict.kind.value,
            "ok": self.ok,
            "rows": [
                {
                    "depth": row.depth,
                    "degree": row.degree,
                    "rabin": row.rabin.value if row.rabin else None,
                    "observed": row.observed,
                    "predicted": row.predicted,
                    "agree": row.agree,
                }
                for row in self.rows
            ],
            "notes": list(self.notes),
        }


def _prediction(verdict: Verdict, depth: int) -> bool | None:
    """Return whether g_1..g_depth are all irreducible according to the verdict."""
    match verdict.kind:
        case VerdictKind.INVERSELY_STABLE:
            return True
        case VerdictKind.PHI_REDUCIBLE:
            return False
        case VerdictKind.NOT_INVERSELY_STABLE:
            return depth < verdict.failing_index  # type: ignore[operator]
    return None


def crossvalidate_fq(
    p: int,
    k: int,
    d: int,
    c: object,
    max_depth: int,
    *,
    degree_ceiling: int = DEGREE_CEILING,
    step_cap: int | None = None,
) -> CrossValidationReport:
    """Compare decide_fq with Rabin tests of g_1..g_max_depth."""
    verdict = decide_fq(p, k, d, c, step_cap=step_cap)
    report = CrossValidationReport(p, k, d, verdict.c, max_depth, verdict)
    if verdict.kind is VerdictKind.INVALID_INPUT:
        report.notes.append(f"invalid input: {verdict.reason}")
        return report
    if d % p == 0:
        report.notes.append("characteristic divides d: iterates are not defined")
        return report

    ctx = field_for(p, k)
    if ctx.is_zero(ctx.convert(c)):  # type: ignore[arg-type]
        report.notes.append("c = 0: iterates are not defined")
        return report
    all_irreducible = True
    for iterate in iter_reduced_iterates(ctx, d, c):
        depth = iterate.n
        if depth > max_depth:
            break
        degree = iterate.g.degree
        if degree > degree_ceiling:
            report.notes.append(
                f"depth {depth}: degree {degree} exceeds ceiling {degree_ceiling}"
            )
            break
        rabin = None
        if all_irreducible:
            rabin = rabin_irred_fq(ctx, iterate.g).verdict
            all_irreducible = rabin is Irreducibility.IRREDUCIBLE
        predicted = _prediction(verdict, depth)
        agree = predicted is None or predicted == all_irreducible
        if not agree:
            _LOGGER.error(
                "Disagreement at F_%d^%d d=%d c=%s depth %d: predicted %s observed %s",
                p,
                k,
                d,
                verdict.c,
                depth,
                predicted,
                all_irreducible,
            )
        report.rows.append(
            CrossValidationRow(depth, degree, rabin, all_irreducible, predicted, agree)
        )
    return report


def crossvalidate_grid(
    cases: Iterable[tuple[int, int, int]],
    max_depth: int,
    *,
    degree_ceiling: int = DEGREE_CEILING,
    step_cap: int | None = None,
    threads: int | None = None,
) -> list[CrossValidationReport]:
    """Cross-validate every c in F_q^* for each (p, k, d) case."""
    jobs = []
    for p, k, d in cases:
        ctx = field_for(p, k)
        jobs.extend(
            (p, k, d, ctx.to_json(c))  # type: ignore[arg-type]
            for c in ctx.nonzero_elements()
        )
    return ordered_map(
        lambda job: crossvalidate_fq(
            *job, max_depth, degree_ceiling=degree_ceiling, step_cap=step_cap
        ),
        jobs,
        threads,
    )
