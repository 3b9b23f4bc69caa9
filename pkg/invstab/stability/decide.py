"""Complete inverse stability decision for z^d + c over F_q."""

from __future__ import annotations

import logging
from typing import Any

from ..arith.finite_field import field_for, is_m_free
from ..arith.scalars import radical
from ..const import STEP_CAP
from ..criteria.irreducibility import binomial_irred_fq
from ..dynamics.xseq import ScanStatus, pair_cycle_scan
from ..exceptions import InvalidInputError
from .verdict import Verdict, VerdictKind

_LOGGER = logging.getLogger(__name__)


def decide_fq(
    p: int,
    k: int,
    d: int,
    c: object,
    step_cap: int | None = None,
) -> Verdict:
    """Decide whether z^d + c is inversely stable over F_q, q = p^k.

    The pair (x_n, x_{n+1}) is walked until it repeats, which yields every
    ratio x_{n+1}/x_n; the polynomial is inversely stable iff it is
    irreducible and each ratio is rad(d)-free.
    """
    if step_cap is None:
        step_cap = STEP_CAP
    context: dict[str, Any] = {"ring": "fq", "fq": (p, k), "d": d, "c": c}
    try:
        if d < 2:
            raise InvalidInputError(f"d={d} must be >= 2")
        if step_cap < 1:
            raise InvalidInputError(f"step_cap={step_cap} must be >= 1")
        ctx = field_for(p, k)
        c_value = ctx.convert(c)
    except (InvalidInputError, TypeError) as err:
        return Verdict(VerdictKind.INVALID_INPUT, reason=str(err), **context)
    context["c"] = ctx.to_json(c_value)  # type: ignore[arg-type]

    if d % p == 0:
        return Verdict(
            VerdictKind.PHI_REDUCIBLE,
            reason=f"characteristic {p} divides d={d}",
            **context,
        )
    certificate = binomial_irred_fq(ctx, d, ctx.neg(c_value))  # type: ignore[arg-type]
    if not certificate.is_irreducible:
        return Verdict(
            VerdictKind.PHI_REDUCIBLE,
            reason=certificate.condition or "z^d + c is reducible",
            witness=certificate.witness,
            certificate=certificate.as_dict(),
            **context,
        )

    scan = pair_cycle_scan(ctx, d, c_value, step_cap)
    if scan.status is ScanStatus.ZERO_TERM:
        _LOGGER.warning(
            "x_%s = 0 although z^%d + %s is irreducible", scan.zero_index, d, c
        )
        return Verdict(
            VerdictKind.INFINITY_PERIODIC,
            reason=f"x_{scan.zero_index} = 0",
            witness=scan.zero_index,
            **context,
        )
    if scan.status is ScanStatus.CAP_EXCEEDED:
        return Verdict(
            VerdictKind.INCONCLUSIVE,
            reason="CapExceeded",
            details={"step_cap": step_cap},
            **context,
        )

    m = radical(d)
    cycle = {"preperiod": scan.preperiod, "period": scan.period}
    ratios = [ctx.to_json(ratio) for ratio in scan.ratios]  # type: ignore[arg-type]
    for index, ratio in enumerate(scan.ratios, start=1):
        if not is_m_free(ctx, ratio, m):
            _LOGGER.debug(
                "Ratio x_%d/x_%d = %s is not %d-free", index + 1, index, ratio, m
            )
            return Verdict(
                VerdictKind.NOT_INVERSELY_STABLE,
                reason=f"x_{index + 1}/x_{index} is not {m}-free",
                failing_index=index + 1,
                ratio_index=index,
                witness=ctx.to_json(ratio),  # type: ignore[arg-type]
                ratios=tuple(ratios),
                **cycle,  # type: ignore[arg-type]
                **context,
            )
    return Verdict(
        VerdictKind.INVERSELY_STABLE,
        reason=f"every ratio x_(n+1)/x_n is {m}-free",
        ratios=tuple(ratios),
        **cycle,  # type: ignore[arg-type]
        **context,
    )
