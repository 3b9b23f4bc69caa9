"""Test the decision procedure over F_q."""

import pytest

from invstab.stability.decide import decide_fq
from invstab.stability.verdict import ExitCode, VerdictKind


def test_inversely_stable() -> None:
    """z^2 + 2 over F_5."""
    verdict = decide_fq(5, 1, 2, 2)
    assert verdict.kind is VerdictKind.INVERSELY_STABLE
    assert verdict.preperiod == 1
    assert verdict.period == 2
    assert verdict.ratios == (2, 2, 3)
    assert set(verdict.ratios) == {2, 3}
    assert verdict.fq == (5, 1)
    assert verdict.exit_code is ExitCode.OK


def test_inversely_stable_fermat() -> None:
    """z^8 + 5 over F_17."""
    assert decide_fq(17, 1, 8, 5).kind is VerdictKind.INVERSELY_STABLE


def test_phi_reducible() -> None:
    """z^2 + 1 splits over F_5 since -1 is a square."""
    verdict = decide_fq(5, 1, 2, 1)
    assert verdict.kind is VerdictKind.PHI_REDUCIBLE
    assert verdict.witness == 2
    assert verdict.certificate is not None
    assert verdict.certificate["verdict"] == "Reducible"
    assert verdict.exit_code is ExitCode.NEGATIVE


@pytest.mark.parametrize(("p", "d", "c"), [(5, 5, 1), (5, 2, 0), (7, 2, 6)])
def test_phi_reducible_other(p: int, d: int, c: int) -> None:
    """p | d, c = 0 and square -c are reducible."""
    assert decide_fq(p, 1, d, c).kind is VerdictKind.PHI_REDUCIBLE


def test_not_inversely_stable() -> None:
    """z^2 + 3 over F_5 has x_n = 3 for every n, so x_2/x_1 = 1 is a square."""
    verdict = decide_fq(5, 1, 2, 3)
    assert verdict.kind is VerdictKind.NOT_INVERSELY_STABLE
    assert verdict.failing_index == 2
    assert verdict.ratio_index == 1
    assert verdict.witness == 1
    assert verdict.preperiod == 0
    assert verdict.period == 1


def test_extension_field() -> None:
    """c is accepted as coordinates over F_9 and echoed back."""
    verdict = decide_fq(3, 2, 2, [1, 1])
    assert verdict.kind in (
        VerdictKind.INVERSELY_STABLE,
        VerdictKind.NOT_INVERSELY_STABLE,
    )
    assert verdict.c == [1, 1]
    assert verdict.fq == (3, 2)


def test_cap_exceeded() -> None:
    """A cap of one state is inconclusive."""
    verdict = decide_fq(5, 1, 2, 2, step_cap=1)
    assert verdict.kind is VerdictKind.INCONCLUSIVE
    assert verdict.reason == "CapExceeded"
    assert verdict.details == {"step_cap": 1}
    assert verdict.exit_code is ExitCode.INCONCLUSIVE


@pytest.mark.parametrize(
    ("p", "k", "d", "c", "step_cap"),
    [
        (4, 1, 2, 1, None),
        (5, 0, 2, 1, None),
        (5, 1, 1, 1, None),
        (5, 1, 2, 1, 0),
    ],
)
def test_invalid_input(
    p: int, k: int, d: int, c: int, step_cap: int | None
) -> None:
    """Bad parameters give an InvalidInput verdict."""
    verdict = decide_fq(p, k, d, c, step_cap=step_cap)
    assert verdict.kind is VerdictKind.INVALID_INPUT
    assert verdict.exit_code is ExitCode.USAGE
    assert verdict.reason
