"""Verdict value type and its JSON form."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum, StrEnum
from typing import Any, NotRequired, TypedDict

from ..const import SCHEMA_VERSION
from ..exceptions import InvalidInputError
from ..utils.serialize import to_jsonable


class VerdictKind(StrEnum):
    """Outcome of a stability engine."""

    INVERSELY_STABLE = "InverselyStable"
    NOT_INVERSELY_STABLE = "NotInverselyStable"
    PHI_REDUCIBLE = "PhiReducible"
    INFINITY_PERIODIC = "InfinityPeriodic"
    GUARANTEED = "Guaranteed"
    NOT_APPLICABLE = "NotApplicable"
    INCONCLUSIVE = "Inconclusive"
    INVALID_INPUT = "InvalidInput"


class ExitCode(IntEnum):
    """Process exit codes."""

    OK = 0
    NEGATIVE = 1
    INCONCLUSIVE = 2
    USAGE = 64


_EXIT_CODES = {
    VerdictKind.INVERSELY_STABLE: ExitCode.OK,
    VerdictKind.GUARANTEED: ExitCode.OK,
    VerdictKind.NOT_INVERSELY_STABLE: ExitCode.NEGATIVE,
    VerdictKind.PHI_REDUCIBLE: ExitCode.NEGATIVE,
    VerdictKind.INFINITY_PERIODIC: ExitCode.NEGATIVE,
    VerdictKind.NOT_APPLICABLE: ExitCode.NEGATIVE,
    VerdictKind.INCONCLUSIVE: ExitCode.INCONCLUSIVE,
    VerdictKind.INVALID_INPUT: ExitCode.USAGE,
}


class FieldData(TypedDict):
    """Finite field parameters."""

    p: int
    k: int


class VerdictData(TypedDict):
    """Serialized verdict."""

    schema_version: int
    ring: str
    field: FieldData | None
    d: int | None
    c: Any
    verdict: str
    reason: str
    failing_index: int | None
    ratio_index: int | None
    witness: Any
    preperiod: int | None
    period: int | None
    ratios: list[Any]
    certificate: dict[str, Any] | None
    hypotheses: list[str]
    details: NotRequired[dict[str, Any]]


@dataclass(frozen=True, slots=True)
class Verdict:
    """Verdict with its witness payload.

    Payload values are stored JSON native so that a verdict survives a
    round trip through as_dict and from_dict unchanged.
    """

    kind: VerdictKind
    ring: str = "fq"
    fq: tuple[int, int] | None = None
    d: int | None = None
    c: Any = None
    reason: str = ""
    failing_index: int | None = None
    ratio_index: int | None = None
    witness: Any = None
    preperiod: int | None = None
    period: int | None = None
    ratios: tuple[Any, ...] = ()
    certificate: dict[str, Any] | None = None
    hypotheses: tuple[str, ...] = ()
    details: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        """Normalize payload values."""
        object.__setattr__(self, "c", to_jsonable(self.c))
        object.__setattr__(self, "witness", to_jsonable(self.witness))
        object.__setattr__(self, "ratios", tuple(to_jsonable(list(self.ratios))))
        object.__setattr__(self, "details", to_jsonable(self.details))
        if self.certificate is not None:
            object.__setattr__(self, "certificate", to_jsonable(self.certificate))

    @property
    def exit_code(self) -> ExitCode:
        """Return the process exit code for this verdict."""
        return _EXIT_CODES[self.kind]

    @property
    def is_positive(self) -> bool:
        """Return True for InverselyStable and Guaranteed."""
        return self.exit_code is ExitCode.OK

    def as_dict(self) -> VerdictData:
        """Return the JSON form."""
        data = VerdictData(
            schema_version=SCHEMA_VERSION,
            ring=self.ring,
            field=FieldData(p=self.fq[0], k=self.fq[1]) if self.fq else None,
            d=self.d,
            c=self.c,
            verdict=self.kind.value,
            reason=self.reason,
            failing_index=self.failing_index,
            ratio_index=self.ratio_index,
            witness=self.witness,
            preperiod=self.preperiod,
            period=self.period,
            ratios=list(self.ratios),
            certificate=self.certificate,
            hypotheses=list(self.hypotheses),
        )
        if self.details:
            data["details"] = self.details
        return data

    @classmethod
    def from_dict(cls, data: VerdictData) -> Verdict:
        """Create a verdict from its JSON form."""
        if data.get("schema_version") != SCHEMA_VERSION:
            raise InvalidInputError(
                f"Unsupported schema version {data.get('schema_version')}"
            )
        try:
            kind = VerdictKind(data["verdict"])
        except (KeyError, ValueError) as err:
            raise InvalidInputError("Invalid verdict payload") from err
        fq = data.get("field")
        return cls(
            kind=kind,
            ring=data.get("ring", "fq"),
            fq=(fq["p"], fq["k"]) if fq else None,
            d=data.get("d"),
            c=data.get("c"),
            reason=data.get("reason", ""),
            failing_index=data.get("failing_index"),
            ratio_index=data.get("ratio_index"),
            witness=data.get("witness"),
            preperiod=data.get("preperiod"),
            period=data.get("period"),
            ratios=tuple(data.get("ratios", ())),
            certificate=data.get("certificate"),
            hypotheses=tuple(data.get("hypotheses", ())),
            details=data.get("details", {}),
        )
