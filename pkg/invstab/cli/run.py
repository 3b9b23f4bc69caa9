"""invstab command line."""

from __future__ import annotations

import argparse
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
import logging
from pathlib import Path
import sys
from typing import Any, NoReturn

from ..arith.domain import QQ
from ..arith.finite_field import field_for
from ..arith.polyring import integer_poly, primitive_integer_coeffs
from ..const import (
    DEFAULT_SEED,
    DEGREE_CEILING,
    DEPTH,
    PRIME_BUDGET,
    Q_DEPTH_CAP,
    SCHEMA_VERSION,
    STEP_CAP,
)
from ..criteria.charsums import enumerate_cor28
from ..criteria.irreducibility import (
    IrreducibilityCertificate,
    certify_irred_q,
    default_prime_budget,
    rabin_irred_fq,
)
from ..dynamics.iterate import iter_reduced_iterates
from ..exceptions import (
    InvalidInputError,
    InvStabError,
    SizeLimitError,
    UnsupportedCharacteristicError,
)
from ..stability.crossval import crossvalidate_fq, crossvalidate_grid
from ..stability.decide import decide_fq
from ..stability.guarantee import guarantee_ft, guarantee_z
from ..stability.verdict import ExitCode, Verdict
from .output import OutputFormat, write_output
from .parse import parse_field_element, parse_int, parse_t_polynomial
from .selftest import ALL_SUITES, SUITES, run_selftest

_LOGGER = logging.getLogger(__name__)


@dataclass(slots=True)
class RunConfig:
    """Settings for one command invocation."""

    step_cap: int = STEP_CAP
    depth: int = DEPTH
    prime_budget: int = PRIME_BUDGET
    degree_ceiling: int = DEGREE_CEILING
    output_format: OutputFormat = OutputFormat.JSON
    seed: int = DEFAULT_SEED
    threads: int | None = None
    out: Path | None = None

    def __post_init__(self) -> None:
        """Validate the settings."""
        for name in ("step_cap", "depth", "prime_budget", "degree_ceiling"):
            if getattr(self, name) < 1:
                raise InvalidInputError(f"{name} must be positive")
        if self.threads is not None and self.threads < 1:
            raise InvalidInputError("threads must be positive")
        try:
            self.output_format = OutputFormat(self.output_format)
        except ValueError as err:
            raise InvalidInputError(
                f"Unknown output format {self.output_format!r}"
            ) from err


class ArgumentParser(argparse.ArgumentParser):
    """Argument parser that exits with the usage code."""

    def error(self, message: str) -> NoReturn:
        """Print usage and exit 64."""
        self.print_usage(sys.stderr)
        self.exit(ExitCode.USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from err
    if value < 1:
        raise argparse.ArgumentTypeError(f"{value} is not positive")
    return value


def build_parser() -> ArgumentParser:
    """Create the argument parser."""
    common = ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=[fmt.value for fmt in OutputFormat],
        default=OutputFormat.JSON.value,
        help="output format",
    )
    common.add_argument("--out", type=Path, default=None, help="write output to PATH")
    common.add_argument("--verbose", "-v", action="store_true", help="debug logging")
    common.add_argument(
        "--threads", type=_positive, default=None, help="worker threads"
    )

    parser = ArgumentParser(
        prog="invstab",
        description="Inverse stability of z^d + c over finite fields, Q and Q(t).",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    decide = commands.add_parser("decide-fq", parents=[common], help="decide over F_q")
    decide.add_argument("--p", type=int, required=True, help="field characteristic")
    decide.add_argument("--k", type=int, default=1, help="extension degree")
    decide.add_argument("--d", type=int, required=True, help="degree of z^d + c")
    decide.add_argument("--c", required=True, help="integer or coefficient list")
    decide.add_argument("--cap", type=_positive, default=STEP_CAP, help="pair scan cap")

    guarantee = commands.add_parser(
        "guarantee", parents=[common], help="sufficient condition over Q or Q(t)"
    )
    guarantee.add_argument("--ring", choices=["z", "ft"], required=True)
    guarantee.add_argument("--d", type=int, required=True)
    guarantee.add_argument("--c", required=True, help="integer or polynomial in t")
    guarantee.add_argument(
        "--internals", type=_positive, default=None, help="check x_n facts up to N"
    )

    cor28 = commands.add_parser(
        "enumerate-cor28", parents=[common], help="qualifying c for a Fermat prime"
    )
    cor28.add_argument("--p", type=int, required=True)
    cor28.add_argument(
        "--verify-stability", action=argparse.BooleanOptionalAction, default=True
    )

    selftest = commands.add_parser("selftest", parents=[common], help="run self-tests")
    selftest.add_argument("--suite", choices=[*SUITES, ALL_SUITES], default=ALL_SUITES)
    selftest.add_argument("--seed", type=int, default=DEFAULT_SEED)

    iterate = commands.add_parser(
        "iterate", parents=[common], help="reduced iterates g_1..g_n"
    )
    iterate.add_argument("--p", type=int, default=None, help="omit for Q")
    iterate.add_argument("--k", type=int, default=1)
    iterate.add_argument("--d", type=int, required=True)
    iterate.add_argument("--c", required=True)
    iterate.add_argument("--depth", type=_positive, default=DEPTH)

    crossval = commands.add_parser(
        "crossval", parents=[common], help="decision against direct irreducibility"
    )
    crossval.add_argument("--p", type=int, required=True)
    crossval.add_argument("--k", type=int, default=1)
    crossval.add_argument("--d", type=int, required=True)
    crossval.add_argument("--c", default=None, help="omit to scan every c")
    crossval.add_argument("--depth", type=_positive, default=DEPTH)
    crossval.add_argument(
        "--cap", type=_positive, default=STEP_CAP, help="pair scan cap"
    )
    return parser


def _emit_verdict(verdict: Verdict, config: RunConfig) -> int:
    write_output(dict(verdict.as_dict()), config.output_format, config.out)
    return verdict.exit_code


def cmd_decide_fq(args: argparse.Namespace, config: RunConfig) -> int:
    """Decide inverse stability over F_q."""
    c = parse_field_element(args.c)
    verdict = decide_fq(args.p, args.k, args.d, c, step_cap=config.step_cap)
    return _emit_verdict(verdict, config)


def cmd_guarantee(args: argparse.Namespace, config: RunConfig) -> int:
    """Check the sufficient conditions over Q or Q(t)."""
    if args.ring == "z":
        verdict = guarantee_z(args.d, parse_int(args.c))
    else:
        verdict = guarantee_ft(
            args.d, parse_t_polynomial(args.c), internals_depth=args.internals
        )
    return _emit_verdict(verdict, config)


def cmd_enumerate_cor28(args: argparse.Namespace, config: RunConfig) -> int:
    """Enumerate the qualifying c for a Fermat prime."""
    report = enumerate_cor28(
        args.p,
        verify_stability=args.verify_stability,
        step_cap=config.step_cap,
        threads=config.threads,
    )
    write_output(report.as_dict(), config.output_format, config.out, rows=report.rows())
    return ExitCode.OK if report.ok else ExitCode.NEGATIVE


def cmd_selftest(args: argparse.Namespace, config: RunConfig) -> int:
    """Run the self-test suites."""
    results = run_selftest(
        args.suite, seed=args.seed, threads=config.threads, depth=config.depth
    )
    ok = all(result.ok for result in results)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "suite": args.suite,
        "seed": args.seed,
        "ok": ok,
        "suites": [result.as_dict() for result in results],
    }
    rows = [
        {key: value for key, value in result.as_dict().items() if key != "notes"}
        for result in results
    ]
    write_output(payload, config.output_format, config.out, rows=rows)
    return ExitCode.OK if ok else ExitCode.NEGATIVE


def _certificate_row(certificate: IrreducibilityCertificate | None) -> dict[str, Any]:
    if certificate is None:
        return {"irreducibility": None, "method": None, "prime": None}
    return {
        "irreducibility": certificate.verdict.value,
        "method": certificate.method.value,
        "prime": certificate.prime,
    }


def cmd_iterate(args: argparse.Namespace, config: RunConfig) -> int:
    """Print the reduced iterates with their irreducibility status."""
    if args.p is None:
        domain: Any = QQ
        c: Any = Fraction(args.c.strip())
        if args.depth > Q_DEPTH_CAP:
            raise SizeLimitError(
                f"Depth {args.depth} exceeds the cap {Q_DEPTH_CAP}", index=args.depth
            )
        budget = default_prime_budget(config.prime_budget)
    else:
        domain = field_for(args.p, args.k)
        c = parse_field_element(args.c)

    rows = []
    for iterate in iter_reduced_iterates(domain, args.d, c):
        if iterate.n > args.depth:
            break
        g = iterate.g
        certificate = None
        if g.degree > config.degree_ceiling:
            _LOGGER.info("Skipping test of g_%d: degree %d", iterate.n, g.degree)
        elif args.p is None:
            primitive = integer_poly(primitive_integer_coeffs(g))
            certificate = certify_irred_q(primitive, budget)
        else:
            certificate = rabin_irred_fq(domain, g)
        row = {"n": iterate.n, "degree": g.degree, "g": str(g)}
        rows.append(row | _certificate_row(certificate))

    payload = {
        "schema_version": SCHEMA_VERSION,
        "ring": "q" if args.p is None else "fq",
        "field": None if args.p is None else {"p": args.p, "k": args.k},
        "d": args.d,
        "c": domain.to_json(domain.convert(c)),
        "iterates": rows,
    }
    write_output(payload, config.output_format, config.out, rows=rows)
    return ExitCode.OK


def cmd_crossval(args: argparse.Namespace, config: RunConfig) -> int:
    """Cross-validate the decision against Rabin tests of g_1..g_depth."""
    if args.c is None:
        reports = crossvalidate_grid(
            [(args.p, args.k, args.d)],
            args.depth,
            degree_ceiling=config.degree_ceiling,
            step_cap=config.step_cap,
            threads=config.threads,
        )
    else:
        reports = [
            crossvalidate_fq(
                args.p,
                args.k,
                args.d,
                parse_field_element(args.c),
                args.depth,
                degree_ceiling=config.degree_ceiling,
                step_cap=config.step_cap,
            )
        ]
    ok = all(report.ok for report in reports)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "ok": ok,
        "reports": [report.as_dict() for report in reports],
    }
    rows = [
        {"c": report.verdict.c, "verdict": report.verdict.kind.value, **row}
        for report in reports
        for row in report.as_dict()["rows"]
    ]
    write_output(payload, config.output_format, config.out, rows=rows)
    return ExitCode.OK if ok else ExitCode.NEGATIVE


COMMANDS = {
    "decide-fq": cmd_decide_fq,
    "guarantee": cmd_guarantee,
    "enumerate-cor28": cmd_enumerate_cor28,
    "selftest": cmd_selftest,
    "iterate": cmd_iterate,
    "crossval": cmd_crossval,
}


def main(argv: Sequence[str] | None = None) -> int:
    """Run the command line and return the exit code."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        config = RunConfig(
            step_cap=getattr(args, "cap", STEP_CAP),
            depth=getattr(args, "depth", DEPTH),
            output_format=args.format,
            seed=getattr(args, "seed", DEFAULT_SEED),
            threads=args.threads,
            out=args.out,
        )
        return int(COMMANDS[args.command](args, config))
    except (
        InvalidInputError,
        UnsupportedCharacteristicError,
        ValueError,
        ZeroDivisionError,
    ) as err:
        print(f"invstab: error: {err}", file=sys.stderr)  # noqa: T201
        return ExitCode.USAGE
    except SizeLimitError as err:
        print(f"invstab: size limit: {err}", file=sys.stderr)  # noqa: T201
        return ExitCode.INCONCLUSIVE
    except InvStabError as err:
        _LOGGER.exception("Command %s failed", args.command)
        print(f"invstab: {err}", file=sys.stderr)  # noqa: T201
        return ExitCode.NEGATIVE


if __name__ == "__main__":
    sys.exit(main())
