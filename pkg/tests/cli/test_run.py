"""Test the command line entry point."""

import json
from pathlib import Path

import pytest

from invstab.cli.output import OutputFormat
from invstab.cli.run import RunConfig, build_parser, main
from invstab.exceptions import InvalidInputError


def run_json(capsys: pytest.CaptureFixture[str], *argv: str) -> tuple[int, dict]:
    """Run the command line and decode its JSON output."""
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


def test_decide_fq_stable(capsys: pytest.CaptureFixture[str]) -> None:
    """z^2 + 2 over F_5 exits 0."""
    code, data = run_json(capsys, "decide-fq", "--p", "5", "--d", "2", "--c", "2")
    assert code == 0
    assert data["verdict"] == "InverselyStable"
    assert data["field"] == {"p": 5, "k": 1}
    assert data["preperiod"] == 1
    assert data["period"] == 2


def test_decide_fq_reducible(capsys: pytest.CaptureFixture[str]) -> None:
    """z^2 + 1 over F_5 exits 1."""
    code, data = run_json(capsys, "decide-fq", "--p", "5", "--d", "2", "--c", "1")
    assert code == 1
    assert data["verdict"] == "PhiReducible"


def test_decide_fq_invalid(capsys: pytest.CaptureFixture[str]) -> None:
    """A composite characteristic exits 64 with an InvalidInput verdict."""
    code, data = run_json(capsys, "decide-fq", "--p", "4", "--d", "2", "--c", "1")
    assert code == 64
    assert data["verdict"] == "InvalidInput"


def test_decide_fq_extension(capsys: pytest.CaptureFixture[str]) -> None:
    """c is given as coordinates over F_9."""
    code, data = run_json(
        capsys, "decide-fq", "--p", "3", "--k", "2", "--d", "2", "--c", "1,1"
    )
    assert code in (0, 1)
    assert data["c"] == [1, 1]


def test_decide_fq_cap(capsys: pytest.CaptureFixture[str]) -> None:
    """An exhausted cap exits 2."""
    code, data = run_json(
        capsys, "decide-fq", "--p", "5", "--d", "2", "--c", "2", "--cap", "1"
    )
    assert code == 2
    assert data["verdict"] == "Inconclusive"


@pytest.mark.parametrize(
    ("ring", "d", "c", "code", "verdict"),
    [
        ("z", "3", "2", 0, "Guaranteed"),
        ("z", "2", "4", 1, "NotApplicable"),
        ("ft", "3", "t", 0, "Guaranteed"),
        ("ft", "3", "t^2+1", 0, "Guaranteed"),
        ("ft", "3", "t^3", 1, "NotApplicable"),
        ("ft", "2", "t", 64, "InvalidInput"),
    ],
)
def test_guarantee(
    capsys: pytest.CaptureFixture[str],
    ring: str,
    d: str,
    c: str,
    code: int,
    verdict: str,
) -> None:
    """Test the guarantee command."""
    result, data = run_json(capsys, "guarantee", "--ring", ring, "--d", d, "--c", c)
    assert result == code
    assert data["verdict"] == verdict
    assert data["ring"] == ring


def test_guarantee_internals(capsys: pytest.CaptureFixture[str]) -> None:
    """The x_n checks are attached on request."""
    code, data = run_json(
        capsys, "guarantee", "--ring", "ft", "--d", "3", "--c", "t", "--internals", "3"
    )
    assert code == 0
    assert data["details"]["internals"]["ok"] is True


def test_guarantee_bad_polynomial(capsys: pytest.CaptureFixture[str]) -> None:
    """Unparsable input exits 64."""
    assert main(["guarantee", "--ring", "ft", "--d", "3", "--c", "x+1"]) == 64
    assert "invalid polynomial" in capsys.readouterr().err.lower()


def test_enumerate_cor28_csv(capsys: pytest.CaptureFixture[str]) -> None:
    """The qualifying c at p = 17 as CSV rows."""
    assert main(["enumerate-cor28", "--p", "17", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "c,legendre(c-1),legendre(c),legendre(c+1),verdict"
    assert lines[1:] == ["5,1,-1,-1,InverselyStable", "10,1,-1,-1,InverselyStable"]


def test_enumerate_cor28_json(capsys: pytest.CaptureFixture[str]) -> None:
    """The report without stability runs."""
    code, data = run_json(
        capsys, "enumerate-cor28", "--p", "17", "--no-verify-stability"
    )
    assert code == 0
    assert data["qualifying_c"] == [5, 10]
    assert data["S"] == 2
    assert data["per_c_verdicts"] == []


def test_enumerate_cor28_not_fermat(capsys: pytest.CaptureFixture[str]) -> None:
    """p = 19 is not a Fermat prime."""
    assert main(["enumerate-cor28", "--p", "19"]) == 64
    assert "19" in capsys.readouterr().err


def test_selftest(capsys: pytest.CaptureFixture[str]) -> None:
    """A single suite runs and passes."""
    code, data = run_json(capsys, "selftest", "--suite", "lemma33", "--seed", "3")
    assert code == 0
    assert data["ok"] is True
    assert data["seed"] == 3
    assert [suite["suite"] for suite in data["suites"]] == ["lemma33"]


def test_iterate_over_q(capsys: pytest.CaptureFixture[str]) -> None:
    """g_1 and g_2 of z^2 + 1 over Q are certified irreducible."""
    code, data = run_json(capsys, "iterate", "--d", "2", "--c", "1", "--depth", "2")
    assert code == 0
    assert data["ring"] == "q"
    assert [row["g"] for row in data["iterates"]] == ["z^2 + 1", "z^4 + 2*z^2 + 2"]
    assert [row["irreducibility"] for row in data["iterates"]] == [
        "Irreducible",
        "Irreducible",
    ]
    assert data["iterates"][1]["method"] == "Eisenstein"


def test_iterate_over_fq(capsys: pytest.CaptureFixture[str]) -> None:
    """Iterates over F_5 with Rabin's test."""
    code, data = run_json(
        capsys, "iterate", "--p", "5", "--d", "2", "--c", "2", "--depth", "3"
    )
    assert code == 0
    assert [row["degree"] for row in data["iterates"]] == [2, 4, 8]
    assert {row["method"] for row in data["iterates"]} == {"Rabin"}


def test_iterate_limits(capsys: pytest.CaptureFixture[str]) -> None:
    """Depth over the Q cap exits 2 and p | d exits 64."""
    assert main(["iterate", "--d", "2", "--c", "1", "--depth", "99"]) == 2
    assert main(["iterate", "--p", "5", "--d", "5", "--c", "1"]) == 64
    capsys.readouterr()


def test_crossval(capsys: pytest.CaptureFixture[str]) -> None:
    """Every c over F_5 agrees for d = 2."""
    code, data = run_json(capsys, "crossval", "--p", "5", "--d", "2", "--depth", "2")
    assert code == 0
    assert data["ok"] is True
    assert len(data["reports"]) == 4


def test_crossval_cap(capsys: pytest.CaptureFixture[str]) -> None:
    """--cap bounds the pair scan of every c in the grid."""
    code, data = run_json(
        capsys, "crossval", "--p", "5", "--d", "2", "--depth", "1", "--cap", "1"
    )
    assert code == 0
    assert [report["verdict"] for report in data["reports"]] == [
        "PhiReducible",
        "Inconclusive",
        "NotInverselyStable",
        "PhiReducible",
    ]


def test_crossval_single_csv(capsys: pytest.CaptureFixture[str]) -> None:
    """A single c as CSV rows."""
    argv = ["crossval", "--p", "5", "--d", "2", "--c", "2", "--format", "csv"]
    assert main(argv) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("c,verdict,depth,degree")
    assert len(lines) == 4


def test_out_file(capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
    """--out writes the file and leaves stdout empty."""
    out = tmp_path / "verdict.json"
    argv = ["decide-fq", "--p", "5", "--d", "2", "--c", "2", "--out", str(out)]
    assert main(argv) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(out.read_text(encoding="utf-8"))["verdict"] == "InverselyStable"


def test_text_format(capsys: pytest.CaptureFixture[str]) -> None:
    """Text output is one key per line."""
    argv = ["decide-fq", "--p", "5", "--d", "2", "--c", "2", "--format", "text"]
    assert main(argv) == 0
    assert "verdict: InverselyStable" in capsys.readouterr().out.splitlines()


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["decide-fq", "--p", "5"],
        ["decide-fq", "--p", "5", "--d", "2", "--c", "2", "--threads", "0"],
        ["guarantee", "--ring", "q", "--d", "2", "--c", "1"],
        ["selftest", "--suite", "nope"],
    ],
)
def test_usage_errors(argv: list[str]) -> None:
    """argparse errors exit 64."""
    with pytest.raises(SystemExit) as err:
        main(argv)
    assert err.value.code == 64


def test_build_parser_commands() -> None:
    """Every command is registered."""
    parser = build_parser()
    args = parser.parse_args(["selftest"])
    assert args.suite == "all"
    assert args.format == "json"


def test_run_config() -> None:
    """Settings are validated."""
    config = RunConfig(output_format="csv")  # type: ignore[arg-type]
    assert config.output_format is OutputFormat.CSV
    with pytest.raises(InvalidInputError):
        RunConfig(depth=0)
    with pytest.raises(InvalidInputError):
        RunConfig(threads=0)
    with pytest.raises(InvalidInputError):
        RunConfig(output_format="xml")  # type: ignore[arg-type]
