import io
import json
from pathlib import Path

from rich.console import Console

from novikov_groebner.cli import EXIT_INPUT, EXIT_NEGATIVE, EXIT_OK, run

SAMPLES = Path(__file__).parent / "sample_inputs"


def _run(*argv: str) -> tuple[int, str]:
    buffer = io.StringIO()
    out = Console(file=buffer, markup=False, highlight=False, soft_wrap=True, emoji=False)
    code = run([str(a) for a in argv], out)
    return code, buffer.getvalue()


def _sample(name: str) -> str:
    return str(SAMPLES / name)


def test_version():
    code, text = _run("version")

    assert code == EXIT_OK
    assert text.startswith("novikov-groebner ")


def test_check_reports():
    code, text = _run("check", _sample("x1_alpha_1.alg"))
    lines = text.splitlines()

    assert code == EXIT_OK
    assert lines[0] == "algebra: X1_1"
    assert "novikov: yes" in lines
    assert "complete: true" in lines
    assert "  [e1, e2] = e3" in lines

    code, text = _run("check", _sample("not_novikov.alg"))

    assert code == EXIT_NEGATIVE
    assert "right-commutative: no" in text.splitlines()


def test_check_json():
    code, text = _run("check", _sample("x2_beta_m2.alg"), "--json")
    data = json.loads(text)

    assert code == EXIT_OK
    assert data["novikov"] is True
    assert data["fingerprint"]["dim_square"] == 1


def test_input_errors():
    assert _run("check", _sample("broken.alg"))[0] == EXIT_INPUT
    assert _run("check", _sample("missing.alg"))[0] == EXIT_INPUT
    assert _run("iso", _sample("x1_alpha_1.alg"), _sample("x2_beta_m2.alg"), "--field", "Q")[0] == EXIT_INPUT  # noqa: E501
    assert _run("frobnicate")[0] == EXIT_INPUT
    assert _run("tg", "g2")[0] == EXIT_INPUT
    assert _run("catalog", "show", "N^{h1}_99")[0] == EXIT_INPUT


def test_groebner_basis_of_the_worked_ideal():
    code, text = _run("gb", _sample("worked.ideal"))

    assert code == EXIT_OK
    assert set(text.splitlines()) == {
        "D x12 x22 alpha + (1/2) D x12 x22 - 1/2",
        "D x12 x22 beta - (1/4) D x12 x22 + (1/2) alpha + 1/4",
        "x11 - x12 alpha - x12",
        "x21 + x22 alpha",
        "alpha^2 + alpha + beta",
    }


def test_iso_verdicts():
    code, text = _run("iso", _sample("x2_beta_m2.alg"), _sample("x1_alpha_1.alg"), "--field", "C")  # noqa: E501
    lines = text.splitlines()

    assert code == EXIT_OK
    assert lines[0] == "X2_m2 vs X1_1 over C: isomorphic"
    assert lines[1] == "witness:"
    assert len(lines) == 5

    code, text = _run("iso", _sample("x1_alpha_m_half.alg"), _sample("x2_beta_quarter.alg"))
    lines = text.splitlines()

    assert code == EXIT_NEGATIVE
    assert lines[0].startswith("X1_m_half vs X2_quarter over C: not-isomorphic")
    assert lines[1].startswith("certificate: ")


def test_iso_json():
    code, text = _run(
        "iso", _sample("x1_alpha_m_half.alg"), _sample("x2_beta_quarter.alg"), "--json"
    )
    data = json.loads(text)

    assert code == EXIT_NEGATIVE
    assert data["verdict"] == "not-isomorphic"
    assert data["field"] == "C"


def test_relate_families():
    code, text = _run(
        "relate", _sample("x2_family.alg"), _sample("x1_family.alg"), "--template", "heisenberg"
    )

    assert code == EXIT_OK
    assert text.strip()
    assert text.strip() != "no relation"


def test_structures_on_r2():
    code, text = _run("tg", "r2")
    lines = text.splitlines()

    assert code == EXIT_OK
    assert "free parameters: 2" in lines
    assert "residual: none" in lines

    code, text = _run("--seed", "3", "tg", "r2", "--samples", "2")

    assert code == EXIT_OK
    assert "samples: 2" in text.splitlines()


def test_act_and_lie():
    code, text = _run("act", _sample("x2_beta_m2.alg"), _sample("worked_witness.map"))

    assert code == EXIT_OK
    assert "dim 3" in text.splitlines()

    code, text = _run("lie", _sample("x1_alpha_1.alg"))

    assert code == EXIT_OK
    assert text.splitlines()[1:] == ["  [e1, e2] = e3"]


def test_catalog_and_caa_listings():
    code, text = _run("catalog", "list", "--scope", "examples")

    assert code == EXIT_OK
    assert [line.split("\t")[0] for line in text.splitlines()] == ["X^{g3}_1", "X^{g3}_2"]

    code, text = _run("catalog", "show", "X^{g3}_1")

    assert code == EXIT_OK
    assert "# lie g3" in text.splitlines()
    assert "param alpha" in text.splitlines()

    code, text = _run("caa", "build", "--dim", "3", "--field", "R")

    assert code == EXIT_OK
    assert text.splitlines()[0] == "15 classes of dimension 3 over R"


if __name__ == "__main__":
    import manual_tests.log_setup as log_setup

    logger = log_setup.get_logger(__name__, "logs/check_cli.log")
    log_setup.run_checks(globals(), logger)
