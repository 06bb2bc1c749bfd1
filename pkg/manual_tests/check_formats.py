from pathlib import Path

import pytest

from novikov_groebner.algebra import LieTable, check_novikov
from novikov_groebner.catalog import load_catalog, same_table
from novikov_groebner.formats import (
    AlgebraFormatError,
    parse_algebra,
    parse_ideal,
    parse_map,
    read_algebra,
    read_ideal,
    read_map,
    render_algebra,
    render_ideal,
    render_map,
)
from novikov_groebner.iso import ExplicitMap, GenericMap

SAMPLES = Path(__file__).parent / "sample_inputs"


def test_sample_algebras():
    family = read_algebra(SAMPLES / "x2_family.alg")

    assert family.name == "X2"
    assert family.field_tag == "R"
    assert family.params == ("beta",)
    assert check_novikov(family).ok

    heisenberg = read_algebra(SAMPLES / "heisenberg.alg")

    assert isinstance(heisenberg, LieTable)
    assert same_table(heisenberg, load_catalog().lie("g3"))


def test_errors_name_the_file_and_line():
    with pytest.raises(AlgebraFormatError) as caught:
        read_algebra(SAMPLES / "broken.alg")

    assert caught.value.line == 4
    assert caught.value.path.endswith("broken.alg")
    assert str(caught.value).startswith(caught.value.path + ":4:")

    with pytest.raises(AlgebraFormatError) as caught:
        read_algebra(SAMPLES / "missing.alg")

    assert caught.value.line is None


def test_malformed_algebra_text():
    cases = {
        "e1 e1 = e1\n": None,
        "dim 2\nfield Q\n": 2,
        "dim 2\ne1 e1 = e1\n[e1, e2] = e1\n": 3,
        "dim 2\nhello\n": 2,
        "dim 2\next i : i^2 - 1\n": 2,
        "dim 2\ne1 e1 = q e2\n": 2,
    }

    for text, line in cases.items():
        with pytest.raises(AlgebraFormatError) as caught:
            parse_algebra(text)

        assert caught.value.line == line


def test_rendered_algebras_parse_back():
    catalog = load_catalog()
    algebras = [
        read_algebra(SAMPLES / "x1_family.alg"),
        read_algebra(SAMPLES / "heisenberg.alg"),
        catalog.entry("N^{h1}_17").table,
        catalog.lie("g2"),
    ]

    for A in algebras:
        B = parse_algebra(render_algebra(A))

        assert same_table(A, B)
        assert B.field_tag == A.field_tag
        assert isinstance(B, LieTable) == isinstance(A, LieTable)


def test_ideal_files():
    ideal = read_ideal(SAMPLES / "worked.ideal")

    assert ideal.ring.names == ("D", "x11", "x12", "x21", "x22", "alpha", "beta")
    assert ideal.ring.order.style == "lex"
    assert len(ideal.generators) == 4

    again = parse_ideal(render_ideal(ideal))

    assert again.generators == ideal.generators

    elim = parse_ideal("vars t > x > y\norder elim 1\nx - t^2\n")

    assert elim.ring.order.style == "elim"
    assert elim.ring.order.split == 1

    with pytest.raises(AlgebraFormatError) as caught:
        parse_ideal("vars x > y\nx + z\n")

    assert caught.value.line == 2

    with pytest.raises(AlgebraFormatError):
        parse_ideal("x + y\n")


def test_map_files():
    phi = read_map(SAMPLES / "worked_witness.map")

    assert isinstance(phi, ExplicitMap)
    assert [[str(e) for e in row] for row in phi.matrix] == [
        ["2", "1", "0"],
        ["-1", "1", "0"],
        ["0", "0", "3"],
    ]
    assert parse_map(render_map(phi)).matrix == phi.matrix

    rotation = parse_map("ext i : i^2 + 1\ne1 -> i y1\ne2 -> y2\n")

    assert isinstance(rotation, ExplicitMap)
    assert str(rotation.matrix[0][0]) == "i"

    symbolic = parse_map("param t\ne1 -> t y1\ne2 -> y1 + y2\n")

    assert isinstance(symbolic, GenericMap)
    assert symbolic.det_inverse == "D"


def test_malformed_maps():
    for text in (
        "e1 -> y1\ne1 -> y2\n",
        "e1 -> y1\ne3 -> y2\n",
        "e1 -> y1\n",
        "e1 => y1\ne2 -> y2\n",
        "param t\ne1 -> 0\ne2 -> y2\n",
    ):
        with pytest.raises(AlgebraFormatError):
            parse_map(text, 2)


if __name__ == "__main__":
    import manual_tests.log_setup as log_setup

    logger = log_setup.get_logger(__name__, "logs/check_formats.log")
    log_setup.run_checks(globals(), logger)
