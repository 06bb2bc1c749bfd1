import random
from fractions import Fraction

import pytest

from novikov_groebner import linalg
from novikov_groebner.algebra import (
    DimensionMismatchError,
    JacobiViolationError,
    LieTable,
    NotNovikovError,
    StructureConstants,
    SymbolicParameterError,
    algebra_invariants,
    associated_lie,
    change_basis,
    check_eq3,
    check_left_representation,
    check_novikov,
    derived_series_dims,
    identity_element,
    is_complete,
    is_nilpotent,
    mult_matrices,
    require_novikov,
)
from novikov_groebner.catalog import caa_from_name, complex_block, load_catalog
from novikov_groebner.poly import PolynomialSyntaxError, Ring

SEED = 20240601


def _x1(alpha: str) -> StructureConstants:
    return StructureConstants.from_text(
        3, [f"e1 e2 = {alpha} e3 + e3", f"e2 e1 = {alpha} e3"], field_tag="R", name="X1"
    )


def _x2(beta: str) -> StructureConstants:
    return StructureConstants.from_text(
        3, [f"e1 e1 = {beta} e3", "e1 e2 = e3", "e2 e2 = e3"], field_tag="R", name="X2"
    )


def test_novikov_algebra_with_left_unit_on_a_hyperplane():
    A = StructureConstants.from_text(3, ["e1 e1 = e1", "e1 e2 = e2", "e1 e3 = e3"])

    assert check_novikov(A).ok
    assert not is_complete(A)
    assert check_left_representation(A)
    assert check_eq3(A)
    assert mult_matrices(A, "L")[0].entries == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_associative_algebra_failing_right_commutativity():
    A = StructureConstants.from_text(2, ["e1 e1 = e1", "e1 e2 = e2"], name="left-unit")
    report = check_novikov(A)

    assert not report.ok
    assert report.left_symmetric
    assert not report.right_commutative
    assert str(report.failures[0]).startswith("right-commutative fails on (e1, e1, e2)")

    with pytest.raises(NotNovikovError):
        require_novikov(A)


def test_parametric_conditions():
    ring = Ring.from_names(["a"])
    A = StructureConstants.from_text(2, ["e1 e1 = e1", "e1 e2 = a e2"], ring=ring)
    report = check_novikov(A)

    assert report.left_symmetric
    assert report.conditions() == [ring.parse("a")]
    assert check_novikov(A.substitute({"a": 0})).ok


def test_associated_lie_of_the_heisenberg_families():
    heisenberg = LieTable.from_text(3, ["[e1, e2] = e3"])

    assert associated_lie(_x1("1")).table == heisenberg.table
    assert associated_lie(_x2("-2")).table == heisenberg.table
    assert is_complete(_x1("1"))
    assert derived_series_dims(_x2("-2")) == [3, 1, 0]
    assert is_nilpotent(_x2("-2"))


def test_symbolic_families_are_checked_identically():
    ring = Ring.from_names(["alpha"])
    family = StructureConstants.from_text(
        3, ["e1 e2 = alpha e3 + e3", "e2 e1 = alpha e3"], ring=ring, field_tag="R"
    )

    assert check_novikov(family).ok
    assert is_complete(family)

    with pytest.raises(SymbolicParameterError):
        algebra_invariants(family)


def test_table_errors():
    with pytest.raises(DimensionMismatchError):
        StructureConstants.from_text(2, ["e1 e3 = e1"])

    with pytest.raises(PolynomialSyntaxError):
        StructureConstants.from_text(2, ["[e1, e2] = e1"])

    with pytest.raises(PolynomialSyntaxError):
        StructureConstants.from_text(2, ["e1 e1 = e1", "e1 e1 = e2"])

    with pytest.raises(JacobiViolationError):
        LieTable.from_text(3, ["[e1, e2] = e3", "[e2, e3] = e2"])

    with pytest.raises(JacobiViolationError):
        LieTable.from_text(2, ["[e1, e1] = e2"])


def test_units():
    assert identity_element(complex_block()) == (1, 0)
    assert identity_element(StructureConstants.from_text(2, ["e1 e1 = e1", "e1 e2 = e2"])) is None


def test_trace_form_signature_only_separates_over_the_reals():
    split = caa_from_name("3~A_0", "R").assembled
    mixed = caa_from_name("C+~A_0", "R").assembled
    first, second = algebra_invariants(split), algebra_invariants(mixed)

    assert first.trace_form_signature == (3, 0)
    assert second.trace_form_signature == (2, 1)
    assert first.differences(second, "R") == ["trace_form_signature"]
    assert first.differences(second, "C") == []


def _random_invertible(rng: random.Random, n: int) -> list[list[Fraction]]:
    while True:
        matrix = [[Fraction(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)]

        if linalg.determinant(matrix, Fraction(0)) != 0:
            return matrix


def test_fingerprint_is_invariant_under_change_of_basis():
    rng = random.Random(SEED)
    algebras = [_x2("-2"), _x1("1"), load_catalog().entry("N^{h1}_17").table]

    for A in algebras:
        reference = algebra_invariants(A)

        for _ in range(17):
            B = change_basis(A, _random_invertible(rng, A.dim))

            assert check_novikov(B).ok
            assert algebra_invariants(B) == reference


if __name__ == "__main__":
    import manual_tests.log_setup as log_setup

    logger = log_setup.get_logger(__name__, "logs/check_algebra.log")
    log_setup.run_checks(globals(), logger)
