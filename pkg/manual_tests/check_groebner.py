import random
from fractions import Fraction

import pytest
import sympy

from novikov_groebner.groebner import (
    BudgetExhaustedError,
    ExtensionNeeded,
    Ideal,
    NonReducedBasisError,
    PositiveSquaresCertificate,
    RealRootCertificate,
    buchberger,
    count_real_roots,
    describe_certificate,
    eliminate,
    find_point,
    groebner_basis,
    is_trivial,
    radicand_extension,
    real_nonsolvability,
    reduce,
    satisfies_buchberger_criterion,
)
from novikov_groebner.poly import Polynomial, Ring

SEED = 20240601

WORKED_RING = Ring.from_names(["D", "x11", "x12", "x21", "x22", "alpha", "beta"], order="lex")

WORKED_GENERATORS = [
    "2 D x11 x21 alpha + D x11 x21 - beta",
    "2 D x12 x21 alpha + D x12 x21 + alpha",
    "2 D x12 x22 alpha + D x12 x22 - 1",
    "D x11 x22 - D x12 x21 - 1",
]

WORKED_BASIS = [
    "D x12 x22 alpha + (1/2) D x12 x22 - 1/2",
    "D x12 x22 beta - (1/4) D x12 x22 + (1/2) alpha + 1/4",
    "x11 - x12 alpha - x12",
    "x21 + x22 alpha",
    "alpha^2 + alpha + beta",
]


def _worked_ideal(extra: list[str] | None = None) -> Ideal:
    texts = WORKED_GENERATORS + (extra or [])
    return Ideal([WORKED_RING.parse(t) for t in texts], WORKED_RING)


def test_worked_ideal_basis():
    gb = buchberger(_worked_ideal())

    assert set(gb.basis) == {WORKED_RING.parse(t) for t in WORKED_BASIS}
    assert gb.reduced
    assert not is_trivial(gb)
    assert satisfies_buchberger_criterion(gb)


def test_adding_the_excluded_value_gives_the_unit_ideal():
    gb = buchberger(_worked_ideal(["alpha + 1/2"]))

    assert is_trivial(gb)
    assert [str(g) for g in gb.basis] == ["1"]


def test_basis_does_not_depend_on_generator_order():
    rng = random.Random(SEED)
    reference = buchberger(_worked_ideal()).basis

    for _ in range(20):
        generators = [WORKED_RING.parse(t) for t in WORKED_GENERATORS]
        rng.shuffle(generators)
        gb = buchberger(Ideal(generators, WORKED_RING))

        assert gb.basis == reference
        assert satisfies_buchberger_criterion(gb)


def test_small_lex_example():
    ring = Ring.from_names(["x", "y"], order="lex")
    gb = groebner_basis([ring.parse("x^2 + y^2 - 1"), ring.parse("x - y")], ring)

    assert [str(g) for g in gb.basis] == ["x - y", "y^2 - 1/2"]
    assert gb.contains(ring.parse("x^2 - 1/2"))
    assert not gb.contains(ring.parse("x"))


def test_division_reconstructs_the_dividend():
    ring = Ring.from_names(["x", "y"], order="lex")
    f = ring.parse("x^2 y + x y^2 + y^2")
    divisors = [ring.parse("x y - 1"), ring.parse("y^2 - 1")]
    remainder, quotients = reduce(f, divisors)

    assert remainder == ring.parse("x + y + 1")
    assert quotients[0] * divisors[0] + quotients[1] * divisors[1] + remainder == f


def test_budget_exhaustion_keeps_a_partial_basis():
    with pytest.raises(BudgetExhaustedError) as caught:
        buchberger(_worked_ideal(), budget=1)

    partial = caught.value.partial

    assert partial is not None
    assert not partial.reduced

    with pytest.raises(NonReducedBasisError):
        is_trivial(partial)


def test_elimination_of_a_parametrized_curve():
    ring = Ring.from_names(["t", "x", "y"], order="lex")
    ideal = Ideal([ring.parse("x - t^2"), ring.parse("y - t^3")], ring)
    relations = eliminate(ideal, {"x", "y"})

    assert relations == [ring.parse("x^3 - y^2")]


def test_sturm_count_agrees_with_sympy():
    rng = random.Random(SEED)
    ring = Ring.from_names(["x"])
    x = sympy.Symbol("x")

    for _ in range(100):
        degree = rng.randint(1, 6)
        coefficients = [rng.randint(-5, 5) for _ in range(degree + 1)]

        if coefficients[-1] == 0:
            coefficients[-1] = 1

        p = Polynomial.from_terms(ring, {(k,): c for k, c in enumerate(coefficients)})
        expected = len(set(sympy.real_roots(sympy.Poly(list(reversed(coefficients)), x))))

        assert count_real_roots(p) == expected

    assert count_real_roots(ring.parse("x^2 + 1")) == 0
    assert count_real_roots(ring.parse("x^3 - 3 x^2 + 3 x - 1")) == 1


def test_real_certificates():
    ring = Ring.from_names(["x", "y"], order="lex")

    univariate = real_nonsolvability(groebner_basis([ring.parse("y^2 + 1")], ring))

    assert isinstance(univariate, RealRootCertificate)
    assert univariate.check()
    assert "has 0 real roots" in describe_certificate(univariate)

    squares = real_nonsolvability(groebner_basis([ring.parse("x^2 + y^2 + 1")], ring))

    assert isinstance(squares, PositiveSquaresCertificate)
    assert squares.check()

    assert real_nonsolvability(groebner_basis([ring.parse("x^2 + y^2 - 1")], ring)) is None


def test_point_search():
    ring = Ring.from_names(["x", "y"])
    p = ring.parse("x y - 1")
    point = find_point([p], ["x", "y"], field="R")

    assert isinstance(point, dict)
    assert p.substitute(point).is_zero


def test_point_search_requests_and_uses_a_square_root():
    ring = Ring.from_names(["x"])
    p = ring.parse("x^2 - 2")
    request = find_point([p], ["x"], field="C")

    assert isinstance(request, ExtensionNeeded)
    assert request.square == 8

    extension = radicand_extension(request.square)
    extended = ring.with_extension(extension)
    point = find_point([p.to_ring(extended)], ["x"], field="C")

    assert isinstance(point, dict)
    assert point["x"] * point["x"] == 2


def test_radicand_extension():
    assert radicand_extension(Fraction(-4, 9)).name == "i"
    assert radicand_extension(Fraction(-4, 9)).square == -1
    assert radicand_extension(Fraction(8)).square == 2

    with pytest.raises(ValueError):
        radicand_extension(Fraction(4))


if __name__ == "__main__":
    import manual_tests.log_setup as log_setup

    logger = log_setup.get_logger(__name__, "logs/check_groebner.log")
    log_setup.run_checks(globals(), logger)
