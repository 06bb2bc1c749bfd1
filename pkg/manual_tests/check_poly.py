import random
from fractions import Fraction

import pytest

from novikov_groebner.poly import (
    ArityError,
    FieldExt,
    Polynomial,
    PolynomialSyntaxError,
    ReducibleExtensionError,
    Ring,
    RingMismatchError,
    UnknownVariableError,
    compare_monomials,
    merge_rings,
)

SEED = 20240601


def test_printed_form_parses_back():
    ring = Ring.from_names(["D", "x11", "x12", "alpha"])
    p = ring.parse("D x12 alpha + (1/2) D x12 - 1/2")

    assert str(p) == "D x12 alpha + (1/2) D x12 - 1/2"
    assert ring.parse(str(p)) == p
    assert str(ring.parse("alpha^2 + alpha - x11 * x12")) == "-x11 x12 + alpha^2 + alpha"
    assert str(ring.parse("x11 - x11")) == "0"


def test_leading_monomial_follows_the_order():
    lex = Ring.from_names(["x", "y"], order="lex")
    grevlex = lex.with_order("grevlex")
    p = lex.parse("x y^2 + x^2")

    assert p.leading_monomial == (2, 0)
    assert p.with_ring(grevlex).leading_monomial == (1, 2)
    assert compare_monomials((0, 3), (1, 0), lex.order) == -1
    assert compare_monomials((0, 3), (1, 0), grevlex.order) == 1

    with pytest.raises(ArityError):
        compare_monomials((1,), (1, 0), lex.order)


def test_elimination_order_ranks_the_first_block():
    ring = Ring.from_names(["t", "x", "y"], order="elim", split=1)

    assert ring.parse("t + x^5").leading_monomial == (1, 0, 0)
    assert ring.parse("x y + x^3").leading_monomial == (0, 3, 0)


def test_quadratic_extension_arithmetic():
    i_ext = FieldExt.quadratic("i", -1)
    ring = Ring.from_names(["i"], extensions=[i_ext])
    i = ring.gen("i")

    assert i * i == -1
    assert i**3 == -i
    assert i_ext.inverse(1 + i) == ring.parse("1/2 - (1/2) i")
    assert i_ext.minimal_polynomial_text == "i^2 + 1"
    assert i_ext.square == -1

    with pytest.raises(ZeroDivisionError):
        i_ext.inverse(ring.zero)


def test_reducible_extension_is_rejected():
    with pytest.raises(ReducibleExtensionError):
        FieldExt.quadratic("r", 4)

    with pytest.raises(ReducibleExtensionError):
        FieldExt.from_text("r", "r^2 - 1")


def test_substitution_into_another_ring():
    ring = Ring.from_names(["a"])
    target = Ring.from_names(["t"])
    p = ring.parse("a^2 + a")

    assert p.substitute({"a": target.parse("t + 1")}) == target.parse("t^2 + 3 t + 2")
    assert p.evaluate({"a": Fraction(1, 2)}) == Fraction(3, 4)

    with pytest.raises(UnknownVariableError):
        p.substitute({"b": 1})


def test_moving_between_rings():
    small = Ring.from_names(["x"])
    large = Ring.from_names(["y", "x"])
    p = small.parse("x^2 - 1")

    assert p.to_ring(large) == large.parse("x^2 - 1")
    assert large.parse("x - 1").to_ring(small) == small.parse("x - 1")

    with pytest.raises(UnknownVariableError):
        large.parse("y").to_ring(small)

    with pytest.raises(RingMismatchError):
        p + large.parse("y")


def test_equality_sees_the_adjoined_extensions():
    plain = Ring.from_names(["i"])
    gaussian = Ring.from_names(["i"], extensions=[FieldExt.quadratic("i", -1)])
    other = Ring.from_names(["i"], extensions=[FieldExt.quadratic("i", -2)])

    assert gaussian.gen("i") == gaussian.gen("i")
    assert gaussian.gen("i") != plain.gen("i")
    assert gaussian.gen("i") != other.gen("i")
    assert gaussian.parse("i + 1") - 1 == gaussian.gen("i")


def test_merge_rings_rejects_conflicting_extensions():
    first = Ring.from_names(["a", "i"], extensions=[FieldExt.quadratic("i", -1)])
    second = Ring.from_names(["i", "b"], extensions=[FieldExt.quadratic("i", -2)])
    merged = merge_rings(first, Ring.from_names(["b", "a"]))

    assert merged.names == ("a", "b", "i")

    with pytest.raises(RingMismatchError):
        merge_rings(first, second)


def test_syntax_errors():
    ring = Ring.from_names(["x", "y"])

    for text in ("x +", "", "x ^", "(1/0) x", "x y)"):
        with pytest.raises(PolynomialSyntaxError):
            ring.parse(text)

    with pytest.raises(UnknownVariableError):
        ring.parse("x + q")


def _random_polynomial(ring: Ring, rng: random.Random) -> Polynomial:
    terms = {}

    for _ in range(rng.randint(0, 4)):
        monomial = tuple(rng.randint(0, 2) for _ in range(ring.arity))
        terms[monomial] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))

    return Polynomial.from_terms(ring, terms)


def test_ring_laws_on_random_triples():
    rng = random.Random(SEED)

    for style in ("lex", "grevlex"):
        ring = Ring.from_names(["x", "y", "z"], order=style)

        for _ in range(500):
            p, q, r = (_random_polynomial(ring, rng) for _ in range(3))

            assert (p + q) * r == p * r + q * r
            assert (p * q) * r == p * (q * r)
            assert p * q == q * p
            assert (p - p).is_zero
            assert ring.parse(str(p)) == p

            if not p.is_zero:
                assert p.monic().leading_coefficient == 1


def test_random_products_keep_extension_degree_below_two():
    rng = random.Random(SEED)
    ring = Ring.from_names(["x", "s"], extensions=[FieldExt.quadratic("s", -2)])
    s = ring.gen("s")

    assert s * s == -2

    for _ in range(200):
        p = _random_polynomial(ring, rng)
        q = _random_polynomial(ring, rng)

        assert (p * q).degree("s") <= 1


if __name__ == "__main__":
    import manual_tests.log_setup as log_setup

    logger = log_setup.get_logger(__name__, "logs/check_poly.log")
    log_setup.run_checks(globals(), logger)
