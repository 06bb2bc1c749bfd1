import random
from fractions import Fraction

import pytest

from novikov_groebner import linalg
from novikov_groebner.poly import Ring

SEED = 20240601


def test_rank_and_nullspace():
    rows = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]

    assert linalg.rank(rows) == 2

    (vector,) = linalg.nullspace(rows, 3)

    for row in rows:
        assert sum(Fraction(a) * b for a, b in zip(row, vector)) == 0

    assert len(linalg.nullspace([], 2)) == 2


def test_solve_and_inverse():
    assert linalg.solve([[2, 1], [1, 3]], [3, 5]) == [Fraction(4, 5), Fraction(7, 5)]

    inverse = linalg.inverse([[2, 1], [1, 1]])

    assert inverse == [[1, -1], [-1, 2]]

    with pytest.raises(linalg.SingularMatrixError):
        linalg.inverse([[1, 2], [2, 4]])

    with pytest.raises(linalg.SingularMatrixError):
        linalg.solve([[1, 2], [2, 4]], [1, 1])


def test_determinant_and_adjugate_over_polynomials():
    ring = Ring.from_names(["a", "b"])
    a, b = ring.gen("a"), ring.gen("b")
    matrix = [[a, b, ring.zero], [ring.one, a, ring.zero], [ring.zero, ring.one, b]]
    det = linalg.determinant(matrix, ring.zero)

    assert det == ring.parse("a^2 b - b^2")

    product = linalg.matmul(matrix, linalg.adjugate(matrix, ring.zero), ring.zero)

    assert product == linalg.identity(3, det, ring.zero)


def test_random_inverses():
    rng = random.Random(SEED)
    checked = 0

    while checked < 50:
        matrix = [[Fraction(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)]

        if linalg.determinant(matrix, Fraction(0)) == 0:
            continue

        product = linalg.matmul(matrix, linalg.inverse(matrix), Fraction(0))

        assert product == linalg.identity(3, Fraction(1), Fraction(0))
        checked += 1


def test_signature_of_symmetric_forms():
    assert linalg.signature([[1, 0], [0, -1]]) == (1, 1)
    assert linalg.signature([[0, 1], [1, 0]]) == (1, 1)
    assert linalg.signature([[2, 0, 0], [0, 3, 0], [0, 0, 0]]) == (2, 0)
    assert linalg.signature([[0, 0], [0, 0]]) == (0, 0)
    assert linalg.signature([[1, 2], [2, 1]]) == (1, 1)


if __name__ == "__main__":
    import manual_tests.log_setup as log_setup

    logger = log_setup.get_logger(__name__, "logs/check_linalg.log")
    log_setup.run_checks(globals(), logger)
