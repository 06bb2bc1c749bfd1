import pytest

from novikov_groebner.algebra import LieTable, associated_lie, check_novikov, mult_matrices
from novikov_groebner.catalog import load_catalog, same_table
from novikov_groebner.variety import (
    ParametricLieError,
    instantiate,
    sample_family,
    solve_linear,
    tg_family,
    tg_linear_system,
    unknown_name,
)

SEED = 20240601
GRID = ["-2", "-1", "-1/2", "0", "1/2", "1", "2"]

R2 = LieTable.from_text(2, ["[e1, e2] = e1"], name="r2")


def test_two_dimensional_nonabelian_family():
    family = tg_family(R2)

    assert family.params == ("b1", "b2")
    assert family.residual == ()
    assert check_novikov(family.algebra).ok
    assert same_table(associated_lie(family.algebra), R2)


def test_structures_on_r2_have_the_worked_left_multiplications():
    A = tg_family(R2).algebra

    def c(i: int, j: int, k: int):
        return A.table[i - 1][j - 1][k - 1]

    b22 = c(1, 2, 1)
    b12 = c(2, 2, 1)
    left = mult_matrices(A, "L")

    assert left[0].entries == ((0, b22), (0, 0))
    assert left[1].entries == ((b22 - 1, b12), (0, b22))

    # the two remaining entries are independent coordinates on the family
    jacobian = [[p.coefficient(m) for m in ((1, 0), (0, 1))] for p in (b22, b12)]

    assert jacobian[0][0] * jacobian[1][1] - jacobian[0][1] * jacobian[1][0] != 0


def test_linear_system_unknowns():
    system = tg_linear_system(R2)
    solution = solve_linear(system)

    assert system.unknowns[0] == unknown_name(0, 0, 0) == "c_1_1_1"
    assert len(system.unknowns) == 8
    assert len(solution.free) == 2


def test_sampled_members_are_novikov_with_the_right_commutator():
    family = tg_family(R2)
    members = sample_family(family, GRID, 12, SEED)

    assert len(members) == 12

    for member in members:
        assert not member.is_symbolic
        assert check_novikov(member).ok
        assert same_table(associated_lie(member), R2)


def test_sampling_is_reproducible():
    family = tg_family(R2)
    first = sample_family(family, GRID, 5, SEED)
    second = sample_family(family, GRID, 5, SEED)

    assert all(same_table(a, b) for a, b in zip(first, second, strict=True))


def test_heisenberg_family_members():
    heisenberg = load_catalog().lie("g3")
    family = tg_family(heisenberg)

    for member in sample_family(family, GRID, 6, SEED):
        assert check_novikov(member).ok
        assert same_table(associated_lie(member), heisenberg)


def test_instantiate_needs_every_parameter():
    family = tg_family(R2)

    assert check_novikov(instantiate(family, {"b1": 1, "b2": "1/2"})).ok

    with pytest.raises(ValueError):
        instantiate(family, {"b1": 1})


def test_symbolic_lie_algebra_is_rejected():
    with pytest.raises(ParametricLieError):
        tg_family(load_catalog().lie("g2"))

    assert tg_family(load_catalog().lie("g2:alpha=1/2")).lie.name == "g2:alpha=1/2"


if __name__ == "__main__":
    import manual_tests.log_setup as log_setup

    logger = log_setup.get_logger(__name__, "logs/check_variety.log")
    log_setup.run_checks(globals(), logger)
