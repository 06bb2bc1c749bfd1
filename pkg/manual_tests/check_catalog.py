import itertools
from fractions import Fraction

import pytest

from novikov_groebner.algebra import (
    algebra_invariants,
    associated_lie,
    check_novikov,
    is_commutative_associative,
    is_complete,
)
from novikov_groebner.catalog import (
    CAASummand,
    ClaimResult,
    IdentityExistsError,
    UnknownEntryError,
    UnsupportedDimensionError,
    _guarded,
    build_caa_list,
    caa_from_name,
    canonical_name,
    complex_block,
    entry_key,
    instantiate,
    load_catalog,
    same_table,
    unital_extension,
    verify_catalog,
)
from novikov_groebner.formats import explicit_map
from novikov_groebner.iso import verify_witness


def test_entry_keys():
    assert entry_key("N^{h1}_26") == "N_h1_26"
    assert entry_key("N^{g2^(-2/9)}_5") == "N_g2_m2_9_5"

    catalog = load_catalog()

    assert catalog.entry("N_h1_17") is catalog.entry("N^{h1}_17")

    with pytest.raises(UnknownEntryError):
        catalog.entry("N^{h1}_99")


def test_every_entry_has_its_declared_lie_algebra():
    catalog = load_catalog()

    for name in ("N^{h1}_17", "N^{g4}_1", "X^{g3}_1", "X^{g3}_2"):
        entry = catalog.entry(name)

        assert check_novikov(entry.table).ok
        assert same_table(catalog.entry_lie(entry), associated_lie(entry.table))


def test_excluded_parameter_values():
    entry = load_catalog().entry("N^{g2^0}_8")

    with pytest.raises(ValueError):
        instantiate(entry, {"a": 0})

    member = instantiate(entry, {"a": "1"})

    assert not member.is_symbolic
    assert check_novikov(member).ok
    assert member.name == "N^{g2^0}_8(a=1)"


def test_caa_counts():
    assert len(build_caa_list(3, "C")) == 12
    assert len(build_caa_list(3, "R")) == 15
    assert len(build_caa_list(4, "C")) == 30

    for spec in build_caa_list(3, "R"):
        assert spec.dim == 3
        assert is_commutative_associative(spec.assembled)

    with pytest.raises(UnsupportedDimensionError):
        build_caa_list(4, "R")

    with pytest.raises(UnsupportedDimensionError):
        build_caa_list(5, "C")


def test_caa_names():
    summands = [CAASummand("A_1"), CAASummand("A_0", True), CAASummand("A_0", True)]

    assert canonical_name(summands) == "2~A_0+A_1"

    spec = caa_from_name("4~A_0", "R")

    assert spec.name == "4~A_0"
    assert spec.dim == 4
    assert caa_from_name("C+~A_0", "R").dim == 3

    with pytest.raises(UnknownEntryError):
        caa_from_name("A_1+A_1")

    with pytest.raises(UnknownEntryError):
        caa_from_name("~C")


def test_unital_extension():
    extended = unital_extension(load_catalog().entry("A_{3,4}").table)

    assert extended.dim == 4
    assert extended.name == "~A_{3,4}"
    assert is_commutative_associative(extended)

    with pytest.raises(IdentityExistsError):
        unital_extension(complex_block())


def test_swap_witness_on_a_family():
    catalog = load_catalog()
    lines = ["e1 -> -y2", "e2 -> y1", "e3 -> y3", "e4 -> y4"]

    for t in (Fraction(0), Fraction(1), Fraction(1, 2)):
        A = catalog.resolve("N^{h1}_1", {"alpha": "t"}, point={"t": t})
        B = catalog.resolve("N^{h1}_1", {"alpha": "-t - 1"}, point={"t": t})

        assert verify_witness(A, B, explicit_map(lines, 4))


def test_sign_witness_on_g4():
    catalog = load_catalog()
    witness = explicit_map(["e1 -> -y1", "e2 -> y2", "e3 -> -y3"], 3)
    A = catalog.resolve("N^{g4}_1", {"a": "t"}, point={"t": 2})
    B = catalog.resolve("N^{g4}_1", {"a": "-t"}, point={"t": 2})

    assert verify_witness(A, B, witness)


def test_worked_examples_verify():
    report = verify_catalog("examples")

    assert report.ok
    assert report.verified
    assert {r.kind for r in report.results} >= {"axioms", "lie", "claim:family-relation"}


def test_completeness_of_catalog_entries():
    catalog = load_catalog()
    family = catalog.entry("N^{h1}_1").table

    assert not is_complete(catalog.entry("N^{h1}_17").table)
    assert family.is_symbolic
    assert is_complete(family)


def test_unexpected_errors_become_failed_results():
    def crash() -> list[ClaimResult]:
        raise RecursionError("maximum recursion depth exceeded")

    (result,) = _guarded("N^{h1}_17", "axioms", crash)

    assert result.status == "failed"
    assert "RecursionError" in result.detail


def test_four_dimensional_caa_pairs_are_sampled():
    specs = build_caa_list(4, "C")
    names = {spec.name for spec in specs}
    prints = {spec.name: algebra_invariants(spec.assembled) for spec in specs}
    colliding = {
        (a.name, b.name)
        for a, b in itertools.combinations(specs, 2)
        if not prints[a.name].differences(prints[b.name], "C")
    }
    report = verify_catalog("caa", {"caa_pairs": 25})
    pairs = [r for r in report.results if r.kind == "caa-pair" and r.id.split(" vs ")[0] in names]
    sampled = {tuple(r.id.removesuffix(" over C").split(" vs ")) for r in pairs}

    assert len(pairs) >= 25
    assert colliding <= sampled | {(b, a) for a, b in sampled}
    assert all(r.status != "failed" for r in pairs)


def test_dimension_three_catalog_verifies():
    report = verify_catalog("dim3")

    assert report.ok, [str(r) for r in report.failures]
    assert {r.kind for r in report.results} >= {"axioms", "lie", "claim:iso-with-witness"}


if __name__ == "__main__":
    import manual_tests.log_setup as log_setup

    logger = log_setup.get_logger(__name__, "logs/check_catalog.log")
    log_setup.run_checks(globals(), logger)
