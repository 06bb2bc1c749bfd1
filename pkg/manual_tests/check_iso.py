import itertools
import random
from pathlib import Path

import pytest

from novikov_groebner import linalg
from novikov_groebner.algebra import (
    StructureConstants,
    SymbolicParameterError,
    algebra_invariants,
    check_novikov,
)
from novikov_groebner.catalog import load_catalog
from novikov_groebner.formats import explicit_map, read_algebra, read_map
from novikov_groebner.groebner import Ideal, buchberger
from novikov_groebner.iso import (
    ExplicitMap,
    Isomorphic,
    NotIsomorphic,
    SharedParameterError,
    Verdict,
    apply_automorphism,
    build_iso_system,
    decide_iso,
    heisenberg_automorphisms,
    relate_families,
    verify_witness,
)
from novikov_groebner.poly import FieldExt, Ring

SAMPLES = Path(__file__).parent / "sample_inputs"
SEED = 20240601

WORKED_MAP = [[2, 1, 0], [-1, 1, 0], [0, 0, 3]]


def test_small_heisenberg_algebras_are_isomorphic_over_c():
    A = StructureConstants.from_text(3, ["e1 e2 = 2 e3", "e2 e1 = e3"], field_tag="C")
    B = StructureConstants.from_text(
        3, ["e1 e1 = -2 e3", "e1 e2 = e3", "e2 e2 = e3"], field_tag="C"
    )
    verdict = decide_iso(A, B)

    assert isinstance(verdict, Isomorphic)
    assert verify_witness(A, B, verdict.witness)


def test_explicit_witness():
    A = read_algebra(SAMPLES / "x2_beta_m2.alg")
    B = read_algebra(SAMPLES / "x1_alpha_1.alg")

    assert verify_witness(A, B, WORKED_MAP)
    assert verify_witness(A, B, read_map(SAMPLES / "worked_witness.map", 3))
    assert not verify_witness(B, A, WORKED_MAP)
    assert not verify_witness(A, B, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert not verify_witness(A, B, [[1, 1, 0], [1, 1, 0], [0, 0, 1]])


def test_inverse_witness_goes_back():
    A = read_algebra(SAMPLES / "x2_beta_m2.alg")
    B = read_algebra(SAMPLES / "x1_alpha_1.alg")
    phi = ExplicitMap.from_rows(WORKED_MAP, source=A.name, target=B.name)
    back = phi.inverse()

    assert back.source == B.name
    assert verify_witness(B, A, back)

    with pytest.raises(linalg.SingularMatrixError):
        ExplicitMap.from_rows([[1, 2, 0], [2, 4, 0], [0, 0, 1]]).inverse()


def test_excluded_value_gives_a_trivial_basis():
    A = read_algebra(SAMPLES / "x1_alpha_m_half.alg")
    B = read_algebra(SAMPLES / "x2_beta_quarter.alg")
    verdict = decide_iso(A, B, "C", fingerprint=False)

    assert isinstance(verdict, NotIsomorphic)
    assert verdict.kind == "gb-trivial"


def test_fingerprint_mismatch():
    A = read_algebra(SAMPLES / "x1_alpha_1.alg")
    zero = StructureConstants.from_text(3, [], field_tag="R")
    verdict = decide_iso(A, zero)

    assert isinstance(verdict, NotIsomorphic)
    assert verdict.kind == "invariant-mismatch"

    small = StructureConstants.from_text(2, [], field_tag="R")

    assert decide_iso(A, small).kind == "invariant-mismatch"


def test_iso_system_contains_the_determinant_constraint():
    A = read_algebra(SAMPLES / "x2_beta_m2.alg")
    B = read_algebra(SAMPLES / "x1_alpha_1.alg")
    system = build_iso_system(A, B)

    assert system.gmap.constraint in system.ideal.generators
    assert len(system.map_variables) == 9


def test_relation_between_the_heisenberg_families():
    A = read_algebra(SAMPLES / "x2_family.alg")
    B = read_algebra(SAMPLES / "x1_family.alg")
    found = relate_families(A, B, heisenberg_automorphisms())
    ring = Ring.from_names(["alpha", "beta"], order="grevlex")
    computed = buchberger(Ideal([p.to_ring(ring) for p in found], ring))

    assert list(computed.basis) == [ring.parse("alpha^2 + alpha + beta")]


def test_witness_over_the_gaussian_rationals():
    catalog = load_catalog()
    i = FieldExt.quadratic("i", -1)
    A = catalog.resolve("A_{3,4}", extension=i, field_tag="C")
    B = catalog.resolve("A_{3,5}", extension=i, field_tag="C")
    witness = explicit_map(["e1 -> i y1", "e2 -> y2", "e3 -> y3"], 3, i)

    assert verify_witness(A, B, witness)

    complex_verdict = decide_iso(
        catalog.resolve("A_{3,4}", field_tag="C"), catalog.resolve("A_{3,5}", field_tag="C"), "C"
    )

    assert isinstance(complex_verdict, Isomorphic)
    assert verify_witness(
        catalog.resolve("A_{3,4}", field_tag="C"),
        catalog.resolve("A_{3,5}", field_tag="C"),
        complex_verdict.witness,
    )

    real_verdict = decide_iso(
        catalog.resolve("A_{3,4}", field_tag="R"), catalog.resolve("A_{3,5}", field_tag="R")
    )

    assert isinstance(real_verdict, NotIsomorphic)
    assert real_verdict.kind == "real-certificate"
    assert real_verdict.certificate is not None
    assert real_verdict.certificate.check()


def _heisenberg_samples() -> list[StructureConstants]:
    names = ("x1_alpha_1", "x2_beta_m2", "x1_alpha_m_half", "x2_beta_quarter")
    return [read_algebra(SAMPLES / f"{name}.alg") for name in names]


def _contradict(first: Verdict, second: Verdict) -> bool:
    return {type(first), type(second)} == {Isomorphic, NotIsomorphic}


def test_verdicts_do_not_depend_on_the_direction():
    algebras = _heisenberg_samples()

    for A, B in itertools.combinations(algebras, 2):
        forward = decide_iso(A, B, "C")
        backward = decide_iso(B, A, "C")

        assert not _contradict(forward, backward), (A.name, B.name)

        for verdict, source, target in ((forward, A, B), (backward, B, A)):
            if isinstance(verdict, Isomorphic):
                assert verify_witness(source, target, verdict.witness)

    m_half, quarter = algebras[2], algebras[3]

    assert isinstance(decide_iso(m_half, quarter, "C"), NotIsomorphic)
    assert isinstance(decide_iso(quarter, m_half, "C"), NotIsomorphic)


def test_real_verdicts_never_contradict_complex_ones():
    for A, B in itertools.combinations(_heisenberg_samples(), 2):
        real = decide_iso(A, B, "R")
        complex_ = decide_iso(A, B, "C")

        if isinstance(real, Isomorphic):
            assert not isinstance(complex_, NotIsomorphic), (A.name, B.name)

        if isinstance(complex_, NotIsomorphic):
            assert not isinstance(real, Isomorphic), (A.name, B.name)


def test_transported_algebras_are_isomorphic():
    rng = random.Random(SEED)
    A = read_algebra(SAMPLES / "x2_beta_m2.alg")
    transported = 0

    while transported < 3:
        rows = [[rng.randint(-2, 2) for _ in range(3)] for _ in range(3)]

        if linalg.rank(rows) < 3:
            continue

        phi = ExplicitMap.from_rows(rows)
        B = apply_automorphism(phi, A)

        assert check_novikov(B).ok
        assert verify_witness(B, A, phi)
        assert not algebra_invariants(A).differences(algebra_invariants(B), "R")

        verdict = decide_iso(A, B, "C")

        assert not isinstance(verdict, NotIsomorphic)

        if isinstance(verdict, Isomorphic):
            assert verify_witness(A, B, verdict.witness)

        transported += 1


def test_relate_families_needs_distinct_parameter_names():
    family = read_algebra(SAMPLES / "x1_family.alg")

    with pytest.raises(SharedParameterError):
        relate_families(family, family, heisenberg_automorphisms())

    with pytest.raises(ValueError):
        relate_families(family, family)


def test_families_need_relate_families():
    family = read_algebra(SAMPLES / "x1_family.alg")

    with pytest.raises(SymbolicParameterError):
        decide_iso(family, read_algebra(SAMPLES / "x1_alpha_1.alg"))


if __name__ == "__main__":
    import manual_tests.log_setup as log_setup

    logger = log_setup.get_logger(__name__, "logs/check_iso.log")
    log_setup.run_checks(globals(), logger)
