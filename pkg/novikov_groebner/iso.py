"""
Isomorphism Decisions
=====================

Decides whether two algebras given by structure constants are isomorphic, relates parametrized
families and applies (generic or explicit) linear maps to structure constants.

An invertible map `φ` acts on a product `θ` by `(φθ)(x, y) = φ⁻¹(θ(φx, φy))`. The map is written
with indeterminate entries `x_ij` (column convention: `φ(e_j) = sum_i x_ij e_i`) and an extra
variable `D` standing for the inverse of the determinant, tied to the entries by `D·det - 1`.
The condition that `φ` is an isomorphism from `A` onto `B` (equivalently `φB = A`) is the
polynomial system `B(φe_i, φe_j) - φ(A(e_i, e_j)) = 0` together with `D·det - 1`.

Decision pipeline:
------------------
 1. Compare invariant fingerprints (`algebra.algebra_invariants`).
 2. Compute a reduced graded reverse lex basis of the system. `{1}` proves non-isomorphism.
 3. Over ℝ, look for a certificate that the system has no real solution, first on that basis,
    then on a lex basis.
 4. Search an explicit solution (`groebner.find_point`), adjoining a quadratic extension when the
    search asks for one, and check it directly on the structure constants.

Every step that computes a basis honours a reduction-step budget; running out yields an
`Undecided` verdict carrying the partial basis.

Example Usage:
-------------
```python
from novikov_groebner.algebra import StructureConstants
from novikov_groebner.iso import decide_iso

A = StructureConstants.from_text(3, ["e1 e2 = 2 e3", "e2 e1 = e3"], field_tag="C")
B = StructureConstants.from_text(3, ["e1 e1 = -2 e3", "e1 e2 = e3", "e2 e2 = e3"], field_tag="C")
verdict = decide_iso(A, B)
print(verdict)  # Isomorphic(...)
```
"""  # noqa: E501

from __future__ import annotations

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from novikov_groebner import linalg
from novikov_groebner.algebra import (
    DimensionMismatchError,
    StructureConstants,
    SymbolicParameterError,
    algebra_invariants,
    multiply,
)
from novikov_groebner.groebner import (
    DEFAULT_BUDGET,
    BudgetExhaustedError,
    ExtensionNeeded,
    GroebnerBasis,
    Ideal,
    RealCertificate,
    buchberger,
    describe_certificate,
    eliminate,
    find_point,
    is_trivial,
    radicand_extension,
    real_nonsolvability,
    reduce,
)
from novikov_groebner.parameter_schemas import FieldTag, NonIsoKind, OrderStyle
from novikov_groebner.poly import (
    Polynomial,
    Ring,
    VariableKind,
    merge_rings,
)

logger = logging.getLogger(__name__)

Matrix = tuple[tuple[Polynomial, ...], ...]


class InverseCheckError(Exception):
    pass


class SharedParameterError(ValueError):
    """
    Two families passed to `relate_families` use the same parameter name.
    """


def _freeze(rows: Sequence[Sequence[Polynomial]]) -> Matrix:
    return tuple(tuple(row) for row in rows)


def _entry_name(i: int, j: int, n: int) -> str:
    return f"x{i + 1}{j + 1}" if n < 10 else f"x{i + 1}_{j + 1}"


@dataclass(frozen=True)
class GenericMap:
    """
    A linear map with polynomial entries, its inverse written with the determinant-inverse
    variable, and the constraint tying that variable to the entries.
    """

    entries: Matrix
    inverse: Matrix
    """
    Inverse entries, reduced modulo `constraint`.
    """

    constraint: Polynomial
    """
    `D·δ - 1`, where `det(entries) = c·δ^k` for a constant `c`.
    """

    ring: Ring
    det_inverse: str = "D"

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def variables(self) -> tuple[str, ...]:
        """
        Map-entry variables in ranking order.
        """
        return tuple(v.name for v in self.ring.variables_of_kind(VariableKind.MAP_ENTRY))

    @classmethod
    def generic(cls, n: int, avoid: Sequence[str] = ()) -> GenericMap:
        """
        The map with one indeterminate per entry, ranked row by row, followed by `D`.
        """
        names = [_entry_name(i, j, n) for i in range(n) for j in range(n)]
        det_inverse = "D"

        while det_inverse in avoid:
            det_inverse += "D"

        clash = set(names) & set(avoid)

        if clash:
            raise ValueError(f"Map entry names {sorted(clash)} clash with parameters")

        kinds = {name: VariableKind.MAP_ENTRY for name in names}
        kinds[det_inverse] = VariableKind.DET_INVERSE
        ring = Ring.from_names([*names, det_inverse], kinds=kinds)
        entries = [[ring.gen(_entry_name(i, j, n)) for j in range(n)] for i in range(n)]
        return cls.from_template(entries, linalg.determinant(entries, ring.zero), det_inverse)

    @classmethod
    def from_template(
        cls,
        entries: Sequence[Sequence[Polynomial]],
        delta: Polynomial,
        det_inverse: str = "D",
    ) -> GenericMap:
        """
        A map whose determinant is a constant times a power of `delta`. The inverse is
        `adj · D^k / c`, reduced modulo `D·delta - 1`.

        Raises:
         - ValueError: If the determinant is not of the form `c·delta^k`.
         - InverseCheckError: If the computed inverse fails `φ·φ⁻¹ = I` modulo the constraint.
        """
        ring = delta.ring
        n = len(entries)
        rows = [[e.to_ring(ring) for e in row] for row in entries]
        determinant = linalg.determinant(rows, ring.zero)
        power = 0
        quotient = determinant

        while not quotient.is_constant:
            remainder, (factor,) = reduce(quotient, [delta])

            if not remainder.is_zero:
                raise ValueError(f"The determinant {determinant} is not c·({delta})^k")

            quotient = factor
            power += 1

        if quotient.is_zero:
            raise ValueError("The template map is never invertible")

        scale = quotient.constant_value
        d = ring.gen(det_inverse)
        constraint = d * delta - 1
        factor = d**power * (1 / scale)
        adjugate = linalg.adjugate(rows, ring.zero)
        inverse = [[_normal(entry * factor, constraint) for entry in row] for row in adjugate]
        result = cls(_freeze(rows), _freeze(inverse), constraint, ring, det_inverse)
        result.check_inverse()
        logger.debug("Map template of size %d with det = %s·(%s)^%d", n, scale, delta, power)
        return result

    def check_inverse(self) -> None:
        n = self.size
        product = linalg.matmul(self.entries, self.inverse, self.ring.zero)

        for i in range(n):
            for j in range(n):
                expected = self.ring.one if i == j else self.ring.zero

                if not _normal(product[i][j] - expected, self.constraint).is_zero:
                    raise InverseCheckError(f"φ·φ⁻¹ differs from the identity at ({i + 1}, {j + 1})")  # noqa: E501

    def to_ring(self, ring: Ring) -> GenericMap:
        return GenericMap(
            _freeze([[e.to_ring(ring) for e in row] for row in self.entries]),
            _freeze([[e.to_ring(ring) for e in row] for row in self.inverse]),
            self.constraint.to_ring(ring),
            ring,
            self.det_inverse,
        )


def _normal(p: Polynomial, constraint: Polynomial) -> Polynomial:
    return reduce(p, [constraint])[0]


def heisenberg_automorphisms() -> GenericMap:
    """
    Automorphisms of the Heisenberg algebra `[e1, e2] = e3`: an invertible 2x2 block
    `x11 x12 / x21 x22`, free `x31, x32` and `φ(e3) = δ e3` with `δ = x11 x22 - x12 x21`.
    Variables are ranked `D > x11 > x12 > x21 > x22 > x31 > x32`.
    """
    names = ["D", "x11", "x12", "x21", "x22", "x31", "x32"]
    kinds = {name: VariableKind.MAP_ENTRY for name in names[1:]}
    kinds["D"] = VariableKind.DET_INVERSE
    ring = Ring.from_names(names, kinds=kinds)
    x = {name: ring.gen(name) for name in names}
    delta = x["x11"] * x["x22"] - x["x12"] * x["x21"]
    zero = ring.zero
    entries = [
        [x["x11"], x["x12"], zero],
        [x["x21"], x["x22"], zero],
        [x["x31"], x["x32"], delta],
    ]
    return GenericMap.from_template(entries, delta)


@dataclass(frozen=True)
class ExplicitMap:
    """
    A concrete invertible linear map between two algebras, with entries in ℚ or in a declared
    extension of ℚ (constants of `ring`).
    """

    matrix: Matrix
    ring: Ring
    source: str | None = None
    target: str | None = None
    field_tag: FieldTag = "C"

    @classmethod
    def from_rows(
        cls,
        rows: Sequence[Sequence[object]],
        ring: Ring | None = None,
        source: str | None = None,
        target: str | None = None,
        field_tag: FieldTag = "C",
    ) -> ExplicitMap:
        ring = Ring(()) if ring is None else ring
        matrix = [
            [
                v.to_ring(ring)
                if isinstance(v, Polynomial)
                else ring.parse(v)
                if isinstance(v, str)
                else ring.constant(v)
                for v in row
            ]
            for row in rows
        ]
        return cls(_freeze(matrix), ring, source, target, field_tag)

    @property
    def size(self) -> int:
        return len(self.matrix)

    def _require_constant(self) -> None:
        allowed = {e.name for e in self.ring.extensions}

        for row in self.matrix:
            for entry in row:
                if entry.variables_used - allowed:
                    raise SymbolicParameterError(f"Map entry {entry} is not a constant")

    def determinant(self) -> Polynomial:
        return linalg.determinant(self.matrix, self.ring.zero)

    def inverse(self) -> ExplicitMap:
        """
        Raises:
         - linalg.SingularMatrixError: If the map is not invertible.
         - SymbolicParameterError: If an entry is not a constant.
        """
        self._require_constant()

        if not self.ring.extensions:
            rational = [
                [e.constant_value if not e.is_zero else Fraction(0) for e in row]
                for row in self.matrix
            ]
            return ExplicitMap.from_rows(
                linalg.inverse(rational),
                self.ring,
                source=self.target,
                target=self.source,
                field_tag=self.field_tag,
            )

        determinant = self.determinant()

        if determinant.is_zero:
            raise linalg.SingularMatrixError("Map is not invertible")

        (extension,) = self.ring.extensions
        scale = extension.inverse(determinant)
        adjugate = linalg.adjugate(self.matrix, self.ring.zero)
        rows = [[entry * scale for entry in row] for row in adjugate]
        return ExplicitMap(_freeze(rows), self.ring, self.target, self.source, self.field_tag)

    def column(self, j: int) -> tuple[Polynomial, ...]:
        return tuple(row[j] for row in self.matrix)

    def apply(self, vector: Sequence[Polynomial]) -> tuple[Polynomial, ...]:
        return tuple(
            sum((self.matrix[i][j] * vector[j] for j in range(self.size)), self.ring.zero)
            for i in range(self.size)
        )

    def rows_text(self) -> list[str]:
        return ["[" + ", ".join(str(e) for e in row) + "]" for row in self.matrix]

    def __str__(self) -> str:
        return "\n".join(self.rows_text())


def _constant_ring(ring: Ring) -> Ring:
    extensions = ring.extensions
    return Ring.from_names([e.name for e in extensions], extensions=extensions)


def _transform(A: StructureConstants, entries: Matrix, inverse: Matrix, ring: Ring, normal) -> StructureConstants:  # noqa: E501
    n = A.dim
    columns = [tuple(entries[i][j] for i in range(n)) for j in range(n)]
    table = []

    for i in range(n):
        row = []

        for j in range(n):
            image = multiply(A, columns[i], columns[j], ring)
            back = [
                normal(sum((inverse[k][l] * image[l] for l in range(n)), ring.zero))
                for k in range(n)
            ]
            row.append(tuple(back))

        table.append(tuple(row))

    return StructureConstants(n, tuple(table), A.field_tag, ring, A.name)


def apply_automorphism(phi: GenericMap | ExplicitMap, A: StructureConstants) -> StructureConstants:
    """
    The algebra `φA` with `(φA)(x, y) = φ⁻¹(A(φx, φy))`.

    Only `φ` is passed: an explicit map is inverted here, and a generic map carries its own
    inverse as the adjugate scaled by the determinant-inverse variable.

    For a generic map the result lives in the map's ring merged with `A`'s coefficient ring and
    is reduced modulo the determinant constraint.

    Raises:
     - DimensionMismatchError: If the sizes differ.
     - InverseCheckError: If the generic map's inverse is inconsistent.
    """
    if phi.size != A.dim:
        raise DimensionMismatchError(f"A {phi.size}x{phi.size} map cannot act on dimension {A.dim}")

    if isinstance(phi, GenericMap):
        ring = merge_rings(phi.ring, A.ring)
        moved = phi.to_ring(ring)
        moved.check_inverse()
        constraint = moved.constraint
        return _transform(A, moved.entries, moved.inverse, ring, lambda p: _normal(p, constraint))

    inverse = phi.inverse()
    ring = merge_rings(A.ring, phi.ring)
    entries = _freeze([[e.to_ring(ring) for e in row] for row in phi.matrix])
    back = _freeze([[e.to_ring(ring) for e in row] for row in inverse.matrix])
    return _transform(A, entries, back, ring, lambda p: p)


@dataclass(frozen=True)
class IsoSystem:
    ideal: Ideal
    gmap: GenericMap

    @property
    def ring(self) -> Ring:
        return self.ideal.ring

    @property
    def map_variables(self) -> tuple[str, ...]:
        return self.gmap.variables


def _system_ring(gmap: GenericMap, A: StructureConstants, B: StructureConstants, style: OrderStyle) -> Ring:  # noqa: E501
    return merge_rings(gmap.ring, merge_rings(A.ring, B.ring)).with_order(style)


def build_iso_system(
    A: StructureConstants,
    B: StructureConstants,
    gmap: GenericMap | None = None,
    style: OrderStyle = "grevlex",
) -> IsoSystem:
    """
    The ideal whose zeros are the isomorphisms `φ` from `A` onto `B` (equivalently `φB = A`).

    Generators are the nonzero coordinates of `B(φe_i, φe_j) - φ(A(e_i, e_j))` and the
    constraint `D·δ - 1`.

    Raises:
     - DimensionMismatchError: If the algebras have different dimensions.
    """
    if A.dim != B.dim:
        raise DimensionMismatchError(f"Cannot compare dimensions {A.dim} and {B.dim}")

    n = A.dim

    if gmap is None:
        gmap = GenericMap.generic(n, avoid=(*A.ring.names, *B.ring.names))

    ring = _system_ring(gmap, A, B, style)
    moved = gmap.to_ring(ring)
    columns = [tuple(moved.entries[i][j] for i in range(n)) for j in range(n)]
    source = A.to_ring(ring)
    generators: list[Polynomial] = []

    for i in range(n):
        for j in range(n):
            image = multiply(B, columns[i], columns[j], ring)
            target = source.table[i][j]

            for k in range(n):
                mapped = sum(
                    (moved.entries[k][l] * target[l] for l in range(n) if not target[l].is_zero),
                    ring.zero,
                )
                difference = image[k] - mapped

                if not difference.is_zero and difference not in generators:
                    generators.append(difference)

    generators.append(moved.constraint)
    return IsoSystem(Ideal(generators, ring), moved)


@dataclass(frozen=True)
class Isomorphic:
    witness: ExplicitMap

    def __str__(self) -> str:
        return "Isomorphic\n" + str(self.witness)


@dataclass(frozen=True)
class NotIsomorphic:
    kind: NonIsoKind
    evidence: str
    certificate: RealCertificate | None = None

    def __str__(self) -> str:
        return f"NotIsomorphic ({self.kind}): {self.evidence}"


@dataclass(frozen=True)
class Undecided:
    reason: str
    partial: GroebnerBasis | None = field(default=None, repr=False)
    complex_witness: ExplicitMap | None = None

    def __str__(self) -> str:
        return f"Undecided: {self.reason}"


Verdict = Union[Isomorphic, NotIsomorphic, Undecided]


def verify_witness(A: StructureConstants, B: StructureConstants, witness: ExplicitMap | Sequence[Sequence[object]]) -> bool:  # noqa: E501
    """
    Check that `witness` is invertible and maps `A` onto `B`: `B(Me_i, Me_j) = M·A(e_i, e_j)`.
    """
    if not isinstance(witness, ExplicitMap):
        witness = ExplicitMap.from_rows(witness)

    if witness.size != A.dim or A.dim != B.dim:
        return False

    ring = merge_rings(merge_rings(A.ring, B.ring), witness.ring)
    n = A.dim
    matrix = [[e.to_ring(ring) for e in row] for row in witness.matrix]

    if linalg.determinant(matrix, ring.zero).is_zero:
        return False

    moved = ExplicitMap(_freeze(matrix), ring)
    columns = [moved.column(j) for j in range(n)]
    source = A.to_ring(ring)

    for i in range(n):
        for j in range(n):
            if multiply(B, columns[i], columns[j], ring) != moved.apply(source.table[i][j]):
                return False

    return True


def _witness_from(system: IsoSystem, assignment: Mapping[str, Polynomial], A: StructureConstants, B: StructureConstants, field_tag: FieldTag) -> ExplicitMap:  # noqa: E501
    ring = next(iter(assignment.values())).ring if assignment else system.ring
    constants = _constant_ring(ring)
    rows = []

    for row in system.gmap.entries:
        rows.append([e.to_ring(ring).substitute(assignment).to_ring(constants) for e in row])

    return ExplicitMap(_freeze(rows), constants, A.name, B.name, field_tag)


def _search_witness(
    system: IsoSystem,
    gb: GroebnerBasis,
    A: StructureConstants,
    B: StructureConstants,
    field_tag: FieldTag,
    budget: int,
) -> ExplicitMap | None:
    variables = list(reversed(system.map_variables))
    polys = list(gb.basis)
    found = find_point(polys, variables, field=field_tag, budget=budget)

    if isinstance(found, ExtensionNeeded):
        extension = radicand_extension(found.square)

        if extension.name in system.ring.names:
            return None

        logger.info("Adjoining %s with %s", extension.name, extension.minimal_polynomial_text)
        extended = system.ring.with_extension(extension)
        polys = [p.to_ring(extended) for p in polys]
        found = find_point(polys, variables, field=field_tag, budget=budget)

    if not isinstance(found, dict):
        return None

    witness = _witness_from(system, found, A, B, field_tag)

    if not verify_witness(A, B, witness):
        logger.warning("Candidate witness failed the direct check")
        return None

    return witness


def decide_iso(
    A: StructureConstants,
    B: StructureConstants,
    field_tag: FieldTag | None = None,
    *,
    budget: int | None = None,
    fingerprint: bool = True,
    extract_witness: bool = True,
) -> Verdict:
    """
    Decide whether `A` and `B` are isomorphic over `field_tag` (default: ℝ when both algebras are
    real, ℂ otherwise). A witness maps `A` onto `B`.

    Raises:
     - SymbolicParameterError: If either algebra still has symbolic parameters; use
       `relate_families` for families.
    """
    budget = DEFAULT_BUDGET if budget is None else budget

    if field_tag is None:
        field_tag = "R" if A.field_tag == B.field_tag == "R" else "C"

    if A.is_symbolic or B.is_symbolic:
        raise SymbolicParameterError("decide_iso needs instantiated algebras")

    if A.dim != B.dim:
        return NotIsomorphic("invariant-mismatch", f"dimensions {A.dim} and {B.dim}")

    if fingerprint:
        differences = algebra_invariants(A).differences(algebra_invariants(B), field_tag)

        if differences:
            return NotIsomorphic("invariant-mismatch", "differing " + ", ".join(differences))

    system = build_iso_system(A, B)

    try:
        gb = buchberger(system.ideal, budget)
    except BudgetExhaustedError as error:
        return Undecided("budget-exhausted", error.partial)

    if is_trivial(gb):
        return NotIsomorphic("gb-trivial", f"reduced Groebner basis is {{1}} ({gb.steps_used} steps)")  # noqa: E501

    try:
        if field_tag == "R":
            certificate = _real_certificate(system, gb, budget)

            if certificate is not None:
                return NotIsomorphic(
                    "real-certificate", describe_certificate(certificate), certificate
                )

        if not extract_witness:
            return Undecided("witness-search-disabled", gb)

        witness = _search_witness(system, gb, A, B, field_tag, budget)

        if witness is not None:
            return Isomorphic(witness)

        if field_tag == "R":
            complex_witness = _search_witness(system, gb, A, B, "C", budget)

            if complex_witness is not None:
                return Undecided("complex-witness-only", gb, complex_witness)
    except BudgetExhaustedError as error:
        return Undecided("budget-exhausted", error.partial)

    return Undecided("witness-not-found", gb)


def _real_certificate(system: IsoSystem, gb: GroebnerBasis, budget: int) -> RealCertificate | None:
    certificate = real_nonsolvability(gb, budget)

    if certificate is not None:
        return certificate

    lex = buchberger(system.ideal.with_order("lex"), budget)

    if is_trivial(lex):
        return None

    return real_nonsolvability(lex, budget)


def relate_families(
    A: StructureConstants,
    B: StructureConstants,
    gmap: GenericMap | None = None,
    budget: int | None = None,
) -> list[Polynomial]:
    """
    Polynomial conditions on the parameters of `A` and `B` that hold whenever the members are
    isomorphic: the elimination ideal of the isomorphism system onto the parameters. An empty
    list means no condition was found.

    The two families must use disjoint parameter names; relate a family to itself by renaming
    the parameters of one side first.

    Raises:
     - SharedParameterError: If a parameter name occurs in both families.
     - BudgetExhaustedError: If the elimination exceeds `budget`.
    """
    shared = sorted(set(A.params) & set(B.params))

    if shared:
        raise SharedParameterError(f"{A.name} and {B.name} share the parameters {shared}")

    system = build_iso_system(A, B, gmap, style="lex")
    params = {v.name for v in system.ring.variables_of_kind(VariableKind.PARAMETER)}
    relations = eliminate(system.ideal, params, budget)
    logger.info("%d parameter relations between %s and %s", len(relations), A.name, B.name)
    return relations
