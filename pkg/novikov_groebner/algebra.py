"""
Algebras by Structure Constants
===============================

Finite-dimensional algebras over ℚ, a quadratic extension of ℚ or a ring of parameters, given by
structure constants `e_i · e_j = sum_k c_ij^k e_k`, together with the checks and invariants used
throughout the classification: the Novikov identities, the associated Lie algebra, the left and
right multiplication matrices, completeness, commutative associativity and an invariant
fingerprint that separates most non-isomorphic pairs before any Gröbner basis is computed.

Conventions:
------------
 - Basis vectors are written `e1 ... en` in text and indexed from 0 in code.
 - The matrix of `L(e_i)` has entry `(k, j)` equal to `c_ij^k`: its `j`-th column is `e_i · e_j`.
   `R(e_i)` has entry `(k, j)` equal to `c_ji^k` and `ad(e_i) = L(e_i) - R(e_i)`.
 - The commutator `e_i · e_j - e_j · e_i` is the Lie bracket `[e_i, e_j]` of the associated Lie
   algebra.

Example Usage:
-------------
```python
from novikov_groebner.algebra import StructureConstants, check_novikov, is_complete

A = StructureConstants.from_text(3, ["e1 e1 = e1", "e1 e2 = e2", "e1 e3 = e3"])
print(check_novikov(A).ok)  # True
print(is_complete(A))       # False
```

Notes:
------
 - Coefficients are `poly.Polynomial` values of the algebra's coefficient ring. Checks that must
   hold identically (Novikov identities, the left-representation identity) accept symbolic
   parameters; numeric invariants require the parameters to be instantiated and raise
   `SymbolicParameterError` otherwise.
 - Ranks over a quadratic extension K = ℚ(t) are computed over ℚ on the rows `t^a · v`, which span
   the K-row space as a ℚ-space of dimension `deg(t) · rank_K`.
"""  # noqa: E501

from __future__ import annotations

import logging
import re
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field, fields
from fractions import Fraction
from typing import Literal

from novikov_groebner import linalg
from novikov_groebner.parameter_schemas import FieldTag, MatrixRole, MultiplicationKind
from novikov_groebner.poly import (
    Polynomial,
    PolynomialSyntaxError,
    Ring,
    Variable,
    VariableKind,
    format_monomial,
    format_term,
    parse_polynomial,
    to_rational,
)

logger = logging.getLogger(__name__)

Vector = tuple[Polynomial, ...]

Identity = Literal["left-symmetric", "right-commutative"]
"""
`(x,y,z) = (y,x,z)` with `(x,y,z) = (xy)z - x(yz)`, and `(xy)z = (xz)y`.
"""

_BASIS_NAME = re.compile(r"^e(\d+)$")
_RULE = re.compile(
    r"^\s*(?:\[\s*(e\d+)\s*,\s*(e\d+)\s*\]|(e\d+)\s*(?:\*|\s)\s*(e\d+))\s*=\s*(.+?)\s*$"
)


class DimensionMismatchError(Exception):
    pass


class JacobiViolationError(Exception):
    pass


class SymbolicParameterError(Exception):
    pass


class NotNovikovError(Exception):
    pass


def basis_names(dim: int, prefix: str = "e") -> tuple[str, ...]:
    return tuple(f"{prefix}{i + 1}" for i in range(dim))


def _zero_vector(ring: Ring, dim: int) -> Vector:
    zero = ring.zero
    return tuple(zero for _ in range(dim))


def parse_linear_combination(text: str, dim: int, ring: Ring, prefix: str = "e") -> Vector:
    """
    Parse `a e2 + (1/2) e3 - e1` into coefficient polynomials of `ring`.
    """
    names = basis_names(dim, prefix)
    clash = set(names) & set(ring.names)

    if clash:
        raise PolynomialSyntaxError(f"Parameter names {sorted(clash)} collide with basis names")

    if text.strip() == "0":
        return _zero_vector(ring, dim)

    extended = ring.with_variables(Variable(n, VariableKind.PARAMETER) for n in names)
    combination = parse_polynomial(text, extended)
    positions = [extended.index(n) for n in names]
    coefficients: list[dict[tuple[int, ...], Fraction]] = [{} for _ in range(dim)]

    for monomial, coefficient in combination.terms:
        degrees = [monomial[p] for p in positions]

        if sum(degrees) != 1:
            raise PolynomialSyntaxError(f"{text!r} is not linear in the basis vectors")

        k = degrees.index(1)
        rest = tuple(e for i, e in enumerate(monomial) if i not in positions)
        coefficients[k][rest] = coefficient

    return tuple(Polynomial.from_terms(ring, terms) for terms in coefficients)


def parse_rule(text: str, dim: int, ring: Ring) -> tuple[int, int, Vector, bool]:
    """
    Parse `e1 e2 = rhs` (product) or `[e1, e2] = rhs` (bracket).

    Returns:
     - Zero-based `(i, j)`, the right-hand side vector and whether the rule is a bracket.
    """
    match = _RULE.match(text)

    if match is None:
        raise PolynomialSyntaxError(f"Not a product rule: {text!r}")

    left_bracket, right_bracket, left, right, rhs = match.groups()
    bracket = left_bracket is not None
    pair = (left_bracket, right_bracket) if bracket else (left, right)
    indices = []

    for name in pair:
        index = int(_BASIS_NAME.match(name).group(1)) - 1  # type: ignore[union-attr]

        if not 0 <= index < dim:
            raise DimensionMismatchError(f"{name} is outside dimension {dim}")

        indices.append(index)

    return indices[0], indices[1], parse_linear_combination(rhs, dim, ring), bracket


def format_vector(vector: Sequence[Polynomial], prefix: str = "e") -> str:
    """
    `a e2 + e2` style rendering, one signed term per coefficient term.
    """
    pieces: list[str] = []

    for k, coefficient in enumerate(vector):
        for monomial, value in coefficient.terms:
            text = format_monomial(coefficient.ring, monomial)
            basis = f"{prefix}{k + 1}"
            pieces.append(format_term(value, f"{text} {basis}" if text else basis, not pieces))

    return "".join(pieces) if pieces else "0"


@dataclass(frozen=True)
class StructureConstants:
    """
    An algebra of dimension `dim` with `table[i][j]` the coordinate vector of `e_i · e_j`.
    """

    dim: int
    table: tuple[tuple[Vector, ...], ...]
    field_tag: FieldTag = "C"
    """
    Field the algebra is considered over. Entries never leave ℚ or the declared extensions.
    """

    ring: Ring = field(default=None)  # type: ignore[assignment]
    """
    Coefficient ring: parameters and extension generators, possibly no variables at all.
    """

    name: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.ring is None:
            object.__setattr__(self, "ring", Ring(()))

        if len(self.table) != self.dim or any(len(row) != self.dim for row in self.table):
            raise DimensionMismatchError(f"Structure table is not {self.dim} x {self.dim}")

        for row in self.table:
            for vector in row:
                if len(vector) != self.dim:
                    raise DimensionMismatchError(
                        f"Product vector of length {len(vector)} in dimension {self.dim}"
                    )

                for entry in vector:
                    if entry.ring.names != self.ring.names:
                        raise DimensionMismatchError(
                            "Structure constants must live in the coefficient ring"
                        )

    @classmethod
    def zero(cls, dim: int, ring: Ring | None = None, field_tag: FieldTag = "C", name: str | None = None) -> StructureConstants:  # noqa: E501
        ring = Ring(()) if ring is None else ring
        vector = _zero_vector(ring, dim)
        table = tuple(tuple(vector for _ in range(dim)) for _ in range(dim))
        return cls(dim, table, field_tag, ring, name)

    @classmethod
    def from_products(
        cls,
        dim: int,
        products: Mapping[tuple[int, int], Mapping[int, object]],
        *,
        ring: Ring | None = None,
        field_tag: FieldTag = "C",
        name: str | None = None,
    ) -> StructureConstants:
        """
        Build from `{(i, j): {k: c_ij^k}}` with one-based indices as in `e1 ... en`. Coefficients
        may be scalars or polynomials of `ring`; omitted products are zero.
        """
        ring = Ring(()) if ring is None else ring
        table = [[list(_zero_vector(ring, dim)) for _ in range(dim)] for _ in range(dim)]

        for (i, j), combination in products.items():
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise DimensionMismatchError(f"Product e{i} e{j} outside dimension {dim}")

            for k, value in combination.items():
                if not 1 <= k <= dim:
                    raise DimensionMismatchError(f"Basis vector e{k} outside dimension {dim}")

                entry = value if isinstance(value, Polynomial) else ring.constant(value)
                table[i - 1][j - 1][k - 1] = entry.to_ring(ring)

        return cls(dim, _freeze(table), field_tag, ring, name)

    @classmethod
    def from_text(
        cls,
        dim: int,
        rules: Iterable[str],
        *,
        ring: Ring | None = None,
        field_tag: FieldTag = "C",
        name: str | None = None,
    ) -> StructureConstants:
        """
        Build from product rules such as `e1 e2 = a e2 + e2`. Bracket rules are rejected here; see
        `LieTable.from_text`.

        Raises:
         - PolynomialSyntaxError: On a malformed or repeated rule.
        """
        ring = Ring(()) if ring is None else ring
        table = [[list(_zero_vector(ring, dim)) for _ in range(dim)] for _ in range(dim)]
        seen: set[tuple[int, int]] = set()

        for rule in rules:
            i, j, vector, bracket = parse_rule(rule, dim, ring)

            if bracket:
                raise PolynomialSyntaxError(f"Bracket rule {rule!r} in a product table")

            if (i, j) in seen:
                raise PolynomialSyntaxError(f"Product e{i + 1} e{j + 1} is given twice")

            seen.add((i, j))
            table[i][j] = list(vector)

        return cls(dim, _freeze(table), field_tag, ring, name)

    @property
    def params(self) -> tuple[str, ...]:
        return tuple(v.name for v in self.ring.variables_of_kind(VariableKind.PARAMETER))

    @property
    def is_symbolic(self) -> bool:
        """
        True if some structure constant involves a parameter.
        """
        params = set(self.params)
        return any(
            entry.variables_used & params
            for row in self.table
            for vector in row
            for entry in vector
        )

    def product(self, i: int, j: int) -> Vector:
        return self.table[i][j]

    def to_ring(self, ring: Ring) -> StructureConstants:
        table = [[[entry.to_ring(ring) for entry in vector] for vector in row] for row in self.table]
        return StructureConstants(self.dim, _freeze(table), self.field_tag, ring, self.name)

    def substitute(self, values: Mapping[str, object], name: str | None = None) -> StructureConstants:  # noqa: E501
        """
        Instantiate parameters. Instantiated parameters leave the coefficient ring.
        """
        unknown = set(values) - set(self.params)

        if unknown:
            raise SymbolicParameterError(f"Unknown parameters {sorted(unknown)}")

        target = self.ring.without_variables(values)
        converted = {
            n: v.to_ring(target) if isinstance(v, Polynomial) else target.constant(to_rational(v))
            for n, v in values.items()
        }

        def instantiate(entry: Polynomial) -> Polynomial:
            return entry.substitute(converted) if converted else entry.to_ring(target)

        table = [[[instantiate(e) for e in vector] for vector in row] for row in self.table]
        return StructureConstants(self.dim, _freeze(table), self.field_tag, target, name or self.name)

    def with_field(self, field_tag: FieldTag) -> StructureConstants:
        return StructureConstants(self.dim, self.table, field_tag, self.ring, self.name)

    def renamed(self, name: str | None) -> StructureConstants:
        return StructureConstants(self.dim, self.table, self.field_tag, self.ring, name)

    def product_rules(self) -> list[str]:
        rules = []

        for i in range(self.dim):
            for j in range(self.dim):
                vector = self.table[i][j]

                if any(not entry.is_zero for entry in vector):
                    rules.append(f"e{i + 1} e{j + 1} = {format_vector(vector)}")

        return rules

    def __str__(self) -> str:
        header = self.name or f"algebra of dimension {self.dim}"
        return "\n".join([header, *("  " + r for r in self.product_rules())])


def _freeze(table: list[list[list[Polynomial]]]) -> tuple[tuple[Vector, ...], ...]:
    return tuple(tuple(tuple(vector) for vector in row) for row in table)


@dataclass(frozen=True)
class LieTable(StructureConstants):
    """
    A Lie algebra: an antisymmetric table satisfying the Jacobi identity.

    Raises:
     - JacobiViolationError: On construction, if either property fails.
    """

    def __post_init__(self) -> None:
        super().__post_init__()

        for i in range(self.dim):
            for j in range(i, self.dim):
                if any(
                    not (a + b).is_zero for a, b in zip(self.table[i][j], self.table[j][i])
                ):
                    raise JacobiViolationError(f"[e{i + 1}, e{j + 1}] is not antisymmetric")

        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                for k in range(j + 1, self.dim):
                    total = _add(
                        _add(
                            _bracket_with(self, self.table[i][j], k),
                            _bracket_with(self, self.table[j][k], i),
                        ),
                        _bracket_with(self, self.table[k][i], j),
                    )

                    if any(not entry.is_zero for entry in total):
                        raise JacobiViolationError(
                            f"Jacobi identity fails on e{i + 1}, e{j + 1}, e{k + 1}"
                        )

    @classmethod
    def from_text(  # type: ignore[override]
        cls,
        dim: int,
        rules: Iterable[str],
        *,
        ring: Ring | None = None,
        field_tag: FieldTag = "C",
        name: str | None = None,
    ) -> LieTable:
        """
        Build from bracket rules `[e1, e2] = e3`; the opposite brackets follow by antisymmetry.
        """
        ring = Ring(()) if ring is None else ring
        table = [[list(_zero_vector(ring, dim)) for _ in range(dim)] for _ in range(dim)]

        for rule in rules:
            i, j, vector, _ = parse_rule(rule, dim, ring)

            if i == j:
                raise JacobiViolationError(f"[e{i + 1}, e{i + 1}] must vanish")

            table[i][j] = list(vector)
            table[j][i] = [-v for v in vector]

        return cls(dim, _freeze(table), field_tag, ring, name)

    @classmethod
    def abelian(cls, dim: int, field_tag: FieldTag = "C") -> LieTable:
        zero = StructureConstants.zero(dim)
        return cls(dim, zero.table, field_tag, zero.ring, f"abelian:{dim}")

    def bracket_rules(self) -> list[str]:
        rules = []

        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                vector = self.table[i][j]

                if any(not entry.is_zero for entry in vector):
                    rules.append(f"[e{i + 1}, e{j + 1}] = {format_vector(vector)}")

        return rules

    def substitute(self, values: Mapping[str, object], name: str | None = None) -> LieTable:  # type: ignore[override]  # noqa: E501
        plain = StructureConstants.substitute(self, values, name)
        return LieTable(plain.dim, plain.table, plain.field_tag, plain.ring, plain.name)

    def __str__(self) -> str:
        header = self.name or f"Lie algebra of dimension {self.dim}"
        return "\n".join([header, *("  " + r for r in self.bracket_rules())])


def _add(u: Sequence[Polynomial], v: Sequence[Polynomial]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def _bracket_with(table: StructureConstants, x: Sequence[Polynomial], k: int) -> Vector:
    result = list(_zero_vector(table.ring, table.dim))

    for l, coefficient in enumerate(x):
        if coefficient.is_zero:
            continue

        for m, value in enumerate(table.table[l][k]):
            if not value.is_zero:
                result[m] = result[m] + coefficient * value

    return tuple(result)


def _coerce_vector(A: StructureConstants, x: Sequence[object], ring: Ring) -> Vector:
    if len(x) != A.dim:
        raise DimensionMismatchError(f"Vector of length {len(x)} in dimension {A.dim}")

    return tuple(
        v.to_ring(ring) if isinstance(v, Polynomial) else ring.constant(v) for v in x
    )


def multiply(A: StructureConstants, x: Sequence[object], y: Sequence[object], ring: Ring | None = None) -> Vector:  # noqa: E501
    """
    Product of two coordinate vectors. Coordinates may live in a super-ring of the coefficient
    ring (for example a ring of generic map entries), given as `ring`.
    """
    ring = A.ring if ring is None else ring
    table = A if ring.names == A.ring.names else A.to_ring(ring)
    u = _coerce_vector(A, x, ring)
    v = _coerce_vector(A, y, ring)
    result = list(_zero_vector(ring, A.dim))

    for i, a in enumerate(u):
        if a.is_zero:
            continue

        for j, b in enumerate(v):
            if b.is_zero:
                continue

            scale = a * b

            for k, c in enumerate(table.table[i][j]):
                if not c.is_zero:
                    result[k] = result[k] + scale * c

    return tuple(result)


def basis_vector(A: StructureConstants, i: int, ring: Ring | None = None) -> Vector:
    ring = A.ring if ring is None else ring
    return tuple(ring.one if k == i else ring.zero for k in range(A.dim))


def _associator(A: StructureConstants, i: int, j: int, k: int) -> Vector:
    left = multiply(A, A.table[i][j], basis_vector(A, k))
    right = multiply(A, basis_vector(A, i), A.table[j][k])
    return tuple(a - b for a, b in zip(left, right))


@dataclass(frozen=True)
class IdentityFailure:
    identity: Identity
    triple: tuple[int, int, int]
    """
    Zero-based basis indices.
    """

    residual: Vector

    def __str__(self) -> str:
        i, j, k = (n + 1 for n in self.triple)
        return f"{self.identity} fails on (e{i}, e{j}, e{k}): {format_vector(self.residual)}"


@dataclass(frozen=True)
class NovikovReport:
    ok: bool
    failures: tuple[IdentityFailure, ...] = ()

    @property
    def left_symmetric(self) -> bool:
        return not any(f.identity == "left-symmetric" for f in self.failures)

    @property
    def right_commutative(self) -> bool:
        return not any(f.identity == "right-commutative" for f in self.failures)

    def conditions(self) -> list[Polynomial]:
        """
        Nonzero residual coordinates; for a parametrized algebra these are the parameter
        conditions under which the identities hold.
        """
        seen: list[Polynomial] = []

        for failure in self.failures:
            for value in failure.residual:
                if not value.is_zero and value not in seen:
                    seen.append(value)

        return seen


def identity_residuals(A: StructureConstants, identity: Identity) -> list[IdentityFailure]:
    """
    All basis triples on which `identity` does not hold identically.
    """
    n = A.dim
    failures: list[IdentityFailure] = []

    if identity == "left-symmetric":
        associators = {
            (i, j, k): _associator(A, i, j, k)
            for i in range(n)
            for j in range(n)
            for k in range(n)
        }

        for i in range(n):
            for j in range(i + 1, n):
                for k in range(n):
                    residual = tuple(
                        a - b for a, b in zip(associators[(i, j, k)], associators[(j, i, k)])
                    )

                    if any(not r.is_zero for r in residual):
                        failures.append(IdentityFailure(identity, (i, j, k), residual))
    else:
        for i in range(n):
            for j in range(n):
                for k in range(j + 1, n):
                    left = multiply(A, A.table[i][j], basis_vector(A, k))
                    right = multiply(A, A.table[i][k], basis_vector(A, j))
                    residual = tuple(a - b for a, b in zip(left, right))

                    if any(not r.is_zero for r in residual):
                        failures.append(IdentityFailure(identity, (i, j, k), residual))

    return failures


def check_novikov(A: StructureConstants) -> NovikovReport:
    """
    Check left-symmetry and right-commutativity on all basis triples, symbolically in the
    parameters.
    """
    failures = identity_residuals(A, "left-symmetric") + identity_residuals(
        A, "right-commutative"
    )

    if failures:
        logger.debug("%s fails %d Novikov conditions", A.name or "algebra", len(failures))

    return NovikovReport(not failures, tuple(failures))


def require_novikov(A: StructureConstants) -> None:
    """
    Raises:
     - NotNovikovError: If `A` is not Novikov identically in its parameters.
    """
    report = check_novikov(A)

    if not report.ok:
        raise NotNovikovError(f"{A.name or 'algebra'} is not Novikov: {report.failures[0]}")


def associated_lie(A: StructureConstants) -> LieTable:
    """
    The commutator algebra `[x, y] = xy - yx`.

    Raises:
     - JacobiViolationError: If the commutator fails the Jacobi identity (never for Novikov
       algebras).
    """
    table = [
        [[a - b for a, b in zip(A.table[i][j], A.table[j][i])] for j in range(A.dim)]
        for i in range(A.dim)
    ]
    return LieTable(A.dim, _freeze(table), A.field_tag, A.ring, f"[{A.name}]" if A.name else None)


@dataclass(frozen=True)
class LinearMapMatrix:
    entries: tuple[tuple[Polynomial, ...], ...]
    role: MatrixRole
    ring: Ring

    @property
    def size(self) -> int:
        return len(self.entries)

    def rows(self) -> list[list[Polynomial]]:
        return [list(row) for row in self.entries]

    def is_zero(self) -> bool:
        return all(entry.is_zero for row in self.entries for entry in row)

    def __matmul__(self, other: LinearMapMatrix) -> LinearMapMatrix:
        product = linalg.matmul(self.entries, other.entries, self.ring.zero)
        return LinearMapMatrix(_freeze_matrix(product), self.role, self.ring)

    def __add__(self, other: LinearMapMatrix) -> LinearMapMatrix:
        return self._combine(other, 1)

    def __sub__(self, other: LinearMapMatrix) -> LinearMapMatrix:
        return self._combine(other, -1)

    def _combine(self, other: LinearMapMatrix, sign: int) -> LinearMapMatrix:
        rows = [
            [a + b * sign for a, b in zip(row, other_row)]
            for row, other_row in zip(self.entries, other.entries)
        ]
        return LinearMapMatrix(_freeze_matrix(rows), self.role, self.ring)

    def scaled(self, factor: Polynomial) -> LinearMapMatrix:
        rows = [[entry * factor for entry in row] for row in self.entries]
        return LinearMapMatrix(_freeze_matrix(rows), self.role, self.ring)

    def commutator(self, other: LinearMapMatrix) -> LinearMapMatrix:
        return (self @ other) - (other @ self)

    def power(self, exponent: int) -> LinearMapMatrix:
        result = LinearMapMatrix(
            _freeze_matrix(linalg.identity(self.size, self.ring.one, self.ring.zero)),
            self.role,
            self.ring,
        )

        for _ in range(exponent):
            result = result @ self

        return result

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.entries)


def _freeze_matrix(rows: Sequence[Sequence[Polynomial]]) -> tuple[tuple[Polynomial, ...], ...]:
    return tuple(tuple(row) for row in rows)


_ROLES: dict[MultiplicationKind, MatrixRole] = {
    "L": "left-mult",
    "R": "right-mult",
    "ad": "adjoint",
}


def mult_matrix(A: StructureConstants, x: Sequence[object], kind: MultiplicationKind, ring: Ring | None = None) -> LinearMapMatrix:  # noqa: E501
    """
    Matrix of `L(x)`, `R(x)` or `ad(x)` for a coordinate vector `x`.
    """
    ring = A.ring if ring is None else ring
    columns = []

    for j in range(A.dim):
        e_j = basis_vector(A, j, ring)

        if kind == "L":
            column = multiply(A, x, e_j, ring)
        elif kind == "R":
            column = multiply(A, e_j, x, ring)
        else:
            column = tuple(
                a - b for a, b in zip(multiply(A, x, e_j, ring), multiply(A, e_j, x, ring))
            )

        columns.append(column)

    rows = [[columns[j][k] for j in range(A.dim)] for k in range(A.dim)]
    return LinearMapMatrix(_freeze_matrix(rows), _ROLES[kind], ring)


def mult_matrices(A: StructureConstants, kind: MultiplicationKind) -> list[LinearMapMatrix]:
    """
    `[L(e_1), ..., L(e_n)]` (or `R`, `ad`), with `L(e_i)[k][j] = c_ij^k`.
    """
    return [mult_matrix(A, basis_vector(A, i), kind) for i in range(A.dim)]


def _fresh_names(ring: Ring, prefix: str, count: int) -> list[str]:
    names = [f"{prefix}{i + 1}" for i in range(count)]

    while set(names) & set(ring.names):
        prefix += prefix[-1]
        names = [f"{prefix}{i + 1}" for i in range(count)]

    return names


def _generic_vector(A: StructureConstants, prefix: str) -> tuple[Ring, Vector]:
    names = _fresh_names(A.ring, prefix, A.dim)
    ring = A.ring.with_variables(Variable(n, VariableKind.PARAMETER) for n in names)
    return ring, tuple(ring.gen(n) for n in names)


def is_complete(A: StructureConstants) -> bool:
    """
    True iff every right multiplication `R(x)` is nilpotent, i.e. the characteristic polynomial
    of `R(x)` for a generic `x` is `λ^n`. Tested as `R(x)^n = 0` with `x = sum t_i e_i`.
    """
    n = A.dim

    # e_i e_j only reaches e_k with k > i: every R(e_j) is strictly lower triangular
    if all(A.table[i][j][k].is_zero for i in range(n) for j in range(n) for k in range(i + 1)):
        return True

    ring, x = _generic_vector(A, "t")
    return mult_matrix(A, x, "R", ring).power(A.dim).is_zero()


def is_commutative_associative(A: StructureConstants) -> bool:
    n = A.dim

    for i in range(n):
        for j in range(i + 1, n):
            if A.table[i][j] != A.table[j][i]:
                return False

    return all(
        all(r.is_zero for r in _associator(A, i, j, k))
        for i in range(n)
        for j in range(n)
        for k in range(n)
    )


def is_associative(A: StructureConstants) -> bool:
    return all(
        all(r.is_zero for r in _associator(A, i, j, k))
        for i in range(A.dim)
        for j in range(A.dim)
        for k in range(A.dim)
    )


def is_commutative(A: StructureConstants) -> bool:
    return all(
        A.table[i][j] == A.table[j][i] for i in range(A.dim) for j in range(i + 1, A.dim)
    )


def check_left_representation(A: StructureConstants) -> bool:
    """
    `[L(e_i), L(e_j)] = L([e_i, e_j])` for all basis pairs.
    """
    lefts = mult_matrices(A, "L")
    lie = associated_lie(A)

    for i in range(A.dim):
        for j in range(i + 1, A.dim):
            target = mult_matrix(A, lie.table[i][j], "L")

            if not (lefts[i].commutator(lefts[j]) - target).is_zero():
                return False

    return True


def eq3_matrix(A: StructureConstants, i: int, j: int) -> LinearMapMatrix:
    """
    `L([x,y]) + ad([x,y]) - [L(x), ad(y)] - [ad(x), L(y)]` at `x = e_i`, `y = e_j`.
    """
    lie = associated_lie(A)
    bracket = lie.table[i][j]
    left_x = mult_matrix(A, basis_vector(A, i), "L")
    left_y = mult_matrix(A, basis_vector(A, j), "L")
    ad_x = mult_matrix(A, basis_vector(A, i), "ad")
    ad_y = mult_matrix(A, basis_vector(A, j), "ad")
    return (
        mult_matrix(A, bracket, "L")
        + mult_matrix(A, bracket, "ad")
        - left_x.commutator(ad_y)
        - ad_x.commutator(left_y)
    )


def check_eq3(A: StructureConstants) -> bool:
    """
    The linearized right-commutativity condition vanishes on every basis pair.
    """
    return all(eq3_matrix(A, i, j).is_zero() for i in range(A.dim) for j in range(i + 1, A.dim))


def _field_degree(ring: Ring) -> int:
    if len(ring.extensions) > 1:
        raise SymbolicParameterError("Numeric invariants support at most one field extension")

    return ring.extensions[0].degree if ring.extensions else 1


def _numeric_check(ring: Ring, entries: Iterable[Polynomial]) -> None:
    allowed = {e.name for e in ring.extensions}

    for entry in entries:
        if entry.variables_used - allowed:
            raise SymbolicParameterError(
                f"Numeric invariant needs instantiated parameters, found {entry}"
            )


def _realified(ring: Ring, row: Sequence[Polynomial]) -> list[Fraction]:
    if not ring.extensions:
        return [p.constant_value if not p.is_zero else Fraction(0) for p in row]

    extension = ring.extensions[0]
    index = ring.index(extension.name)
    result: list[Fraction] = []

    for entry in row:
        coefficients = [Fraction(0)] * extension.degree

        for monomial, value in entry.terms:
            coefficients[monomial[index]] = value

        result.extend(coefficients)

    return result


def field_rank(ring: Ring, rows: Sequence[Sequence[Polynomial]]) -> int:
    """
    Rank over ℚ or over the single extension field of `ring`.
    """
    rows = [list(r) for r in rows if any(not e.is_zero for e in r)]

    if not rows:
        return 0

    _numeric_check(ring, (e for r in rows for e in r))
    degree = _field_degree(ring)

    if degree == 1:
        return linalg.rank([_realified(ring, r) for r in rows])

    generator = ring.gen(ring.extensions[0].name)
    expanded = []

    for row in rows:
        scaled = row

        for _ in range(degree):
            expanded.append(_realified(ring, scaled))
            scaled = [e * generator for e in scaled]

    return linalg.rank(expanded) // degree


def _span_rank(A: StructureConstants, vectors: Iterable[Vector]) -> int:
    return field_rank(A.ring, list(vectors))


def _independent(A: StructureConstants, vectors: Iterable[Vector]) -> list[Vector]:
    chosen: list[Vector] = []
    current = 0

    for vector in vectors:
        if all(e.is_zero for e in vector):
            continue

        rank = _span_rank(A, [*chosen, vector])

        if rank > current:
            chosen.append(vector)
            current = rank

    return chosen


def _products(A: StructureConstants, left: Sequence[Vector], right: Sequence[Vector]) -> list[Vector]:  # noqa: E501
    return [multiply(A, u, v) for u in left for v in right]


def derived_series_dims(A: StructureConstants) -> list[int]:
    """
    Dimensions of `A^1 = A, A^k = sum_{i+j=k} A^i A^j` for `k <= dim + 1`, stopping at zero.
    """
    powers: list[list[Vector]] = [[], [basis_vector(A, i) for i in range(A.dim)]]
    dims = [A.dim]

    for k in range(2, A.dim + 2):
        spanning: list[Vector] = []

        for i in range(1, k):
            spanning.extend(_products(A, powers[i], powers[k - i]))

        basis = _independent(A, spanning)
        powers.append(basis)
        dims.append(len(basis))

        if not basis:
            break

    return dims


def is_nilpotent(A: StructureConstants) -> bool:
    return derived_series_dims(A)[-1] == 0


def _annihilator_dim(A: StructureConstants, side: Literal["left", "right", "both"]) -> int:
    n = A.dim
    rows: list[list[Polynomial]] = []

    # x = sum x_i e_i; x e_j = sum_i x_i c_ij and e_j x = sum_i x_i c_ji
    for j in range(n):
        for k in range(n):
            if side in ("left", "both"):
                rows.append([A.table[i][j][k] for i in range(n)])

            if side in ("right", "both"):
                rows.append([A.table[j][i][k] for i in range(n)])

    return n - field_rank(A.ring, rows)


def trace_form(A: StructureConstants) -> list[list[Polynomial]]:
    lefts = mult_matrices(A, "L")
    matrix = []

    for i in range(A.dim):
        row = []

        for j in range(A.dim):
            product = lefts[i] @ lefts[j]
            total = A.ring.zero

            for k in range(A.dim):
                total = total + product.entries[k][k]

            row.append(total)

        matrix.append(row)

    return matrix


def identity_element(A: StructureConstants) -> Vector | None:
    """
    The two-sided unit, if `A` has one. Requires rational structure constants.
    """
    n = A.dim
    _numeric_check(A.ring, (e for row in A.table for v in row for e in v))

    if A.ring.extensions:
        raise SymbolicParameterError("identity_element works over Q only")

    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []

    # u e_j = e_j and e_j u = e_j
    for j in range(n):
        for k in range(n):
            target = Fraction(int(j == k))
            rows.append([_value(A.table[i][j][k]) for i in range(n)])
            rhs.append(target)
            rows.append([_value(A.table[j][i][k]) for i in range(n)])
            rhs.append(target)

    augmented = [[*row, b] for row, b in zip(rows, rhs)]
    reduced, pivots = linalg.rref(augmented)

    if n in pivots:
        return None

    solution = [Fraction(0)] * n

    for r, c in enumerate(pivots):
        solution[c] = reduced[r][n]

    candidate = tuple(A.ring.constant(v) for v in solution)

    for j in range(n):
        e_j = basis_vector(A, j)

        if multiply(A, candidate, e_j) != e_j or multiply(A, e_j, candidate) != e_j:
            return None

    return candidate


def _value(p: Polynomial) -> Fraction:
    return Fraction(0) if p.is_zero else p.constant_value


def change_basis(A: StructureConstants, matrix: Sequence[Sequence[object]], name: str | None = None) -> StructureConstants:  # noqa: E501
    """
    Structure constants in the basis `f_i = sum_a matrix[a][i] e_a` (columns are the new basis
    vectors). The matrix must be rational and invertible.

    Raises:
     - linalg.SingularMatrixError: If the columns are dependent.
    """
    if len(matrix) != A.dim or any(len(row) != A.dim for row in matrix):
        raise DimensionMismatchError(f"Change of basis must be {A.dim} x {A.dim}")

    rational = [[to_rational(v) for v in row] for row in matrix]
    inverse = linalg.inverse(rational)
    columns = [tuple(A.ring.constant(rational[a][i]) for a in range(A.dim)) for i in range(A.dim)]
    table = []

    for i in range(A.dim):
        row = []

        for j in range(A.dim):
            old = multiply(A, columns[i], columns[j])
            new = [
                sum((old[a] * inverse[k][a] for a in range(A.dim)), A.ring.zero)
                for k in range(A.dim)
            ]
            row.append(new)

        table.append(row)

    return StructureConstants(A.dim, _freeze(table), A.field_tag, A.ring, name or A.name)


@dataclass(frozen=True)
class Fingerprint:
    """
    Isomorphism invariants compared before solving an isomorphism system.
    """

    dim: int
    dim_square: int
    """
    dim A·A
    """

    dim_cube: int
    """
    dim of the span of all products of three elements.
    """

    dim_annihilator: int
    dim_left_annihilator: int
    """
    dim {x : x·A = 0}
    """

    dim_right_annihilator: int
    """
    dim {x : A·x = 0}
    """

    dim_derived: int
    """
    dim [A, A] of the associated Lie algebra.
    """

    trace_form_rank: int
    commutative: bool
    associative: bool
    complete: bool
    trace_form_signature: tuple[int, int] | None = None
    """
    Inertia of the trace form, for rational structure constants. Only an invariant over ℝ.
    """

    def differences(self, other: Fingerprint, field_tag: FieldTag = "C") -> list[str]:
        return [
            f.name
            for f in fields(self)
            if getattr(self, f.name) != getattr(other, f.name)
            and (field_tag == "R" or f.name != "trace_form_signature")
        ]

    def as_dict(self) -> dict[str, object]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def as_tuple(self) -> tuple[int, int, int, int, int, bool, bool, int]:
        """
        `(dim A², dim A³, dim Ann, dim left Ann, dim right Ann, commutative, associative,
        trace form rank)`.
        """
        return (
            self.dim_square,
            self.dim_cube,
            self.dim_annihilator,
            self.dim_left_annihilator,
            self.dim_right_annihilator,
            self.commutative,
            self.associative,
            self.trace_form_rank,
        )


def algebra_invariants(A: StructureConstants) -> Fingerprint:
    """
    Raises:
     - SymbolicParameterError: If a structure constant still involves a parameter.
    """
    _numeric_check(A.ring, (e for row in A.table for v in row for e in v))
    basis = [basis_vector(A, i) for i in range(A.dim)]
    square = _independent(A, _products(A, basis, basis))
    cube = _independent(
        A, _products(A, square, basis) + _products(A, basis, square)
    )
    lie = associated_lie(A)
    derived = [lie.table[i][j] for i in range(A.dim) for j in range(i + 1, A.dim)]
    form = trace_form(A)
    signature = None

    if not A.ring.extensions:
        signature = linalg.signature([[_value(p) for p in row] for row in form])

    return Fingerprint(
        dim=A.dim,
        dim_square=len(square),
        dim_cube=len(cube),
        dim_annihilator=_annihilator_dim(A, "both"),
        dim_left_annihilator=_annihilator_dim(A, "left"),
        dim_right_annihilator=_annihilator_dim(A, "right"),
        dim_derived=_span_rank(A, derived),
        trace_form_rank=field_rank(A.ring, form),
        commutative=is_commutative(A),
        associative=is_associative(A),
        complete=is_complete(A),
        trace_form_signature=signature,
    )
