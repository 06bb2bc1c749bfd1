"""
Novikov Structures on a Lie Algebra
===================================

Computes the variety of Novikov structures compatible with a given Lie algebra `g`: algebra
products `x·y` on the vector space of `g` whose commutator `x·y - y·x` is the Lie bracket.

The `n^3` structure constants `c_ij^k` are unknowns. Two families of conditions are linear in
them once the bracket of `g` is fixed:

 - the commutator conditions `c_ij^k - c_ji^k = [e_i, e_j]_k` for `i < j`;
 - right-commutativity rewritten with `R(x) = L(x) - ad(x)`: for `x = e_i`, `y = e_j`,
   `L([x,y]) + ad([x,y]) - [L(x), ad(y)] - [ad(x), L(y)] = 0`, where `ad` is known from `g`.

The linear system is solved exactly by row reduction; the free unknowns become parameters
`b1 ... bm`. What remains of the Novikov axioms is left-symmetry, which is quadratic in the
unknowns and is reported as a residual list of polynomial conditions on the parameters.

Example Usage:
-------------
```python
from novikov_groebner.algebra import LieTable
from novikov_groebner.variety import tg_family

r2 = LieTable.from_text(2, ["[e1, e2] = e1"])
family = tg_family(r2)
print(family.params)    # ('b1', 'b2')
print(family.residual)  # ()
```
"""  # noqa: E501

from __future__ import annotations

import itertools
import logging
import random
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction

from novikov_groebner import linalg
from novikov_groebner.algebra import (
    LieTable,
    NotNovikovError,
    StructureConstants,
    identity_residuals,
)
from novikov_groebner.parameter_schemas import FieldTag
from novikov_groebner.poly import Polynomial, Ring, VariableKind, to_rational

logger = logging.getLogger(__name__)


class InconsistentSystemError(Exception):
    pass


class ParametricLieError(Exception):
    pass


def unknown_name(i: int, j: int, k: int) -> str:
    """
    Name of the unknown `c_ij^k` for zero-based indices, e.g. `c_1_2_3`.
    """
    return f"c_{i + 1}_{j + 1}_{k + 1}"


@dataclass(frozen=True)
class LinearSystem:
    unknowns: tuple[str, ...]
    rows: tuple[tuple[Fraction, ...], ...]
    """
    Augmented rows: one coefficient per unknown followed by the right-hand side.
    """

    def __len__(self) -> int:
        return len(self.rows)


class _Equations:
    def __init__(self, n: int):
        self.n = n
        self.unknowns = tuple(
            unknown_name(i, j, k) for i in range(n) for j in range(n) for k in range(n)
        )
        self.rows: list[tuple[Fraction, ...]] = []

    def index(self, i: int, j: int, k: int) -> int:
        return (i * self.n + j) * self.n + k

    def add(self, coefficients: Mapping[int, Fraction], rhs: Fraction) -> None:
        if not any(coefficients.values()):
            if rhs:
                raise InconsistentSystemError("A linear condition reads 0 = nonzero")

            return

        row = [Fraction(0)] * (len(self.unknowns) + 1)

        for index, value in coefficients.items():
            row[index] += value

        row[-1] = rhs
        self.rows.append(tuple(row))


def _rational_lie(g: LieTable) -> list[list[list[Fraction]]]:
    if g.ring.arity:
        raise ParametricLieError(
            f"{g.name or 'Lie algebra'} has symbolic coefficients {g.ring.names}; instantiate it first"  # noqa: E501
        )

    return [
        [[p.constant_value if not p.is_zero else Fraction(0) for p in vector] for vector in row]
        for row in g.table
    ]


def tg_linear_system(g: LieTable) -> LinearSystem:
    """
    Commutator and linearized right-commutativity conditions on the unknowns `c_ij^k`.

    Raises:
     - ParametricLieError: If `g` still has symbolic structure constants.
    """
    n = g.dim
    bracket = _rational_lie(g)
    equations = _Equations(n)

    # ad(e_l)[a][b] = [e_l, e_b]_a
    def ad(l: int, a: int, b: int) -> Fraction:
        return bracket[l][b][a]

    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                equations.add(
                    {equations.index(i, j, k): Fraction(1), equations.index(j, i, k): Fraction(-1)},
                    bracket[i][j][k],
                )

    for i in range(n):
        for j in range(i + 1, n):
            br = bracket[i][j]

            for a in range(n):
                for b in range(n):
                    coefficients: dict[int, Fraction] = {}

                    def add(index: int, value: Fraction) -> None:
                        if value:
                            coefficients[index] = coefficients.get(index, Fraction(0)) + value

                    # L([x,y])[a][b] = sum_l br_l c_lb^a
                    for l in range(n):
                        add(equations.index(l, b, a), br[l])

                    for m in range(n):
                        # -[L(x), ad(y)] = -L_i ad_j + ad_j L_i
                        add(equations.index(i, m, a), -ad(j, m, b))
                        add(equations.index(i, b, m), ad(j, a, m))
                        # -[ad(x), L(y)] = -ad_i L_j + L_j ad_i
                        add(equations.index(j, b, m), -ad(i, a, m))
                        add(equations.index(j, m, a), ad(i, m, b))

                    # ad([x,y]) is known and moves to the right-hand side
                    constant = sum((br[l] * ad(l, a, b) for l in range(n)), Fraction(0))
                    equations.add(coefficients, -constant)

    logger.debug("Linear system for %s: %d rows", g.name or "Lie algebra", len(equations.rows))
    return LinearSystem(equations.unknowns, tuple(equations.rows))


@dataclass(frozen=True)
class LinearSolution:
    unknowns: tuple[str, ...]
    values: tuple[tuple[Fraction, dict[int, Fraction]], ...]
    """
    For each unknown: a constant and coefficients on the free parameters (by parameter index).
    """

    free: tuple[str, ...]
    """
    Unknowns chosen as free parameters, in parameter order.
    """


def solve_linear(system: LinearSystem) -> LinearSolution:
    """
    Exact general solution. The free parameters are the non-pivot unknowns in column order.

    Raises:
     - InconsistentSystemError: If the system has no solution.
    """
    count = len(system.unknowns)

    if not system.rows:
        values = tuple((Fraction(0), {u: Fraction(1)}) for u in range(count))
        return LinearSolution(system.unknowns, values, system.unknowns)

    reduced, pivots = linalg.rref(system.rows)

    if count in pivots:
        raise InconsistentSystemError("The linear conditions are inconsistent")

    free_columns = [c for c in range(count) if c not in pivots]
    parameter_of = {c: p for p, c in enumerate(free_columns)}
    values: list[tuple[Fraction, dict[int, Fraction]]] = []
    row_of = {c: r for r, c in enumerate(pivots)}

    for column in range(count):
        if column in parameter_of:
            values.append((Fraction(0), {parameter_of[column]: Fraction(1)}))
            continue

        row = reduced[row_of[column]]
        dependencies = {parameter_of[f]: -row[f] for f in free_columns if row[f]}
        values.append((row[count], dependencies))

    return LinearSolution(
        system.unknowns, tuple(values), tuple(system.unknowns[c] for c in free_columns)
    )


@dataclass(frozen=True)
class NovikovFamily:
    """
    All Novikov structures on `lie`: the linear solution written as a parametrized algebra,
    valid wherever every `residual` polynomial vanishes.
    """

    lie: LieTable
    algebra: StructureConstants
    free: tuple[tuple[str, str], ...]
    """
    Pairs `(parameter, unknown)` recording which unknown each parameter stands for.
    """

    residual: tuple[Polynomial, ...]
    """
    Left-symmetry conditions on the parameters, monic and without repetition.
    """

    @property
    def params(self) -> tuple[str, ...]:
        return tuple(p for p, _ in self.free)

    @property
    def ring(self) -> Ring:
        return self.algebra.ring

    def satisfies_residual(self, values: Mapping[str, object]) -> bool:
        assignment = {n: to_rational(v) for n, v in values.items()}
        return all(r.evaluate(assignment) == 0 for r in self.residual)


def tg_family(g: LieTable, field_tag: FieldTag | None = None) -> NovikovFamily:
    """
    The family of Novikov structures on `g`.

    Raises:
     - ParametricLieError: If `g` has symbolic structure constants.
     - InconsistentSystemError: If no algebra has `g` as commutator algebra and satisfies the
       linear conditions.
    """
    system = tg_linear_system(g)
    solution = solve_linear(system)
    n = g.dim
    names = [f"b{p + 1}" for p in range(len(solution.free))]
    ring = Ring.from_names(names, kinds={name: VariableKind.PARAMETER for name in names})
    generators = [ring.gen(name) for name in names]
    table: list[list[list[Polynomial]]] = [[[ring.zero] * n for _ in range(n)] for _ in range(n)]

    for index, (constant, dependencies) in enumerate(solution.values):
        i, rest = divmod(index, n * n)
        j, k = divmod(rest, n)
        value = ring.constant(constant)

        for parameter, coefficient in dependencies.items():
            value = value + generators[parameter] * coefficient

        table[i][j][k] = value

    label = f"T({g.name})" if g.name else None
    algebra = StructureConstants(
        n,
        tuple(tuple(tuple(v) for v in row) for row in table),
        field_tag or g.field_tag,
        ring,
        label,
    )
    residual: list[Polynomial] = []

    for failure in identity_residuals(algebra, "left-symmetric"):
        for value in failure.residual:
            if value.is_zero:
                continue

            monic = value.monic()

            if monic not in residual:
                residual.append(monic)

    logger.info(
        "%s: %d free parameters, %d residual conditions",
        label or "family",
        len(names),
        len(residual),
    )
    return NovikovFamily(g, algebra, tuple(zip(names, solution.free)), tuple(residual))


def instantiate(family: NovikovFamily, values: Mapping[str, object], name: str | None = None) -> StructureConstants:  # noqa: E501
    """
    The member of `family` at a full assignment of its parameters.

    Raises:
     - NotNovikovError: If the assignment violates a residual condition.
    """
    missing = set(family.params) - set(values)

    if missing:
        raise ValueError(f"Missing values for parameters {sorted(missing)}")

    if not family.satisfies_residual(values):
        raise NotNovikovError(f"Values {dict(values)} violate the left-symmetry conditions")

    return family.algebra.substitute(values, name)


def sample_family(
    family: NovikovFamily,
    grid: Sequence[object],
    count: int,
    seed: int,
) -> list[StructureConstants]:
    """
    Up to `count` distinct members of `family` with parameter values drawn from `grid`.

    With few parameters the whole grid product is scanned in shuffled order; otherwise random
    tuples are drawn. Both use `random.Random(seed)`, so the result is reproducible.
    """
    rng = random.Random(seed)
    values = [to_rational(v) for v in grid]
    params = family.params

    if not params:
        return [family.algebra.substitute({})] if count else []

    if len(values) ** len(params) <= 4096:
        candidates = list(itertools.product(values, repeat=len(params)))
        rng.shuffle(candidates)
    else:
        candidates = [tuple(rng.choice(values) for _ in params) for _ in range(count * 64)]

    found: list[StructureConstants] = []
    seen: set[tuple[Fraction, ...]] = set()

    for point in candidates:
        if len(found) >= count:
            break

        if point in seen:
            continue

        seen.add(point)
        assignment = dict(zip(params, point))

        if family.satisfies_residual(assignment):
            found.append(family.algebra.substitute(assignment))

    return found
