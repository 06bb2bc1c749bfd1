"""
Exact Polynomial Arithmetic
===========================

This module is the arithmetic substrate of `novikov_groebner`. It provides exact rational
numbers, named variables, monomial orders, quadratic (and other small) number field
extensions and multivariate polynomials with rational coefficients.

Polynomials are stored as sympy `PolyElement` objects over `QQ`. The sympy ring only fixes the
variable names; the monomial order used for leading terms, printing and Gröbner computations is
carried by our own `Ring`, so changing the order of a polynomial never copies its terms.

Example Usage:
-------------
```python
from novikov_groebner.poly import Ring

ring = Ring.from_names(["D", "x11", "x12", "alpha"], order="lex")
p = ring.parse("D x12 alpha + (1/2) D x12 - 1/2")
print(p.leading_monomial)  # (1, 0, 1, 1)
print(p * p - p)
```

Text grammar:
-------------
Terms are joined by `+` and `-`. A term is `coef`, `coef var^k ...` or `var^k ...`; `coef` is
`int` or `int/int`, optionally wrapped in parentheses when it leads a term (`(1/2) e3`).
Variables match `[A-Za-z][A-Za-z0-9_]*`. Whitespace is insignificant and `*` may separate
factors.
"""  # noqa: E501

from __future__ import annotations

import functools
import logging
import re
from collections.abc import Callable, Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import cast

from sympy.polys.domains import QQ
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyElement, PolyRing

from novikov_groebner.parameter_schemas import OrderStyle

logger = logging.getLogger(__name__)

Rational = Fraction
"""
Exact rational number. `fractions.Fraction` already keeps numerator and denominator coprime with
a positive denominator, which is the canonical form every module relies on.
"""

Monomial = tuple[int, ...]

Scalar = int | Fraction

_VARIABLE_NAME = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


class RingMismatchError(Exception):
    pass


class UnknownVariableError(Exception):
    pass


class PolynomialSyntaxError(Exception):
    pass


class ArityError(Exception):
    pass


class ReducibleExtensionError(Exception):
    pass


class VariableKind(Enum):
    MAP_ENTRY = "map-entry"
    DET_INVERSE = "det-inverse"
    PARAMETER = "parameter"
    EXTENSION = "extension-generator"


@dataclass(frozen=True)
class Variable:
    name: str
    kind: VariableKind = VariableKind.PARAMETER

    def __post_init__(self) -> None:
        if not _VARIABLE_NAME.match(self.name):
            raise PolynomialSyntaxError(f"Invalid variable name {self.name!r}")


def to_rational(value: object) -> Fraction:
    """
    Convert ints, Fractions, sympy ground elements and `"p/q"` strings to a `Fraction`.
    """
    if isinstance(value, Fraction):
        return value

    if isinstance(value, int):
        return Fraction(value)

    if isinstance(value, str):
        try:
            return Fraction(value.replace(" ", ""))
        except ValueError as error:
            raise PolynomialSyntaxError(f"Not a rational number: {value!r}") from error

    numerator = getattr(value, "numerator", None)
    denominator = getattr(value, "denominator", None)

    if numerator is not None and denominator is not None:
        return Fraction(int(numerator), int(denominator))  # pyright: ignore

    raise TypeError(f"Cannot convert {type(value).__name__} to a rational number")


def _to_ground(value: Fraction):
    return QQ(value.numerator, value.denominator)


def _grevlex_key(monomial: Monomial) -> tuple[int, tuple[int, ...]]:
    return (sum(monomial), tuple(-e for e in reversed(monomial)))


@dataclass(frozen=True)
class MonomialOrder:
    style: OrderStyle
    ranking: tuple[str, ...]
    """
    Variable names, largest first. Exponent vectors are indexed in this order.
    """

    split: int = 0
    """
    Size of the eliminated (first) block. Only meaningful for the `elim` style.
    """

    key: Callable[[Monomial], tuple[object, ...]] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        if self.style not in ("lex", "grevlex", "elim"):
            raise ValueError(f"Unknown monomial order style {self.style!r}")

        if len(set(self.ranking)) != len(self.ranking):
            raise ValueError("Monomial order ranking repeats a variable")

        if self.style == "elim" and not 0 <= self.split <= len(self.ranking):
            raise ValueError(f"Elimination split {self.split} outside the ranking")

        key: Callable[[Monomial], tuple[object, ...]]

        if self.style == "lex":
            key = _identity_key
        elif self.style == "grevlex":
            key = _grevlex_key
        else:
            key = functools.partial(_elimination_key, self.split)

        object.__setattr__(self, "key", key)

    @property
    def arity(self) -> int:
        return len(self.ranking)

    def __str__(self) -> str:
        if self.style == "elim":
            return f"elim {self.split}"

        return self.style


def _identity_key(monomial: Monomial) -> tuple[object, ...]:
    return monomial


def _elimination_key(split: int, monomial: Monomial) -> tuple[object, ...]:
    return (monomial[:split], _grevlex_key(monomial[split:]))


def compare_monomials(m1: Monomial, m2: Monomial, order: MonomialOrder) -> int:
    """
    Three-way comparison of two exponent vectors: 1 if `m1` is larger, -1 if smaller, 0 if equal.

    Raises:
     - ArityError: If a vector does not match the order's number of variables.
    """
    if len(m1) != order.arity or len(m2) != order.arity:
        raise ArityError(
            f"Exponent vectors of length {len(m1)} and {len(m2)} do not fit {order.arity} variables"  # noqa: E501
        )

    k1, k2 = order.key(m1), order.key(m2)

    if k1 == k2:
        return 0

    return 1 if k1 > k2 else -1  # pyright: ignore


@functools.lru_cache(maxsize=None)
def _sympy_ring(names: tuple[str, ...]) -> PolyRing:
    return PolyRing(names, QQ, lex)


@dataclass(frozen=True)
class FieldExt:
    """
    A simple algebraic extension ℚ(t) given by a monic minimal polynomial in one generator.
    """

    generator: Variable
    minimal_polynomial: tuple[Fraction, ...]
    """
    Coefficients of the monic minimal polynomial, constant term first.
    """

    def __post_init__(self) -> None:
        if self.generator.kind is not VariableKind.EXTENSION:
            raise ValueError("Extension generator must have kind extension-generator")

        if len(self.minimal_polynomial) < 3:
            raise ReducibleExtensionError("Minimal polynomial must have degree >= 2")

        if self.minimal_polynomial[-1] != 1:
            raise ValueError("Minimal polynomial must be monic")

        if self.degree <= 4:
            univariate = self._univariate()
            _, factors = univariate.factor_list()

            if len(factors) != 1 or factors[0][1] != 1:
                raise ReducibleExtensionError(
                    f"{self.minimal_polynomial_text} is reducible over Q"
                )
        else:
            logger.debug("Skipping irreducibility check for degree %d", self.degree)

    @classmethod
    def quadratic(cls, name: str, square: Scalar) -> FieldExt:
        """
        The extension generated by `name` with `name^2 = square`.
        """
        return cls(
            Variable(name, VariableKind.EXTENSION),
            (-to_rational(square), Fraction(0), Fraction(1)),
        )

    @classmethod
    def from_text(cls, name: str, text: str) -> FieldExt:
        ring = Ring((Variable(name, VariableKind.EXTENSION),))
        poly = ring.parse(text)
        coefficients = [Fraction(0)] * (poly.total_degree + 1)

        for (exponent,), coefficient in poly.terms:
            coefficients[exponent] = coefficient

        lead = coefficients[-1]

        return cls(
            Variable(name, VariableKind.EXTENSION),
            tuple(c / lead for c in coefficients),
        )

    @property
    def name(self) -> str:
        return self.generator.name

    @property
    def degree(self) -> int:
        return len(self.minimal_polynomial) - 1

    @property
    def square(self) -> Fraction | None:
        """
        `s` when the minimal polynomial is `t^2 - s`, otherwise None.
        """
        if self.degree == 2 and self.minimal_polynomial[1] == 0:
            return -self.minimal_polynomial[0]

        return None

    def _univariate(self) -> PolyElement:
        ring = _sympy_ring((self.name,))
        return ring.from_dict(
            {(k,): _to_ground(c) for k, c in enumerate(self.minimal_polynomial) if c}
        )

    @property
    def minimal_polynomial_text(self) -> str:
        ring = Ring((self.generator,))
        return str(Polynomial(ring, self._univariate()))

    def embedded(self, ring: Ring) -> Polynomial:
        """
        The minimal polynomial as an element of `ring`.
        """
        index = ring.index(self.name)
        terms: dict[Monomial, object] = {}

        for k, c in enumerate(self.minimal_polynomial):
            if c:
                monomial = [0] * ring.arity
                monomial[index] = k
                terms[tuple(monomial)] = _to_ground(c)

        # Not reduced: this is the modulus itself.
        return Polynomial(ring, ring.sympy_ring.from_dict(terms))

    def inverse(self, element: Polynomial) -> Polynomial:
        """
        Inverse of a nonzero element of ℚ(t), given as a polynomial in the generator only.

        The inverse is found by solving the linear system of multiplication by `element` on the
        basis 1, t, ..., t^(d-1).

        Raises:
         - ZeroDivisionError: If `element` is zero.
         - ValueError: If `element` involves variables other than the generator.
        """
        from novikov_groebner import linalg

        if element.is_zero:
            raise ZeroDivisionError("Zero has no inverse in a field extension")

        if element.variables_used - {self.name}:
            raise ValueError("Only elements of Q(t) can be inverted")

        ring = element.ring
        index = ring.index(self.name)
        generator = ring.gen(self.name)
        columns: list[list[Fraction]] = []
        power = element

        for _ in range(self.degree):
            column = [Fraction(0)] * self.degree

            for monomial, coefficient in power.terms:
                column[monomial[index]] = coefficient

            columns.append(column)
            power = power * generator

        matrix = [[columns[j][i] for j in range(self.degree)] for i in range(self.degree)]
        rhs = [Fraction(1)] + [Fraction(0)] * (self.degree - 1)
        solution = linalg.solve(matrix, rhs)
        result = ring.zero

        for k, coefficient in enumerate(solution):
            if coefficient:
                result = result + generator**k * coefficient

        return result


@dataclass(frozen=True)
class Ring:
    """
    A polynomial ring over ℚ, optionally extended, with a fixed variable ranking and monomial
    order. The ranking is the tuple order of `variables`; the first variable is the largest.
    """

    variables: tuple[Variable, ...]
    order: MonomialOrder = field(default=None)  # type: ignore[assignment]
    extensions: tuple[FieldExt, ...] = ()

    def __post_init__(self) -> None:
        names = tuple(v.name for v in self.variables)

        if len(set(names)) != len(names):
            raise ValueError(f"Duplicate variable names in {names}")

        if self.order is None:
            object.__setattr__(self, "order", MonomialOrder("lex", names))
        elif self.order.ranking != names:
            raise ValueError("Monomial order ranking must list the ring variables in order")

        for extension in self.extensions:
            if extension.generator not in self.variables:
                raise ValueError(f"Extension generator {extension.name} is not a ring variable")

    @classmethod
    def from_names(
        cls,
        names: Sequence[str],
        order: OrderStyle = "lex",
        split: int = 0,
        kinds: Mapping[str, VariableKind] | None = None,
        extensions: Sequence[FieldExt] = (),
    ) -> Ring:
        ext_names = {e.name: e for e in extensions}
        kinds = {} if kinds is None else kinds
        variables = tuple(
            ext_names[n].generator
            if n in ext_names
            else Variable(n, kinds.get(n, VariableKind.PARAMETER))
            for n in names
        )
        return cls(variables, MonomialOrder(order, tuple(names), split), tuple(extensions))

    @property
    def names(self) -> tuple[str, ...]:
        return self.order.ranking

    @property
    def arity(self) -> int:
        return len(self.variables)

    @property
    def sympy_ring(self) -> PolyRing:
        return _sympy_ring(self.names)

    @property
    def zero(self) -> Polynomial:
        return Polynomial(self, self.sympy_ring.zero)

    @property
    def one(self) -> Polynomial:
        return Polynomial(self, self.sympy_ring.one)

    def index(self, name: str | Variable) -> int:
        key = name.name if isinstance(name, Variable) else name

        try:
            return self.names.index(key)
        except ValueError as error:
            raise UnknownVariableError(f"{key} is not a variable of this ring") from error

    def variable(self, name: str) -> Variable:
        return self.variables[self.index(name)]

    def gen(self, name: str | Variable) -> Polynomial:
        return Polynomial(self, self.sympy_ring.gens[self.index(name)])

    def constant(self, value: object) -> Polynomial:
        return Polynomial(self, self.sympy_ring.ground_new(_to_ground(to_rational(value))))

    def parse(self, text: str) -> Polynomial:
        return parse_polynomial(text, self)

    def extension(self, name: str) -> FieldExt | None:
        return next((e for e in self.extensions if e.name == name), None)

    def with_order(self, style: OrderStyle, split: int = 0) -> Ring:
        return Ring(self.variables, MonomialOrder(style, self.names, split), self.extensions)

    def reordered(self, names: Sequence[str], style: OrderStyle | None = None, split: int = 0) -> Ring:
        """
        Same variables under a new ranking (a permutation of the current names).
        """
        if sorted(names) != sorted(self.names):
            raise ValueError("A reordering must use exactly the ring variables")

        style = self.order.style if style is None else style
        variables = tuple(self.variable(n) for n in names)
        return Ring(variables, MonomialOrder(style, tuple(names), split), self.extensions)

    def with_variables(self, extra: Iterable[Variable]) -> Ring:
        """
        Super-ring with `extra` variables ranked after the existing non-extension variables and
        before the extension generators.
        """
        new = [v for v in extra if v.name not in self.names]
        plain = [v for v in self.variables if v.kind is not VariableKind.EXTENSION]
        gens = [v for v in self.variables if v.kind is VariableKind.EXTENSION]
        variables = tuple(plain + new + gens)
        names = tuple(v.name for v in variables)
        split = self.order.split if self.order.style == "elim" else 0
        return Ring(variables, MonomialOrder(self.order.style, names, split), self.extensions)

    def with_extension(self, extension: FieldExt) -> Ring:
        if self.extension(extension.name) == extension:
            return self

        if extension.name in self.names:
            raise RingMismatchError(f"{extension.name} is already a variable of this ring")

        variables = (*self.variables, extension.generator)
        names = tuple(v.name for v in variables)
        split = self.order.split if self.order.style == "elim" else 0
        return Ring(
            variables,
            MonomialOrder(self.order.style, names, split),
            (*self.extensions, extension),
        )

    def without_variables(self, names: Iterable[str]) -> Ring:
        dropped = set(names)
        variables = tuple(v for v in self.variables if v.name not in dropped)
        extensions = tuple(e for e in self.extensions if e.name not in dropped)
        kept = tuple(v.name for v in variables)
        split = min(self.order.split, len(kept)) if self.order.style == "elim" else 0
        return Ring(variables, MonomialOrder(self.order.style, kept, split), extensions)

    def variables_of_kind(self, kind: VariableKind) -> list[Variable]:
        return [v for v in self.variables if v.kind is kind]


def merge_rings(first: Ring, second: Ring) -> Ring:
    """
    Smallest ring containing the variables of both, in first-seen order (extension generators last).
    """
    extensions = list(first.extensions)

    for extension in second.extensions:
        clash = first.extension(extension.name)

        if clash is None:
            extensions.append(extension)
        elif clash != extension:
            raise RingMismatchError(
                f"Extension {extension.name} is declared with two different minimal polynomials"
            )

    plain: list[Variable] = []

    for variable in (*first.variables, *second.variables):
        if variable.kind is VariableKind.EXTENSION or any(v.name == variable.name for v in plain):
            continue

        plain.append(variable)

    variables = tuple(plain + [e.generator for e in extensions])
    names = tuple(v.name for v in variables)
    return Ring(variables, MonomialOrder(first.order.style, names), tuple(extensions))


class Polynomial:
    """
    Multivariate polynomial with exact rational coefficients in a `Ring`.

    Values are immutable. Arithmetic with another polynomial requires an equal ring; ints and
    Fractions are promoted to constants. Powers of extension generators are reduced modulo their
    minimal polynomials after every multiplication.
    """

    __slots__ = ("ring", "_element")

    ring: Ring
    _element: PolyElement

    def __init__(self, ring: Ring, element: PolyElement):
        self.ring = ring
        self._element = element

    @classmethod
    def from_terms(cls, ring: Ring, terms: Mapping[Monomial, object]) -> Polynomial:
        element = ring.sympy_ring.from_dict(
            {m: _to_ground(to_rational(c)) for m, c in terms.items() if c}
        )
        return cls(ring, element)._reduced()

    @property
    def element(self) -> PolyElement:
        """
        The underlying sympy element (lex-ordered ring over QQ with the same variable names).
        """
        return self._element

    @property
    def terms(self) -> list[tuple[Monomial, Fraction]]:
        key = self.ring.order.key
        items = sorted(self._element.items(), key=lambda t: key(t[0]), reverse=True)
        return [(m, to_rational(c)) for m, c in items]

    def coefficient(self, monomial: Monomial) -> Fraction:
        return to_rational(self._element.get(tuple(monomial), QQ.zero))

    @property
    def is_zero(self) -> bool:
        return not self._element

    @property
    def is_constant(self) -> bool:
        return all(not any(m) for m in self._element)

    @property
    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"{self} is not constant")

        return self.coefficient((0,) * self.ring.arity)

    @property
    def leading_monomial(self) -> Monomial:
        if self.is_zero:
            raise ValueError("The zero polynomial has no leading monomial")

        return max(self._element, key=self.ring.order.key)

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coefficient(self.leading_monomial)

    @property
    def total_degree(self) -> int:
        return max((sum(m) for m in self._element), default=0)

    def degree(self, name: str) -> int:
        index = self.ring.index(name)
        return max((m[index] for m in self._element), default=0)

    @property
    def variables_used(self) -> frozenset[str]:
        names = self.ring.names
        return frozenset(names[i] for m in self._element for i, e in enumerate(m) if e)

    def is_univariate(self) -> bool:
        return len(self.variables_used) <= 1

    def monic(self) -> Polynomial:
        if self.is_zero:
            return self

        return self * (1 / self.leading_coefficient)

    def _coerce(self, other: object) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(
                    f"Polynomials live in different rings: {self.ring.names} vs {other.ring.names}"  # noqa: E501
                )

            return other

        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)

        return NotImplemented  # type: ignore[return-value]

    def _reduced(self) -> Polynomial:
        if not self.ring.extensions or not self._element:
            return self

        element = self._element

        for extension in self.ring.extensions:
            index = self.ring.index(extension.name)

            if max(m[index] for m in element) >= extension.degree:
                element = element.rem([extension.embedded(self.ring)._element])

            if not element:
                break

        if element is self._element:
            return self

        return Polynomial(self.ring, element)

    def __add__(self, other: object) -> Polynomial:
        rhs = self._coerce(other)

        if rhs is NotImplemented:
            return NotImplemented

        return Polynomial(self.ring, self._element + rhs._element)

    __radd__ = __add__

    def __sub__(self, other: object) -> Polynomial:
        rhs = self._coerce(other)

        if rhs is NotImplemented:
            return NotImplemented

        return Polynomial(self.ring, self._element - rhs._element)

    def __rsub__(self, other: object) -> Polynomial:
        lhs = self._coerce(other)

        if lhs is NotImplemented:
            return NotImplemented

        return Polynomial(self.ring, lhs._element - self._element)

    def __mul__(self, other: object) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            if not other:
                return self.ring.zero

            return Polynomial(self.ring, self._element.mul_ground(_to_ground(to_rational(other))))

        rhs = self._coerce(other)

        if rhs is NotImplemented:
            return NotImplemented

        return Polynomial(self.ring, self._element * rhs._element)._reduced()

    __rmul__ = __mul__

    def __neg__(self) -> Polynomial:
        return Polynomial(self.ring, -self._element)

    def __pow__(self, exponent: int) -> Polynomial:
        if exponent < 0:
            raise ValueError("Negative powers are not polynomials")

        result = self.ring.one
        base = self

        while exponent:
            if exponent & 1:
                result = result * base

            exponent >>= 1

            if exponent:
                base = base * base

        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_constant and self.constant_value == other

        if not isinstance(other, Polynomial):
            return NotImplemented

        return (
            self.ring.names == other.ring.names
            and self.ring.extensions == other.ring.extensions
            and dict(self._element) == dict(other._element)
        )

    def __hash__(self) -> int:
        return hash((self.ring.names, frozenset(self._element.items())))

    def __bool__(self) -> bool:
        return not self.is_zero

    def with_ring(self, ring: Ring) -> Polynomial:
        """
        Reinterpret under a ring with the same variable names (for example another order).
        """
        if ring.names != self.ring.names:
            raise RingMismatchError("with_ring needs identical variable names; use to_ring")

        return Polynomial(ring, self._element)._reduced()

    def to_ring(self, ring: Ring) -> Polynomial:
        """
        Move into `ring`, matching variables by name.

        Raises:
         - UnknownVariableError: If a variable used by this polynomial is missing from `ring`.
        """
        if ring.names == self.ring.names:
            return self.with_ring(ring)

        missing = self.variables_used - set(ring.names)

        if missing:
            raise UnknownVariableError(
                f"Variables {sorted(missing)} are not in the target ring {ring.names}"
            )

        # Unused source variables may be absent from the target; their exponents are all zero.
        target_names = set(ring.names)
        positions = [ring.index(n) if n in target_names else None for n in self.ring.names]
        terms: dict[Monomial, Fraction] = {}

        for monomial, coefficient in self._element.items():
            target = [0] * ring.arity

            for position, exponent in zip(positions, monomial):
                if position is not None:
                    target[position] += exponent

            terms[tuple(target)] = to_rational(coefficient)

        return Polynomial.from_terms(ring, terms)

    def substitute(self, assignment: Mapping[str | Variable, object]) -> Polynomial:
        return substitute(self, assignment)

    def evaluate(self, assignment: Mapping[str | Variable, object]) -> Fraction:
        """
        Substitute and require a rational constant.
        """
        return substitute(self, assignment).constant_value

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self.terms)


def poly_arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    if a.ring != b.ring:
        raise RingMismatchError("poly_arith operands must share a ring")

    if op == "add":
        return a + b

    if op == "sub":
        return a - b

    if op == "mul":
        return a * b

    raise ValueError(f"Unknown operation {op!r}")


def substitute(p: Polynomial, assignment: Mapping[str | Variable, object]) -> Polynomial:
    """
    Evaluate `p` at `assignment`. Values may be scalars or polynomials; polynomial values must
    all live in one ring, which becomes the result ring (a super-ring holding every variable of
    `p` that stays unassigned).

    Raises:
     - UnknownVariableError: If an assigned name is not a variable of `p`'s ring, or an
       unassigned variable of `p` is missing from the target ring.
    """
    values: dict[str, object] = {}

    for key, value in assignment.items():
        name = key.name if isinstance(key, Variable) else key

        if name not in p.ring.names:
            raise UnknownVariableError(f"{name} is not a variable of {p.ring.names}")

        values[name] = value

    target_rings = {v.ring for v in values.values() if isinstance(v, Polynomial)}

    if len(target_rings) > 1:
        raise RingMismatchError("Substituted polynomials must share one ring")

    target = next(iter(target_rings)) if target_rings else p.ring

    if target is not p.ring:
        missing = (p.variables_used - set(values)) - set(target.names)

        if missing:
            raise UnknownVariableError(f"Variables {sorted(missing)} have no place in the target ring")

    converted: dict[str, Polynomial] = {
        name: value if isinstance(value, Polynomial) else target.constant(value)
        for name, value in values.items()
    }
    powers: dict[tuple[str, int], Polynomial] = {}

    def power(name: str, exponent: int) -> Polynomial:
        cached = powers.get((name, exponent))

        if cached is None:
            base = converted[name] if name in converted else target.gen(name)
            cached = base**exponent
            powers[(name, exponent)] = cached

        return cached

    result = target.zero
    names = p.ring.names

    for monomial, coefficient in p.terms:
        term = target.constant(coefficient)

        for name, exponent in zip(names, monomial):
            if exponent:
                term = term * power(name, exponent)

        result = result + term

    return result


def format_monomial(ring: Ring, monomial: Monomial) -> str:
    factors = []

    for name, exponent in zip(ring.names, monomial):
        if exponent == 1:
            factors.append(name)
        elif exponent > 1:
            factors.append(f"{name}^{exponent}")

    return " ".join(factors)


def _format_coefficient(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)

    return f"{value.numerator}/{value.denominator}"


def format_term(coefficient: Fraction, monomial_text: str, first: bool) -> str:
    """
    One signed term of a sum. `monomial_text` may be empty for constants.
    """
    sign = "-" if coefficient < 0 else "+"
    magnitude = abs(coefficient)

    if not monomial_text:
        body = _format_coefficient(magnitude)
    elif magnitude == 1:
        body = monomial_text
    elif magnitude.denominator == 1:
        body = f"{magnitude.numerator} {monomial_text}"
    else:
        body = f"({_format_coefficient(magnitude)}) {monomial_text}"

    if first:
        return f"-{body}" if sign == "-" else body

    return f" {sign} {body}"


def format_polynomial(p: Polynomial) -> str:
    if p.is_zero:
        return "0"

    return "".join(
        format_term(coefficient, format_monomial(p.ring, monomial), index == 0)
        for index, (monomial, coefficient) in enumerate(p.terms)
    )


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens: list[tuple[str, str]] = []
    position = 0
    text = text.rstrip()

    while position < len(text):
        match = _TOKEN.match(text, position)

        if match is None:  # pragma: no cover - the pattern accepts any non-space
            raise PolynomialSyntaxError(f"Cannot tokenize {text[position:]!r}")

        number, name, symbol = match.groups()

        if number is not None:
            tokens.append(("int", number))
        elif name is not None:
            tokens.append(("name", name))
        else:
            tokens.append(("sym", cast(str, symbol)))

        position = match.end()

    return tokens


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.position = 0

    def peek(self) -> tuple[str, str] | None:
        return self.tokens[self.position] if self.position < len(self.tokens) else None

    def take(self) -> tuple[str, str]:
        token = self.peek()

        if token is None:
            raise PolynomialSyntaxError(f"Unexpected end of input in {self.text!r}")

        self.position += 1
        return token

    def expect(self, kind: str, value: str | None = None) -> str:
        token = self.take()

        if token[0] != kind or (value is not None and token[1] != value):
            raise PolynomialSyntaxError(f"Unexpected {token[1]!r} in {self.text!r}")

        return token[1]

    def rational(self) -> Fraction:
        numerator = int(self.expect("int"))

        if self.peek() == ("sym", "/"):
            self.take()
            denominator = int(self.expect("int"))

            if denominator == 0:
                raise PolynomialSyntaxError(f"Zero denominator in {self.text!r}")

            return Fraction(numerator, denominator)

        return Fraction(numerator)

    def term(self) -> tuple[Fraction, Monomial]:
        coefficient = Fraction(1)
        seen = False
        token = self.peek()

        if token == ("sym", "("):
            self.take()
            sign = 1

            if self.peek() in (("sym", "-"), ("sym", "+")):
                sign = -1 if self.take()[1] == "-" else 1

            coefficient = sign * self.rational()
            self.expect("sym", ")")
            seen = True
        elif token is not None and token[0] == "int":
            coefficient = self.rational()
            seen = True

        exponents = [0] * self.ring.arity

        while True:
            token = self.peek()

            if token == ("sym", "*"):
                self.take()
                token = self.peek()

            if token is None or token[0] != "name":
                break

            name = self.take()[1]

            if name not in self.ring.names:
                raise UnknownVariableError(f"{name} is not a variable of {self.ring.names}")

            exponent = 1

            if self.peek() == ("sym", "^"):
                self.take()
                exponent = int(self.expect("int"))

            exponents[self.ring.index(name)] += exponent
            seen = True

        if not seen:
            raise PolynomialSyntaxError(f"Empty term in {self.text!r}")

        return coefficient, tuple(exponents)

    def polynomial(self) -> Polynomial:
        if not self.tokens:
            raise PolynomialSyntaxError("Empty polynomial")

        terms: dict[Monomial, Fraction] = {}
        sign = 1

        if self.peek() in (("sym", "-"), ("sym", "+")):
            sign = -1 if self.take()[1] == "-" else 1

        while True:
            coefficient, monomial = self.term()
            terms[monomial] = terms.get(monomial, Fraction(0)) + sign * coefficient
            token = self.peek()

            if token is None:
                break

            if token not in (("sym", "-"), ("sym", "+")):
                raise PolynomialSyntaxError(f"Unexpected {token[1]!r} in {self.text!r}")

            sign = -1 if self.take()[1] == "-" else 1

        return Polynomial.from_terms(self.ring, terms)


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    """
    Parse `text` in the polynomial grammar into `ring`.

    Raises:
     - PolynomialSyntaxError: On malformed input.
     - UnknownVariableError: If a name is not a ring variable.
    """
    return _Parser(text, ring).polynomial()
