"""
Gröbner Basis Engine
====================

Multivariate division, Buchberger's algorithm with the Gebauer–Möller pair criteria, reduced
bases, the triviality test "the reduced basis is {1}", elimination ideals, real-root counting with
Sturm sequences, sound certificates that a system has no real solution, and a point finder used
to extract explicit solutions.

All computations run on the sympy `PolyElement` behind each `poly.Polynomial`, with leading
monomials taken in the `poly.MonomialOrder` of the ideal's ring. Every reduction step is counted
against a budget; running out raises `BudgetExhaustedError`, which callers such as
`iso.decide_iso` turn into an Undecided verdict.

Example Usage:
-------------
```python
from novikov_groebner.groebner import Ideal, buchberger, is_trivial
from novikov_groebner.poly import Ring

ring = Ring.from_names(["x", "y"], order="lex")
gb = buchberger(Ideal([ring.parse("x^2 + y^2 - 1"), ring.parse("x - y")]))
print([str(g) for g in gb.basis])  # ['x - y', 'y^2 - 1/2']
print(is_trivial(gb))              # False
```
"""  # noqa: E501

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from sympy import factorint
from sympy.polys.monomials import monomial_div, monomial_lcm, monomial_mul
from sympy.polys.rings import PolyElement

from novikov_groebner.parameter_schemas import FieldTag, OrderStyle
from novikov_groebner.poly import (
    FieldExt,
    Monomial,
    MonomialOrder,
    Polynomial,
    Ring,
    RingMismatchError,
    UnknownVariableError,
    _sympy_ring,
    to_rational,
)

logger = logging.getLogger(__name__)

DEFAULT_BUDGET: int = 200_000
"""
Default ceiling on reduction steps for one basis computation.
"""

DEFAULT_CANDIDATES: tuple[Fraction, ...] = tuple(
    Fraction(v) for v in ("0", "1", "-1", "2", "-2", "1/2", "3")
)
"""
Values tried, in order, when pinning a free coordinate of a solution.
"""


class BudgetExhaustedError(Exception):
    def __init__(self, message: str, partial: GroebnerBasis | None = None, steps: int = 0):
        super().__init__(message)
        self.partial = partial
        self.steps = steps


class NonReducedBasisError(Exception):
    pass


class _OutOfBudget(Exception):
    pass


class _Clock:
    __slots__ = ("budget", "steps")

    def __init__(self, budget: int):
        self.budget = budget
        self.steps = 0

    def tick(self) -> None:
        self.steps += 1

        if self.steps > self.budget:
            raise _OutOfBudget


class Ideal:
    """
    Ideal generated by nonzero polynomials of one ring. Minimal polynomials of the ring's
    extensions are adjoined implicitly (see `all_generators`).
    """

    __slots__ = ("generators", "ring")

    generators: tuple[Polynomial, ...]
    ring: Ring

    def __init__(self, generators: Iterable[Polynomial], ring: Ring | None = None):
        polys = [g for g in generators if not g.is_zero]

        if ring is None:
            if not polys:
                raise ValueError("An ideal needs a ring or at least one nonzero generator")

            ring = polys[0].ring

        for g in polys:
            if g.ring.names != ring.names:
                raise RingMismatchError("All generators of an ideal must share one ring")

        self.ring = ring
        self.generators = tuple(g.with_ring(ring) for g in polys)

        if not self.generators and not ring.extensions:
            raise ValueError("An ideal needs at least one nonzero generator")

    @property
    def all_generators(self) -> tuple[Polynomial, ...]:
        extra = tuple(e.embedded(self.ring) for e in self.ring.extensions)
        return self.generators + tuple(m for m in extra if m not in self.generators)

    def with_order(self, style: OrderStyle, split: int = 0) -> Ideal:
        ring = self.ring.with_order(style, split)
        return Ideal(self.generators, ring)

    def to_ring(self, ring: Ring) -> Ideal:
        return Ideal((g.to_ring(ring) for g in self.generators), ring)

    def __len__(self) -> int:
        return len(self.generators)

    def __repr__(self) -> str:
        return f"Ideal({[str(g) for g in self.generators]})"


@dataclass(frozen=True)
class GroebnerBasis:
    basis: tuple[Polynomial, ...]
    """
    Monic elements sorted by decreasing leading monomial.
    """

    ring: Ring
    steps_used: int
    budget: int
    reduced: bool = True

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    def __iter__(self):
        return iter(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def contains(self, p: Polynomial) -> bool:
        """
        Ideal membership: `p` reduces to zero.
        """
        return reduce(p.with_ring(self.ring), self.basis)[0].is_zero

    def normal_form(self, p: Polynomial) -> Polynomial:
        return reduce(p.with_ring(self.ring), self.basis)[0]


def _leading(p: PolyElement, key) -> Monomial:
    return max(p, key=key)


def _normal_form(f: PolyElement, basis: Sequence[PolyElement], leads: Sequence[Monomial], key, clock: _Clock) -> PolyElement:  # noqa: E501
    ring = f.ring
    zero = ring.domain.zero
    f = f.copy()
    remainder = ring.zero

    while f:
        m = max(f, key=key)
        c = f[m]

        for g, lead in zip(basis, leads):
            q = monomial_div(m, lead)

            if q is None:
                continue

            for mg, cg in g.items():
                m1 = monomial_mul(mg, q)
                value = f.get(m1, zero) - c * cg

                if value:
                    f[m1] = value
                else:
                    del f[m1]

            clock.tick()
            break
        else:
            remainder[m] = c
            del f[m]

    return remainder


def _monic(p: PolyElement, key) -> PolyElement:
    lead = p[_leading(p, key)]
    return p if lead == 1 else p.quo_ground(lead)


def _spoly(p1: PolyElement, p2: PolyElement, l1: Monomial, l2: Monomial) -> PolyElement:
    lcm = monomial_lcm(l1, l2)
    return p1.mul_monom(monomial_div(lcm, l1)) - p2.mul_monom(monomial_div(lcm, l2))


def reduce(p: Polynomial, polys: Sequence[Polynomial]) -> tuple[Polynomial, list[Polynomial]]:
    """
    Multivariate division of `p` by `polys` in `p`'s ring order.

    Returns:
     - The normal form (no term divisible by a leading monomial of `polys`) and the quotients,
       with `p = sum(q_i * g_i) + normal form` exactly.
    """
    ring = p.ring
    key = ring.order.key
    divisors = [g for g in polys if not g.is_zero]

    for g in divisors:
        if g.ring.names != ring.names:
            raise RingMismatchError("reduce needs polynomials of one ring")

    elements = [g.element for g in divisors]
    leads = [_leading(g, key) for g in elements]
    lead_coefficients = [g[lead] for g, lead in zip(elements, leads)]
    sympy_ring = ring.sympy_ring
    quotients = [sympy_ring.zero for _ in divisors]
    f = p.element.copy()
    remainder = sympy_ring.zero
    zero = sympy_ring.domain.zero

    while f:
        m = max(f, key=key)
        c = f[m]

        for index, (g, lead) in enumerate(zip(elements, leads)):
            q = monomial_div(m, lead)

            if q is None:
                continue

            factor = c / lead_coefficients[index]
            quotients[index] = quotients[index] + sympy_ring.term_new(q, factor)

            for mg, cg in g.items():
                m1 = monomial_mul(mg, q)
                value = f.get(m1, zero) - factor * cg

                if value:
                    f[m1] = value
                else:
                    del f[m1]

            break
        else:
            remainder[m] = c
            del f[m]

    result = [Polynomial(ring, q) for q in quotients]
    return Polynomial(ring, remainder), result


def _interreduce_input(polys: list[PolyElement], key, clock: _Clock) -> list[PolyElement]:
    current = polys

    while True:
        result: list[PolyElement] = []

        for p in current:
            leads = [_leading(r, key) for r in result]
            reduced = _normal_form(p, result, leads, key, clock)

            if reduced:
                result.append(_monic(reduced, key))

        if result == current:
            return result

        current = result


def _buchberger_elements(polys: list[PolyElement], key, clock: _Clock, partial: list[PolyElement]) -> list[PolyElement]:  # noqa: E501
    """
    Core of the improved Buchberger algorithm (Becker–Weispfenning GROEBNERNEWS2 with the
    Gebauer–Möller update). `partial` is kept up to date with the current basis so a caller can
    report it when the budget runs out.
    """
    if not polys:
        return []

    one_monomial = (0,) * polys[0].ring.ngens
    f = _interreduce_input([_monic(p, key) for p in polys], key, clock)

    if any(_leading(p, key) == one_monomial for p in f):
        return [polys[0].ring.one]

    leads: list[Monomial] = [_leading(p, key) for p in f]
    basis: set[int] = set()
    pairs: set[tuple[int, int]] = set()

    def update(ih: int) -> None:
        nonlocal basis, pairs
        mh = leads[ih]
        candidates = sorted(basis)
        kept: list[int] = []

        while candidates:
            ig = candidates.pop()
            lcm_hg = monomial_lcm(mh, leads[ig])

            def lcm_divides(ip: int) -> bool:
                return monomial_div(lcm_hg, monomial_lcm(mh, leads[ip])) is not None

            if monomial_mul(mh, leads[ig]) == lcm_hg or (
                not any(lcm_divides(ip) for ip in candidates)
                and not any(lcm_divides(ip) for ip in kept)
            ):
                kept.append(ig)

        new_pairs = {
            (ih, ig) for ig in kept if monomial_mul(mh, leads[ig]) != monomial_lcm(mh, leads[ig])
        }
        old_pairs = set()

        for ig1, ig2 in pairs:
            lcm12 = monomial_lcm(leads[ig1], leads[ig2])

            if (
                monomial_div(lcm12, mh) is None
                or monomial_lcm(leads[ig1], mh) == lcm12
                or monomial_lcm(leads[ig2], mh) == lcm12
            ):
                old_pairs.add((ig1, ig2))

        pairs = old_pairs | new_pairs
        basis = {ig for ig in basis if monomial_div(leads[ig], mh) is None}
        basis.add(ih)
        partial[:] = [f[i] for i in sorted(basis)]

    for ih in sorted(range(len(f)), key=lambda i: key(leads[i])):
        update(ih)

    while pairs:
        ig1, ig2 = min(
            pairs,
            key=lambda pair: (
                sum(monomial_lcm(leads[pair[0]], leads[pair[1]])),
                key(monomial_lcm(leads[pair[0]], leads[pair[1]])),
                pair,
            ),
        )
        pairs.discard((ig1, ig2))
        s = _spoly(f[ig1], f[ig2], leads[ig1], leads[ig2])
        divisors = sorted(basis, key=lambda i: key(leads[i]))
        h = _normal_form(s, [f[i] for i in divisors], [leads[i] for i in divisors], key, clock)

        if not h:
            continue

        h = _monic(h, key)
        lead = _leading(h, key)

        if lead == one_monomial:
            return [h.ring.one]

        f.append(h)
        leads.append(lead)
        update(len(f) - 1)

    reduced: list[PolyElement] = []
    members = sorted(basis)

    for ig in members:
        others = [i for i in members if i != ig]
        nf = _normal_form(f[ig], [f[i] for i in others], [leads[i] for i in others], key, clock)

        if nf:
            reduced.append(_monic(nf, key))

    reduced.sort(key=lambda p: key(_leading(p, key)), reverse=True)
    return reduced


def buchberger(ideal: Ideal, budget: int | None = None) -> GroebnerBasis:
    """
    Reduced monic Gröbner basis of `ideal` in its ring's monomial order.

    Pairs are selected by the normal strategy (smallest total degree of the lcm, ties broken by
    the order on the lcm and then by index) after Buchberger's coprime and chain criteria. The
    result does not depend on the order of the generators.

    Raises:
     - BudgetExhaustedError: If more than `budget` reduction steps are needed. Its `partial`
       attribute holds the unfinished basis tagged `reduced=False`.
    """
    budget = DEFAULT_BUDGET if budget is None else budget
    ring = ideal.ring
    key = ring.order.key
    clock = _Clock(budget)
    partial: list[PolyElement] = []

    try:
        elements = _buchberger_elements(
            [g.element for g in ideal.all_generators], key, clock, partial
        )
    except _OutOfBudget:
        logger.warning("Groebner basis budget of %d steps exhausted", budget)
        unfinished = GroebnerBasis(
            tuple(Polynomial(ring, p) for p in partial), ring, clock.steps, budget, reduced=False
        )
        raise BudgetExhaustedError(
            f"Groebner basis computation exceeded {budget} reduction steps",
            unfinished,
            clock.steps,
        ) from None

    logger.debug("Groebner basis with %d elements in %d steps", len(elements), clock.steps)
    return GroebnerBasis(tuple(Polynomial(ring, p) for p in elements), ring, clock.steps, budget)


def groebner_basis(polys: Iterable[Polynomial], ring: Ring, budget: int | None = None) -> GroebnerBasis:  # noqa: E501
    """
    Convenience wrapper: basis of the ideal generated by `polys` moved into `ring`.
    """
    return buchberger(Ideal((p.to_ring(ring) for p in polys), ring), budget)


def is_trivial(gb: GroebnerBasis) -> bool:
    """
    True iff the reduced basis is {1}, i.e. the system has no solution over any extension field.

    Raises:
     - NonReducedBasisError: If `gb` is a partial basis.
    """
    if not gb.reduced:
        raise NonReducedBasisError("Triviality is only decided on a reduced basis")

    return len(gb.basis) == 1 and gb.basis[0].is_constant


def satisfies_buchberger_criterion(gb: GroebnerBasis) -> bool:
    """
    Every S-polynomial of a pair of basis elements reduces to zero.
    """
    key = gb.ring.order.key
    elements = [g.element for g in gb.basis]
    leads = [_leading(g, key) for g in elements]
    clock = _Clock(10**12)

    for i in range(len(elements)):
        for j in range(i + 1, len(elements)):
            s = _spoly(elements[i], elements[j], leads[i], leads[j])

            if _normal_form(s, elements, leads, key, clock):
                return False

    return True


def elimination_ring(ring: Ring, keep: Iterable[str]) -> Ring:
    """
    `ring` reordered for eliminating everything outside `keep`: discarded variables first under
    lex, then the kept variables (extension generators last) under graded reverse lex.
    """
    kept = set(keep)
    missing = kept - set(ring.names)

    if missing:
        raise UnknownVariableError(f"Cannot keep unknown variables {sorted(missing)}")

    ext_names = {e.name for e in ring.extensions}
    discarded = [n for n in ring.names if n not in kept and n not in ext_names]
    retained = [n for n in ring.names if n in kept and n not in ext_names]
    tail = [n for n in ring.names if n in ext_names]
    return ring.reordered(discarded + retained + tail, "elim", len(discarded))


def eliminate(ideal: Ideal, keep: Iterable[str], budget: int | None = None) -> list[Polynomial]:
    """
    Generators of the elimination ideal `ideal ∩ Q[keep]`, returned in the ideal's ring.

    Extension generators are never eliminated; members may involve them.
    """
    keep = set(keep)
    ring = elimination_ring(ideal.ring, keep)
    gb = buchberger(ideal.to_ring(ring), budget)
    allowed = keep | {e.name for e in ring.extensions}
    minimal = {e.embedded(ring) for e in ring.extensions}

    return [
        g.to_ring(ideal.ring)
        for g in gb.basis
        if g.variables_used <= allowed and g not in minimal
    ]


def _univariate_element(p: Polynomial) -> PolyElement:
    (name,) = p.variables_used
    index = p.ring.index(name)
    ring = _sympy_ring((name,))
    return ring.from_dict({(m[index],): c for m, c in p.element.items()})


def _sign_at_infinity(element: PolyElement, negative: bool) -> int:
    if not element:
        return 0

    degree = element.degree()
    lead = element.LC
    sign = 1 if lead > 0 else -1

    if negative and degree % 2:
        sign = -sign

    return sign


def _sign_changes(signs: Iterable[int]) -> int:
    nonzero = [s for s in signs if s]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)


def count_real_roots(p: Polynomial) -> int:
    """
    Number of distinct real roots of a univariate polynomial over ℚ, by Sturm's theorem.

    Raises:
     - ValueError: If `p` is zero or involves more than one variable.
    """
    if p.is_zero:
        raise ValueError("The zero polynomial vanishes everywhere")

    if p.is_constant:
        return 0

    if not p.is_univariate():
        raise ValueError(f"{p} is not univariate")

    sequence = _univariate_element(p).sturm()
    at_minus = _sign_changes(_sign_at_infinity(s, True) for s in sequence)
    at_plus = _sign_changes(_sign_at_infinity(s, False) for s in sequence)
    return at_minus - at_plus


@dataclass(frozen=True)
class RealRootCertificate:
    """
    A univariate member of the ideal with no real roots.
    """

    witness: Polynomial
    variable: str
    real_root_count: int = 0

    def check(self) -> bool:
        return count_real_roots(self.witness) == self.real_root_count == 0


@dataclass(frozen=True)
class PositiveSquaresCertificate:
    """
    A member of the ideal whose terms are even monomials (squares) with coefficients of one sign
    and which has a nonzero constant term, so it cannot vanish at a real point.
    """

    member: Polynomial

    def check(self) -> bool:
        return _square_terms(self.member) == "definite"


@dataclass(frozen=True)
class ForcedZeroCertificate:
    """
    A member of the ideal that is a one-signed sum of even powers of single variables. Real
    solutions force those variables to vanish; the enlarged system has no real solution, shown
    by a trivial basis (`follow_up` None) or by a further certificate.
    """

    member: Polynomial
    forced: tuple[str, ...]
    follow_up: RealCertificate | None = None

    def check(self) -> bool:
        return _square_terms(self.member) == "forcing" and (
            self.follow_up is None or self.follow_up.check()
        )


RealCertificate = Union[RealRootCertificate, PositiveSquaresCertificate, ForcedZeroCertificate]


def describe_certificate(certificate: RealCertificate) -> str:
    if isinstance(certificate, RealRootCertificate):
        return (
            f"univariate member {certificate.witness} in {certificate.variable} "
            f"has {certificate.real_root_count} real roots"
        )

    if isinstance(certificate, PositiveSquaresCertificate):
        return f"member {certificate.member} is a definite sum of squares"

    text = f"member {certificate.member} forces {', '.join(certificate.forced)} = 0"

    if certificate.follow_up is None:
        return text + "; the enlarged basis is {1}"

    return text + "; then " + describe_certificate(certificate.follow_up)


def _square_terms(p: Polynomial) -> str | None:
    """
    Classify `p` as "definite" (one-signed even monomials with a constant term), "forcing"
    (one-signed even powers of single variables, no constant) or None.
    """
    if p.is_zero or p.ring.extensions and p.variables_used & {e.name for e in p.ring.extensions}:
        return None

    signs = {c > 0 for _, c in p.terms}

    if len(signs) != 1:
        return None

    has_constant = False
    single = True

    for monomial, _ in p.terms:
        if any(e % 2 for e in monomial):
            return None

        support = sum(1 for e in monomial if e)

        if support == 0:
            has_constant = True
        elif support > 1:
            single = False

    if has_constant:
        return "definite" if len(p.terms) > 1 else None

    return "forcing" if single else None


def real_nonsolvability(gb: GroebnerBasis, budget: int | None = None, depth: int = 2) -> RealCertificate | None:  # noqa: E501
    """
    Look for a sound proof that the system of `gb` has no real solution.

    Scans the basis for a univariate member over ℚ without real roots (Sturm count 0), then for a
    definite sum of even monomials, then for a member forcing some variables to vanish, in which
    case the enlarged system is re-examined. A None result decides nothing.
    """
    if not gb.reduced:
        raise NonReducedBasisError("Real certificates need a reduced basis")

    ext_names = {e.name for e in gb.ring.extensions}

    for g in gb.basis:
        used = g.variables_used

        if len(used) == 1 and not used & ext_names and count_real_roots(g) == 0:
            return RealRootCertificate(g, next(iter(used)), 0)

    for g in gb.basis:
        if _square_terms(g) == "definite":
            return PositiveSquaresCertificate(g)

    if depth <= 0:
        return None

    for g in gb.basis:
        if _square_terms(g) != "forcing":
            continue

        forced = tuple(sorted(g.variables_used, key=gb.ring.index))
        enlarged = Ideal([*gb.basis, *(gb.ring.gen(n) for n in forced)], gb.ring)

        try:
            follow = buchberger(enlarged, budget)
        except BudgetExhaustedError:
            continue

        if is_trivial(follow):
            return ForcedZeroCertificate(g, forced)

        nested = real_nonsolvability(follow, budget, depth - 1)

        if nested is not None:
            return ForcedZeroCertificate(g, forced, nested)

    return None


@dataclass(frozen=True)
class ExtensionNeeded:
    """
    The search needs `sqrt(square)`, which the working field does not contain.
    """

    square: Fraction


@dataclass
class _Search:
    ring: Ring
    field: FieldTag
    candidates: Mapping[str, Sequence[Fraction]]
    budget: int
    node_limit: int
    nodes: int = 0
    request: ExtensionNeeded | None = None


def _consistent(polys: Sequence[Polynomial], ring: Ring, budget: int) -> GroebnerBasis | None:
    live = [p for p in polys if not p.is_zero]

    if not live and not ring.extensions:
        return GroebnerBasis((), ring, 0, budget)

    gb = buchberger(Ideal(live, ring), budget)
    return None if is_trivial(gb) else gb


def _quadratic_roots(a: Fraction, b: Fraction, c: Fraction, search: _Search) -> list[Polynomial]:
    ring = search.ring
    discriminant = b * b - 4 * a * c
    root = _rational_sqrt(discriminant)

    if root is not None:
        values = sorted({(-b + root) / (2 * a), (-b - root) / (2 * a)})
        return [ring.constant(v) for v in values]

    if search.field == "R" and discriminant < 0:
        return []

    for extension in ring.extensions:
        square = extension.square

        if square is None or (search.field == "R" and square < 0):
            continue

        scale = _rational_sqrt(discriminant / square)

        if scale is not None:
            t = ring.gen(extension.name)
            return [
                (t * (sign * scale) - b) * (1 / (2 * a)) for sign in (1, -1)
            ]

    if search.request is None and not ring.extensions:
        search.request = ExtensionNeeded(discriminant)

    return []


def _rational_sqrt(value: Fraction) -> Fraction | None:
    if value < 0:
        return None

    from math import isqrt

    n, d = value.numerator, value.denominator
    rn, rd = isqrt(n), isqrt(d)
    return Fraction(rn, rd) if rn * rn == n and rd * rd == d else None


def _roots_of(eliminant: Polynomial, name: str, search: _Search) -> list[Polynomial]:
    ring = search.ring
    ext_names = {e.name for e in ring.extensions}

    if eliminant.variables_used & ext_names:
        if eliminant.degree(name) != 1:
            return []

        # a(t) v + b(t) = 0
        index = ring.index(name)
        a = ring.zero
        b = ring.zero

        for monomial, coefficient in eliminant.terms:
            rest = list(monomial)
            rest[index] = 0
            term = Polynomial.from_terms(ring, {tuple(rest): coefficient})

            if monomial[index]:
                a = a + term
            else:
                b = b + term

        extension = next(e for e in ring.extensions if e.name in eliminant.variables_used)
        return [-b * extension.inverse(a)]

    univariate = _univariate_element(eliminant)
    _, factors = univariate.factor_list()
    roots: list[Polynomial] = []

    for factor, _ in factors:
        degree = factor.degree()
        coefficients = [to_rational(factor.get((k,), 0)) for k in range(degree + 1)]

        if degree == 1:
            roots.append(ring.constant(-coefficients[0] / coefficients[1]))
        elif degree == 2:
            roots.extend(_quadratic_roots(coefficients[2], coefficients[1], coefficients[0], search))

    return roots


def _pinned(polys: Sequence[Polynomial], name: str, value: Polynomial) -> list[Polynomial]:
    return [q for q in (p.substitute({name: value}) for p in polys) if not q.is_zero]


def _search(polys: list[Polynomial], pending: list[str], search: _Search) -> dict[str, Polynomial] | None:  # noqa: E501
    if not pending:
        return {}

    name, rest = pending[0], pending[1:]
    search.nodes += 1

    if search.nodes > search.node_limit:
        return None

    tried: list[Polynomial] = []

    for value in search.candidates.get(name, DEFAULT_CANDIDATES):
        constant = search.ring.constant(value)
        tried.append(constant)
        attempt = _try_value(polys, name, constant, rest, search)

        if attempt is not None:
            return attempt

    live = [p for p in polys if not p.is_zero]

    if not live:
        return None

    elimination = eliminate(Ideal(live, search.ring), {name}, search.budget)
    univariate = [g for g in elimination if name in g.variables_used]

    if not univariate:
        return None

    eliminant = min(univariate, key=lambda g: (g.degree(name), len(g.terms)))

    for root in _roots_of(eliminant, name, search):
        if root in tried:
            continue

        attempt = _try_value(polys, name, root, rest, search)

        if attempt is not None:
            return attempt

    return None


def _try_value(polys: list[Polynomial], name: str, value: Polynomial, rest: list[str], search: _Search) -> dict[str, Polynomial] | None:  # noqa: E501
    pinned = _pinned(polys, name, value)
    gb = _consistent(pinned, search.ring, search.budget)

    if gb is None:
        return None

    found = _search(list(gb.basis), rest, search)

    if found is None:
        return None

    found[name] = value
    return found


def find_point(
    polys: Sequence[Polynomial],
    variables: Sequence[str],
    *,
    field: FieldTag = "C",
    candidates: Mapping[str, Sequence[Fraction]] | None = None,
    budget: int | None = None,
    node_limit: int = 400,
) -> dict[str, Polynomial] | ExtensionNeeded | None:
    """
    Search a point of the variety of `polys` for the listed `variables`.

    Variables are pinned one at a time (in the given order) to candidate values, keeping a pin
    whenever the reduced basis stays non-trivial. When every candidate fails, the roots of the
    univariate elimination polynomial are tried: rational roots, and quadratic roots through a
    declared quadratic extension. Over ℝ only real values are used and failed branches are
    abandoned in favour of the next candidate.

    Returns:
     - A mapping from variable names to values (constants of the ring, possibly involving an
       extension generator), `ExtensionNeeded` when a square root outside the field is the only
       way forward, or None when the search gives up.

    Raises:
     - BudgetExhaustedError: If a basis computation exceeds `budget`.
    """
    if not polys:
        raise ValueError("find_point needs at least one polynomial")

    ring = polys[0].ring
    budget = DEFAULT_BUDGET if budget is None else budget
    search = _Search(ring, field, candidates or {}, budget, node_limit)
    start = _consistent(list(polys), ring, budget)

    if start is None:
        return None

    found = _search(list(start.basis), list(variables), search)

    if found is not None:
        return found

    return search.request


def radicand_extension(square: Fraction, name: str = "r") -> FieldExt:
    """
    Quadratic extension containing `sqrt(square)`, generated by the root of a square-free integer.
    The generator is called `i` when that integer is -1.
    """
    product = square.numerator * square.denominator
    radicand = -1 if product < 0 else 1

    for prime, exponent in factorint(abs(product)).items():
        if exponent % 2:
            radicand *= prime

    if radicand == 1:
        raise ValueError(f"{square} is already a rational square")

    return FieldExt.quadratic("i" if radicand == -1 else name, radicand)

