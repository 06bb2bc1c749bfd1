"""
Classification Catalog
======================

The classification data shipped with `novikov_groebner`, in machine-readable form, and the
harness that certifies it.

The manifest (`novikov_groebner/data/manifest.json`, schema in `novikov_groebner.json_schemas`)
lists:
 - the Lie algebras `r2`, `g1 ... g5` (with the one-parameter family `g2` in `alpha`), `h1`, `h2`
   and, implicitly, the abelian algebra of every dimension;
 - every Novikov algebra of dimension 3 over ℝ and of dimension 4 over ℂ with nilpotent Lie
   algebra `h1` or `h2`, transcribed with its printed basis;
 - the nilpotent commutative associative algebras (CAAs) of dimension at most 4 and the
   30 CAAs of dimension 4 over ℂ;
 - the isomorphism claims made in remarks: explicit witnesses, non-isomorphisms, parameter
   relations and claims that hold over ℂ but fail over ℝ.

CAAs are assembled from blocks: a CAA is a direct sum of unital extensions `~N` of nilpotent
algebras `N`, over ℝ also of copies of ℂ seen as a 2-dimensional real algebra (block `C`), and of
one nilpotent algebra. Names list the blocks in a canonical order, e.g. `2~A_0+~A_1` or
`C+A_1`.

Example Usage:
-------------
```python
from novikov_groebner.catalog import build_caa_list, load_catalog, verify_catalog

catalog = load_catalog()
print(catalog.entry("N^{h1}_17").table)
print(len(build_caa_list(3, "R")))    # 15
report = verify_catalog("examples")
print(report.ok)
```
"""  # noqa: E501

from __future__ import annotations

import functools
import itertools
import json
import logging
import re
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from novikov_groebner import linalg
from novikov_groebner.algebra import (
    DimensionMismatchError,
    JacobiViolationError,
    LieTable,
    StructureConstants,
    SymbolicParameterError,
    algebra_invariants,
    associated_lie,
    check_novikov,
    identity_element,
    is_commutative_associative,
)
from novikov_groebner.formats import AlgebraFormatError, explicit_map
from novikov_groebner.groebner import DEFAULT_BUDGET, BudgetExhaustedError, Ideal, buchberger
from novikov_groebner.iso import (
    Isomorphic,
    NotIsomorphic,
    Undecided,
    Verdict,
    decide_iso,
    heisenberg_automorphisms,
    relate_families,
    verify_witness,
)
from novikov_groebner.json_schemas import (
    AlgebraRecordJSON,
    CatalogReportJSON,
    ClaimRecordJSON,
    ClaimResultJSON,
    LieRecordJSON,
    ManifestJSON,
)
from novikov_groebner.parameter_schemas import (
    CatalogScope,
    ClaimKind,
    ClaimStatus,
    FieldTag,
    VerifyOptions,
)
from novikov_groebner.poly import (
    FieldExt,
    Polynomial,
    PolynomialSyntaxError,
    Ring,
    RingMismatchError,
    UnknownVariableError,
    Variable,
    merge_rings,
    to_rational,
)

logger = logging.getLogger(__name__)

MANIFEST_VERSION = 1

_VARIABLE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_PRODUCT = re.compile(r"^\s*e(\d+)\s+e(\d+)\s*=\s*(.+?)\s*$")
_BLOCK = re.compile(r"^A_(?:(\d+)|\{(\d+),(\d+)\})$")
_SUMMAND = re.compile(r"^(\d*)(~?)(C|A_(?:\d+|\{\d+,\d+\}))$")

_CHECK_ERRORS = (
    AlgebraFormatError,
    DimensionMismatchError,
    JacobiViolationError,
    SymbolicParameterError,
    PolynomialSyntaxError,
    RingMismatchError,
    UnknownVariableError,
    linalg.SingularMatrixError,
    ValueError,
    ZeroDivisionError,
)


class IdentityExistsError(Exception):
    pass


class UnsupportedDimensionError(Exception):
    pass


class ManifestError(Exception):
    pass


class UnknownEntryError(Exception):
    pass


def entry_key(name: str) -> str:
    """
    ASCII key of a catalog name: `N^{h1}_26` -> `N_h1_26`, `N^{g2^(-2/9)}_5` -> `N_g2_m2_9_5`.
    """
    text = name.replace("~", "u").replace("+", "_p_").replace("-", "m")
    return re.sub(r"[^A-Za-z0-9]+", "_", text).strip("_")


def _free_variables(texts: Iterable[str], exclude: Iterable[str] = ()) -> list[str]:
    skip = set(exclude)
    found: list[str] = []

    for text in texts:
        for name in _VARIABLE.findall(text):
            if name not in skip and name not in found:
                found.append(name)

    return found


def _mirrored(rules: Sequence[str]) -> list[str]:
    result = list(rules)

    for rule in rules:
        match = _PRODUCT.match(rule)

        if match is None:
            raise ManifestError(f"Not a product line: {rule!r}")

        i, j, rhs = match.groups()

        if i != j:
            result.append(f"e{j} e{i} = {rhs}")

    return result


def _specialize(
    A: StructureConstants,
    values: Mapping[str, Polynomial],
    ring: Ring,
    name: str | None = None,
) -> StructureConstants:
    """
    Substitute polynomial values of `ring` for parameters of `A`; the result lives in `ring`,
    which must hold every parameter of `A` left unassigned.
    """
    big = merge_rings(A.ring, ring)
    converted = {k: v.to_ring(ring) for k, v in values.items()}

    def move(entry: Polynomial) -> Polynomial:
        lifted = entry.to_ring(big)
        return lifted.substitute(converted) if converted else lifted.to_ring(ring)

    table = tuple(
        tuple(tuple(move(e) for e in vector) for vector in row) for row in A.table
    )
    kind = LieTable if isinstance(A, LieTable) else StructureConstants
    return kind(A.dim, table, A.field_tag, ring, name or A.name)


def same_table(A: StructureConstants, B: StructureConstants) -> bool:
    """
    Entry-for-entry equality of two tables, whatever their coefficient rings.
    """
    if A.dim != B.dim:
        return False

    ring = merge_rings(A.ring, B.ring)
    return all(
        a.to_ring(ring) == b.to_ring(ring)
        for row_a, row_b in zip(A.table, B.table)
        for u, v in zip(row_a, row_b)
        for a, b in zip(u, v)
    )


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    lie_name: str
    field_tag: FieldTag
    table: StructureConstants
    group: CatalogScope
    source: str
    """
    Caption of the list the algebra is taken from.
    """

    lie_values: Mapping[str, str] = field(default_factory=dict)
    exclude: tuple[Mapping[str, Fraction], ...] = ()
    spot_check: bool = True
    spot_values: Mapping[str, Fraction] = field(default_factory=dict)
    nilpotent: bool = False
    real_only: bool = False
    canonical: str | None = None
    note: str | None = None
    remarks: tuple[str, ...] = ()
    """
    Ids of the claims involving this entry.
    """

    @property
    def key(self) -> str:
        return entry_key(self.name)

    @property
    def dim(self) -> int:
        return self.table.dim

    @property
    def params(self) -> tuple[str, ...]:
        return self.table.params

    def is_excluded(self, values: Mapping[str, object]) -> bool:
        assignment = {k: to_rational(v) for k, v in values.items()}
        return any(
            all(assignment.get(k) == v for k, v in excluded.items()) for excluded in self.exclude
        )


@dataclass(frozen=True)
class ClaimParty:
    name: str
    values: Mapping[str, str] = field(default_factory=dict)
    """
    Parameter values as polynomial texts in the claim's sample variables and extension.
    """

    def __str__(self) -> str:
        if not self.values:
            return self.name

        return f"{self.name}({', '.join(f'{k}={v}' for k, v in self.values.items())})"


@dataclass(frozen=True)
class IsoClaim:
    id: str
    kind: ClaimKind
    source: ClaimParty
    target: ClaimParty
    group: CatalogScope
    field_tag: FieldTag | None = None
    samples: Mapping[str, tuple[str, ...]] = field(default_factory=dict)
    extension: FieldExt | None = None
    map_lines: tuple[str, ...] = ()
    relation: tuple[str, ...] = ()
    template: str | None = None
    iso_fields: tuple[FieldTag, ...] = ()
    non_iso_fields: tuple[FieldTag, ...] = ()
    note: str | None = None

    def points(self) -> list[dict[str, Fraction]]:
        """
        Every combination of the sample values, or a single empty point.
        """
        names = sorted(self.samples)
        grids = [[to_rational(v) for v in self.samples[n]] for n in names]
        return [dict(zip(names, combo)) for combo in itertools.product(*grids)]


@dataclass(frozen=True)
class Catalog:
    version: int
    lie_algebras: Mapping[str, LieTable]
    entries: tuple[CatalogEntry, ...]
    claims: tuple[IsoClaim, ...]
    default_samples: tuple[str, ...]

    def entry(self, name: str) -> CatalogEntry:
        """
        Look up an entry by its name (`N^{h1}_26`) or ASCII key (`N_h1_26`).

        Raises:
         - UnknownEntryError: If no entry matches.
        """
        for entry in self.entries:
            if name in (entry.name, entry.key):
                return entry

        raise UnknownEntryError(f"No catalog entry named {name!r}")

    def has_entry(self, name: str) -> bool:
        return any(name in (e.name, e.key) for e in self.entries)

    def is_lie_name(self, name: str) -> bool:
        base = name.partition(":")[0]
        return base == "abelian" or base in self.lie_algebras

    def lie(self, name: str, dim: int | None = None) -> LieTable:
        """
        A catalog Lie algebra: `g1`, `g2` (symbolic in `alpha`), `g2:alpha=1/2`, `h1`, `abelian:3`,
        or `abelian` together with `dim`.

        Raises:
         - UnknownEntryError: If the name is not a catalog Lie algebra.
        """
        base, _, spec = name.partition(":")

        if base == "abelian":
            size = int(spec) if spec.isdigit() else dim

            if size is None:
                raise UnknownEntryError("The abelian Lie algebra needs a dimension, e.g. abelian:3")

            return LieTable.abelian(size)

        if base not in self.lie_algebras:
            raise UnknownEntryError(f"No catalog Lie algebra named {base!r}")

        table = self.lie_algebras[base]

        if not spec:
            return table

        values = {}

        for part in spec.split(","):
            key, _, value = part.partition("=")
            values[key.strip()] = to_rational(value)

        return table.substitute(values, name=name)

    def entries_for(self, scope: CatalogScope) -> list[CatalogEntry]:
        return [e for e in self.entries if scope == "all" or e.group == scope]

    def claims_for(self, scope: CatalogScope) -> list[IsoClaim]:
        return [c for c in self.claims if scope == "all" or c.group == scope]

    def nilpotent_blocks(self, field_tag: FieldTag) -> dict[str, StructureConstants]:
        """
        Nilpotent CAAs usable as blocks over `field_tag`, by canonical name.
        """
        blocks = {}

        for entry in self.entries:
            if not entry.nilpotent:
                continue

            if field_tag == "C" and entry.real_only:
                continue

            if field_tag == "R" and entry.field_tag == "C":
                continue

            name = entry.canonical or entry.name
            blocks[name] = entry.table.with_field(field_tag).renamed(name)

        return blocks

    def entry_lie(self, entry: CatalogEntry) -> LieTable:
        """
        The declared Lie algebra of `entry`, with its parameters expressed in the entry's ring.
        """
        base = self.lie(entry.lie_name, entry.dim)
        ring = merge_rings(entry.table.ring, base.ring.without_variables(entry.lie_values))
        values = {k: ring.parse(v) for k, v in entry.lie_values.items()}
        return _specialize(base, values, ring)  # type: ignore[return-value]

    def _base(self, name: str, field_tag: FieldTag | None) -> StructureConstants:
        if self.has_entry(name):
            table = self.entry(name).table
        elif self.is_lie_name(name):
            table = self.lie(name)
        else:
            table = caa_from_name(name, field_tag or "C", self).assembled

        return table.with_field(field_tag) if field_tag else table

    def resolve(
        self,
        name: str,
        values: Mapping[str, str] | None = None,
        *,
        point: Mapping[str, object] | None = None,
        extension: FieldExt | None = None,
        field_tag: FieldTag | None = None,
    ) -> StructureConstants:
        """
        An entry, Lie algebra or CAA name with parameter values given as polynomial texts (which
        may use new variables and the generator of `extension`), then evaluated at `point`.

        Raises:
         - UnknownEntryError: If the name resolves to nothing.
         - SymbolicParameterError: If a value is given for an unknown parameter.
        """
        base = self._base(name, field_tag)
        texts = dict(values or {})
        unknown = set(texts) - set(base.params)

        if unknown:
            raise SymbolicParameterError(f"{name} has no parameters {sorted(unknown)}")

        skip = [extension.name] if extension is not None else []
        ring = base.ring.without_variables(texts).with_variables(
            Variable(n) for n in _free_variables(texts.values(), skip)
        )

        if extension is not None:
            ring = ring.with_extension(extension)

        label = str(ClaimParty(name, texts))
        algebra = _specialize(base, {k: ring.parse(v) for k, v in texts.items()}, ring, label)

        if point:
            assigned = {k: v for k, v in point.items() if k in algebra.params}
            label += " at " + ", ".join(f"{k}={v}" for k, v in sorted(assigned.items()))
            algebra = algebra.substitute(assigned, name=label)

        return algebra


def instantiate(entry: CatalogEntry, values: Mapping[str, object]) -> StructureConstants:
    """
    The member of a parametric entry at rational parameter values.

    Raises:
     - ValueError: If the values are excluded from the entry's family.
    """
    if entry.is_excluded(values):
        raise ValueError(f"{entry.name} excludes {dict(values)}")

    assignment = {k: to_rational(v) for k, v in values.items()}
    label = f"{entry.name}({', '.join(f'{k}={v}' for k, v in assignment.items())})"
    return entry.table.substitute(assignment, name=label)


def _parse_lie(record: LieRecordJSON) -> LieTable:
    ring = Ring.from_names(record.get("params", []))
    return LieTable.from_text(
        record["dim"], record["brackets"], ring=ring, field_tag=record["field"], name=record["name"]
    )


def _parse_entry(record: AlgebraRecordJSON, remarks: tuple[str, ...]) -> CatalogEntry:
    ring = Ring.from_names(record.get("params", []))
    products = record["products"]

    if record.get("commutative", False):
        products = _mirrored(products)

    table = StructureConstants.from_text(
        record["dim"], products, ring=ring, field_tag=record["field"], name=record["name"]
    )
    return CatalogEntry(
        name=record["name"],
        lie_name=record["lie"],
        field_tag=record["field"],
        table=table,
        group=record["group"],
        source=record["source"],
        lie_values=dict(record.get("lie_values", {})),
        exclude=tuple(
            {k: to_rational(v) for k, v in excluded.items()} for excluded in record.get("exclude", [])
        ),
        spot_check=record.get("spot_check", True),
        spot_values={k: to_rational(v) for k, v in record.get("spot_values", {}).items()},
        nilpotent=record.get("nilpotent", False),
        real_only=record.get("real_only", False),
        canonical=record.get("canonical"),
        note=record.get("note"),
        remarks=remarks,
    )


def _parse_claim(record: ClaimRecordJSON) -> IsoClaim:
    extension = None

    if "extension" in record:
        extension = FieldExt.quadratic(
            record["extension"]["name"], to_rational(record["extension"]["square"])
        )

    return IsoClaim(
        id=record["id"],
        kind=record["kind"],
        source=ClaimParty(record["source"], dict(record.get("source_values", {}))),
        target=ClaimParty(record["target"], dict(record.get("target_values", {}))),
        group=record["group"],
        field_tag=record.get("field"),
        samples={k: tuple(v) for k, v in record.get("samples", {}).items()},
        extension=extension,
        map_lines=tuple(record.get("map", [])),
        relation=tuple(record.get("relation", [])),
        template=record.get("template"),
        iso_fields=tuple(record.get("iso_fields", [])),
        non_iso_fields=tuple(record.get("non_iso_fields", [])),
        note=record.get("note"),
    )


def parse_manifest(data: ManifestJSON) -> Catalog:
    """
    Raises:
     - ManifestError: On an unknown version, a missing key or a record that does not parse.
    """
    version = data.get("version")

    if version != MANIFEST_VERSION:
        raise ManifestError(f"Unsupported manifest version {version!r}")

    current = "<manifest>"

    try:
        lie_algebras = {}

        for record in data["lie"]:
            current = record["name"]
            lie_algebras[current] = _parse_lie(record)

        claims = []

        for claim_record in data["claims"]:
            current = claim_record["id"]
            claims.append(_parse_claim(claim_record))

        entries = []

        for entry_record in data["algebras"]:
            current = entry_record["name"]
            remarks = tuple(c.id for c in claims if current in (c.source.name, c.target.name))
            entries.append(_parse_entry(entry_record, remarks))
    except KeyError as error:
        raise ManifestError(f"{current}: missing key {error.args[0]!r}") from error
    except (PolynomialSyntaxError, DimensionMismatchError, JacobiViolationError, ValueError) as error:  # noqa: E501
        raise ManifestError(f"{current}: {error}") from error

    names = [e.name for e in entries]

    if len(set(names)) != len(names):
        raise ManifestError("Duplicate algebra names in the manifest")

    logger.debug(
        "Catalog: %d Lie algebras, %d algebras, %d claims", len(lie_algebras), len(entries), len(claims)
    )
    return Catalog(
        version,
        lie_algebras,
        tuple(entries),
        tuple(claims),
        tuple(data.get("default_samples", [])),
    )


def read_manifest(path: str | Path | None = None) -> ManifestJSON:
    try:
        if path is None:
            text = (
                resources.files("novikov_groebner")
                .joinpath("data/manifest.json")
                .read_text(encoding="utf-8")
            )
        else:
            text = Path(path).read_text(encoding="utf-8")
    except OSError as error:
        raise ManifestError(f"Cannot read the manifest: {error}") from error

    try:
        return json.loads(text)
    except json.JSONDecodeError as error:
        raise ManifestError(f"Manifest is not valid JSON: {error}") from error


@functools.lru_cache(maxsize=4)
def load_catalog(path: str | None = None) -> Catalog:
    """
    The catalog from the shipped manifest, or from `path`. Cached per path.
    """
    return parse_manifest(read_manifest(path))


def complex_block(field_tag: FieldTag = "R") -> StructureConstants:
    """
    ℂ as a 2-dimensional real algebra: `e1` is the unit and `e2^2 = -e1`.
    """
    return StructureConstants.from_text(
        2,
        ["e1 e1 = e1", "e1 e2 = e2", "e2 e1 = e2", "e2 e2 = -e1"],
        field_tag=field_tag,
        name="C",
    )


def unital_extension(A: StructureConstants, name: str | None = None) -> StructureConstants:
    """
    `A ⊕ ⟨u⟩` with `u` a new identity element, placed first: `u = e1` and the old `e_i` become
    `e_(i+1)`.

    Raises:
     - IdentityExistsError: If `A` already has an identity element.
    """
    if A.dim and identity_element(A) is not None:
        raise IdentityExistsError(f"{A.name or 'algebra'} already has an identity element")

    n = A.dim + 1
    ring = A.ring
    zero, one = ring.zero, ring.one

    def unit(k: int) -> tuple[Polynomial, ...]:
        return tuple(one if m == k else zero for m in range(n))

    table = []

    for i in range(n):
        row = []

        for j in range(n):
            if i == 0:
                row.append(unit(j))
            elif j == 0:
                row.append(unit(i))
            else:
                row.append((zero, *A.table[i - 1][j - 1]))

        table.append(tuple(row))

    label = name or (f"~{A.name}" if A.name else None)
    return StructureConstants(n, tuple(table), A.field_tag, ring, label)


def direct_sum(
    parts: Sequence[StructureConstants],
    field_tag: FieldTag | None = None,
    name: str | None = None,
) -> StructureConstants:
    """
    Block-diagonal table on the concatenated bases; products between different parts vanish.
    """
    if not parts:
        raise ValueError("A direct sum needs at least one part")

    ring = functools.reduce(merge_rings, (p.ring for p in parts))
    n = sum(p.dim for p in parts)
    zero = ring.zero
    table = [[[zero] * n for _ in range(n)] for _ in range(n)]
    offset = 0

    for part in parts:
        for i in range(part.dim):
            for j in range(part.dim):
                vector = table[offset + i][offset + j]

                for k, entry in enumerate(part.table[i][j]):
                    vector[offset + k] = entry.to_ring(ring)

        offset += part.dim

    frozen = tuple(tuple(tuple(v) for v in row) for row in table)
    return StructureConstants(n, frozen, field_tag or parts[0].field_tag, ring, name)


def _block_key(name: str) -> tuple[int, int]:
    match = _BLOCK.match(name)

    if match is None:
        raise UnknownEntryError(f"Not a nilpotent block name: {name!r}")

    small, dim, index = match.groups()
    return (int(small), 0) if small is not None else (int(dim), int(index))


@dataclass(frozen=True)
class CAASummand:
    block: str
    """
    Nilpotent block name such as `A_{2,1}`, or `C` for the complex block.
    """

    unital: bool = False

    @property
    def label(self) -> str:
        return f"~{self.block}" if self.unital else self.block

    @property
    def sort_key(self) -> tuple[int, tuple[int, int]]:
        if self.block == "C":
            return 0, (0, 0)

        return (1 if self.unital else 2), _block_key(self.block)


def canonical_name(summands: Iterable[CAASummand]) -> str:
    """
    `C` blocks first, then unital blocks by size, then the nilpotent part; repeats are counted,
    e.g. `2~A_0+~A_1`.
    """
    ordered = sorted(
        (s for s in summands if s.unital or s.block not in ("A_0",)),
        key=lambda s: s.sort_key,
    )
    pieces = []

    for label, group in itertools.groupby(ordered, key=lambda s: s.label):
        count = len(list(group))
        pieces.append(f"{count}{label}" if count > 1 else label)

    return "+".join(pieces) if pieces else "A_0"


@dataclass(frozen=True)
class CAASpec:
    summands: tuple[CAASummand, ...]
    field_tag: FieldTag
    assembled: StructureConstants = field(compare=False, repr=False)

    @property
    def name(self) -> str:
        return canonical_name(self.summands)

    @property
    def dim(self) -> int:
        return self.assembled.dim


def _assemble(summands: Iterable[CAASummand], field_tag: FieldTag, catalog: Catalog) -> CAASpec:
    ordered = tuple(sorted(summands, key=lambda s: s.sort_key))
    blocks = catalog.nilpotent_blocks("R") | catalog.nilpotent_blocks("C")
    parts = []

    for summand in ordered:
        if summand.block == "C":
            parts.append(complex_block(field_tag))
            continue

        if summand.block not in blocks:
            raise UnknownEntryError(f"No nilpotent block named {summand.block!r}")

        block = blocks[summand.block].with_field(field_tag)
        parts.append(unital_extension(block) if summand.unital else block)

    name = canonical_name(ordered)
    assembled = direct_sum(parts, field_tag, name)
    return CAASpec(ordered, field_tag, assembled)


def caa_from_name(name: str, field_tag: FieldTag = "C", catalog: Catalog | None = None) -> CAASpec:
    """
    Assemble a CAA from a block name such as `2~A_0+A_1`, `~A_{2,2}+A_1` or `C+~A_0`.

    Raises:
     - UnknownEntryError: On an unknown block or more than one nilpotent summand.
    """
    catalog = load_catalog() if catalog is None else catalog
    summands: list[CAASummand] = []

    for token in name.split("+"):
        match = _SUMMAND.match(token.strip())

        if match is None:
            raise UnknownEntryError(f"Not a CAA block: {token!r}")

        count, tilde, block = match.groups()

        if block == "C" and tilde:
            raise UnknownEntryError("The complex block is already unital")

        summands += [CAASummand(block, bool(tilde))] * int(count or 1)

    if sum(1 for s in summands if not s.unital and s.block != "C") > 1:
        raise UnknownEntryError(f"{name!r} has more than one nilpotent summand")

    return _assemble(summands, field_tag, catalog)


def build_caa_list(dim: int, field_tag: FieldTag = "C", catalog: Catalog | None = None) -> list[CAASpec]:  # noqa: E501
    """
    One representative of every CAA class of dimension `dim`, sorted by name.

    Raises:
     - UnsupportedDimensionError: Above dimension 4, and above dimension 3 over ℝ.
    """
    if not 0 <= dim <= 4:
        raise UnsupportedDimensionError(f"CAA lists are available up to dimension 4, not {dim}")

    if dim == 4 and field_tag == "R":
        raise UnsupportedDimensionError("Over R the CAA lists stop at dimension 3")

    catalog = load_catalog() if catalog is None else catalog
    blocks = catalog.nilpotent_blocks(field_tag)
    by_dim: dict[int, list[str]] = {}

    for block in sorted(blocks, key=_block_key):
        by_dim.setdefault(blocks[block].dim, []).append(block)

    unital_choices = [b for b in sorted(blocks, key=_block_key) if blocks[b].dim < dim]
    specs: dict[str, CAASpec] = {}
    complex_counts = range(dim // 2 + 1) if field_tag == "R" else range(1)

    for complex_count in complex_counts:
        rest = dim - 2 * complex_count

        for size in range(rest + 1):
            for combo in itertools.combinations_with_replacement(unital_choices, size):
                remainder = rest - sum(blocks[b].dim + 1 for b in combo)

                if remainder < 0:
                    continue

                summands = [CAASummand("C")] * complex_count
                summands += [CAASummand(b, True) for b in combo]

                for nilpotent in by_dim.get(remainder, []):
                    candidate = summands + ([CAASummand(nilpotent)] if remainder else [])
                    spec = _assemble(candidate, field_tag, catalog)
                    specs.setdefault(spec.name, spec)

    logger.info("%d CAA classes of dimension %d over %s", len(specs), dim, field_tag)
    return [specs[name] for name in sorted(specs)]


@dataclass(frozen=True)
class CAAPairResult:
    first: str
    second: str
    verdict: Verdict

    @property
    def distinct(self) -> bool:
        return isinstance(self.verdict, NotIsomorphic)


def caa_pair_report(
    dim: int,
    field_tag: FieldTag = "C",
    budget: int | None = None,
    sample: int | None = None,
    catalog: Catalog | None = None,
) -> list[CAAPairResult]:
    """
    Pairwise distinctness of `build_caa_list(dim, field_tag)`. Pairs separated by the invariant
    fingerprint are settled at once; colliding pairs go to `decide_iso`. With `sample`, at most
    that many pairs are reported, colliding pairs first.
    """
    specs = build_caa_list(dim, field_tag, catalog)
    prints = {s.name: algebra_invariants(s.assembled) for s in specs}
    colliding: list[tuple[CAASpec, CAASpec, list[str]]] = []
    separated: list[tuple[CAASpec, CAASpec, list[str]]] = []

    for a, b in itertools.combinations(specs, 2):
        differences = prints[a.name].differences(prints[b.name], field_tag)
        (separated if differences else colliding).append((a, b, differences))

    if sample is not None:
        separated = separated[: max(0, sample - len(colliding))]

    logger.info(
        "%d colliding and %d separated CAA pairs in dimension %d over %s",
        len(colliding),
        len(separated),
        dim,
        field_tag,
    )
    results = []

    for a, b, differences in separated:
        evidence = "differing " + ", ".join(differences)
        results.append(CAAPairResult(a.name, b.name, NotIsomorphic("invariant-mismatch", evidence)))

    for a, b, _ in colliding:
        verdict = decide_iso(a.assembled, b.assembled, field_tag, budget=budget, fingerprint=False)

        if isinstance(verdict, Undecided):
            logger.warning("CAA pair %s / %s undecided: %s", a.name, b.name, verdict.reason)

        results.append(CAAPairResult(a.name, b.name, verdict))

    return sorted(results, key=lambda r: (r.first, r.second))


@dataclass(frozen=True)
class ClaimResult:
    id: str
    kind: str
    """
    `axioms`, `lie`, `commutative-associative`, `canonical`, `claim:<claim kind>`, `spot-check`,
    `caa-list` or `caa-pair`.
    """

    status: ClaimStatus
    detail: str = ""

    def as_dict(self) -> ClaimResultJSON:
        return {"id": self.id, "kind": self.kind, "status": self.status, "detail": self.detail}

    def __str__(self) -> str:
        return f"[{self.status}] {self.kind} {self.id}: {self.detail}"


@dataclass(frozen=True)
class CatalogReport:
    scope: CatalogScope
    results: tuple[ClaimResult, ...]

    def _with(self, status: ClaimStatus) -> list[ClaimResult]:
        return [r for r in self.results if r.status == status]

    @property
    def verified(self) -> list[ClaimResult]:
        return self._with("verified")

    @property
    def failures(self) -> list[ClaimResult]:
        return self._with("failed")

    @property
    def undecided(self) -> list[ClaimResult]:
        return self._with("undecided")

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> CatalogReportJSON:
        return {
            "scope": self.scope,
            "verified": len(self.verified),
            "failed": len(self.failures),
            "undecided": len(self.undecided),
            "results": [r.as_dict() for r in self.results],
        }


def _verdict_result(id: str, kind: str, verdict: Verdict, expect_iso: bool) -> ClaimResult:
    if isinstance(verdict, Undecided):
        return ClaimResult(id, kind, "undecided", verdict.reason)

    if isinstance(verdict, Isomorphic):
        status: ClaimStatus = "verified" if expect_iso else "failed"
        return ClaimResult(id, kind, status, "isomorphic, witness verified")

    status = "failed" if expect_iso else "verified"
    return ClaimResult(id, kind, status, f"{verdict.kind}: {verdict.evidence}")


def _guarded(id: str, kind: str, check) -> list[ClaimResult]:
    try:
        return check()
    except BudgetExhaustedError as error:
        return [ClaimResult(id, kind, "undecided", f"budget-exhausted after {error.steps} steps")]
    except (*_CHECK_ERRORS, UnknownEntryError, IdentityExistsError) as error:
        logger.warning("%s %s raised %s", kind, id, error)
        return [ClaimResult(id, kind, "failed", f"{type(error).__name__}: {error}")]
    except Exception as error:
        logger.exception("%s %s crashed", kind, id)
        return [ClaimResult(id, kind, "failed", f"unexpected {type(error).__name__}: {error}")]


def _check_entry(catalog: Catalog, entry: CatalogEntry, budget: int) -> list[ClaimResult]:
    results = []
    report = check_novikov(entry.table)

    if report.ok:
        results.append(ClaimResult(entry.name, "axioms", "verified", "Novikov identically"))
    else:
        results.append(ClaimResult(entry.name, "axioms", "failed", str(report.failures[0])))

    declared = catalog.entry_lie(entry)
    actual = associated_lie(entry.table)

    if same_table(declared, actual):
        results.append(ClaimResult(entry.name, "lie", "verified", f"commutator algebra is {entry.lie_name}"))  # noqa: E501
    else:
        rules = "; ".join(actual.bracket_rules()) or "abelian"
        results.append(ClaimResult(entry.name, "lie", "failed", f"commutator algebra is {rules}"))

    if entry.group == "caa":
        status: ClaimStatus = "verified" if is_commutative_associative(entry.table) else "failed"
        results.append(ClaimResult(entry.name, "commutative-associative", status))

    if entry.canonical is not None:
        results.append(_check_canonical(catalog, entry, budget))

    return results


def _check_canonical(catalog: Catalog, entry: CatalogEntry, budget: int) -> ClaimResult:
    assembled = caa_from_name(entry.canonical or entry.name, "C", catalog).assembled

    if same_table(entry.table, assembled):
        return ClaimResult(entry.name, "canonical", "verified", f"equals {assembled.name}")

    covering = [c.id for c in catalog.claims if c.source.name == entry.name and c.kind == "iso-with-witness"]  # noqa: E501

    if covering:
        return ClaimResult(entry.name, "canonical", "verified", f"isomorphic to {assembled.name} by claim {covering[0]}")  # noqa: E501

    verdict = decide_iso(entry.table.with_field("C"), assembled, "C", budget=budget)
    return _verdict_result(entry.name, "canonical", verdict, expect_iso=True)


def _point_suffix(point: Mapping[str, Fraction]) -> str:
    if not point:
        return ""

    return " [" + ", ".join(f"{k}={v}" for k, v in sorted(point.items())) + "]"


def _witness_result(catalog: Catalog, claim: IsoClaim, point: Mapping[str, Fraction], field_tag: FieldTag | None) -> ClaimResult:  # noqa: E501
    id = claim.id + _point_suffix(point)
    kind = f"claim:{claim.kind}"
    A = catalog.resolve(claim.source.name, claim.source.values, point=point, extension=claim.extension, field_tag=field_tag)  # noqa: E501
    B = catalog.resolve(claim.target.name, claim.target.values, point=point, extension=claim.extension, field_tag=field_tag)  # noqa: E501
    witness = explicit_map(claim.map_lines, A.dim, claim.extension, A.name, B.name)

    if verify_witness(A, B, witness):
        return ClaimResult(id, kind, "verified", f"witness maps {A.name} onto {B.name}")

    return ClaimResult(id, kind, "failed", f"witness does not map {A.name} onto {B.name}")


def _decided_result(catalog: Catalog, claim: IsoClaim, point: Mapping[str, Fraction], field_tag: FieldTag, budget: int, expect_iso: bool) -> ClaimResult:  # noqa: E501
    id = claim.id + _point_suffix(point) + f" over {field_tag}"
    A = catalog.resolve(claim.source.name, claim.source.values, point=point, field_tag=field_tag)
    B = catalog.resolve(claim.target.name, claim.target.values, point=point, field_tag=field_tag)
    verdict = decide_iso(A, B, field_tag, budget=budget)
    return _verdict_result(id, f"claim:{claim.kind}", verdict, expect_iso)


def _relation_results(catalog: Catalog, claim: IsoClaim, budget: int) -> list[ClaimResult]:
    kind = f"claim:{claim.kind}"
    A = catalog.resolve(claim.source.name, claim.source.values)
    B = catalog.resolve(claim.target.name, claim.target.values)
    gmap = heisenberg_automorphisms() if claim.template == "heisenberg" else None
    found = relate_families(A, B, gmap, budget)
    params = sorted(set(A.params) | set(B.params))
    ring = Ring.from_names(params, order="grevlex")
    claimed = [ring.parse(text) for text in claim.relation]
    results = []

    if not found:
        results.append(ClaimResult(claim.id, kind, "failed", "no parameter relation found"))
    else:
        computed = buchberger(Ideal([p.to_ring(ring) for p in found], ring), budget)
        expected = buchberger(Ideal(claimed, ring), budget)
        relations = ", ".join(str(p) for p in computed.basis)
        status: ClaimStatus = "verified" if computed.basis == expected.basis else "failed"
        results.append(ClaimResult(claim.id, kind, status, f"relations {relations}"))

    for point in claim.points() if claim.samples else []:
        id = claim.id + _point_suffix(point)
        vanishes = all(p.evaluate({k: point[k] for k in params}) == 0 for p in claimed)
        field_tag = claim.field_tag or A.field_tag
        A_point = A.substitute({k: v for k, v in point.items() if k in A.params})
        B_point = B.substitute({k: v for k, v in point.items() if k in B.params})
        verdict = decide_iso(A_point, B_point, field_tag, budget=budget)
        results.append(_verdict_result(id, kind, verdict, expect_iso=vanishes))

    return results


def _check_claim(catalog: Catalog, claim: IsoClaim, budget: int) -> list[ClaimResult]:
    kind = f"claim:{claim.kind}"

    def run() -> list[ClaimResult]:
        if claim.kind == "family-relation":
            return _relation_results(catalog, claim, budget)

        results = []

        for point in claim.points():
            if claim.kind == "iso-with-witness":
                results.append(_witness_result(catalog, claim, point, claim.field_tag))
            elif claim.kind == "non-iso":
                field_tag = claim.field_tag or "C"
                results.append(_decided_result(catalog, claim, point, field_tag, budget, False))
            else:
                for field_tag in claim.iso_fields:
                    if claim.map_lines:
                        results.append(_witness_result(catalog, claim, point, field_tag))
                    else:
                        results.append(_decided_result(catalog, claim, point, field_tag, budget, True))  # noqa: E501

                for field_tag in claim.non_iso_fields:
                    results.append(_decided_result(catalog, claim, point, field_tag, budget, False))

        return results

    return _guarded(claim.id, kind, run)


def _spot_check(entry: CatalogEntry, samples: Sequence[Fraction], pairs: int, budget: int, field_tag: FieldTag | None) -> list[ClaimResult]:  # noqa: E501
    fixed = {k: v for k, v in entry.spot_values.items() if k in entry.params}
    free = [p for p in entry.params if p not in fixed]

    if not free:
        return []

    varying = free[0]

    for other in free[1:]:
        fixed[other] = Fraction(1)

    grid = [v for v in samples if not entry.is_excluded({**fixed, varying: v})]
    field_tag = field_tag or entry.field_tag
    results = []

    for u, v in list(zip(grid, grid[1:]))[:pairs]:
        id = f"{entry.name}: {varying}={u} vs {varying}={v}"

        def run(u: Fraction = u, v: Fraction = v, id: str = id) -> list[ClaimResult]:
            A = instantiate(entry, {**fixed, varying: u})
            B = instantiate(entry, {**fixed, varying: v})
            verdict = decide_iso(A, B, field_tag, budget=budget)
            return [_verdict_result(id, "spot-check", verdict, expect_iso=False)]

        results += _guarded(id, "spot-check", run)

    return results


CAA4_PAIR_SAMPLE = 25

_CAA_COUNTS: tuple[tuple[int, FieldTag, int], ...] = ((3, "C", 12), (3, "R", 15))


def _check_caa_lists(catalog: Catalog, budget: int, caa_pairs: int) -> list[ClaimResult]:
    results = []

    for dim, field_tag, expected in _CAA_COUNTS:
        count = len(build_caa_list(dim, field_tag, catalog))
        status: ClaimStatus = "verified" if count == expected else "failed"
        results.append(ClaimResult(f"dimension {dim} over {field_tag}", "caa-list", status, f"{count} classes"))  # noqa: E501

    listed = {e.canonical for e in catalog.entries if e.group == "caa" and e.dim == 4 and e.canonical}  # noqa: E501
    built = {s.name for s in build_caa_list(4, "C", catalog)}
    status = "verified" if listed == built else "failed"
    missing = sorted(listed ^ built)
    detail = f"{len(built)} classes" + (f", mismatched {', '.join(missing)}" if missing else "")
    results.append(ClaimResult("dimension 4 over C", "caa-list", status, detail))

    for field_tag in ("C", "R"):
        for pair in caa_pair_report(3, field_tag, budget, catalog=catalog):
            id = f"{pair.first} vs {pair.second} over {field_tag}"
            results.append(_verdict_result(id, "caa-pair", pair.verdict, expect_iso=False))

    for pair in caa_pair_report(4, "C", budget, sample=caa_pairs, catalog=catalog):
        id = f"{pair.first} vs {pair.second} over C"
        results.append(_verdict_result(id, "caa-pair", pair.verdict, expect_iso=False))

    return results


def verify_catalog(
    scope: CatalogScope = "all",
    options: VerifyOptions | None = None,
    catalog: Catalog | None = None,
) -> CatalogReport:
    """
    Certify the catalog within `scope`: axioms and Lie algebra of every entry, every claim, the
    convention that distinct parameter values give non-isomorphic algebras (spot-checked on a
    sample grid) and, for the CAA scope, the class counts, pairwise distinctness in
    dimension 3 and a sample of at least `caa_pairs` four-dimensional pairs that includes every
    pair the fingerprint cannot separate.

    Checks run one after another; the report is sorted by kind and id. Failures and undecided
    checks are reported, never raised.
    """
    options = options or {}
    catalog = load_catalog() if catalog is None else catalog
    budget = options.get("budget", DEFAULT_BUDGET)
    samples = [to_rational(v) for v in options.get("samples", catalog.default_samples)]
    spot_pairs = options.get("spot_pairs", 3)
    caa_pairs = options.get("caa_pairs", CAA4_PAIR_SAMPLE)
    results: list[ClaimResult] = []
    entries = catalog.entries_for(scope)

    for entry in entries:
        logger.debug("Checking %s", entry.name)
        results += _guarded(entry.name, "axioms", lambda entry=entry: _check_entry(catalog, entry, budget))  # noqa: E501

    for claim in catalog.claims_for(scope):
        logger.debug("Checking claim %s", claim.id)
        results += _check_claim(catalog, claim, budget)

    for entry in entries:
        if entry.params and entry.spot_check and entry.group != "caa":
            results += _spot_check(entry, samples, spot_pairs, budget, options.get("field"))

    if scope in ("caa", "all"):
        results += _guarded("CAA lists", "caa-list", lambda: _check_caa_lists(catalog, budget, caa_pairs))  # noqa: E501

    results.sort(key=lambda r: (r.kind, r.id))
    report = CatalogReport(scope, tuple(results))
    logger.info(
        "Catalog scope %s: %d verified, %d failed, %d undecided",
        scope,
        len(report.verified),
        len(report.failures),
        len(report.undecided),
    )
    return report
