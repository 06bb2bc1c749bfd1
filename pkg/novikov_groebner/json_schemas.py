"""
JSON Schema Definitions for the Catalog Manifest and Reports
============================================================

This module defines `TypedDict` structures for the two kinds of JSON handled by `novikov_groebner`: the shipped catalog manifest (`novikov_groebner/data/manifest.json`) and the machine-readable reports printed by the command line with `--json`.

Manifest schemas:
-----------------
 - `LieRecordJSON`: One Lie algebra given by brackets, possibly with parameters.
 - `ExtensionJSON`: A quadratic extension `name^2 = square`.
 - `AlgebraRecordJSON`: One Novikov algebra (or commutative associative algebra) given by products.
 - `ClaimRecordJSON`: One remark-level isomorphism claim.
 - `ManifestJSON`: The whole manifest.

Report schemas:
---------------
 - `VerdictJSON`: Outcome of `iso.decide_iso`.
 - `FingerprintJSON`: The invariants of `algebra.algebra_invariants`.
 - `CheckReportJSON`: Outcome of the `check` command.
 - `ClaimResultJSON`: One line of a catalog verification.
 - `CatalogReportJSON`: Outcome of `catalog.verify_catalog`.

Notes:
------
 - Product and bracket lines use the algebra-file grammar (`e1 e2 = a e2 + e2`, `[e1, e2] = e3`).
 - Parameter values are rational strings or polynomial texts (`"-2/9"`, `"a^2 + a"`, `"-t - 1"`).
 - Records are declared with `total=False` where keys are optional; `manual_tests/validate_json.py`
   checks the shipped manifest against these declarations.
"""  # noqa: E501

from typing import TypedDict

from novikov_groebner.parameter_schemas import CatalogScope, ClaimKind, ClaimStatus, FieldTag


class _LieRecordRequired(TypedDict):
    name: str
    dim: int
    field: FieldTag
    brackets: list[str]


class LieRecordJSON(_LieRecordRequired, total=False):
    """
    A Lie algebra of the catalog. `abelian` is implicit for every dimension.
    """  # noqa: E501

    params: list[str]
    """
    Parameters appearing in the brackets, e.g. `["alpha"]` for the `g2` family.
    """


class ExtensionJSON(TypedDict):
    name: str
    square: str
    """
    Rational square of the generator, e.g. `"-1"` for `i`.
    """


class _AlgebraRecordRequired(TypedDict):
    name: str
    lie: str
    dim: int
    field: FieldTag
    group: CatalogScope
    products: list[str]
    source: str


class AlgebraRecordJSON(_AlgebraRecordRequired, total=False):
    """
    A catalog algebra, transcribed with its printed basis.
    """  # noqa: E501

    params: list[str]
    lie_values: dict[str, str]
    """
    Values of the Lie algebra's parameters, as polynomials in this algebra's parameters.
    """

    commutative: bool
    """
    Each product line `ei ej` with `i != j` also defines `ej ei`.
    """

    nilpotent: bool
    """
    A nilpotent building block of the commutative associative classification.
    """

    real_only: bool
    """
    A nilpotent block that merges with another class over the complex numbers.
    """

    canonical: str
    """
    Name of the assembled class this row stands for, e.g. `"~A_0+A_{3,4}"`.
    """

    exclude: list[dict[str, str]]
    """
    Parameter values for which the row is not part of the classification.
    """

    spot_check: bool
    """
    Whether distinct parameter values are spot-checked as non-isomorphic. Defaults to True.
    """

    spot_values: dict[str, str]
    """
    Values held fixed for the secondary parameters during spot checks.
    """

    note: str


class _ClaimRecordRequired(TypedDict):
    id: str
    kind: ClaimKind
    group: CatalogScope
    source: str
    target: str


class ClaimRecordJSON(_ClaimRecordRequired, total=False):
    """
    A remark-level claim relating two catalog algebras (or two Lie algebras).
    """  # noqa: E501

    field: FieldTag
    source_values: dict[str, str]
    target_values: dict[str, str]
    samples: dict[str, list[str]]
    """
    Sample values of the free variables in `source_values` and `target_values`.
    """

    extension: ExtensionJSON
    map: list[str]
    """
    Witness lines `ei -> <combination of y1 ... yn>` mapping the source onto the target.
    """

    relation: list[str]
    template: str
    """
    Automorphism template used for family relations; only `"heisenberg"` is known.
    """

    iso_fields: list[FieldTag]
    non_iso_fields: list[FieldTag]
    note: str


class ManifestJSON(TypedDict):
    version: int
    default_samples: list[str]
    lie: list[LieRecordJSON]
    algebras: list[AlgebraRecordJSON]
    claims: list[ClaimRecordJSON]


class _VerdictRequired(TypedDict):
    verdict: str
    """
    `isomorphic`, `not-isomorphic` or `undecided`.
    """

    source: str
    target: str
    field: FieldTag


class VerdictJSON(_VerdictRequired, total=False):
    kind: str
    """
    Evidence kind of a negative verdict, or the reason of an undecided one.
    """

    evidence: str
    witness: list[str]
    """
    Witness map lines `ei -> ...`.
    """

    partial_basis: list[str]


class FingerprintJSON(TypedDict):
    dim: int
    dim_square: int
    dim_cube: int
    dim_annihilator: int
    dim_left_annihilator: int
    dim_right_annihilator: int
    dim_derived: int
    trace_form_rank: int
    commutative: bool
    associative: bool
    complete: bool
    trace_form_signature: list[int] | None


class _CheckReportRequired(TypedDict):
    name: str
    novikov: bool
    left_symmetric: bool
    right_commutative: bool
    lie: list[str]
    """
    Bracket lines of the associated Lie algebra.
    """


class CheckReportJSON(_CheckReportRequired, total=False):
    failures: list[str]
    conditions: list[str]
    """
    Parameter conditions under which a parametric algebra is Novikov.
    """

    complete: bool
    fingerprint: FingerprintJSON


class ClaimResultJSON(TypedDict):
    id: str
    kind: str
    status: ClaimStatus
    detail: str


class CatalogReportJSON(TypedDict):
    scope: CatalogScope
    verified: int
    failed: int
    undecided: int
    results: list[ClaimResultJSON]
