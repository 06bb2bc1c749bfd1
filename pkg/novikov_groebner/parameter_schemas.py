"""
Option Schemas
==============

This module defines the `Literal` aliases and `TypedDict` option bundles accepted by the public
operations of `novikov_groebner`. They give type checkers and readers one place to look up every
string-valued switch (field tags, monomial order styles, catalog scopes) and every group of
keyword options that travels together (Gröbner budgets, witness search settings).

Aliases:
--------
 - `FieldTag`: Ground field of an algebra or a decision, `"R"` or `"C"`.
 - `OrderStyle`: Monomial order style, `"lex"`, `"grevlex"` or `"elim"`.
 - `MultiplicationKind`: Which multiplication matrix to build, `"L"`, `"R"` or `"ad"`.
 - `MatrixRole`: Role tag stored on a `LinearMapMatrix`.
 - `CatalogScope`: Part of the catalog to verify.
 - `NonIsoKind`: Kind of evidence behind a negative verdict.
 - `ClaimKind`: Kind of a remark-level claim shipped with the catalog.
 - `ClaimStatus`: Outcome of one catalog check.

Option bundles:
---------------
 - `DecideOptions`: Keyword options of `iso.decide_iso`.
 - `VerifyOptions`: Keyword options of `catalog.verify_catalog`.

Notes:
------
 - All bundles are declared with `total=False`; omitted keys fall back to `settings.Settings`.
 - Parameter values are written as rational strings (`"-2/9"`) wherever they cross a file or
   command-line boundary, and as `fractions.Fraction` inside the library.
"""  # noqa: E501

from typing import Literal, TypedDict

FieldTag = Literal["R", "C"]
"""
Ground field: `"R"` for the reals, `"C"` for the complex numbers.
"""

OrderStyle = Literal["lex", "grevlex", "elim"]
"""
Monomial order style. `elim` is lex on the first block followed by graded reverse lex on the rest.
"""

MultiplicationKind = Literal["L", "R", "ad"]
"""
Left multiplication, right multiplication or the adjoint map `ad = L - R`.
"""

MatrixRole = Literal["left-mult", "right-mult", "adjoint", "generic-map"]
"""
Role tag of a `LinearMapMatrix`.
"""

CatalogScope = Literal["dim3", "dim4-nilpotent-lie", "caa", "examples", "all"]
"""
Part of the catalog covered by `verify_catalog`.
"""

NonIsoKind = Literal["gb-trivial", "real-certificate", "invariant-mismatch"]
"""
Kind of evidence carried by a `NotIsomorphic` verdict.
"""

ClaimKind = Literal["iso-with-witness", "non-iso", "family-relation", "field-conditional"]
"""
Kind of a remark-level isomorphism claim.
"""


class DecideOptions(TypedDict, total=False):
    budget: int
    """
    Reduction-step ceiling for every Gröbner basis computed while deciding one pair.
    """

    fingerprint: bool
    """
    Run the invariant prefilter first. Defaults to True.
    """

    extract_witness: bool
    """
    Search for an explicit isomorphism when the basis is non-trivial. Defaults to True.
    """


class VerifyOptions(TypedDict, total=False):
    field: FieldTag
    """
    Field to verify the claims over. Defaults to each entry's own field tag.
    """

    samples: list[str]
    """
    Parameter sample grid as rational strings, e.g. `["-2", "-1/2", "1"]`.
    """

    budget: int
    """
    Reduction-step ceiling per decided pair.
    """

    spot_pairs: int
    """
    Number of distinct-value pairs checked per parametrized family.
    """

    caa_pairs: int
    """
    Number of four-dimensional CAA pairs sampled for distinctness; every pair the invariant
    fingerprint cannot separate is always included. Defaults to 25.
    """


ClaimStatus = Literal["verified", "failed", "undecided"]
"""
Outcome of one catalog check.
"""
