"""
Novikov Algebra Classification Toolkit
======================================

`novikov_groebner` decides questions about finite-dimensional Novikov algebras with exact
arithmetic: it verifies the Novikov identities, computes the family of Novikov structures on a
Lie algebra, decides isomorphism of two algebras through reduced Gröbner bases (with explicit
witnesses or non-isomorphism certificates over ℝ and ℂ) and certifies a shipped classification
of the algebras of dimension 3 and of dimension 4 on nilpotent Lie algebras.

Features:
---------
- Exact rational arithmetic throughout, with optional quadratic field extensions
- Buchberger's algorithm with a reduction-step budget, elimination and real-root certificates
- Structure-constant tables, invariants and isomorphism decisions for dimensions up to 4
- A machine-readable catalog with a verification harness
- A command line front end (`novikov`) with stable plain-text or JSON reports

Example Usage:
-------------
```python
from novikov_groebner import StructureConstants, check_novikov, decide_iso

A = StructureConstants.from_text(3, ["e1 e2 = 2 e3", "e2 e1 = e3"], field_tag="C")
B = StructureConstants.from_text(3, ["e1 e1 = -2 e3", "e1 e2 = e3", "e2 e2 = e3"], field_tag="C")

print(check_novikov(A).ok)
print(decide_iso(A, B))
```

Modules:
--------
 - `poly`: rationals, rings, field extensions and polynomials.
 - `linalg`: exact linear algebra over polynomial entries.
 - `groebner`: ideals, Buchberger, elimination, real certificates and point search.
 - `algebra`: structure constants, the Novikov identities, predicates and invariants.
 - `variety`: the family of Novikov structures on a Lie algebra.
 - `iso`: maps, isomorphism systems, verdicts and family relations.
 - `catalog`: the shipped classification and its verification.
 - `formats`: the algebra, ideal and map file formats.
 - `settings`: configuration from the environment and `.env`.
 - `cli`: the `novikov` command.
"""  # noqa: E501

import importlib.metadata

import novikov_groebner.json_schemas as json_schemas
import novikov_groebner.parameter_schemas as parameter_schemas

from .algebra import LieTable, StructureConstants, associated_lie, check_novikov
from .catalog import build_caa_list, load_catalog, verify_catalog
from .groebner import Ideal, buchberger
from .iso import decide_iso, relate_families, verify_witness
from .poly import Ring
from .variety import tg_family

__all__ = [
    "Ring",
    "Ideal",
    "buchberger",
    "StructureConstants",
    "LieTable",
    "check_novikov",
    "associated_lie",
    "tg_family",
    "decide_iso",
    "verify_witness",
    "relate_families",
    "load_catalog",
    "build_caa_list",
    "verify_catalog",
    "json_schemas",
    "parameter_schemas",
]

try:
    __version__ = importlib.metadata.version("novikov-groebner")
except importlib.metadata.PackageNotFoundError:
    __version__ = "0.0.0"
