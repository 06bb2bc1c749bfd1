"""
Text File Formats
=================

Parsers and printers for the three plain-text inputs of the command line: algebra files
(`.alg`), ideal files (`.ideal`) and map files (`.map`). All coefficients are written in the
polynomial grammar of `novikov_groebner.poly`.

Algebra file:
-------------
```
# N^{g3}_2 at a = -2
field R
dim 3
param a            # optional, repeatable, or `param a b`
ext i : i^2 + 1    # optional, at most one
name X2            # optional label
e1*e1 = a e3
e1 e2 = e3
e2 e2 = e3
```
Bracket lines `[e1, e2] = e3` describe a Lie algebra instead; a file holds either product lines
or bracket lines, never both. Omitted products are zero.

Ideal file:
-----------
```
vars D > x11 > x12 > alpha
ext s : s^2 + 2    # optional
order lex          # lex, grevlex or `elim k`
D x11 - 1
x12^2 + alpha
```

Map file:
---------
```
ext i : i^2 + 1    # optional
e1 -> i y1
e2 -> y2
map e3 -> y3       # the `map` keyword is optional
```
A map file sends every source basis vector `ei` to a combination of target basis vectors `yj`.
Coefficients may involve variables declared with `param`, in which case the map is symbolic.
"""  # noqa: E501

from __future__ import annotations

import logging
import re
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path

from novikov_groebner import linalg
from novikov_groebner.algebra import (
    DimensionMismatchError,
    JacobiViolationError,
    LieTable,
    StructureConstants,
    format_vector,
    parse_linear_combination,
)
from novikov_groebner.groebner import GroebnerBasis, Ideal
from novikov_groebner.iso import ExplicitMap, GenericMap
from novikov_groebner.poly import (
    FieldExt,
    Polynomial,
    PolynomialSyntaxError,
    ReducibleExtensionError,
    Ring,
    RingMismatchError,
    UnknownVariableError,
    Variable,
    VariableKind,
)

logger = logging.getLogger(__name__)

_EXT = re.compile(r"^ext\s+([A-Za-z][A-Za-z0-9_]*)\s*:\s*(.+)$")
_MAP_LINE = re.compile(r"^(?:map\s+)?e(\d+)\s*->\s*(.+)$")
_ORDER = re.compile(r"^order\s+(lex|grevlex|elim\s+(\d+))$")


class AlgebraFormatError(Exception):
    """
    A malformed input file. Carries the file name and the one-based line number when known.
    """

    def __init__(self, message: str, path: str | None = None, line: int | None = None):
        self.path = path
        self.line = line
        self.message = message
        where = path or "<input>"

        if line is not None:
            where = f"{where}:{line}"

        super().__init__(f"{where}: {message}")


def _lines(text: str) -> list[tuple[int, str]]:
    result = []

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()

        if line:
            result.append((number, line))

    return result


def _parse_extension(line: str, path: str | None, number: int) -> FieldExt:
    match = _EXT.match(line)

    if match is None:
        raise AlgebraFormatError(f"Malformed extension line {line!r}", path, number)

    try:
        return FieldExt.from_text(match.group(1), match.group(2))
    except (PolynomialSyntaxError, ReducibleExtensionError, ValueError) as error:
        raise AlgebraFormatError(str(error), path, number) from error


@dataclass
class _Header:
    field_tag: str = "C"
    dim: int | None = None
    params: list[str] | None = None
    extension: FieldExt | None = None
    name: str | None = None

    def ring(self) -> Ring:
        names = list(self.params or [])
        extensions = []

        if self.extension is not None:
            names.append(self.extension.name)
            extensions.append(self.extension)

        return Ring.from_names(names, extensions=extensions)


def _header_line(header: _Header, line: str, path: str | None, number: int) -> bool:
    keyword, _, rest = line.partition(" ")
    rest = rest.strip()

    if keyword == "field":
        if rest not in ("R", "C"):
            raise AlgebraFormatError(f"Field must be R or C, got {rest!r}", path, number)

        header.field_tag = rest
    elif keyword == "dim":
        if not rest.isdigit():
            raise AlgebraFormatError(f"Dimension must be a non-negative integer, got {rest!r}", path, number)  # noqa: E501

        header.dim = int(rest)
    elif keyword == "param":
        names = rest.replace(",", " ").split()

        if not names:
            raise AlgebraFormatError("A param line needs at least one name", path, number)

        header.params = [*(header.params or []), *names]
    elif keyword == "ext":
        if header.extension is not None:
            raise AlgebraFormatError("At most one ext line is allowed", path, number)

        header.extension = _parse_extension(line, path, number)
    elif keyword == "name":
        header.name = rest or None
    else:
        return False

    return True


def parse_algebra(text: str, path: str | None = None) -> StructureConstants:
    """
    Parse an algebra file. Returns a `LieTable` when the file holds bracket lines.

    Raises:
     - AlgebraFormatError: On any syntax, dimension or Jacobi error, with the offending line.
    """
    header = _Header()
    rules: list[tuple[int, str]] = []

    for number, line in _lines(text):
        if "=" in line:
            rules.append((number, line.replace("*", " ")))
        elif not _header_line(header, line, path, number):
            raise AlgebraFormatError(f"Unrecognized line {line!r}", path, number)

    if header.dim is None:
        raise AlgebraFormatError("Missing dim line", path)

    try:
        ring = header.ring()
    except (ValueError, PolynomialSyntaxError) as error:
        raise AlgebraFormatError(str(error), path) from error

    brackets = [r for r in rules if r[1].startswith("[")]

    if brackets and len(brackets) != len(rules):
        raise AlgebraFormatError("Product lines and bracket lines cannot be mixed", path, brackets[0][0])  # noqa: E501

    kind = LieTable if brackets else StructureConstants
    current = 0

    try:
        for current, rule in rules:
            # line-by-line parse so that errors point at the right line
            kind.from_text(header.dim, [rule], ring=ring)

        current = 0
        algebra = kind.from_text(
            header.dim,
            [rule for _, rule in rules],
            ring=ring,
            field_tag=header.field_tag,  # type: ignore[arg-type]
            name=header.name or (Path(path).stem if path else None),
        )
    except (
        PolynomialSyntaxError,
        DimensionMismatchError,
        JacobiViolationError,
        UnknownVariableError,
    ) as error:
        raise AlgebraFormatError(str(error), path, current or None) from error

    logger.debug("Parsed %s of dimension %d from %s", kind.__name__, algebra.dim, path or "text")
    return algebra


def read_algebra(path: str | Path) -> StructureConstants:
    path = Path(path)

    try:
        text = path.read_text(encoding="utf-8")
    except OSError as error:
        raise AlgebraFormatError(f"Cannot read file: {error.strerror}", str(path)) from error

    return parse_algebra(text, str(path))


def render_algebra(A: StructureConstants) -> str:
    """
    Algebra file text for `A`; `parse_algebra` reads it back to an equal table.
    """
    lines = []

    if A.name:
        lines.append(f"name {A.name}")

    lines += [f"field {A.field_tag}", f"dim {A.dim}"]

    if A.params:
        lines.append("param " + " ".join(A.params))

    for extension in A.ring.extensions:
        lines.append(f"ext {extension.name} : {extension.minimal_polynomial_text}")

    if isinstance(A, LieTable):
        lines += A.bracket_rules()
    else:
        lines += A.product_rules()

    return "\n".join(lines) + "\n"


def parse_ideal(text: str, path: str | None = None) -> Ideal:
    """
    Parse an ideal file. The `vars` line fixes the ranking, the first variable being the largest.

    Raises:
     - AlgebraFormatError: On any syntax error, with the offending line.
    """
    names: list[str] | None = None
    extension: FieldExt | None = None
    style = "lex"
    split = 0
    body: list[tuple[int, str]] = []

    for number, line in _lines(text):
        if line.startswith("vars "):
            names = [n.strip() for n in line[5:].split(">") if n.strip()]
        elif line.startswith("ext "):
            extension = _parse_extension(line, path, number)
        elif line.startswith("order"):
            match = _ORDER.match(line)

            if match is None:
                raise AlgebraFormatError(f"Malformed order line {line!r}", path, number)

            style = "elim" if match.group(2) else match.group(1)
            split = int(match.group(2) or 0)
        else:
            body.append((number, line))

    if names is None:
        raise AlgebraFormatError("Missing vars line", path)

    try:
        extensions = [extension] if extension is not None else []

        if extension is not None and extension.name not in names:
            names.append(extension.name)

        ring = Ring.from_names(names, order=style, split=split, extensions=extensions)  # type: ignore[arg-type]  # noqa: E501
    except (ValueError, PolynomialSyntaxError) as error:
        raise AlgebraFormatError(str(error), path) from error

    generators = []

    for number, line in body:
        try:
            generators.append(ring.parse(line))
        except (PolynomialSyntaxError, UnknownVariableError) as error:
            raise AlgebraFormatError(str(error), path, number) from error

    try:
        return Ideal(generators, ring)
    except ValueError as error:
        raise AlgebraFormatError(str(error), path) from error


def read_ideal(path: str | Path) -> Ideal:
    path = Path(path)

    try:
        text = path.read_text(encoding="utf-8")
    except OSError as error:
        raise AlgebraFormatError(f"Cannot read file: {error.strerror}", str(path)) from error

    return parse_ideal(text, str(path))


def render_ideal(polys: Ideal | GroebnerBasis) -> str:
    ring = polys.ring
    extension_names = {e.name for e in ring.extensions}
    ranked = [n for n in ring.names if n not in extension_names]
    lines = ["vars " + " > ".join(ranked)]

    for extension in ring.extensions:
        lines.append(f"ext {extension.name} : {extension.minimal_polynomial_text}")

    style = ring.order.style
    lines.append(f"order elim {ring.order.split}" if style == "elim" else f"order {style}")
    members = polys.basis if isinstance(polys, GroebnerBasis) else polys.generators
    lines += [str(p) for p in members]
    return "\n".join(lines) + "\n"


def map_columns(
    lines: Sequence[str],
    dim: int,
    ring: Ring,
    path: str | None = None,
    numbers: Sequence[int] | None = None,
) -> list[tuple[Polynomial, ...]]:
    """
    Images of `e1 ... en` as coordinate vectors on `y1 ... yn`, one per source basis vector.

    Raises:
     - AlgebraFormatError: On a malformed, repeated, out-of-range or missing line.
    """
    columns: dict[int, tuple[Polynomial, ...]] = {}

    for position, line in enumerate(lines):
        number = numbers[position] if numbers is not None else None
        match = _MAP_LINE.match(line.strip())

        if match is None:
            raise AlgebraFormatError(f"Not a map line: {line!r}", path, number)

        index = int(match.group(1)) - 1

        if not 0 <= index < dim:
            raise AlgebraFormatError(f"e{index + 1} is outside dimension {dim}", path, number)

        if index in columns:
            raise AlgebraFormatError(f"e{index + 1} is mapped twice", path, number)

        try:
            columns[index] = parse_linear_combination(match.group(2), dim, ring, prefix="y")
        except (PolynomialSyntaxError, UnknownVariableError) as error:
            raise AlgebraFormatError(str(error), path, number) from error

    missing = [f"e{i + 1}" for i in range(dim) if i not in columns]

    if missing:
        raise AlgebraFormatError(f"No image given for {', '.join(missing)}", path)

    return [columns[i] for i in range(dim)]


def explicit_map(
    lines: Sequence[str],
    dim: int,
    extension: FieldExt | None = None,
    source: str | None = None,
    target: str | None = None,
) -> ExplicitMap:
    """
    A concrete map from `ei -> ...` lines whose coefficients are rational or lie in `extension`.
    """
    names = [extension.name] if extension is not None else []
    ring = Ring.from_names(names, extensions=[extension] if extension is not None else [])
    columns = map_columns(lines, dim, ring)
    rows = [[columns[j][i] for j in range(dim)] for i in range(dim)]
    return ExplicitMap.from_rows(rows, ring, source=source, target=target)


def parse_map(text: str, dim: int | None = None, path: str | None = None) -> ExplicitMap | GenericMap:  # noqa: E501
    """
    Parse a map file. Without `param` lines the map is concrete; with them it becomes a symbolic
    `GenericMap` whose determinant is inverted through a fresh variable `D`.

    Raises:
     - AlgebraFormatError: On syntax errors or a map that is never invertible.
    """
    header = _Header()
    lines: list[str] = []
    numbers: list[int] = []

    for number, line in _lines(text):
        if "->" in line:
            lines.append(line)
            numbers.append(number)
        elif not _header_line(header, line, path, number):
            raise AlgebraFormatError(f"Unrecognized line {line!r}", path, number)

    dim = len(lines) if dim is None else dim

    if header.dim is not None and header.dim != dim:
        raise AlgebraFormatError(f"Map of dimension {header.dim} used in dimension {dim}", path)

    ring = header.ring()
    columns = map_columns(lines, dim, ring, path, numbers)
    rows = [[columns[j][i] for j in range(dim)] for i in range(dim)]

    if not header.params:
        return ExplicitMap.from_rows(rows, ring, source=header.name)

    det_inverse = "D"

    while det_inverse in ring.names:
        det_inverse += "D"

    symbolic = ring.with_variables([Variable(det_inverse, VariableKind.DET_INVERSE)])
    entries = [[e.to_ring(symbolic) for e in row] for row in rows]
    determinant = linalg.determinant(entries, symbolic.zero)

    if determinant.is_zero:
        raise AlgebraFormatError("The map has zero determinant", path)

    try:
        return GenericMap.from_template(entries, determinant, det_inverse)
    except (ValueError, RingMismatchError) as error:
        raise AlgebraFormatError(str(error), path) from error


def read_map(path: str | Path, dim: int | None = None) -> ExplicitMap | GenericMap:
    path = Path(path)

    try:
        text = path.read_text(encoding="utf-8")
    except OSError as error:
        raise AlgebraFormatError(f"Cannot read file: {error.strerror}", str(path)) from error

    return parse_map(text, dim, str(path))


def render_map(phi: ExplicitMap) -> str:
    """
    Map file text, one `ei -> ...` line per source basis vector.
    """
    lines = [f"ext {e.name} : {e.minimal_polynomial_text}" for e in phi.ring.extensions]
    lines += map_lines(phi)
    return "\n".join(lines) + "\n"


def map_lines(phi: ExplicitMap) -> list[str]:
    return [f"e{j + 1} -> {format_vector(phi.column(j), prefix='y')}" for j in range(phi.size)]

