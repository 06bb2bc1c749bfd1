"""
Command Line Front End
======================

`novikov <verb> ...` binds the library together for batch use. Reports are plain text in a stable
order (or `json_schemas` dictionaries with `--json`) written to stdout; logging goes to stderr
through `rich`.

Verbs:
------
 - `check <alg>`: Novikov axioms, associated Lie algebra, completeness and invariants.
 - `lie <alg> [--identify]`: commutator table; `--identify` compares it with the catalog Lie
   algebras of the same dimension.
 - `tg <lie>`: the family of Novikov structures on a Lie algebra file or catalog name
   (`g1`, `g2:alpha=1/2`, `h1`, `abelian:3`, `r2`).
 - `act <alg> <map>`: the algebra transported along a concrete or symbolic map.
 - `iso <algA> <algB> [--field R|C]`: isomorphism verdict with witness or certificate.
 - `relate <famA> <famB> [--template heisenberg]`: parameter relations of two families.
 - `gb <ideal>`: reduced Gröbner basis.
 - `catalog list|verify|show`: the shipped classification and its verification harness.
 - `caa build --dim n --field R|C [--pairs]`: commutative associative algebra classes.
 - `version`.

Exit codes:
-----------
 - 0: success, or an affirmative answer.
 - 1: a negative answer was decided (not isomorphic, an axiom fails, a catalog check failed).
 - 2: undecided, or the Gröbner budget ran out.
 - 3: input error (bad file, unknown name, bad flag).

Example Usage:
-------------
```
novikov --budget 50000 iso n1.alg n2.alg --field C
novikov tg g2:alpha=1/2 --samples 3
novikov catalog verify --scope dim3 --json
```
"""  # noqa: E501

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from rich.console import Console
from rich.logging import RichHandler

import novikov_groebner
from novikov_groebner.algebra import (
    DimensionMismatchError,
    JacobiViolationError,
    LieTable,
    NotNovikovError,
    StructureConstants,
    SymbolicParameterError,
    algebra_invariants,
    associated_lie,
    check_novikov,
    is_complete,
)
from novikov_groebner.catalog import (
    CAAPairResult,
    Catalog,
    CatalogReport,
    IdentityExistsError,
    ManifestError,
    UnknownEntryError,
    UnsupportedDimensionError,
    build_caa_list,
    caa_pair_report,
    load_catalog,
    verify_catalog,
)
from novikov_groebner.formats import (
    AlgebraFormatError,
    map_lines,
    read_algebra,
    read_ideal,
    read_map,
    render_algebra,
)
from novikov_groebner.groebner import BudgetExhaustedError, buchberger
from novikov_groebner.iso import (
    InverseCheckError,
    Isomorphic,
    NotIsomorphic,
    SharedParameterError,
    Undecided,
    Verdict,
    apply_automorphism,
    decide_iso,
    heisenberg_automorphisms,
    relate_families,
)
from novikov_groebner.json_schemas import CheckReportJSON, FingerprintJSON, VerdictJSON
from novikov_groebner.parameter_schemas import CatalogScope, FieldTag
from novikov_groebner.poly import PolynomialSyntaxError, UnknownVariableError
from novikov_groebner.settings import Settings, SettingsError, load_settings
from novikov_groebner.variety import (
    InconsistentSystemError,
    ParametricLieError,
    sample_family,
    tg_family,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_UNDECIDED = 2
EXIT_INPUT = 3

_INPUT_ERRORS = (
    AlgebraFormatError,
    DimensionMismatchError,
    JacobiViolationError,
    SymbolicParameterError,
    NotNovikovError,
    ManifestError,
    UnknownEntryError,
    UnsupportedDimensionError,
    IdentityExistsError,
    InverseCheckError,
    ParametricLieError,
    InconsistentSystemError,
    PolynomialSyntaxError,
    UnknownVariableError,
    SettingsError,
    SharedParameterError,
    OSError,
)

_SCOPES: tuple[CatalogScope, ...] = ("dim3", "dim4-nilpotent-lie", "caa", "examples", "all")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def _report_console() -> Console:
    return Console(markup=False, highlight=False, soft_wrap=True, emoji=False)


def configure_logging(level: str) -> None:
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="novikov", description="Exact classification toolkit for Novikov algebras.")  # noqa: E501
    parser.add_argument("--seed", type=int, default=None, help="Seed of randomized sampling.")
    parser.add_argument("--budget", type=int, default=None, help="Gröbner reduction-step budget.")
    parser.add_argument(
        "--log-level",
        choices=("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"),
        default=None,
    )
    verbs = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    check = verbs.add_parser("check", help="Novikov axioms, Lie algebra and invariants.")
    check.add_argument("algebra")
    check.add_argument("--json", action="store_true")

    lie = verbs.add_parser("lie", help="Commutator algebra.")
    lie.add_argument("algebra")
    lie.add_argument("--identify", action="store_true")
    lie.add_argument("--field", choices=("R", "C"), default=None)

    tg = verbs.add_parser("tg", help="Novikov structures on a Lie algebra.")
    tg.add_argument("lie", help="Lie algebra file or catalog name such as g2:alpha=1/2.")
    tg.add_argument("--field", choices=("R", "C"), default=None)
    tg.add_argument("--samples", type=int, default=0, help="Print this many sample members.")

    act = verbs.add_parser("act", help="Transport an algebra along a map.")
    act.add_argument("algebra")
    act.add_argument("map")

    iso = verbs.add_parser("iso", help="Decide isomorphism of two algebras.")
    iso.add_argument("first")
    iso.add_argument("second")
    iso.add_argument("--field", choices=("R", "C"), default=None)
    iso.add_argument("--json", action="store_true")

    relate = verbs.add_parser("relate", help="Parameter relations of two families.")
    relate.add_argument("first")
    relate.add_argument("second")
    relate.add_argument("--template", choices=("generic", "heisenberg"), default="generic")

    gb = verbs.add_parser("gb", help="Reduced Gröbner basis of an ideal file.")
    gb.add_argument("ideal")

    catalog = verbs.add_parser("catalog", help="The shipped classification.")
    actions = catalog.add_subparsers(dest="action", required=True, parser_class=_Parser)
    listing = actions.add_parser("list")
    listing.add_argument("--scope", choices=_SCOPES, default="all")
    verify = actions.add_parser("verify")
    verify.add_argument("--scope", choices=_SCOPES, default="all")
    verify.add_argument("--field", choices=("R", "C"), default=None)
    verify.add_argument("--json", action="store_true")
    show = actions.add_parser("show")
    show.add_argument("name")

    caa = verbs.add_parser("caa", help="Commutative associative algebra classes.")
    caa_actions = caa.add_subparsers(dest="action", required=True, parser_class=_Parser)
    build = caa_actions.add_parser("build")
    build.add_argument("--dim", type=int, required=True)
    build.add_argument("--field", choices=("R", "C"), default="C")
    build.add_argument("--pairs", action="store_true", help="Also certify pairwise distinctness.")
    build.add_argument("--sample", type=int, default=None, help="Limit the number of pairs.")

    verbs.add_parser("version")
    return parser


def _indent(lines: Sequence[str]) -> list[str]:
    return ["  " + line for line in lines]


def _fingerprint_json(A: StructureConstants) -> FingerprintJSON:
    data = algebra_invariants(A).as_dict()
    signature = data["trace_form_signature"]
    data["trace_form_signature"] = list(signature) if signature is not None else None  # type: ignore[arg-type]  # noqa: E501
    return data  # type: ignore[return-value]


def cmd_check(args: argparse.Namespace, settings: Settings, out: Console) -> int:
    A = read_algebra(args.algebra)
    report = check_novikov(A)
    lie = associated_lie(A)
    data: CheckReportJSON = {
        "name": A.name or args.algebra,
        "novikov": report.ok,
        "left_symmetric": report.left_symmetric,
        "right_commutative": report.right_commutative,
        "lie": lie.bracket_rules(),
    }

    if report.failures:
        data["failures"] = [str(f) for f in report.failures]

        if A.is_symbolic:
            data["conditions"] = [str(p) for p in report.conditions()]

    if report.ok:
        data["complete"] = is_complete(A)

        if not A.is_symbolic:
            data["fingerprint"] = _fingerprint_json(A)

    if args.json:
        out.out(json.dumps(data, indent=2))
        return EXIT_OK if report.ok else EXIT_NEGATIVE

    lines = [
        f"algebra: {data['name']}",
        f"field: {A.field_tag}",
        f"dim: {A.dim}",
        f"novikov: {'yes' if report.ok else 'no'}",
        f"left-symmetric: {'yes' if report.left_symmetric else 'no'}",
        f"right-commutative: {'yes' if report.right_commutative else 'no'}",
    ]
    lines += _indent(data.get("failures", []))

    if data.get("conditions"):
        lines.append("conditions:")
        lines += _indent(data["conditions"])

    lines.append("lie:" if data["lie"] else "lie: abelian")
    lines += _indent(data["lie"])

    if "complete" in data:
        lines.append(f"complete: {'true' if data['complete'] else 'false'}")

    for key, value in data.get("fingerprint", {}).items():
        lines.append(f"{key}: {value}")

    out.out("\n".join(lines))
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def _identify(lie: LieTable, field_tag: FieldTag, catalog: Catalog, budget: int) -> tuple[list[str], int]:  # noqa: E501
    candidates = [LieTable.abelian(lie.dim)]
    candidates += [t for t in catalog.lie_algebras.values() if t.dim == lie.dim]
    lines = []
    found = undecided = False

    for candidate in candidates:
        if candidate.is_symbolic:
            lines.append(f"{candidate.name}: family, not compared")
            continue

        verdict = decide_iso(lie, candidate, field_tag, budget=budget)
        found = found or isinstance(verdict, Isomorphic)
        undecided = undecided or isinstance(verdict, Undecided)
        lines.append(f"{candidate.name}: {_verdict_word(verdict)}")

    if found:
        return lines, EXIT_OK

    return lines, EXIT_UNDECIDED if undecided else EXIT_NEGATIVE


def cmd_lie(args: argparse.Namespace, settings: Settings, out: Console) -> int:
    A = read_algebra(args.algebra)
    lie = associated_lie(A)
    lines = [f"lie algebra of {A.name or args.algebra}:"]
    lines += _indent(lie.bracket_rules() or ["abelian"])
    code = EXIT_OK

    if args.identify:
        field_tag = args.field or A.field_tag
        matches, code = _identify(lie, field_tag, load_catalog(), settings.budget)
        lines.append(f"identification over {field_tag}:")
        lines += _indent(matches)

    out.out("\n".join(lines))
    return code


def _lie_source(text: str, catalog: Catalog) -> LieTable:
    path = Path(text)

    if path.suffix == ".alg" or path.is_file():
        table = read_algebra(path)

        if not isinstance(table, LieTable):
            raise AlgebraFormatError("Expected a Lie algebra given by bracket lines", str(path))

        return table

    return catalog.lie(text)


def cmd_tg(args: argparse.Namespace, settings: Settings, out: Console) -> int:
    g = _lie_source(args.lie, load_catalog())
    family = tg_family(g, args.field)
    lines = [
        f"family: {family.algebra.name or 'T(g)'}",
        f"free parameters: {len(family.params)}",
    ]
    lines += _indent([f"{parameter} = {unknown}" for parameter, unknown in family.free])
    lines.append("products:")
    lines += _indent(family.algebra.product_rules() or ["none"])
    lines.append("residual:" if family.residual else "residual: none")
    lines += _indent([str(p) for p in family.residual])

    if args.samples:
        members = sample_family(family, settings.sample_grid, args.samples, settings.seed)
        lines.append(f"samples: {len(members)}")

        for member in members:
            lines.append(f"  {member.name}")
            lines += _indent(_indent(member.product_rules()))

    out.out("\n".join(lines))
    return EXIT_OK


def cmd_act(args: argparse.Namespace, settings: Settings, out: Console) -> int:
    A = read_algebra(args.algebra)
    phi = read_map(args.map, dim=A.dim)
    out.out(render_algebra(apply_automorphism(phi, A)).rstrip("\n"))
    return EXIT_OK


def _verdict_word(verdict: Verdict) -> str:
    if isinstance(verdict, Isomorphic):
        return "isomorphic"

    if isinstance(verdict, NotIsomorphic):
        return f"not-isomorphic ({verdict.kind})"

    return f"undecided ({verdict.reason})"


def verdict_json(verdict: Verdict, A: StructureConstants, B: StructureConstants, field_tag: FieldTag) -> VerdictJSON:  # noqa: E501
    data: VerdictJSON = {
        "verdict": _verdict_word(verdict).split(" ")[0],
        "source": A.name or "A",
        "target": B.name or "B",
        "field": field_tag,
    }

    if isinstance(verdict, Isomorphic):
        data["witness"] = map_lines(verdict.witness)
    elif isinstance(verdict, NotIsomorphic):
        data["kind"] = verdict.kind
        data["evidence"] = verdict.evidence
    else:
        data["kind"] = verdict.reason

        if verdict.partial is not None:
            data["partial_basis"] = [str(p) for p in verdict.partial.basis]

        if verdict.complex_witness is not None:
            data["witness"] = map_lines(verdict.complex_witness)

    return data


def _verdict_code(verdict: Verdict) -> int:
    if isinstance(verdict, Isomorphic):
        return EXIT_OK

    return EXIT_NEGATIVE if isinstance(verdict, NotIsomorphic) else EXIT_UNDECIDED


def cmd_iso(args: argparse.Namespace, settings: Settings, out: Console) -> int:
    A = read_algebra(args.first)
    B = read_algebra(args.second)
    field_tag: FieldTag = args.field or ("R" if A.field_tag == B.field_tag == "R" else "C")
    verdict = decide_iso(A, B, field_tag, budget=settings.budget)
    data = verdict_json(verdict, A, B, field_tag)

    if args.json:
        out.out(json.dumps(data, indent=2))
        return _verdict_code(verdict)

    lines = [f"{data['source']} vs {data['target']} over {field_tag}: {_verdict_word(verdict)}"]

    if isinstance(verdict, NotIsomorphic):
        lines.append(f"certificate: {verdict.evidence}")
    elif "witness" in data:
        lines.append("witness (complex only):" if isinstance(verdict, Undecided) else "witness:")
        lines += _indent(data["witness"])

    out.out("\n".join(lines))
    return _verdict_code(verdict)


def cmd_relate(args: argparse.Namespace, settings: Settings, out: Console) -> int:
    A = read_algebra(args.first)
    B = read_algebra(args.second)
    gmap = heisenberg_automorphisms() if args.template == "heisenberg" else None
    relations = relate_families(A, B, gmap, settings.budget)

    if not relations:
        out.out("no relation")
        return EXIT_OK

    out.out("\n".join(str(p) for p in relations))
    return EXIT_OK


def cmd_gb(args: argparse.Namespace, settings: Settings, out: Console) -> int:
    ideal = read_ideal(args.ideal)
    gb = buchberger(ideal, settings.budget)
    logger.info("Reduced basis of %d elements in %d steps", len(gb.basis), gb.steps_used)
    out.out("\n".join(str(p) for p in gb.basis))
    return EXIT_OK


def _report_code(report: CatalogReport) -> int:
    if report.failures:
        return EXIT_NEGATIVE

    return EXIT_UNDECIDED if report.undecided else EXIT_OK


def cmd_catalog(args: argparse.Namespace, settings: Settings, out: Console) -> int:
    catalog = load_catalog()

    if args.action == "list":
        lines = []

        for entry in catalog.entries_for(args.scope):
            params = ",".join(entry.params) or "-"
            lines.append(f"{entry.name}\t{entry.lie_name}\t{entry.field_tag}\t{entry.dim}\t{params}")  # noqa: E501

        out.out("\n".join(lines))
        return EXIT_OK

    if args.action == "show":
        entry = catalog.entry(args.name)
        header = [f"# {entry.source}"]
        header += [f"# lie {entry.lie_name}"]
        header += [f"# note: {entry.note}"] if entry.note else []
        header += [f"# claim {claim}" for claim in entry.remarks]
        out.out("\n".join(header) + "\n" + render_algebra(entry.table).rstrip("\n"))
        return EXIT_OK

    budget = settings.budget if args.budget_given else settings.catalog_budget
    report = verify_catalog(
        args.scope,
        {"budget": budget, "samples": list(settings.sample_grid), **({"field": args.field} if args.field else {})},  # noqa: E501
        catalog,
    )

    if args.json:
        out.out(json.dumps(report.as_dict(), indent=2))
    else:
        lines = [str(r) for r in report.results]
        lines.append(
            f"{len(report.verified)} verified, {len(report.failures)} failed, "
            f"{len(report.undecided)} undecided"
        )
        out.out("\n".join(lines))

    return _report_code(report)


def _pair_line(pair: CAAPairResult) -> str:
    return f"{pair.first} vs {pair.second}: {_verdict_word(pair.verdict)}"


def cmd_caa(args: argparse.Namespace, settings: Settings, out: Console) -> int:
    specs = build_caa_list(args.dim, args.field)
    lines = [f"{len(specs)} classes of dimension {args.dim} over {args.field}"]

    for spec in specs:
        lines.append(spec.name)
        lines += _indent(spec.assembled.product_rules())

    code = EXIT_OK

    if args.pairs:
        pairs = caa_pair_report(args.dim, args.field, settings.budget, args.sample)
        lines.append(f"pairs: {len(pairs)}")
        lines += _indent([_pair_line(p) for p in pairs])

        if any(isinstance(p.verdict, Isomorphic) for p in pairs):
            code = EXIT_NEGATIVE
        elif any(isinstance(p.verdict, Undecided) for p in pairs):
            code = EXIT_UNDECIDED

    out.out("\n".join(lines))
    return code


def cmd_version(args: argparse.Namespace, settings: Settings, out: Console) -> int:
    out.out(f"novikov-groebner {novikov_groebner.__version__}")
    return EXIT_OK


COMMANDS = {
    "check": cmd_check,
    "lie": cmd_lie,
    "tg": cmd_tg,
    "act": cmd_act,
    "iso": cmd_iso,
    "relate": cmd_relate,
    "gb": cmd_gb,
    "catalog": cmd_catalog,
    "caa": cmd_caa,
    "version": cmd_version,
}


def run(argv: Sequence[str] | None = None, out: Console | None = None) -> int:
    """
    Parse `argv`, run the verb and return the exit code. Errors are reported on stderr.
    """
    out = _report_console() if out is None else out
    errors = Console(stderr=True, markup=False, highlight=False)

    try:
        args = build_parser().parse_args(argv)
        settings = load_settings(budget=args.budget, seed=args.seed, log_level=args.log_level)
    except (UsageError, SettingsError) as error:
        errors.print(f"error: {error}")
        return EXIT_INPUT

    configure_logging(settings.log_level)
    args.budget_given = args.budget is not None

    try:
        return COMMANDS[args.verb](args, settings, out)
    except BudgetExhaustedError as error:
        logger.warning("Budget of %d steps exhausted", settings.budget)
        errors.print(f"undecided: {error}")
        return EXIT_UNDECIDED
    except _INPUT_ERRORS as error:
        errors.print(f"error: {error}")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
