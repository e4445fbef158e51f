import argparse
import logging
import sys
from typing import Any, Sequence
import orjson
import pandas as pd
from pydantic import BaseModel
from kkdrop.algebra import DimensionDropAlgebra, HomKind
from kkdrop.arithmetic import lcm
from kkdrop.coeff_ktheory import (
    ConeDecomposition,
    ExactnessReport,
    GpElement,
    KTheoryReport,
    cone_report,
    ktheory_report,
    verify_bockstein_exactness,
)
from kkdrop.dtypes import EqualityMode, OutputFormat
from kkdrop.errors import InconsistencyError
from kkdrop.file import dumps_json, write_json, write_txt
from kkdrop.kk import KKCanonicalForm, KKElement, KKGroupInfo, kk_canonical, kk_group_info
from kkdrop.lifting import (
    AuditReport,
    FamilyElement,
    LiftReport,
    SearchResult,
    audit_claims,
    family_element,
    lift_report,
    search_counterexamples,
)
from kkdrop.triples import TripleReport, triple_report

logger = logging.getLogger(__name__)

TITLES: dict[type[BaseModel], str] = {
    KTheoryReport: "K-theory with Z_p coefficients (K0(A; G_p) ≅ Z ⊕ Z(m,p) with Bockstein maps μ, ν)",
    ExactnessReport: "Bockstein exact sequence (0 → K0(A) ⊗ Z_p → K0(A; Z_p) → Tor(K1(A), Z_p) → 0)",
    ConeDecomposition: "Dadarlat-Loring positive cone (spanned over N by the classes of δ0, δ1, id, id̄)",
    TripleReport: "Morphism triples of basic homomorphisms (triples (x, φ, y) induced by δ0, δ1, id, id̄)",
    KKCanonicalForm: "KK class in canonical form (Γ: KK(A, B) → triples (x, φ, y) is an isomorphism)",
    KKGroupInfo: "Structure of the KK group (generated by δ0, δ1, id, id̄)",
    LiftReport: "Lifting verdicts (liftable iff Γ preserves the Dadarlat-Loring order)",
    SearchResult: "Order preserving elements outside the span (candidates for non-liftable classes)",
    AuditReport: "Counterexample claims on I[2,12,3] (order preserving classes that do not lift)",
}


class ArgumentParser(argparse.ArgumentParser):
    """Raises usage errors as ValueError so they share the exit code of invalid input."""

    def error(self, message: str):
        raise ValueError(f"{self.prog}: {message}")


def algebra_literal(value: str) -> DimensionDropAlgebra:
    """Type checker for algebra literals "m0,m,m1"."""
    try:
        return DimensionDropAlgebra.parse(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def coefficient_literal(value: str) -> tuple[int, int, int, int]:
    """Type checker for coefficient literals "d0,d1,id,idbar"."""
    try:
        return KKElement.parse_coeffs(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def modulus(value: str) -> int:
    """Type checker for moduli p >= 2."""
    try:
        p = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{value!r} is not a valid integer")
    if p < 2:
        raise argparse.ArgumentTypeError(f"{value!r} is not a modulus >= 2")
    return p


def non_negative_int(value: str) -> int:
    try:
        i = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{value!r} is not a valid integer")
    if i < 0:
        raise argparse.ArgumentTypeError(f"{value!r} is negative")
    return i


def strictly_positive_int(value: str) -> int:
    i = non_negative_int(value)
    if i == 0:
        raise argparse.ArgumentTypeError(f"{value!r} is not strictly positive")
    return i


def equality_mode(value: str) -> EqualityMode:
    try:
        return EqualityMode.select(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def build_parser() -> ArgumentParser:
    common = ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        type=str,
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.TEXT.value,
        help="report format. default: text",
    )
    common.add_argument(
        "--output",
        type=str,
        default=None,
        help="also write the report to this file",
    )
    common.add_argument(
        "--equality",
        type=equality_mode,
        default=None,
        help="equality of triples: map or strict. default: $KKDROP_EQUALITY or map",
    )
    common.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log to stderr, -v for info and -vv for debug",
    )

    parser = ArgumentParser(
        prog="kkdrop",
        description="K-theory, KK classes and lifting tests for dimension drop interval algebras",
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")

    def single(name: str, help: str) -> ArgumentParser:
        command = commands.add_parser(name, help=help, parents=[common])
        command.add_argument(
            "--algebra", type=algebra_literal, required=True, help="algebra m0,m,m1"
        )
        command.add_argument(
            "--p", type=modulus, default=None, help="coefficient modulus. default: m"
        )
        return command

    def pair(name: str, help: str, with_p: bool = True) -> ArgumentParser:
        command = commands.add_parser(name, help=help, parents=[common])
        command.add_argument(
            "--source", type=algebra_literal, required=True, help="source m0,m,m1"
        )
        command.add_argument(
            "--target", type=algebra_literal, required=True, help="target m0,n,m1"
        )
        if with_p:
            command.add_argument(
                "--p",
                type=modulus,
                default=None,
                help="coefficient modulus. default: lcm(m, n)",
            )
        return command

    single("ktheory", "K-theory with Z_p coefficients and Bockstein maps")
    single("exactness", "verify the Bockstein exact sequence")
    cone = single("cone-decompose", "decompose a positive element into cone generators")
    cone.add_argument(
        "--element", type=str, required=True, help="element a,b,c (prefix '=' if negative)"
    )

    triple = pair("triple", "induced triples of basic homomorphisms")
    triple.add_argument(
        "--kind",
        type=str,
        choices=[k.value for k in HomKind],
        default=None,
        help="basic homomorphism. default: all four",
    )

    canon = pair("kk-canon", "canonical form of a KK element", with_p=False)
    canon.add_argument(
        "--coeffs",
        type=coefficient_literal,
        required=True,
        help="coefficients of δ0, δ1, id, id̄ (prefix '=' if negative)",
    )
    pair("kk-group", "structure of KK(A, B) with torsion census", with_p=False)

    lift = pair("lift-check", "lifting verdicts of a KK element")
    element = lift.add_mutually_exclusive_group(required=True)
    element.add_argument(
        "--coeffs",
        type=coefficient_literal,
        help="coefficients of δ0, δ1, id, id̄ (prefix '=' if negative)",
    )
    element.add_argument(
        "--x", type=int, help="K0 multiplicity of a family element"
    )
    lift.add_argument(
        "--d",
        type=non_negative_int,
        default=None,
        help="torsion parameter of the family element given by --x. default: 0",
    )

    search = pair("search", "search family elements that preserve the order but lie outside the span")
    search.add_argument(
        "--x-max", type=non_negative_int, default=None, help="largest x. default: m - 1"
    )
    search.add_argument(
        "--include-torsion",
        action="store_true",
        help="scan every torsion parameter d instead of d = 0",
    )
    search.add_argument(
        "--workers", type=strictly_positive_int, default=1, help="worker processes. default: 1"
    )
    search.add_argument("--progress", action="store_true", help="show a progress bar")
    search.add_argument("--csv", type=str, default=None, help="write the result table to CSV")

    commands.add_parser("audit", help="recompute the stated counterexamples", parents=[common])
    return parser


def _pair_modulus(args: argparse.Namespace) -> int:
    return args.p if args.p is not None else lcm(args.source.m, args.target.m)


def _run(args: argparse.Namespace) -> BaseModel:
    match args.command:
        case "ktheory":
            return ktheory_report(args.algebra, args.p or args.algebra.m)
        case "exactness":
            return verify_bockstein_exactness(args.algebra, args.p or args.algebra.m)
        case "cone-decompose":
            p = args.p or args.algebra.m
            return cone_report(GpElement.parse(args.element, args.algebra, p))
        case "triple":
            kind = HomKind(args.kind) if args.kind is not None else None
            return triple_report(args.source, args.target, _pair_modulus(args), kind)
        case "kk-canon":
            return kk_canonical(
                KKElement(source=args.source, target=args.target, coeffs=args.coeffs)
            )
        case "kk-group":
            return kk_group_info(args.source, args.target)
        case "lift-check":
            family = None
            if args.coeffs is not None:
                if args.d is not None:
                    raise ValueError("--d applies to family elements given by --x only.")
                e = KKElement(source=args.source, target=args.target, coeffs=args.coeffs)
            else:
                d = args.d or 0
                e = family_element(args.source, args.target, args.x, d)
                family = FamilyElement(x=args.x, d=d)
            return lift_report(e, _pair_modulus(args), args.equality, family=family)
        case "search":
            x_max = args.x_max if args.x_max is not None else args.source.m - 1
            return search_counterexamples(
                args.source,
                args.target,
                _pair_modulus(args),
                x_max,
                include_torsion=args.include_torsion,
                mode=args.equality,
                workers=args.workers,
                progress=args.progress,
            )
        case "audit":
            return audit_claims()
        case _:
            raise ValueError(f"Unknown command: {args.command}")


def _simplify(value: Any) -> Any:
    if isinstance(value, dict):
        if value.keys() >= {"m0", "m", "m1"}:
            return f"I[{value['m0']},{value['m']},{value['m1']}]"
        return {k: _simplify(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_simplify(v) for v in value]
    return value


def _inline(value: Any) -> str:
    if isinstance(value, str):
        return value
    return orjson.dumps(value).decode()


def render_text(report: BaseModel) -> str:
    """
    Renders a report as a heading, one line per scalar field and a table per list of records.
    """
    data = _simplify(report.model_dump(mode="json", by_alias=True))
    table = report.to_table() if hasattr(report, "to_table") else None
    lines = [f"# {TITLES.get(type(report), type(report).__name__)}"]
    for key, value in data.items():
        if table is not None and key in ("reports", "rows"):
            lines += [f"{key}:", table.to_text()]
        elif isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
            frame = pd.json_normalize(value).map(
                lambda v: _inline(v) if isinstance(v, (list, bool)) or v is None else v
            )
            lines += [f"{key}:", frame.to_string(index=False)]
        else:
            lines.append(f"{key}: {_inline(value)}")
    return "\n".join(lines) + "\n"


def render(report: BaseModel, format: OutputFormat) -> str:
    match format:
        case OutputFormat.JSON:
            return dumps_json(report) + "\n"
        case OutputFormat.TEXT:
            return render_text(report)


def main(argv: Sequence[str] | None = None) -> int:
    """
    Runs one command and returns the exit code.

    0 on success, 1 on invalid input, 2 if a runtime cross-check failed.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except ValueError as e:
        print(e, file=sys.stderr)
        return 1
    if args.command is None:
        parser.print_help(sys.stderr)
        return 1

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(
        stream=sys.stderr,
        level=level,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )

    try:
        report = _run(args)
    except InconsistencyError as e:
        print(f"inconsistency: {e}", file=sys.stderr)
        print(f"witness: {e.witness}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1

    format = OutputFormat.select(args.format)
    output = render(report, format)
    sys.stdout.write(output)
    if args.output:
        if format == OutputFormat.JSON:
            write_json(report, args.output, ensure_parent_dir_exists=True)
        else:
            write_txt(output, args.output, ensure_parent_dir_exists=True)
    if getattr(args, "csv", None):
        report.to_table().write_to_csv(args.csv)

    if isinstance(report, ExactnessReport) and not report.passed:
        failed = [s.name for s in report.segments if not s.passed]
        print(f"inconsistency: exactness fails at {failed}", file=sys.stderr)
        return 2
    return 0
