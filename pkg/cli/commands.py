# cli/commands.py
"""
argparse front end.

run_command(argv, out, config) parses one command line, runs it and returns
the exit code:

    0  success, or every verify-paper check passed
    1  at least one verify-paper check failed
    2  usage, parse or input error
    3  computational error (the request has no answer for this input)

Results go to `out`; logs go to stderr through loguru.
"""
import argparse
import asyncio
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, TextIO

from loguru import logger

from algebra.errors import ComputationError, InvalidInputError
from algebra.fields import FieldSpec
from algebra.ideals import Ideal
from analysis import artinian, geometry
from catalog import constructions
from catalog.families import classify_fiber, family_fiber, degeneration_families
from catalog.models import gfat, gfat_with_point, projective_ring
from cli.checks import CHECKS
from cli.documents import IdealDocument, MatrixDocument, read_document
from cli.interpreter import classify_any, is_affine, run_script
from config.config_model import ConfigModel
from services.catalog_store import CATALOG_PATH, CatalogStore
from services.report_messages import (
    CheckStatus,
    CommandResult,
    ReportDocument,
    ReportKind,
    input_digest,
)
from services.verify_runner import VerifyRunner

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_COMPUTATION = 3


class UsageError(InvalidInputError):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


@dataclass
class CommandContext:
    out: TextIO
    config: ConfigModel
    json: bool
    seed: int
    field_override: FieldSpec | None

    @property
    def field_spec(self) -> FieldSpec:
        return self.field_override or self.config.field_spec


# ── output ───────────────────────────────────────────────────


def _emit(ctx: CommandContext, command: str, value: Any, ring: str | None = None, text: str | None = None) -> int:
    result = CommandResult(command=command, value=value, ring=ring)
    if ctx.json:
        ctx.out.write(result.model_dump_json(indent=2) + "\n")
    else:
        ctx.out.write((text if text is not None else result.as_text()) + "\n")
    return EXIT_OK


def _emit_ideal(ctx: CommandContext, command: str, ideal: Ideal) -> int:
    return _emit(ctx, command, ideal.format(), ring=str(ideal.ring))


def _load_ideal(ctx: CommandContext, path: Path) -> tuple[Ideal, str]:
    doc, text = read_document(path, IdealDocument)
    return doc.to_ideal(ctx.field_override), text


def _load_matrix(ctx: CommandContext, path: Path):
    doc, _ = read_document(path, MatrixDocument)
    ring = doc.ring.to_ring(ctx.field_override)
    return doc, doc.to_entries(ring), ring


def _parse_point(text: str, field_spec: FieldSpec) -> list:
    """Comma-separated rationals as field elements."""
    try:
        return [field_spec.scalar(Fraction(part.strip())) for part in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise InvalidInputError(f"cannot read point '{text}'; expected comma-separated rationals") from None


# ── analysis commands ────────────────────────────────────────


def cmd_gb(args, ctx: CommandContext) -> int:
    I, _ = _load_ideal(ctx, args.ideal)
    return _emit_ideal(ctx, "gb", Ideal.from_basis(I.groebner))


def cmd_hfun(args, ctx: CommandContext) -> int:
    I, _ = _load_ideal(ctx, args.ideal)
    up_to = args.up_to if args.up_to is not None else geometry.stabilization_degree(I)
    h = geometry.hilbert_function(I, up_to)
    return _emit(ctx, "hfun", h, text=" ".join(str(v) for v in h))


def cmd_classify(args, ctx: CommandContext) -> int:
    I, _ = _load_ideal(ctx, args.ideal)
    return _emit(ctx, "classify", str(classify_any(I, ctx.seed)))


def cmd_tangent(args, ctx: CommandContext) -> int:
    I, _ = _load_ideal(ctx, args.ideal)
    if is_affine(I):
        value = geometry.affine_tangent_dim_direct(I) if args.direct else geometry.affine_tangent_dim(I)
    else:
        value = geometry.tangent_dim_direct(I, ctx.seed) if args.direct else geometry.tangent_dim(I, ctx.seed)
    return _emit(ctx, "tangent", value)


def cmd_is_ag(args, ctx: CommandContext) -> int:
    I, _ = _load_ideal(ctx, args.ideal)
    return _emit(ctx, "is-ag", geometry.is_aG(I, ctx.seed))


def cmd_stratum(args, ctx: CommandContext) -> int:
    I, _ = _load_ideal(ctx, args.ideal)
    layer = geometry.stratum(I, args.degree, ag=args.ag)
    value = {"span_codim": layer.span_codim, "label": layer.label, "admissible": layer.admissible}
    return _emit(ctx, "stratum", value, text=f"{layer.span_codim} {layer.label}")


def cmd_project(args, ctx: CommandContext) -> int:
    I, _ = _load_ideal(ctx, args.ideal)
    image = geometry.project_from_point(I, _parse_point(args.point, I.ring.field), ctx.seed)
    return _emit_ideal(ctx, "project", image)


def cmd_report(args, ctx: CommandContext) -> int:
    I, text = _load_ideal(ctx, args.ideal)
    if is_affine(I):
        document = ReportDocument(kind=ReportKind.artinian, artinian=artinian.analyze_local(I), input_digest=input_digest(text))
    else:
        document = ReportDocument(kind=ReportKind.scheme, scheme=geometry.scheme_report(I, ctx.seed), input_digest=input_digest(text))
    ctx.out.write(document.model_dump_json(indent=2, exclude_none=True) + "\n")
    return EXIT_OK


# ── constructions ────────────────────────────────────────────


def cmd_construct_gfat(args, ctx: CommandContext) -> int:
    I = gfat_with_point(args.d, ctx.field_spec) if args.with_point else gfat(args.d, ctx.field_spec)
    return _emit_ideal(ctx, "construct gfat", I)


def cmd_construct_scandinavian(args, ctx: CommandContext) -> int:
    doc, M, ring = _load_matrix(ctx, args.matrix)
    if doc.is_cube or len(M) != 3:
        raise InvalidInputError("scandinavian needs a 3x3 matrix")
    return _emit_ideal(ctx, "construct scandinavian", constructions.scandinavian(M, ring).ideal)


def cmd_construct_anglo_american(args, ctx: CommandContext) -> int:
    doc, T, ring = _load_matrix(ctx, args.matrix)
    if not doc.is_cube:
        raise InvalidInputError("anglo-american needs a 2x2x2 array")
    return _emit_ideal(ctx, "construct anglo-american", constructions.anglo_american(T, ring).ideal)


def cmd_construct_british(args, ctx: CommandContext) -> int:
    _, A, ring = _load_matrix(ctx, args.antisymmetric)
    _, S, sym_ring = _load_matrix(ctx, args.symmetric)
    if ring != sym_ring:
        raise InvalidInputError("A and S must live in the same ring")
    if len(A) != 3 or len(S) != 3:
        raise InvalidInputError("british needs 3x3 matrices A and S")
    q = ring.parse(args.q)
    return _emit_ideal(ctx, "construct british", constructions.british(A, S, q, ring).ideal)


def cmd_construct_japanese(args, ctx: CommandContext) -> int:
    plane = projective_ring(ctx.field_spec, 2)
    X = constructions.japanese(plane.parse(args.conic), plane.parse(args.cubic), plane)
    return _emit_ideal(ctx, "construct japanese", X)


def cmd_construct_italian(args, ctx: CommandContext) -> int:
    I5, _ = _load_ideal(ctx, args.ideal)
    target = I5.ring.with_variables(I5.ring.variables + (args.new_variable,))
    X = constructions.italian(I5, target.parse(args.g), target)
    return _emit_ideal(ctx, "construct italian", X)


def cmd_construct_anglo_hellenic(args, ctx: CommandContext) -> int:
    doc, A, ring = _load_matrix(ctx, args.matrix)
    if doc.is_cube or len(A) != 5:
        raise InvalidInputError("anglo-hellenic needs a 5x5 antisymmetric matrix")
    X = constructions.anglo_hellenic(A, ring.parse(args.s), ring)
    return _emit_ideal(ctx, "construct anglo-hellenic", X)


# ── families and catalog ─────────────────────────────────────


def cmd_family_fiber(args, ctx: CommandContext) -> int:
    families = {f.name: f for f in degeneration_families(ctx.field_spec)}
    family = families[args.family]
    (b0,) = _parse_point(args.b, ctx.field_spec)
    fiber = family_fiber(family, b0)
    label = str(classify_fiber(family, b0))
    value = {"label": label, "generators": fiber.format()}
    return _emit(ctx, "family-fiber", value, ring=str(fiber.ring), text="\n".join([label, *fiber.format()]))


def cmd_catalog_list(args, ctx: CommandContext) -> int:
    store = CatalogStore(args.catalog, ctx.field_spec)
    return _emit(ctx, "catalog list", store.names())


def cmd_catalog_show(args, ctx: CommandContext) -> int:
    store = CatalogStore(args.catalog, ctx.field_spec)
    entry = store.get(args.label)
    value = {
        "label": entry.name,
        "hilbert": list(entry.hilbert),
        "affine": entry.affine_model.format(),
        "projective": entry.projective_model.format() if entry.projective_model else None,
    }
    lines = [entry.name]
    if entry.hilbert:
        lines.append("H = " + " ".join(str(v) for v in entry.hilbert))
    lines.append("affine: " + ", ".join(value["affine"]))
    if value["projective"]:
        lines.append("P^4: " + ", ".join(value["projective"]))
    return _emit(ctx, "catalog show", value, text="\n".join(lines))


# ── verify-paper ─────────────────────────────────────────────


async def _verify(ctx: CommandContext, pattern: str | None, seeds: list[int]) -> list:
    verdicts = []
    for seed in seeds:
        runner = VerifyRunner(ctx.field_spec, ctx.config.verify.max_concurrent, seed)
        batch = await runner.run(CHECKS.values(), pattern)
        if len(seeds) > 1:
            batch = [v.model_copy(update={"name": f"{v.name}@{seed}"}) for v in batch]
        verdicts.extend(batch)
    return verdicts


def cmd_verify(args, ctx: CommandContext) -> int:
    if not VerifyRunner.select(CHECKS.values(), args.filter):
        raise UsageError(f"no check matches '{args.filter}'; known: {', '.join(sorted(CHECKS))}")
    seeds = [args.seed] if args.seed is not None else ctx.config.verify.seeds
    verdicts = asyncio.run(_verify(ctx, args.filter, seeds))
    document = ReportDocument(kind=ReportKind.verify, verdicts=verdicts)
    if ctx.json:
        ctx.out.write(document.model_dump_json(indent=2) + "\n")
    else:
        for verdict in verdicts:
            ctx.out.write(verdict.as_text() + "\n")
        counts = {status: sum(v.status is status for v in verdicts) for status in CheckStatus}
        ctx.out.write(", ".join(f"{n} {status.value}" for status, n in counts.items()) + "\n")
    return EXIT_OK if document.passed else EXIT_CHECK_FAILED


# ── scripts, schema, config ──────────────────────────────────


def cmd_run(args, ctx: CommandContext) -> int:
    try:
        text = Path(args.script).read_text(encoding="utf-8")
    except OSError as e:
        raise InvalidInputError(f"cannot read {args.script}: {e}") from None
    run_script(text, ctx.out, ctx.seed, ctx.field_override, ctx.config.saturation_cap)
    return EXIT_OK


def cmd_schema(args, ctx: CommandContext) -> int:
    ctx.out.write(json.dumps(ReportDocument.model_json_schema(), indent=2) + "\n")
    return EXIT_OK


def cmd_config(args, ctx: CommandContext) -> int:
    ctx.out.write(ctx.config.model_dump_json(indent=2) + "\n")
    return EXIT_OK


# ── parser ───────────────────────────────────────────────────


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="write results as JSON")
    common.add_argument("--seed", type=int, default=None, help="seed for randomized steps (default from config)")
    common.add_argument("--field", default=None, help="override the coefficient field: QQ or Fp(p)")

    parser = _ArgumentParser(prog="ag-points", description="Arithmetically Gorenstein points of degree d in P^(d-2)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    def ideal_command(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--ideal", type=Path, required=True, help="ideal JSON document")
        p.set_defaults(handler=handler)
        return p

    ideal_command("gb", cmd_gb, "reduced Groebner basis")
    p = ideal_command("hfun", cmd_hfun, "Hilbert function of S/I")
    p.add_argument("--up-to", type=int, default=None, help="last degree (default: past stabilization)")
    ideal_command("classify", cmd_classify, "label of the quotient algebra")
    p = ideal_command("tangent", cmd_tangent, "dim I/I^2 of the affine ideal")
    p.add_argument("--direct", action="store_true", help="count a basis of I/I^2 instead of dim R/I^2 - dim R/I")
    ideal_command("is-ag", cmd_is_ag, "arithmetically Gorenstein test")
    p = ideal_command("stratum", cmd_stratum, "span codimension and stratum label")
    p.add_argument("--degree", type=int, default=None, help="degree of the scheme (computed when omitted)")
    p.add_argument("--ag", action="store_true", help="reject span codimensions impossible for aG schemes")
    p = ideal_command("project", cmd_project, "project from a simple point of the scheme")
    p.add_argument("--point", required=True, help="projective coordinates, e.g. 1,0,0,0,0,1")
    ideal_command("report", cmd_report, "full JSON report with provenance")

    construct = sub.add_parser("construct", help="named constructions")
    kinds = construct.add_subparsers(dest="construction", required=True, parser_class=_ArgumentParser)
    p = kinds.add_parser("gfat", parents=[common], help="G-fat point G_d in P^(d-2)")
    p.add_argument("--d", type=int, required=True, help="degree, at least 4")
    p.add_argument("--with-point", action="store_true", help="G_(d-1) plus one simple point (d >= 5)")
    p.set_defaults(handler=cmd_construct_gfat)
    for name, handler in (("scandinavian", cmd_construct_scandinavian), ("anglo-american", cmd_construct_anglo_american)):
        p = kinds.add_parser(name, parents=[common], help=f"{name} construction from a matrix document")
        p.add_argument("--matrix", type=Path, required=True)
        p.set_defaults(handler=handler)
    p = kinds.add_parser("british", parents=[common], help="pfaffians of the extrasymmetric matrix")
    p.add_argument("--antisymmetric", type=Path, required=True, help="3x3 antisymmetric A")
    p.add_argument("--symmetric", type=Path, required=True, help="3x3 symmetric S")
    p.add_argument("--q", default="1", help="constant q")
    p.set_defaults(handler=cmd_construct_british)
    p = kinds.add_parser("japanese", parents=[common], help="conic and cubic in P^2, mapped into P^4")
    p.add_argument("--conic", required=True)
    p.add_argument("--cubic", required=True)
    p.set_defaults(handler=cmd_construct_japanese)
    p = kinds.add_parser("italian", parents=[common], help="add a point to a degree-5 scheme in P^3")
    p.add_argument("--ideal", type=Path, required=True, help="degree-5 scheme through [1:0:0:0]")
    p.add_argument("--g", required=True, help="linear form involving the new variable")
    p.add_argument("--new-variable", default="x4")
    p.set_defaults(handler=cmd_construct_italian)
    p = kinds.add_parser("anglo-hellenic", parents=[common], help="unprojection of a pfaffian ideal")
    p.add_argument("--matrix", type=Path, required=True, help="5x5 antisymmetric matrix")
    p.add_argument("--s", required=True, help="linear form substituted for the unprojection variable")
    p.set_defaults(handler=cmd_construct_anglo_hellenic)

    p = sub.add_parser("family-fiber", parents=[common], help="fiber of a degeneration family")
    p.add_argument("--family", required=True, choices=[f.name for f in degeneration_families()])
    p.add_argument("--b", required=True, help="parameter value")
    p.set_defaults(handler=cmd_family_fiber)

    catalog = sub.add_parser("catalog", help="degree-6 Gorenstein catalog")
    actions = catalog.add_subparsers(dest="action", required=True, parser_class=_ArgumentParser)
    p = actions.add_parser("list", parents=[common])
    p.add_argument("--catalog", type=Path, default=CATALOG_PATH)
    p.set_defaults(handler=cmd_catalog_list)
    p = actions.add_parser("show", parents=[common])
    p.add_argument("label")
    p.add_argument("--catalog", type=Path, default=CATALOG_PATH)
    p.set_defaults(handler=cmd_catalog_show)

    p = sub.add_parser("verify-paper", aliases=["verify"], parents=[common], help="run the named acceptance checks")
    p.add_argument("--filter", default=None, help="check name or glob, e.g. 'tangent-*'")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("run", parents=[common], help="execute a script")
    p.add_argument("script", type=Path)
    p.set_defaults(handler=cmd_run)

    p = sub.add_parser("schema", parents=[common], help="JSON schema of report documents")
    p.set_defaults(handler=cmd_schema)
    p = sub.add_parser("config", parents=[common], help="effective configuration")
    p.set_defaults(handler=cmd_config)
    return parser


def run_command(argv: list[str], out: TextIO | None = None, config: ConfigModel | None = None) -> int:
    """Parse and run one command line; never raises for domain errors."""
    out = out or sys.stdout
    config = config or ConfigModel()
    try:
        args = build_parser().parse_args(argv)
        ctx = CommandContext(
            out=out,
            config=config,
            json=args.json,
            seed=args.seed if args.seed is not None else config.seed,
            field_override=FieldSpec.parse(args.field) if args.field else None,
        )
        logger.debug(f"command: {' '.join(argv)}")
        return args.handler(args, ctx)
    except SystemExit as e:
        # --help
        return int(e.code or 0)
    except InvalidInputError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_USAGE
    except ComputationError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_COMPUTATION
