# src/cli/app.py
import json
from enum import Enum
from typing import Any, Callable, Optional, Sequence, TypeVar

import typer
from pydantic import BaseModel, ValidationError

from src.abgroup.group import AbelianGroup
from src.antiauto.fine_solver import fine_antiauto_solve
from src.antiauto.hk import hk_split, lie_jordan_check
from src.antiauto.involution import classify, is_graded_map
from src.canon.builder import build_canonical, hk_spanning_sets
from src.canon.census import enumerate_canonical, verify_spec
from src.canon.fine_cases import fine_m2_case
from src.canon.patterns import BlockPattern, PatternKind, compare_with_involution
from src.canon.schema import InvolutionSpecModel
from src.canon.spec import InvolutionSpec, validate_spec
from src.cli.render import (
    emit_json,
    emit_jsonl,
    entry_text,
    mark,
    print_lines,
    print_matrix,
    print_table,
)
from src.common.config import settings
from src.common.errors import DimensionError, GradedInvolutionError, SingularMatrixError
from src.common.utils import load_json
from src.gmatrix.schema import GradingModel, MatrixModel

app = typer.Typer(
    help="Graded involutions – build, check and enumerate canonical graded involutions of M_n.",
    add_completion=False,
    no_args_is_help=True,
)

M = TypeVar("M", bound=BaseModel)
T = TypeVar("T")

JSON_OPTION = typer.Option(False, "--json", help="Print JSON instead of tables")
SYMBOLIC_OPTION = typer.Option(
    settings.SYMBOLIC, "--symbolic/--plain", help="Render cyclotomic entries as polynomials in z"
)
SPEC_ARGUMENT = typer.Argument(None, help="Spec JSON file, or inline JSON")
SPEC_OPTION = typer.Option(None, "--spec", help="Spec JSON file")


@app.callback()
def main(
    ctx: typer.Context,
    max_n: int = typer.Option(settings.MAX_N, "--max-n", min=1, help="Matrix size cap"),
):
    """Options shared by every command."""
    ctx.obj = {"max_n": max_n}


def _max_n(ctx: typer.Context) -> int:
    return (ctx.obj or {}).get("max_n", settings.MAX_N)


def _input_error(message: str) -> typer.Exit:
    typer.echo(f"❌ {message}", err=True)
    return typer.Exit(code=2)


def _read(source: str) -> Any:
    """A JSON file path, or inline JSON when the argument starts with '{'."""
    try:
        if source.lstrip().startswith("{"):
            return json.loads(source)
        return load_json(source)
    except (OSError, json.JSONDecodeError) as exc:
        raise _input_error(f"cannot read {source!r}: {exc}") from None


def _validate(model: type[M], payload: Any) -> M:
    try:
        return model.model_validate(payload)
    except ValidationError as exc:
        raise _input_error(f"invalid {model.__name__}: {exc}") from None


def _domain(build: Callable[[], T]) -> T:
    try:
        return build()
    except (GradedInvolutionError, ValueError) as exc:
        raise _input_error(str(exc)) from None


def _parse_group(text: str) -> AbelianGroup:
    """'2,2,2' or '2x2x2'; an empty string or 'trivial' is the trivial group."""
    cleaned = text.strip().lower()
    if cleaned in ("", "trivial", "1"):
        return AbelianGroup(())
    try:
        return AbelianGroup(tuple(int(x) for x in cleaned.replace("x", ",").split(",")))
    except ValueError as exc:
        raise _input_error(f"bad --group {text!r}: {exc}") from None


def _load_spec(source: Optional[str]) -> InvolutionSpec:
    if source is None:
        raise _input_error("no spec given; pass --spec FILE or a spec argument")
    model = _validate(InvolutionSpecModel, _read(source))
    return _domain(model.to_domain)


def _reject(spec: InvolutionSpec, diagnostics: list[str], json_out: bool) -> typer.Exit:
    if json_out:
        emit_json({"spec": spec.to_json(), "valid": False, "diagnostics": diagnostics})
    else:
        print_lines([f"[red]invalid spec[/red] {spec}"] + [f"  - {d}" for d in diagnostics])
    return typer.Exit(code=1)


@app.command()
def build(
    ctx: typer.Context,
    spec: Optional[str] = SPEC_ARGUMENT,
    spec_file: Optional[str] = SPEC_OPTION,
    json_out: bool = JSON_OPTION,
    symbolic: bool = SYMBOLIC_OPTION,
):
    """Validate a spec and build its canonical Phi."""
    inv = _load_spec(spec_file or spec)
    verdict = validate_spec(inv, max_n=_max_n(ctx))
    if not verdict.ok:
        raise _reject(inv, verdict.diagnostics, json_out)
    alg, aa = build_canonical(inv, max_n=_max_n(ctx))
    graded = is_graded_map(alg, aa)
    ok = graded.ok and aa.omega == inv.omega
    if json_out:
        payload = {
            "spec": inv.to_json(),
            "valid": True,
            "tuple": [g.to_json() for g in alg.tau],
            "grading": alg.to_json(),
            "phi": aa.phi.to_json(),
            "kind": aa.kind.value,
            "graded": graded.ok,
            "ok": ok,
        }
        if symbolic:
            payload["phi_symbolic"] = entry_text(aa.phi, symbolic=True)
        emit_json(payload)
    else:
        print_lines(
            [
                f"spec   {inv}",
                f"tuple  ({', '.join(str(g) for g in alg.tau)})",
                f"kind   {aa.kind.value}   graded {mark(graded.ok)}",
            ]
        )
        print_matrix(f"Phi ({alg.n}x{alg.n})", aa.phi, symbolic)
    if not ok:
        raise typer.Exit(code=1)


@app.command()
def check(
    ctx: typer.Context,
    source: str = typer.Argument(..., help="JSON with 'grading' and 'phi', e.g. build output"),
    phi: Optional[str] = typer.Option(
        None, "--phi", help="Matrix JSON file that replaces the input's phi"
    ),
    json_out: bool = JSON_OPTION,
):
    """Classify Phi and check that its antiautomorphism preserves the grading."""
    payload = _read(source)
    if not isinstance(payload, dict):
        raise _input_error("input must be a JSON object")
    grading = _validate(GradingModel, payload.get("grading", payload))
    matrix = _validate(MatrixModel, _read(phi) if phi else payload.get("phi"))
    alg = _domain(lambda: grading.to_domain(max_n=_max_n(ctx)))
    Phi = _domain(lambda: matrix.to_domain(alg.field))
    if Phi.shape != (alg.n, alg.n):
        error = DimensionError(f"Phi is {Phi.rows}x{Phi.cols}, grading has n={alg.n}")
        raise _input_error(str(error))
    try:
        aa = classify(Phi)
    except SingularMatrixError as exc:
        result = {"n": alg.n, "antiautomorphism": False, "error": str(exc), "ok": False}
        if json_out:
            emit_json(result)
        else:
            print_lines([f"[red]{exc}[/red]"])
        raise typer.Exit(code=1)
    report = is_graded_map(alg, aa)
    ok = aa.is_involution() and report.ok
    if json_out:
        emit_json(
            {
                "n": alg.n,
                "antiautomorphism": True,
                "kind": aa.kind.value,
                "omega": aa.omega,
                **report.to_json(),
                "ok": ok,
            }
        )
    else:
        lines = [f"n={alg.n}  kind {aa.kind.value}  graded {mark(report.ok)}"]
        if not report.ok:
            found = ", ".join(str(g) for g in report.image_degrees)
            lines.append(f"  {report.label} of degree {report.degree} maps into degrees {found}")
        print_lines(lines)
    if not ok:
        raise typer.Exit(code=1)


@app.command()
def hk(
    ctx: typer.Context,
    spec: Optional[str] = SPEC_ARGUMENT,
    spec_file: Optional[str] = SPEC_OPTION,
    json_out: bool = JSON_OPTION,
    symbolic: bool = SYMBOLIC_OPTION,
):
    """Symmetric and skew-symmetric elements of a canonical involution, with degrees."""
    inv = _load_spec(spec_file or spec)
    verdict = validate_spec(inv, max_n=_max_n(ctx))
    if not verdict.ok:
        raise _reject(inv, verdict.diagnostics, json_out)
    sets = hk_spanning_sets(inv, max_n=_max_n(ctx))
    alg, aa = build_canonical(inv, max_n=_max_n(ctx))
    dec = hk_split(alg, aa)
    lj = lie_jordan_check(dec)
    ok = sets.matches_hk_split and sets.homogeneous and lj.ok
    if json_out:
        emit_json(
            {
                "spec": inv.to_json(),
                "hk": dec.to_json(symbolic=symbolic),
                "spanning_sets": {
                    "dim_h": sets.dim_h,
                    "dim_k": sets.dim_k,
                    "matches_hk_split": sets.matches_hk_split,
                    "replaced_form_agrees": sets.replaced_form_agrees,
                    "homogeneous": sets.homogeneous,
                },
                "lie_jordan": lj.to_json(),
                "ok": ok,
            }
        )
    else:
        print_lines(
            [
                f"spec {inv}",
                f"dim H = {dec.dim_h}, dim K = {dec.dim_k}, n^2 = {alg.n ** 2}",
                f"spanning sets match {mark(sets.matches_hk_split)}"
                f"   replaced form agrees {mark(sets.replaced_form_agrees)}",
                f"Lie/Jordan closed {mark(lj.ok)}   homogeneous {mark(lj.homogeneous)}",
            ]
        )
        halves = (("h", dec.h_basis, dec.h_degrees), ("k", dec.k_basis, dec.k_degrees))
        for name, mats, degs in halves:
            for i, (x, g) in enumerate(zip(mats, degs), start=1):
                print_matrix(f"{name}{i}  degree {g}", x, symbolic)
    if not ok:
        raise typer.Exit(code=1)


@app.command("solve-fine")
def solve_fine(
    ctx: typer.Context,
    n: int = typer.Argument(..., min=2, help="Size of the fine epsilon-graded M_n"),
    json_out: bool = JSON_OPTION,
    symbolic: bool = SYMBOLIC_OPTION,
):
    """Graded antiautomorphisms of the fine epsilon-grading, up to scalars."""
    if n > _max_n(ctx):
        raise _input_error(f"n={n} exceeds the bound {_max_n(ctx)}")
    solutions = _domain(lambda: fine_antiauto_solve(n))
    if json_out:
        emit_json({"n": n, "count": len(solutions), "solutions": [s.to_json() for s in solutions]})
        return
    print_lines([f"n={n}: {len(solutions)} projective class(es)"])
    for s in solutions:
        print_matrix(f"{s.label or '?'}  degree {s.degree}", s.phi, symbolic)


@app.command("enumerate")
def enumerate_specs(
    ctx: typer.Context,
    group: str = typer.Option("2,2,2", "--group", help="Invariant factors, e.g. 2,2,2"),
    size: int = typer.Option(3, "--size", min=1, help="Elementary size bound"),
    fine: int = typer.Option(1, "--fine", min=0, help="Number of fine M_2 factors"),
    exact: bool = typer.Option(False, "--exact", help="Only the given elementary size"),
    lie_jordan: bool = typer.Option(False, "--lie-jordan", help="Also run Lie/Jordan checks"),
    json_out: bool = JSON_OPTION,
):
    """Census of canonical specs, each built and verified."""
    G = _parse_group(group)
    specs = _domain(
        lambda: enumerate_canonical(G, size, fine, exact=exact, max_n=_max_n(ctx))
    )
    records = [verify_spec(s, lie_jordan=lie_jordan, max_n=_max_n(ctx)) for s in specs]
    if json_out:
        emit_jsonl(r.to_json() for r in records)
    else:
        print_table(
            f"{len(records)} spec(s) over {G}",
            ["#", "spec", "n", "kind", "graded", "structure", "ok"],
            (
                (i, r.spec, r.n, r.kind.value if r.kind else "-", mark(r.graded),
                 mark(r.structure_ok), mark(r.ok))
                for i, r in enumerate(records, start=1)
            ),
        )
    if not all(r.ok for r in records):
        raise typer.Exit(code=1)


class DemoName(str, Enum):
    FINE_M2 = "fine-m2"
    SYMPLECTIC_BLOCKS = "symplectic-blocks"
    TRANSPOSE_BLOCKS = "transpose-blocks"


def _pattern_rows(pairs: list[tuple[BlockPattern, BlockPattern]]) -> list[dict]:
    rows = []
    for skew, sym in pairs:
        a, b = compare_with_involution(skew), compare_with_involution(sym)
        total_ok = a.dim + b.dim == skew.size ** 2
        rows.append(
            {
                "n": skew.size,
                "skew": a.to_json(),
                "symmetric": b.to_json(),
                "dims_sum_to_n2": total_ok,
                "ok": a.equal and b.equal and total_ok,
            }
        )
    return rows


@app.command()
def demo(
    name: DemoName = typer.Argument(..., help="Which table to reproduce"),
    json_out: bool = JSON_OPTION,
):
    """Reproduce the standard tables with verification marks."""
    if name is DemoName.FINE_M2:
        cases = [fine_m2_case(i) for i in range(1, 5)]
        ok = all(c.ok for c in cases)
        if json_out:
            emit_json({"demo": name.value, "cases": [c.to_json() for c in cases], "ok": ok})
        else:
            print_table(
                "Graded involutions of M_2 with the Z2 x Z2 grading",
                ["case", "Phi", "kind", "graded", "K", "H", "ok"],
                (
                    (c.case_id, entry_text(c.aa.phi), c.aa.kind.value, mark(c.graded),
                     ", ".join(c.k_labels), ", ".join(c.h_labels), mark(c.ok))
                    for c in cases
                ),
            )
    else:
        if name is DemoName.SYMPLECTIC_BLOCKS:
            pairs = [
                (
                    BlockPattern(PatternKind.SYMPLECTIC_SKEW, k=k),
                    BlockPattern(PatternKind.SYMPLECTIC_SYMMETRIC, k=k),
                )
                for k in (1, 2)
            ]
        else:
            pairs = [
                (
                    BlockPattern(PatternKind.ORTHOGONAL_SKEW, m=m, l=l),
                    BlockPattern(PatternKind.ORTHOGONAL_SYMMETRIC, m=m, l=l),
                )
                for m, l in ((1, 1), (2, 1), (0, 2))
            ]
        rows = _pattern_rows(pairs)
        ok = all(r["ok"] for r in rows)
        if json_out:
            emit_json({"demo": name.value, "rows": rows, "ok": ok})
        else:
            print_table(
                f"Block patterns ({name.value})",
                ["n", "params", "dim K", "K pattern", "dim H", "H pattern", "sum = n^2"],
                (
                    (r["n"], f"m={r['skew']['m']} l={r['skew']['l']} k={r['skew']['k']}",
                     r["skew"]["computed_dim"], mark(r["skew"]["equal"]),
                     r["symmetric"]["computed_dim"], mark(r["symmetric"]["equal"]),
                     mark(r["dims_sum_to_n2"]))
                    for r in rows
                ),
            )
    if not ok:
        raise typer.Exit(code=1)


def run(argv: Sequence[str] | None = None) -> int:
    """Entry point returning the exit code: 0 success, 1 failed verdict, 2 bad input."""
    try:
        app(
            args=list(argv) if argv is not None else None,
            prog_name="gradinv",
            standalone_mode=True,
        )
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else (0 if exc.code is None else 2)
    return 0


if __name__ == "__main__":
    raise SystemExit(run())
