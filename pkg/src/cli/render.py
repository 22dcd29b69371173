"""
Human-readable output: rich tables on stdout. JSON output bypasses this module.
"""
from __future__ import annotations

import json
from typing import Any, Iterable

import typer
from rich.console import Console
from rich.table import Table

from src.gmatrix.matrix import Matrix

OK = "[green]yes[/green]"
FAIL = "[red]no[/red]"


def mark(flag: bool | None) -> str:
    if flag is None:
        return "-"
    return OK if flag else FAIL


def entry_text(matrix: Matrix, symbolic: bool = False) -> list[list[str]]:
    if symbolic:
        return matrix.symbolic()
    return [[str(v) for v in row] for row in matrix.to_lists()]


def matrix_text(matrix: Matrix, symbolic: bool = False) -> str:
    rows = entry_text(matrix, symbolic)
    width = max(len(x) for r in rows for x in r)
    return "\n".join("[ " + "  ".join(x.rjust(width) for x in r) + " ]" for r in rows)


def emit_json(payload: Any) -> None:
    typer.echo(json.dumps(payload, indent=2, ensure_ascii=False))


def emit_jsonl(rows: Iterable[dict]) -> None:
    for row in rows:
        typer.echo(json.dumps(row, ensure_ascii=False, separators=(",", ":")))


def print_table(title: str, columns: list[str], rows: Iterable[Iterable[Any]]) -> None:
    table = Table(title=title, show_lines=False)
    for c in columns:
        table.add_column(c)
    for row in rows:
        table.add_row(*(str(x) for x in row))
    Console().print(table)


def print_matrix(title: str, matrix: Matrix, symbolic: bool = False) -> None:
    console = Console()
    console.print(f"[bold]{title}[/bold]")
    console.print(matrix_text(matrix, symbolic), markup=False, highlight=False)


def print_lines(lines: Iterable[str]) -> None:
    console = Console()
    for line in lines:
        console.print(line, highlight=False)
