"""Report builders for ``compute`` and ``pair`` plus their human-readable form."""

from __future__ import annotations

from typing import List

from rich.console import Console
from rich.table import Table

from ..core.generators import Generators, closed_form, matrix_representation
from ..core.report import Report, terms_to_lists
from ..invariants.frobenius import invariants, numerator
from .verify import verify_tuple


def triple_report(gens: Generators, with_checks: bool = True) -> Report:
    inv = invariants(gens)
    report = Report(
        generators=list(gens.d),
        frobenius=inv.frobenius,
        genus=inv.genus,
        j=inv.j_value,
        symmetric=inv.symmetric,
        symmetric_pair=list(inv.symmetric_pair) if inv.symmetric_pair else None,
        diagonal=list(inv.diagonal.as_tuple()),
        matrix=inv.matrix.to_lists() if inv.matrix else None,
        numerator=terms_to_lists(inv.numerator.terms),
    )
    if with_checks:
        report.checks = verify_tuple(gens).as_dict()
    return report


def pair_report(gens: Generators, with_matrix: bool = False) -> Report:
    fg = closed_form(gens)
    report = Report(
        generators=list(gens.d),
        frobenius=int(fg.frobenius),
        genus=int(fg.genus),
        numerator=terms_to_lists(numerator(gens).terms),
    )
    if with_matrix:
        report.representation = [[e.p, e.q, e.value] for e in matrix_representation(gens)]
    return report


def _format_numerator(terms: List[List[int]]) -> str:
    parts = []
    for e, c in terms:
        mono = "1" if e == 0 else f"z^{e}"
        if e == 0:
            parts.append(f"{c:+d}")
        elif abs(c) == 1:
            parts.append(("+" if c > 0 else "-") + mono)
        else:
            parts.append(f"{c:+d}*{mono}")
    text = " ".join(parts)
    return text[1:] if text.startswith("+") else text


def render_report(report: Report, console: Console) -> None:
    gens = "(" + ", ".join(str(d) for d in report.generators) + ")"
    console.print(f"[bold]{gens}[/bold]")
    console.print(f"  F = {report.frobenius}")
    console.print(f"  G = {report.genus}")
    if report.diagonal is not None:
        a11, a22, a33 = report.diagonal
        console.print(f"  diagonal = ({a11}, {a22}, {a33})")
        console.print(f"  J = {report.j if report.j is not None else '-'}")
        sym = "yes" if report.symmetric else "no"
        if report.symmetric_pair:
            sym += f" (pair {report.symmetric_pair[0]}, {report.symmetric_pair[1]})"
        console.print(f"  symmetric = {sym}")
    console.print(f"  Q = {_format_numerator(report.numerator)}", highlight=False)

    if report.matrix is not None:
        table = Table(title="Johnson matrix", show_header=False)
        for _ in range(3):
            table.add_column(justify="right")
        for row in report.matrix:
            table.add_row(*(str(x) for x in row))
        console.print(table)

    if report.representation is not None:
        _render_representation(report, console)

    for name, passed in sorted(report.checks.items()):
        mark = "[green]✓[/green]" if passed else "[red]✗[/red]"
        console.print(f"  {mark} {name}")


def _render_representation(report: Report, console: Console) -> None:
    rows = sorted({p for p, _, _ in report.representation or []})
    cols = sorted({q for _, q, _ in report.representation or []})
    values = {(p, q): v for p, q, v in report.representation or []}
    table = Table(title="sigma(p, q) = d1*d2 - p*d1 - q*d2")
    table.add_column("p \\ q", justify="right")
    for q in cols:
        table.add_column(str(q), justify="right")
    for p in rows:
        cells = []
        for q in cols:
            v = values[(p, q)]
            cells.append(f"[bold green]{v}[/bold green]" if v > 0 else f"[dim]{v}[/dim]")
        table.add_row(str(p), *cells)
    console.print(table)
