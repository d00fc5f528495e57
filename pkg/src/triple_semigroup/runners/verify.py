"""Formula-vs-oracle verification for one triple or a seeded random sample."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Iterable, List, Optional

from rich.progress import (
    BarColumn,
    MofNCompleteColumn,
    Progress,
    SpinnerColumn,
    TextColumn,
)

from ..core.console import console, err_console
from ..core.errors import SemigroupError
from ..core.generators import Generators, other_axes
from ..invariants.frobenius import Invariants3, invariants
from ..invariants.johnson import (
    AXES,
    diagonal_direct,
    diagonal_via_psi,
    diagonal_via_xi,
    resolve_assemblies,
)
from ..oracle.bruteforce import (
    build_table,
    gaps_bruteforce,
    hilbert_bruteforce,
    johnson_direct,
    sample_triples,
)
from ..series.psi import psi
from ..series.sparse import SparseSeries, expand_rational, tau

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class TupleVerdict:
    gens: Generators
    checks: List[CheckResult] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def as_dict(self) -> dict[str, bool]:
        return {c.name: c.passed for c in self.checks}


def _check(name: str, fn: Callable[[], Optional[str]]) -> CheckResult:
    """Run *fn*; a returned string is a failure detail, None is a pass."""
    try:
        detail = fn()
    except SemigroupError as e:
        return CheckResult(name, False, f"{type(e).__name__}: {e}")
    return CheckResult(name, detail is None, detail or "")


def _diagonal_agreement(gens: Generators) -> Optional[str]:
    routes = {
        "xi": diagonal_via_xi(gens).as_tuple(),
        "psi": diagonal_via_psi(gens).as_tuple(),
        "scan": diagonal_direct(gens).as_tuple(),
        "oracle": johnson_direct(gens),
    }
    if len(set(routes.values())) != 1:
        return ", ".join(f"{k}={v}" for k, v in routes.items())
    return None


def _frobenius_genus(inv: Invariants3) -> Optional[str]:
    gaps = gaps_bruteforce(inv.gens)
    if (inv.frobenius, inv.genus) != (gaps.frobenius, gaps.genus):
        return f"formula F={inv.frobenius} G={inv.genus}, oracle F={gaps.frobenius} G={gaps.genus}"
    return None


def _numerator_identity(inv: Invariants3) -> Optional[str]:
    horizon = inv.frobenius + inv.gens.d[-1]
    expanded = expand_rational(inv.numerator, inv.gens.d, horizon)
    truth = hilbert_bruteforce(inv.gens, horizon)
    if expanded != truth:
        diff = (expanded - truth).lowest_exponent
        return f"Q/prod(1 - z^d) differs from the oracle series first at z^{diff}"
    return None


def _numerator_shape(inv: Invariants3) -> Optional[str]:
    q = inv.numerator
    if q.at_one() != 0:
        return f"Q(1) = {q.at_one()}"
    if q.degree is None or q.degree - inv.gens.total != inv.frobenius:
        return f"deg Q - sum d = {None if q.degree is None else q.degree - inv.gens.total} != F"
    return None


def _gap_series(inv: Invariants3) -> Optional[str]:
    h = expand_rational(inv.numerator, inv.gens.d, inv.frobenius)
    phi = SparseSeries.geometric(1, inv.frobenius) - h
    if phi.degree != inv.frobenius or phi.at_one() != inv.genus:
        return f"Phi has degree {phi.degree} and Phi(1) = {phi.at_one()}"
    if tau(phi) != frozenset(gaps_bruteforce(inv.gens)):
        return "tau(Phi) is not the oracle gap set"
    return None


def _matrix(inv: Invariants3) -> Optional[str]:
    if inv.symmetric:
        return None
    accepted, rejected = resolve_assemblies(inv.gens, inv.diagonal)
    if rejected.passed:
        return "both assemblies pass"
    matrix = accepted.matrix()
    broken = matrix.violations(inv.gens)
    if broken:
        return "; ".join(broken)
    if matrix.j_value != inv.j_value:
        return f"|a12 a23 a31 - a13 a32 a21| = {matrix.j_value}, J = {inv.j_value}"
    return None


def _gap_multiples_below_diagonal(inv: Invariants3) -> Optional[str]:
    for k in AXES:
        j, l = other_axes(k)
        dk = inv.gens.axis(k)
        akk = inv.diagonal[k]
        table = build_table((inv.gens.axis(j), inv.gens.axis(l)), akk * dk)
        represented = [b for b in range(1, akk + 1) if b * dk in table]
        if represented != [akk]:
            return f"axis {k}: multiples {represented} of d{k} represented below a{k}{k}={akk}"
    return None


def _psi_properties(inv: Invariants3) -> Optional[str]:
    for k in AXES:
        series = psi(inv.gens, k)
        dk = inv.gens.axis(k)
        if any(c != 1 for _, c in series.base.terms):
            return f"Psi_{k} has a coefficient other than 1"
        if any(e % dk for e in series.base.exponents):
            return f"Psi_{k} has an exponent not divisible by d{k}"
        j, l = other_axes(k)
        horizon = series.base.horizon
        table = build_table((inv.gens.axis(j), inv.gens.axis(l)), horizon)
        expected = tuple(b for b in range(1, horizon // dk + 1) if b * dk in table)
        if series.multipliers != expected:
            return f"Psi_{k} multipliers differ from the oracle"
    return None


def verify_tuple(gens: Generators) -> TupleVerdict:
    verdict = TupleVerdict(gens)
    verdict.checks.append(_check("diagonal_agreement", lambda: _diagonal_agreement(gens)))
    try:
        inv = invariants(gens)
    except SemigroupError as e:
        verdict.checks.append(CheckResult("invariants", False, f"{type(e).__name__}: {e}"))
        return verdict

    for name, fn in (
        ("frobenius_genus", _frobenius_genus),
        ("numerator_identity", _numerator_identity),
        ("numerator_shape", _numerator_shape),
        ("gap_series", _gap_series),
        ("matrix", _matrix),
        ("gap_multiples", _gap_multiples_below_diagonal),
        ("psi", _psi_properties),
    ):
        verdict.checks.append(_check(name, lambda fn=fn: fn(inv)))

    expected = 4 if inv.symmetric else 6
    if len(inv.numerator.terms) != expected:
        verdict.notes.append(f"Q has {len(inv.numerator.terms)} monomials after collisions: {inv.numerator}")
    if inv.symmetric:
        if inv.genus_by_formula != inv.genus:
            verdict.notes.append(
                f"genus formula gives {inv.genus_by_formula}, series gives {inv.genus}"
            )
        if inv.numerator_collapses is False:
            verdict.notes.append("Q_n does not collapse to Q_s")
    return verdict


def verify_many(triples: Iterable[Generators], show_progress: bool = True) -> List[TupleVerdict]:
    triples = list(triples)
    verdicts: List[TupleVerdict] = []
    with Progress(
        SpinnerColumn(),
        TextColumn("[bold]{task.description}"),
        BarColumn(),
        MofNCompleteColumn(),
        TextColumn("{task.fields[triple]}"),
        console=err_console,
        disable=not show_progress,
    ) as progress:
        task = progress.add_task("Verify", total=len(triples), triple="")
        for gens in triples:
            progress.update(task, triple=str(gens))
            verdict = verify_tuple(gens)
            verdicts.append(verdict)
            if not verdict.passed:
                progress.console.print(f"  [red]✗[/red] {gens}")
            progress.advance(task)
    return verdicts


def print_verdicts(verdicts: List[TupleVerdict]) -> bool:
    """Print failing checks and a PASS/FAIL summary on stdout; True on pass."""
    failed = [v for v in verdicts if not v.passed]
    for v in verdicts:
        for note in v.notes:
            logger.warning("%s: %s", v.gens, note)
    if failed:
        first = failed[0]
        console.print(f"first failing tuple: {first.gens}", highlight=False)
        for c in first.failures:
            console.print(f"  {c.name}: {c.detail}", markup=False, highlight=False)
        console.print(f"FAIL ({len(failed)}/{len(verdicts)} tuples)", highlight=False)
        return False
    console.print(f"PASS ({len(verdicts)} tuples)", highlight=False)
    return True


def main(
    gens: Optional[Generators] = None,
    random: Optional[int] = None,
    max_d: int = 150,
    seed: int = 0,
) -> int:
    if gens is not None:
        verdicts = [verify_tuple(gens)]
    else:
        triples = sample_triples(random or 0, max_d, seed)
        logger.debug("verifying %d triples, max_d=%d, seed=%d", len(triples), max_d, seed)
        verdicts = verify_many(triples)
    return 0 if print_verdicts(verdicts) else 1
