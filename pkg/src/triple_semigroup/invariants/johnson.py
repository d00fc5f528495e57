"""Johnson matrix of minimal relations for three generators.

Diagonal entries a_kk come from three interchangeable routes: the zero set
of Xi_k, the lowest exponent of Psi_k, and a direct scan. Off-diagonal
entries follow from the six quadratic identities once the diagonal and J
are known.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from ..core.errors import (
    GeneratorsError,
    InvariantError,
    NoIntegralAssemblyError,
    NoZeroInRangeError,
    RootSelectionAmbiguousError,
    SweepRangeError,
    SymmetricSemigroupError,
)
from ..core.generators import (
    Generators,
    ensure_int64,
    exact_sqrt,
    other_axes,
    representable_by,
)
from ..series.psi import psi

logger = logging.getLogger(__name__)

AXES = (1, 2, 3)
OFF_DIAGONAL = ((1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2))
# entries whose "+" root is taken in the forward orientation
FORWARD = ((2, 1), (3, 2), (1, 3))
ORIENTATIONS = ("forward", "backward")


@dataclass(frozen=True)
class DiagonalTriple:
    a11: int
    a22: int
    a33: int

    def __getitem__(self, k: int) -> int:
        return self.as_tuple()[k - 1]

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a11, self.a22, self.a33)

    def weighted(self, gens: Generators) -> tuple[int, int, int]:
        """(a11*d1, a22*d2, a33*d3)."""
        return tuple(a * d for a, d in zip(self.as_tuple(), gens.d))  # type: ignore[return-value]


@dataclass(frozen=True)
class JohnsonMatrix:
    rows: tuple[tuple[int, int, int], ...]

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    @property
    def diagonal(self) -> DiagonalTriple:
        return DiagonalTriple(self.entry(1, 1), self.entry(2, 2), self.entry(3, 3))

    @property
    def j_value(self) -> int:
        a = self.entry
        return abs(a(1, 2) * a(2, 3) * a(3, 1) - a(1, 3) * a(3, 2) * a(2, 1))

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def violations(self, gens: Generators) -> list[str]:
        """Every broken matrix invariant, as readable strings."""
        return _violations(gens, {(i, j): Fraction(self.entry(i, j)) for i in AXES for j in AXES})


@dataclass(frozen=True)
class SymmetryCheck:
    symmetric: bool
    pair: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.symmetric


@dataclass(frozen=True)
class AssemblyResult:
    orientation: str
    entries: tuple[tuple[tuple[int, int], Fraction], ...]
    violations: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.violations

    def matrix(self) -> JohnsonMatrix:
        if not self.passed:
            raise NoIntegralAssemblyError(
                f"{self.orientation} assembly failed: {'; '.join(self.violations)}"
            )
        values = dict(self.entries)
        return JohnsonMatrix(
            tuple(tuple(int(values[(i, j)]) for j in AXES) for i in AXES)  # type: ignore[misc]
        )


def _require_triple(gens: Generators) -> None:
    if gens.m != 3:
        raise GeneratorsError(f"expected three generators, got m={gens.m}")


# -- diagonal -------------------------------------------------------------------


def diagonal_bound(gens: Generators, k: int) -> int:
    """Upper bound on a_kk: d2-1 for k=1, d1-1 for k=2, 3."""
    d1, d2, _ = gens.d
    return d2 - 1 if k == 1 else d1 - 1


def xi(gens: Generators, k: int, b: int) -> int:
    """0 iff b*d_k is representable by the other two generators, else 1."""
    _require_triple(gens)
    if b < 1:
        raise SweepRangeError(f"b must be >= 1, got {b}")
    j, l = other_axes(k)
    target = ensure_int64(b * gens.axis(k), "b*d_k")
    return 0 if representable_by(target, gens.axis(j), gens.axis(l)) else 1


def diagonal_via_xi(gens: Generators) -> DiagonalTriple:
    _require_triple(gens)
    values = []
    for k in AXES:
        bound = diagonal_bound(gens, k)
        zero = next((b for b in range(2, bound + 1) if xi(gens, k, b) == 0), None)
        if zero is None:
            raise NoZeroInRangeError(f"Xi_{k} of {gens} has no zero in 2..{bound}")
        values.append(zero)
    return DiagonalTriple(*values)


def diagonal_via_psi(gens: Generators, horizon: int | None = None) -> DiagonalTriple:
    _require_triple(gens)
    return DiagonalTriple(*(psi(gens, k, horizon).diagonal for k in AXES))


def diagonal_direct(gens: Generators) -> DiagonalTriple:
    """Linear scan v = 2, 3, ... for each axis; v = min(d_j, d_l) always hits."""
    _require_triple(gens)
    values = []
    for k in AXES:
        j, l = other_axes(k)
        dk, dj, dl = gens.axis(k), gens.axis(j), gens.axis(l)
        v = 2
        while not representable_by(v * dk, dj, dl):
            v += 1
        values.append(v)
    return DiagonalTriple(*values)


def is_symmetric(gens: Generators, diag: DiagonalTriple) -> SymmetryCheck:
    """True iff a_ii*d_i == a_jj*d_j for some pair i < j; first pair reported."""
    weighted = diag.weighted(gens)
    for i, j in ((1, 2), (1, 3), (2, 3)):
        if weighted[i - 1] == weighted[j - 1]:
            return SymmetryCheck(True, (i, j))
    return SymmetryCheck(False)


def xi_sweep(gens: Generators, k: int, b_range: Iterable[int]) -> list[tuple[int, int]]:
    _require_triple(gens)
    bound = diagonal_bound(gens, k)
    values = list(b_range)
    for b in values:
        if not 1 <= b <= bound:
            raise SweepRangeError(f"b={b} outside 1..{bound} for axis {k}")
    return [(b, xi(gens, k, b)) for b in values]


# -- J and the quadratic identities ---------------------------------------------------


def inner_product(gens: Generators, diag: DiagonalTriple) -> int:
    """<a, d> = sum of a_kk * d_k."""
    return ensure_int64(sum(diag.weighted(gens)), "<a,d>")


def j_squared(gens: Generators, diag: DiagonalTriple) -> int:
    _require_triple(gens)
    x1, x2, x3 = diag.weighted(gens)
    d1, d2, d3 = gens.d
    total = inner_product(gens, diag)
    value = total * total - 4 * (x1 * x2 + x2 * x3 + x3 * x1) + 4 * d1 * d2 * d3
    return ensure_int64(value, "J^2")


def quadratic_roots(
    gens: Generators, diag: DiagonalTriple, j_value: int
) -> dict[tuple[int, int], tuple[Fraction, Fraction]]:
    """Both rational roots of the quadratic satisfied by each off-diagonal a_ij.

    a_ij solves d_j x^2 - (<a,d> - 2 a_mm d_m) x + (a_ii a_jj - d_m) d_i = 0,
    m the third index; every one of these has discriminant J^2.
    """
    total = inner_product(gens, diag)
    weighted = diag.weighted(gens)
    roots: dict[tuple[int, int], tuple[Fraction, Fraction]] = {}
    for i, j in OFF_DIAGONAL:
        m = 6 - i - j
        di, dj, dm = gens.axis(i), gens.axis(j), gens.axis(m)
        linear = total - 2 * weighted[m - 1]
        constant = (diag[i] * diag[j] - dm) * di
        discriminant = linear * linear - 4 * dj * constant
        if discriminant != j_value * j_value:
            raise InvariantError(
                f"quadratic for a{i}{j} has discriminant {discriminant}, "
                f"expected J^2 = {j_value * j_value}"
            )
        roots[(i, j)] = (
            Fraction(linear + j_value, 2 * dj),
            Fraction(linear - j_value, 2 * dj),
        )
    return roots


def _violations(gens: Generators, a: dict[tuple[int, int], Fraction]) -> list[str]:
    out: list[str] = []
    for (i, j), value in sorted(a.items()):
        if value.denominator != 1:
            out.append(f"a{i}{j}={value} is not an integer")
        elif value < 0:
            out.append(f"a{i}{j}={value} is negative")
    if out:
        return out

    d = {k: gens.axis(k) for k in AXES}
    for k in AXES:
        j, l = other_axes(k)
        if a[(k, k)] * d[k] != a[(k, j)] * d[j] + a[(k, l)] * d[l]:
            out.append(f"row {k} relation a{k}{k}*d{k} = a{k}{j}*d{j} + a{k}{l}*d{l} fails")
        if math.gcd(*(int(a[(k, c)]) for c in AXES)) != 1:
            out.append(f"row {k} gcd is not 1")
        column = sum(a[(r, k)] for r in AXES if r != k)
        if column != a[(k, k)]:
            out.append(f"column {k} off-diagonal sum {column} != a{k}{k}")
        if a[(j, l)] * a[(l, j)] != a[(j, j)] * a[(l, l)] - d[k]:
            out.append(f"a{j}{l}*a{l}{j} != a{j}{j}*a{l}{l} - d{k}")

    bounds = {1: gens.d[1] - 1, 2: gens.d[0] - 1, 3: gens.d[0] - 1}
    for k in AXES:
        if not 2 <= a[(k, k)] <= bounds[k]:
            out.append(f"a{k}{k}={a[(k, k)]} outside 2..{bounds[k]}")
    return out


def assemble(
    gens: Generators,
    diag: DiagonalTriple,
    orientation: str,
    roots: dict[tuple[int, int], tuple[Fraction, Fraction]],
) -> AssemblyResult:
    """Candidate matrix for one sign orientation, with its violated checks.

    Column sums force a_ji and a_ki (same column) onto opposite roots, so
    only two orientations exist: "forward" takes the "+" root for a21, a32,
    a13 and the "-" root for a12, a23, a31; "backward" swaps them.
    """
    if orientation not in ORIENTATIONS:
        raise ValueError(f"unknown orientation {orientation!r}")
    entries: dict[tuple[int, int], Fraction] = {
        (k, k): Fraction(diag[k]) for k in AXES
    }
    for ij, (plus, minus) in roots.items():
        take_plus = (ij in FORWARD) == (orientation == "forward")
        entries[ij] = plus if take_plus else minus
    return AssemblyResult(
        orientation=orientation,
        entries=tuple(sorted(entries.items())),
        violations=tuple(_violations(gens, entries)),
    )


def resolve_assemblies(
    gens: Generators, diag: DiagonalTriple
) -> tuple[AssemblyResult, AssemblyResult]:
    """(accepted, rejected) assemblies of a non-symmetric semigroup."""
    _require_triple(gens)
    symmetry = is_symmetric(gens, diag)
    if symmetry:
        raise SymmetricSemigroupError(
            f"{gens} is symmetric (a_ii*d_i equal on pair {symmetry.pair}); "
            "off-diagonal entries are not fixed by the quadratic identities"
        )
    j_value = exact_sqrt(j_squared(gens, diag))
    if j_value < 1:
        raise InvariantError(f"J = 0 for non-symmetric {gens}")

    roots = quadratic_roots(gens, diag, j_value)
    results = [assemble(gens, diag, o, roots) for o in ORIENTATIONS]
    passed = [r for r in results if r.passed]
    if len(passed) == 2:
        logger.warning("both root assemblies pass for %s", gens)
        raise RootSelectionAmbiguousError(f"both root assemblies pass for {gens}")
    if not passed:
        details = " | ".join(f"{r.orientation}: {'; '.join(r.violations)}" for r in results)
        raise NoIntegralAssemblyError(f"no root assembly passes for {gens}: {details}")
    accepted = passed[0]
    rejected = results[1] if accepted is results[0] else results[0]
    logger.debug("%s: %s assembly accepted", gens, accepted.orientation)
    return accepted, rejected


def off_diagonal(gens: Generators, diag: DiagonalTriple) -> JohnsonMatrix:
    accepted, _ = resolve_assemblies(gens, diag)
    matrix = accepted.matrix()
    j_value = exact_sqrt(j_squared(gens, diag))
    if matrix.j_value != j_value:
        raise InvariantError(
            f"|a12 a23 a31 - a13 a32 a21| = {matrix.j_value} but J = {j_value}"
        )
    return matrix
