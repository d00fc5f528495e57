"""Generator tuples: validation, representability and the closed forms for m <= 2."""

from __future__ import annotations

import bisect
import enum
import logging
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from .config import get_config
from .errors import (
    GcdNotOneError,
    GeneratorsError,
    InvariantError,
    MultiplicityTooSmallError,
    NonMinimalError,
    NotPerfectSquareError,
    NotStrictlyIncreasingError,
    OverflowGuardError,
    PairTooSmallError,
)

logger = logging.getLogger(__name__)

INT64_MAX = 2**63 - 1
MAX_GENERATORS = 3


class Infinite(enum.Enum):
    """Value of F and G for a single generator d > 1."""

    INFINITE = "inf"

    def __str__(self) -> str:
        return "∞"


INFINITE = Infinite.INFINITE

Count = Union[int, Infinite]


def ensure_int64(value: int, what: str = "value") -> int:
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise OverflowGuardError(f"{what} = {value} does not fit in 64 bits")
    return value


def exact_sqrt(value: int) -> int:
    """Integer square root of a perfect square, else NotPerfectSquareError."""
    if value < 0:
        raise NotPerfectSquareError(value)
    root = math.isqrt(value)
    if root * root != value:
        raise NotPerfectSquareError(value)
    return root


@dataclass(frozen=True)
class Generators:
    """A validated, strictly increasing, coprime and minimal tuple.

    Build instances through :func:`validate`; the constructor itself does not
    check anything.
    """

    d: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.d)

    @property
    def total(self) -> int:
        return sum(self.d)

    def axis(self, k: int) -> int:
        """d_k for a 1-based axis index."""
        if not 1 <= k <= self.m:
            raise GeneratorsError(f"axis must be in 1..{self.m}, got {k}")
        return self.d[k - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.d)

    def __len__(self) -> int:
        return len(self.d)

    def __str__(self) -> str:
        return "(" + ", ".join(str(x) for x in self.d) + ")"


@dataclass(frozen=True)
class GapSet:
    elements: tuple[int, ...]

    @classmethod
    def of(cls, values: Iterable[int]) -> "GapSet":
        return cls(tuple(sorted(set(values))))

    @property
    def frobenius(self) -> int:
        return self.elements[-1] if self.elements else -1

    @property
    def genus(self) -> int:
        return len(self.elements)

    def __contains__(self, value: object) -> bool:
        if not isinstance(value, int):
            return False
        i = bisect.bisect_left(self.elements, value)
        return i < len(self.elements) and self.elements[i] == value

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class FrobeniusGenus:
    frobenius: Count
    genus: Count


@dataclass(frozen=True)
class MatrixRepEntry:
    p: int
    q: int
    value: int

    @property
    def positive(self) -> bool:
        return self.value > 0


def _integral(x: object) -> int:
    try:
        value = int(x)  # type: ignore[call-overload]
    except (TypeError, ValueError, OverflowError):
        raise GeneratorsError(f"generator {x!r} is not an integer") from None
    if value != x:
        raise GeneratorsError(f"generator {x!r} is not an integer")
    return value


def validate(raw: Iterable[int], *, guard: int | None = None) -> Generators:
    """Check *raw* against every generator rule and return a Generators.

    Rules are applied in order: length, positivity, strict increase,
    magnitude guard, gcd, multiplicity, minimality.
    """
    d = tuple(_integral(x) for x in raw)
    if not d:
        raise GeneratorsError("at least one generator is required")
    if len(d) > MAX_GENERATORS:
        raise GeneratorsError(
            f"at most {MAX_GENERATORS} generators are supported, got {len(d)}"
        )
    if any(x < 1 for x in d):
        raise GeneratorsError("generators must be positive integers")
    for i in range(1, len(d)):
        if d[i] <= d[i - 1]:
            raise NotStrictlyIncreasingError(
                f"d{i + 1}={d[i]} must be greater than d{i}={d[i - 1]}"
            )

    if guard is None:
        guard = get_config().magnitude_guard
    product = math.prod(d)
    if product > guard:
        raise OverflowGuardError(
            f"product of generators {product} exceeds the magnitude guard {guard}"
        )

    m = len(d)
    if m >= 2:
        g = math.gcd(*d)
        if g != 1:
            raise GcdNotOneError(g)

    least = max(m, 2)
    if d[0] < least:
        raise MultiplicityTooSmallError(f"d1={d[0]} must be at least {least}")

    for i in range(m):
        others = d[:i] + d[i + 1 :]
        if others and _representable_by_all(d[i], others):
            raise NonMinimalError(i + 1, d[i])

    return Generators(d)


def representable_by(target: int, a: int, b: int) -> bool:
    """True iff target = x*a + y*b for some integers x, y >= 0.

    Scans y over 0..a-1; any solution can be shifted into that window.
    """
    if target < 0:
        return False
    if target == 0:
        return True
    for y in range(min(a, target // b + 1)):
        if (target - y * b) % a == 0:
            return True
    return False


def _representable_by_all(target: int, others: tuple[int, ...]) -> bool:
    if len(others) == 1:
        return target % others[0] == 0
    return representable_by(target, others[0], others[1])


def is_representable(target: int, gens: Generators) -> bool:
    if gens.m != 2:
        raise GeneratorsError(f"expected a pair of generators, got m={gens.m}")
    d1, d2 = gens.d
    return representable_by(target, d1, d2)


def other_axes(k: int) -> tuple[int, int]:
    """Cyclic partners (j, l) of axis k: (1,2,3), (2,3,1), (3,1,2)."""
    if k not in (1, 2, 3):
        raise GeneratorsError(f"axis must be 1, 2 or 3, got {k}")
    return (k % 3 + 1, (k + 1) % 3 + 1)


def single_generator(gens: Generators) -> FrobeniusGenus:
    if gens.m != 1:
        raise GeneratorsError(f"expected one generator, got m={gens.m}")
    return FrobeniusGenus(frobenius=INFINITE, genus=INFINITE)


def sylvester_pair(gens: Generators) -> FrobeniusGenus:
    if gens.m != 2:
        raise GeneratorsError(f"expected a pair of generators, got m={gens.m}")
    d1, d2 = gens.d
    product = ensure_int64(d1 * d2, "d1*d2")
    return FrobeniusGenus(
        frobenius=product - d1 - d2,
        genus=(d1 - 1) * (d2 - 1) // 2,
    )


def closed_form(gens: Generators) -> FrobeniusGenus:
    """F and G for m <= 2; triples go through invariants.frobenius."""
    if gens.m == 1:
        return single_generator(gens)
    if gens.m == 2:
        return sylvester_pair(gens)
    raise GeneratorsError("no closed form for m=3; use invariants.frobenius")


def matrix_representation(gens: Generators) -> list[MatrixRepEntry]:
    """All sigma(p, q) = d1*d2 - p*d1 - q*d2 over the Brauer ranges.

    Rows p run over 1..floor(d2 - d2/d1), columns q over 1..d1-1. The
    positive values are exactly the gaps of <d1, d2>, each hit once.
    Non-positive entries are kept so the full grid can be shown.
    """
    if gens.m != 2:
        raise GeneratorsError(f"expected a pair of generators, got m={gens.m}")
    d1, d2 = gens.d
    if d1 <= 2:
        raise PairTooSmallError(f"matrix representation needs d1 >= 3, got {d1}")

    rows = d2 * (d1 - 1) // d1
    cols = d1 - 1
    if rows < cols:
        raise InvariantError(
            f"row bound {rows} is below the column bound {cols} for {gens}"
        )
    product = ensure_int64(d1 * d2, "d1*d2")

    entries = [
        MatrixRepEntry(p, q, product - p * d1 - q * d2)
        for p in range(1, rows + 1)
        for q in range(1, cols + 1)
    ]

    seen: set[int] = set()
    for e in entries:
        if not e.positive:
            continue
        if e.value in seen:
            raise InvariantError(f"gap {e.value} represented twice for {gens}")
        seen.add(e.value)
    logger.debug("matrix representation of %s: %dx%d, %d gaps", gens, rows, cols, len(seen))
    return entries
