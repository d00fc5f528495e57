"""CSV sweep of Xi_k over an integer range of b."""

from __future__ import annotations

import csv
import logging
import sys
from pathlib import Path
from typing import IO, List, Optional, Tuple

from ..core.errors import SweepRangeError
from ..core.generators import Generators
from ..invariants.johnson import xi_sweep
from ..series.psi import xi_numeric

logger = logging.getLogger(__name__)


def sweep_rows(
    gens: Generators, k: int, b_min: int, b_max: int, numeric: bool = False
) -> List[Tuple]:
    if b_min > b_max:
        raise SweepRangeError(f"--b-min {b_min} is above --b-max {b_max}")
    rows = xi_sweep(gens, k, range(b_min, b_max + 1))
    if not numeric:
        return rows
    return [(b, value, f"{xi_numeric(gens, k, b):.12g}") for b, value in rows]


def write_csv(rows: List[Tuple], fh: IO[str], numeric: bool = False) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["b", "xi", "xi_numeric"] if numeric else ["b", "xi"])
    writer.writerows(rows)


def main(
    gens: Generators,
    k: int,
    b_min: int,
    b_max: int,
    csv_path: Optional[str] = None,
    numeric: bool = False,
) -> int:
    rows = sweep_rows(gens, k, b_min, b_max, numeric)
    if csv_path is None:
        write_csv(rows, sys.stdout, numeric)
        return 0
    path = Path(csv_path)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        write_csv(rows, fh, numeric)
    zeros = [b for b, value, *_ in rows if value == 0]
    logger.info("wrote %d rows to %s; first zero %s", len(rows), path, zeros[0] if zeros else "none")
    return 0
