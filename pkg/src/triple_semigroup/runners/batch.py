"""Batch mode: one JSON report per input line, in input order."""

from __future__ import annotations

import logging
import sys
from multiprocessing import Pool
from pathlib import Path
from typing import IO, Iterable, List, Optional

from ..core.config import get_config
from ..core.errors import GeneratorsError, SemigroupError
from ..core.generators import validate
from ..core.report import Report, error_report
from .compute import triple_report

logger = logging.getLogger(__name__)


def read_lines(path: str | Path) -> List[str]:
    """Non-empty lines with ``#`` comments stripped."""
    with open(path, "r", encoding="utf-8") as fh:
        raw = fh.read().splitlines()
    lines = []
    for line in raw:
        body = line.split("#", 1)[0].strip()
        if body:
            lines.append(body)
    return lines


def process_line(line: str) -> Report:
    fields = line.split()
    try:
        values = [int(x) for x in fields]
    except ValueError:
        return Report(generators=[], error=f"ParseError: not a list of integers: {line!r}")
    try:
        if len(values) != 3:
            raise GeneratorsError(f"expected three generators, got {len(values)}")
        return triple_report(validate(values))
    except SemigroupError as e:
        return error_report(values, e)


def run(lines: Iterable[str], jobs: int = 1) -> List[Report]:
    lines = list(lines)
    if jobs <= 1 or len(lines) <= 1:
        return [process_line(line) for line in lines]
    logger.debug("batch of %d lines on %d workers", len(lines), jobs)
    with Pool(processes=jobs) as pool:
        return list(pool.imap(process_line, lines))


def main(path: str, jobs: Optional[int] = None, out: Optional[IO[str]] = None) -> int:
    if jobs is None:
        jobs = get_config().jobs
    out = out or sys.stdout
    lines = read_lines(path)
    results = run(lines, jobs)
    for report in results:
        out.write(report.to_json() + "\n")
    failed = sum(not report.ok for report in results)
    logger.info("batch: %d ok, %d with errors", len(results) - failed, failed)
    return 0
