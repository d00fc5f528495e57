"""Serializable result of one compute/pair/batch call."""

from __future__ import annotations

import json
from dataclasses import dataclass, field, fields
from typing import Any, Dict, List, Optional

Terms = List[List[int]]


@dataclass
class Report:
    generators: List[int]
    frobenius: Optional[int] = None
    genus: Optional[int] = None
    j: Optional[int] = None
    symmetric: Optional[bool] = None
    symmetric_pair: Optional[List[int]] = None
    diagonal: Optional[List[int]] = None
    matrix: Optional[List[List[int]]] = None
    numerator: Terms = field(default_factory=list)
    representation: Optional[List[List[int]]] = None
    checks: Dict[str, bool] = field(default_factory=dict)
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {}
        for f in fields(self):
            value = getattr(self, f.name)
            if f.name == "checks":
                value = dict(sorted(value.items()))
            out[f.name] = value
        return out

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Report":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown report fields: {sorted(unknown)}")
        return cls(**data)

    def to_json(self, indent: Optional[int] = None) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))


def error_report(raw: List[int], exc: BaseException) -> Report:
    return Report(generators=list(raw), error=f"{type(exc).__name__}: {exc}")


def terms_to_lists(terms) -> Terms:
    """Sparse (exponent, coefficient) pairs as JSON-friendly lists."""
    return [[int(e), int(c)] for e, c in terms]
