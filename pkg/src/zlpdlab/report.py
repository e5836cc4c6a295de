"""Structured pass/fail reports returned by the verification routines."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


@dataclass
class CheckReport:
    name: str
    passed: bool
    details: dict[str, Any] = field(default_factory=dict)
    failures: list[Any] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "details": jsonable(self.details),
            "failures": jsonable(self.failures),
        }


def jsonable(obj):
    """Convert reports, scalars and subspaces into JSON-ready values."""
    from .linalg import Subspace

    if isinstance(obj, CheckReport):
        return obj.to_dict()
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Subspace):
        return {"dim": obj.dim, "basis": [[str(v) for v in row] for row in obj.basis]}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [jsonable(v) for v in items]
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    return str(obj)
