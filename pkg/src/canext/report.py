"""Check reports: named pass/fail records with witnesses or counterexamples."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    name: str
    passed: bool
    witness: Any = None
    sampled: bool = False
    seconds: float | None = None

    def to_dict(self, timings: bool = False) -> dict:
        from .serialize import to_jsonable
        d: dict[str, Any] = {"name": self.name, "pass": self.passed}
        if self.witness is not None:
            d["witness"] = to_jsonable(self.witness)
        if self.sampled:
            d["sampled"] = True
        if timings and self.seconds is not None:
            d["seconds"] = round(self.seconds, 4)
        return d


@dataclass
class Report:
    instance: dict
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def record(self, name: str, passed: bool, witness: Any = None, *,
               sampled: bool = False, started: float | None = None) -> Check:
        seconds = None if started is None else time.perf_counter() - started
        c = Check(name, bool(passed), witness, sampled, seconds)
        self.checks.append(c)
        return c

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def get(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self, timings: bool = False) -> dict:
        from .serialize import to_jsonable
        return {"instance": to_jsonable(self.instance),
                "checks": [c.to_dict(timings) for c in self.checks]}

    def to_json(self, timings: bool = False) -> str:
        return json.dumps(self.to_dict(timings), sort_keys=True, indent=2)


def merge(reports: list[Report]) -> list[Report]:
    """Order-independent merge: reports sorted by their instance descriptor."""
    return sorted(reports, key=lambda r: json.dumps(r.instance, sort_keys=True))
