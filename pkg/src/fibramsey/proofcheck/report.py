from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    name: str
    ok: bool
    detail: dict[str, Any] = field(default_factory=dict)


@dataclass
class Report:
    """Ordered pass/fail record produced by one suite."""

    suite: str
    checks: list[Check] = field(default_factory=list)
    tables: dict[str, str] = field(default_factory=dict)
    summary: dict[str, Any] = field(default_factory=dict)

    def add(self, name: str, ok: bool, **detail) -> bool:
        self.checks.append(Check(name, bool(ok), detail))
        return bool(ok)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "ok": self.ok,
            "n_checks": len(self.checks),
            "n_failed": len(self.failures),
            "failures": [{"name": c.name, **_jsonable(c.detail)} for c in self.failures[:50]],
            "summary": _jsonable(self.summary),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def text(self) -> str:
        lines = [f"{self.suite}: {'PASS' if self.ok else 'FAIL'} ({len(self.checks)} checks, {len(self.failures)} failed)"]
        for k, v in self.summary.items():
            lines.append(f"  {k}: {v}")
        for c in self.failures[:20]:
            lines.append(f"  FAILED {c.name} {c.detail}")
        for title, body in self.tables.items():
            lines.append("")
            lines.append(title)
            lines.append(body)
        return "\n".join(lines)


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (bool, int, float, str)) or obj is None:
        return obj
    return str(obj)
