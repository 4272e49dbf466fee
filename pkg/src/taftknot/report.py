"""Pass/fail reports shared by every verifier."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    passed: bool
    witness: str | None = None
    detail: str | None = None

    def to_dict(self) -> dict:
        out = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail is not None:
            out["detail"] = self.detail
        return out


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, witness: str | None = None, detail: str | None = None) -> Check:
        check = Check(name, bool(passed), witness, detail)
        self.checks.append(check)
        return check

    def extend(self, other: Report, prefix: str | None = None) -> None:
        for c in other.checks:
            name = f"{prefix}: {c.name}" if prefix else c.name
            self.checks.append(Check(name, c.passed, c.witness, c.detail))

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self) -> bool:
        return self.ok

    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {"title": self.title, "ok": self.ok, "checks": [c.to_dict() for c in self.checks]}

    def to_text(self) -> str:
        lines = [f"== {self.title}"]
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"  [{status}] {c.name}"
            if c.detail:
                line += f" ({c.detail})"
            if c.witness:
                line += f" -- witness: {c.witness}"
            lines.append(line)
        lines.append(f"  result: {'PASS' if self.ok else 'FAIL'}")
        return "\n".join(lines)
