"""Check reports: the uniform result type of every validator."""

from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    ok: bool
    witness: str = ""

    def render(self):
        mark = "ok" if self.ok else "FAIL"
        tail = f"  [{self.witness}]" if self.witness and not self.ok else ""
        return f"{mark:4s} {self.name}{tail}"


@dataclass
class CheckReport:
    """Ordered list of named checks with optional failure witnesses."""

    subject: str = ""
    checks: list = field(default_factory=list)

    def add(self, name, ok, witness=""):
        self.checks.append(Check(name, bool(ok), witness))
        return ok

    def extend(self, other, prefix=""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.ok, c.witness))

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if not c.ok]

    def first_failure(self):
        for c in self.checks:
            if not c.ok:
                return c
        return None

    def render(self):
        head = f"{self.subject}: " if self.subject else ""
        status = "all checks passed" if self.ok else f"{len(self.failures)} check(s) FAILED"
        lines = [head + status]
        lines.extend("  " + c.render() for c in self.checks)
        return "\n".join(lines)

    def to_dict(self):
        return {
            "subject": self.subject,
            "ok": self.ok,
            "checks": [
                {"name": c.name, "ok": c.ok, "witness": c.witness} for c in self.checks
            ],
        }
