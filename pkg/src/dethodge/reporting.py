"""Shared result object for the exhaustive and sampled verification drivers."""

from __future__ import annotations

from dataclasses import dataclass, field


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


@dataclass
class VerificationReport:
    name: str
    params: dict
    checks: int = 0
    failures: list = field(default_factory=list)
    seed: int | str | None = None
    details: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def add_failure(self, **info):
        self.failures.append(info)

    def merge(self, other: "VerificationReport"):
        self.checks += other.checks
        self.failures.extend(other.failures)

    def summary(self) -> str:
        status = "pass" if self.ok else f"FAIL ({len(self.failures)} counterexamples)"
        ps = ", ".join(f"{k}={v}" for k, v in self.params.items())
        line = f"{self.name} [{ps}]: {self.checks} checks, {status}"
        if self.seed is not None:
            line += f", seed={self.seed}"
        return line

    def to_json_obj(self) -> dict:
        obj = {
            "name": self.name,
            "params": _jsonable(self.params),
            "checks": self.checks,
            "ok": self.ok,
            "failures": _jsonable(self.failures),
            "seed": self.seed,
        }
        if self.details:
            obj["details"] = _jsonable(self.details)
        return obj
