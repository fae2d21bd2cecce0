"""Check results and their line-oriented rendering."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    counterexample: str | None = None

    def render(self) -> str:
        line = f"CHECK {self.name} {'PASS' if self.passed else 'FAIL'}"
        if self.counterexample:
            line += f" witness {self.counterexample}"
        elif self.detail:
            line += f" [{self.detail}]"
        return line


def render_report(results) -> str:
    return "\n".join(r.render() for r in results)


def all_passed(results) -> bool:
    return all(r.passed for r in results)
