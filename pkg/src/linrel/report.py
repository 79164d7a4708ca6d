"""Decision reports: a verdict plus the inclusions and dimension comparisons behind it."""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from typing import Any

_CMP = {"=": operator.eq, "≤": operator.le, "≥": operator.ge, "<": operator.lt, ">": operator.gt}


@dataclass(frozen=True)
class Evidence:
    label: str
    holds: bool
    dims: dict[str, int] = field(default_factory=dict)

    @classmethod
    def compare(cls, label: str, lhs: int, op: str, rhs: int, holds: bool | None = None) -> "Evidence":
        """A dimension comparison; ``holds`` overrides the numeric test for equalities of subspaces."""
        if holds is None:
            holds = _CMP[op](lhs, rhs)
        return cls(label, holds, {"lhs": lhs, "rhs": rhs})

    def to_text(self) -> str:
        mark = "ok  " if self.holds else "FAIL"
        dims = ", ".join(f"{k}={v}" for k, v in self.dims.items())
        return f"  [{mark}] {self.label}" + (f"  ({dims})" if dims else "")

    def to_dict(self) -> dict[str, Any]:
        return {"label": self.label, "holds": self.holds, "dims": dict(self.dims)}


def inclusion(label: str, small, big) -> Evidence:
    """Evidence for ``small ⊆ big`` between two subspaces."""
    return Evidence(label, big.contains(small), {"lhs": small.dim, "rhs": big.dim})


@dataclass(frozen=True)
class DecisionReport:
    """Outcome of one criterion.

    ``evidence`` lists the conditions of the criterion in the order the
    statement gives them; the verdict is their conjunction and ``failed``
    names the first one that does not hold.  ``cross_checks`` are
    independent computations of the same question reported alongside.
    """

    verdict: bool
    criterion: str
    evidence: tuple[Evidence, ...]
    failed: str | None = None
    cross_checks: tuple[Evidence, ...] = ()
    subreports: tuple["DecisionReport", ...] = ()
    note: str = ""

    @classmethod
    def conjunction(cls, criterion: str, evidence, cross_checks=(), subreports=(), note: str = "") -> "DecisionReport":
        evidence = tuple(evidence)
        failed = next((e.label for e in evidence if not e.holds), None)
        return cls(failed is None, criterion, evidence, failed, tuple(cross_checks), tuple(subreports), note)

    def recomputed_verdict(self) -> bool:
        return all(e.holds for e in self.evidence)

    def cross_checks_agree(self) -> bool:
        return all(c.holds == self.verdict for c in self.cross_checks)

    def to_text(self, title: str | None = None) -> str:
        lines = []
        if title:
            lines.append(f"problem: {title}")
        lines.append(f"criterion: {self.criterion}")
        lines.append(f"verdict: {'true' if self.verdict else 'false'}")
        if self.failed:
            lines.append(f"failed: {self.failed}")
        if self.note:
            lines.append(f"note: {self.note}")
        lines.extend(e.to_text() for e in self.evidence)
        if self.cross_checks:
            lines.append("cross-checks:")
            lines.extend(e.to_text() for e in self.cross_checks)
        for sub in self.subreports:
            lines.append("  " + sub.to_text().replace("\n", "\n  "))
        return "\n".join(lines)

    def to_dict(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict,
            "criterion": self.criterion,
            "failed": self.failed,
            "note": self.note,
            "evidence": [e.to_dict() for e in self.evidence],
            "cross_checks": [e.to_dict() for e in self.cross_checks],
            "subreports": [s.to_dict() for s in self.subreports],
        }
