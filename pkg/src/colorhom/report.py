"""Check reports: the uniform result type of every identity checker.

A report either passed, or carries the full sorted list of violating
basis tuples together with their defect (LHS - RHS), so a near-miss is
inspectable.  Composite checks nest subreports; consequence checks that
refused to run record the failed precondition report instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    """One failing tuple: the basis indices (or generator indices), the
    exact defect value (a Vector or Scalar, LHS - RHS), and a short note."""

    args: tuple
    defect: object = None
    note: str = ""

    def describe(self):
        loc = ",".join(str(a) for a in self.args)
        text = f"at ({loc})"
        if self.defect is not None:
            text += f" defect {self.defect}"
        if self.note:
            text += f" [{self.note}]"
        return text


@dataclass(frozen=True, eq=False)
class CheckReport:
    identity_id: str
    violations: tuple = ()
    subreports: tuple = ()
    flags: dict = field(default_factory=dict)
    precondition_failure: "CheckReport | None" = None
    note: str = ""

    @property
    def passed(self) -> bool:
        if self.precondition_failure is not None:
            return False
        if self.violations:
            return False
        return all(sub.passed for sub in self.subreports)

    def leaves(self):
        """Depth-first leaf reports in fixed order (self when no subreports)."""
        if not self.subreports:
            yield self
            return
        for sub in self.subreports:
            yield from sub.leaves()

    def find(self, identity_id):
        for leaf in self.leaves():
            if leaf.identity_id == identity_id:
                return leaf
        return None

    def describe(self, limit=5):
        lines = []
        for leaf in self.leaves():
            if leaf.precondition_failure is not None:
                lines.append(
                    f"{leaf.identity_id}: SKIPPED "
                    f"(precondition {leaf.precondition_failure.identity_id} failed)"
                )
                continue
            if leaf.passed:
                lines.append(f"{leaf.identity_id}: PASS")
            else:
                lines.append(
                    f"{leaf.identity_id}: FAIL ({len(leaf.violations)} violations)"
                )
                for v in leaf.violations[:limit]:
                    lines.append(f"  {v.describe()}")
                if len(leaf.violations) > limit:
                    lines.append(f"  ... {len(leaf.violations) - limit} more")
        return "\n".join(lines)

    def __repr__(self):
        state = "PASS" if self.passed else "FAIL"
        return f"CheckReport({self.identity_id}: {state})"


def sorted_violations(violations):
    return tuple(sorted(violations, key=lambda v: (v.args, v.note)))
