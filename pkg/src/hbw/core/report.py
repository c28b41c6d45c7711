"""
Validation Reports

Checks that inspect a structure against its invariants return a report
instead of raising. Violations are kept in the order the clauses are
checked, so the first entry is the first violated clause.
"""

from dataclasses import dataclass, field


@dataclass
class ValidationReport:
    """
    Ordered list of violated invariant clauses.

    Attributes:
        subject: Short name of what was checked (e.g. "partition")
        violations: Human-readable clause violations, in check order
    """
    subject: str
    violations: list[str] = field(default_factory=list)

    def add(self, message: str) -> None:
        """Record a violated clause."""
        self.violations.append(message)

    @property
    def is_valid(self) -> bool:
        return not self.violations

    def first(self) -> str:
        """Return the first violated clause, or "valid"."""
        return self.violations[0] if self.violations else "valid"

    def __str__(self) -> str:
        if self.is_valid:
            return f"{self.subject}: valid"
        lines = [f"{self.subject}: {len(self.violations)} violation(s)"]
        lines.extend(f"  - {v}" for v in self.violations)
        return "\n".join(lines)
