#!/usr/bin/env python
# -*- coding: utf-8 -*-
# @File Name: report.py
# @Created:   2026-09-18 12:30:09
# @Modified:  2026-10-15 19:44:12

"""
Summarize checks to users.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from .constants import EXIT_CHECK_FAILED, EXIT_OK
from .zlinalg import FgAbGroup


@dataclass
class Witness:
    """One failed comparison."""

    message: str
    degree: Optional[int] = None
    expected: Optional[str] = None
    actual: Optional[str] = None

    def __str__(self) -> str:
        where = f"degree {self.degree}: " if self.degree is not None else ""
        if self.expected is None and self.actual is None:
            return where + self.message
        return f"{where}{self.message} (expected {self.expected}, got {self.actual})"

    def to_json(self) -> Dict[str, Any]:
        return {
            "message": self.message,
            "degree": self.degree,
            "expected": self.expected,
            "actual": self.actual,
        }


@dataclass
class Report:
    """Outcome of one check. Can be rendered with `str(report)`."""

    name: str
    witnesses: List[Witness] = field(default_factory=list)
    # label -> rendered group per degree
    columns: Dict[str, List[str]] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    def fail(
        self,
        message: str,
        degree: Optional[int] = None,
        expected: Optional[object] = None,
        actual: Optional[object] = None,
    ) -> None:
        self.witnesses.append(
            Witness(
                message,
                degree,
                None if expected is None else str(expected),
                None if actual is None else str(actual),
            )
        )

    def expect_isomorphic(
        self, degree: int, expected: FgAbGroup, actual: FgAbGroup, what: str
    ) -> None:
        if not expected.is_isomorphic(actual):
            self.fail(f"{what} differ", degree, expected, actual)

    def add_column(self, label: str, groups: Sequence[FgAbGroup]) -> None:
        self.columns[label] = [str(g) for g in groups]

    def note(self, message: str) -> None:
        self.notes.append(message)

    @property
    def passed(self) -> bool:
        return not self.witnesses

    @property
    def return_code(self) -> int:
        """0 when every comparison held, 1 otherwise."""
        return EXIT_OK if self.passed else EXIT_CHECK_FAILED

    def to_json(self) -> Dict[str, Any]:
        return {
            "check": self.name,
            "passed": self.passed,
            "columns": self.columns,
            "notes": self.notes,
            "witnesses": [w.to_json() for w in self.witnesses],
        }

    def __str__(self) -> str:
        lines = []
        for label, groups in self.columns.items():
            cells = ", ".join(f"{i}: {g}" for i, g in enumerate(groups))
            lines.append(f"  {label}: {cells}")
        lines.extend(f"  {n}" for n in self.notes)
        lines.extend(f"  witness: {w}" for w in self.witnesses)
        lines.append(f"{self.name}: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)
