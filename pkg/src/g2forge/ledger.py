"""Named residual checks with exact pass/fail."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator

from .forms import AltForm
from .scalar import Scalar, as_scalar
from .tensor import QTensor

__all__ = ["LedgerEntry", "IdentityLedger", "ResidualReport", "residual_norm2", "vanishes"]


def residual_norm2(residual) -> Scalar:
    """Sum of squared components of a residual (tensor, form or scalar)."""
    if isinstance(residual, QTensor):
        return residual.norm2()
    if isinstance(residual, AltForm):
        return residual.to_tensor().norm2()
    if isinstance(residual, (list, tuple)):
        total = Scalar(0)
        for r in residual:
            total = total + residual_norm2(r)
        return total
    s = as_scalar(residual)
    return s * s


def vanishes(norm2: Scalar, tol: float | None = None) -> bool:
    """Exact zero test of a squared residual, or ``sqrt(norm2) <= tol``."""
    if tol is None:
        return not norm2
    return math.sqrt(max(float(norm2), 0.0)) <= tol


@dataclass(frozen=True)
class LedgerEntry:
    name: str
    residual_norm2: Scalar
    formula: str = ""

    @property
    def passed(self) -> bool:
        return not self.residual_norm2

    def passes(self, tol: float | None = None) -> bool:
        """Exact zero test, or ``sqrt(residual_norm2) <= tol`` when ``tol`` is given."""
        return vanishes(self.residual_norm2, tol)

    def residual_float(self) -> float:
        return math.sqrt(max(float(self.residual_norm2), 0.0))


@dataclass
class IdentityLedger:
    entries: list[LedgerEntry] = field(default_factory=list)

    def check(self, name: str, residual, formula: str = "") -> LedgerEntry:
        entry = LedgerEntry(name, residual_norm2(residual), formula)
        self.entries.append(entry)
        return entry

    def extend(self, other: "IdentityLedger") -> None:
        self.entries.extend(other.entries)

    def __iter__(self) -> Iterator[LedgerEntry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, name: str) -> LedgerEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(e.name == name for e in self.entries)

    def names(self) -> list[str]:
        return [e.name for e in self.entries]

    def all_passed(self, tol: float | None = None) -> bool:
        return all(e.passes(tol) for e in self.entries)

    def failures(self, tol: float | None = None) -> list[LedgerEntry]:
        return [e for e in self.entries if not e.passes(tol)]


@dataclass(frozen=True)
class ResidualReport:
    """Named squared residuals whose vanishing is reported as boolean flags.

    Subclasses add derived flags (implications, equivalences) in ``_derive``.
    """

    residuals: dict[str, Scalar]

    def flags(self, tol: float | None = None) -> dict[str, bool]:
        out = {k: vanishes(v, tol) for k, v in self.residuals.items()}
        out.update(self._derive(out))
        return out

    def _derive(self, flags: dict[str, bool]) -> dict[str, bool]:
        return {}
