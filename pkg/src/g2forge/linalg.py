"""Exact Gaussian elimination over Q(sqrt 2)."""

from __future__ import annotations

from typing import Sequence

from .scalar import Scalar, as_scalar

__all__ = ["row_echelon", "rank", "nullspace"]


def row_echelon(rows: Sequence[Sequence[object]]) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [[as_scalar(v) for v in row] for row in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c].inverse()
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence[object]]) -> int:
    return len(row_echelon(rows)[1])


def nullspace(rows: Sequence[Sequence[object]], ncols: int | None = None) -> list[list[Scalar]]:
    """Basis of ``{x : rows @ x = 0}``."""
    if ncols is None:
        ncols = len(rows[0])
    red, pivots = row_echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Scalar(0)] * ncols
        x[f] = Scalar(1)
        for r, p in enumerate(pivots):
            x[p] = -red[r][f]
        basis.append(x)
    return basis
