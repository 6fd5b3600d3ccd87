"""Dense linear algebra over a :class:`~sympower.fields.Field` on raw values."""

from __future__ import annotations

from typing import Sequence

from .fields import Field


def echelon(rows: Sequence[Sequence], F: Field) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    M = [list(r) for r in rows]
    if not M:
        return [], []
    ncols = len(M[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(M)) if not F.is_zero(M[i][col])), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = F.inv(M[r][col])
        M[r] = [F.mul(inv, a) for a in M[r]]
        for i in range(len(M)):
            if i != r and not F.is_zero(M[i][col]):
                c = M[i][col]
                M[i] = [F.sub(a, F.mul(c, b)) for a, b in zip(M[i], M[r])]
        pivots.append(col)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(rows: Sequence[Sequence], F: Field) -> int:
    return len(echelon(rows, F)[1])


def nullspace(rows: Sequence[Sequence], F: Field, ncols: int | None = None) -> list[list]:
    """Basis of {v : rows·v = 0}."""
    if ncols is None:
        ncols = len(rows[0])
    R, pivots = echelon(rows, F) if rows else ([], [])
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for fj in free:
        v = [F.zero] * ncols
        v[fj] = F.one
        for row, pc in zip(R, pivots):
            v[pc] = F.neg(row[fj])
        basis.append(v)
    return basis


def coordinates(basis: Sequence[Sequence], v: Sequence, F: Field) -> list | None:
    """Coefficients a with sum a_i basis_i = v, or None when v is not in the span.

    ``basis`` must be linearly independent.
    """
    k = len(basis)
    n = len(v)
    # columns are basis vectors, augmented with v
    aug = [[basis[i][j] for i in range(k)] + [v[j]] for j in range(n)]
    R, pivots = echelon(aug, F)
    if k in pivots:
        return None
    if len(pivots) != k:
        raise ValueError("basis vectors are linearly dependent")
    return [R[i][k] for i in range(k)]
