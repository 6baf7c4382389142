"""Exact Gauss-Jordan elimination over a FieldSpec."""

from __future__ import annotations


def solve(rows, rhs, field):
    """Return one solution x of A x = b, or None if the system is inconsistent.

    ``rows`` is a list of equal-length lists of FieldElement; free variables
    are set to zero.
    """
    m = len(rows)
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = []
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, m) if aug[r][col]), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = aug[row][col].inverse()
        aug[row] = [v * inv for v in aug[row]]
        for r in range(m):
            if r != row and aug[r][col]:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    for r in range(row, m):
        if aug[r][ncols]:
            return None
    x = [field.zero] * ncols
    for r, col in enumerate(pivots):
        x[col] = aug[r][ncols]
    return x


def rank(rows) -> int:
    if not rows:
        return 0
    aug = [list(r) for r in rows]
    m, ncols = len(aug), len(aug[0])
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, m) if aug[r][col]), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = aug[row][col].inverse()
        aug[row] = [v * inv for v in aug[row]]
        for r in range(row + 1, m):
            if aug[r][col]:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[row])]
        row += 1
        if row == m:
            break
    return row
