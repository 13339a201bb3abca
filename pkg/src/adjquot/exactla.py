"""Exact dense linear algebra over Q(i)."""

from __future__ import annotations

from .exactnum import ONE, ZERO, GaussianRational, as_gr

__all__ = ["det_bareiss", "nullspace", "rref", "solve"]


def det_bareiss(matrix) -> GaussianRational:
    """Fraction-free (Bareiss) determinant of a square matrix over Q(i)."""
    a = [[as_gr(x) for x in row] for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    if n == 0:
        return ONE
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not a[k][k]:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return ZERO
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) / prev
            a[i][k] = ZERO
        prev = pivot
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


def rref(matrix):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    a = [[as_gr(x) for x in row] for row in matrix]
    if not a:
        return a, []
    nrows, ncols = len(a), len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = a[r][c].inverse()
        row = a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y if y else x for x, y in zip(a[i], row)]
        pivots.append(c)
        r += 1
    return a, pivots


def solve(matrix, rhs):
    """One solution of ``A x = b`` (free variables set to zero) or None."""
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    ncols = len(aug[0]) - 1 if aug else 0
    red, piv = rref(aug)
    if ncols in piv:
        return None
    x = [ZERO] * ncols
    for row, c in zip(red, piv):
        x[c] = row[ncols]
    return x


def nullspace(matrix, ncols: int | None = None):
    """Basis of the right nullspace, one vector per free column, in RREF form."""
    if not matrix:
        if ncols is None:
            raise ValueError("empty matrix needs ncols")
        return [[ONE if i == j else ZERO for i in range(ncols)] for j in range(ncols)]
    ncols = len(matrix[0])
    red, piv = rref(matrix)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for row, c in zip(red, piv):
            v[c] = -row[f]
        basis.append(v)
    return basis
