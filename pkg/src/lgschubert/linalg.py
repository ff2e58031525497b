"""Exact rational Gaussian elimination for the degreewise ideal computations.

Matrices are dense lists of Fraction rows.  Everything here is small and
exact; no pivoting heuristics beyond picking the first nonzero entry.
"""

from __future__ import annotations

from fractions import Fraction


def rank(rows):
    """Rank of a matrix given as a list of Fraction rows."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = Fraction(1) / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def solve(columns, target):
    """Solve sum_j x_j * columns[j] = target exactly.

    `columns` is a list of column vectors (equal-length Fraction lists).
    Returns (solution, n_free) where n_free counts the free parameters of
    the solution space (free coordinates are set to zero), or None when the
    system is inconsistent.
    """
    ncols = len(columns)
    nrows = len(target)
    aug = [[columns[j][i] for j in range(ncols)] + [target[i]]
           for i in range(nrows)]
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if aug[i][col]), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = Fraction(1) / aug[r][col]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if aug[i][ncols]:
            return None
    solution = [Fraction(0)] * ncols
    for row, col in enumerate(pivots):
        solution[col] = aug[row][ncols]
    return solution, ncols - len(pivots)


def nullspace(columns):
    """Basis of {x : sum_j x_j columns[j] = 0} for equal-length columns."""
    ncols = len(columns)
    if not ncols:
        return []
    nrows = len(columns[0])
    m = [[columns[j][i] for j in range(ncols)] for i in range(nrows)]
    pivots = {}
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = Fraction(1) / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots[col] = r
        r += 1
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for col, row in pivots.items():
            vec[col] = -m[row][free]
        basis.append(vec)
    return basis
