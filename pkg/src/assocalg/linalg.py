"""Exact dense linear algebra over any field whose elements support
``+ - * /`` and truthiness (Scalar, ExtScalar)."""

from __future__ import annotations

from itertools import permutations

from .errors import SingularMatrix
from .scalar import ONE, ZERO


def row_reduce(rows):
    """Reduced row echelon form.  Returns (rref rows, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = ONE / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows) -> int:
    return len(row_reduce(rows)[1])


def nullspace(rows, ncols: int | None = None):
    """Basis of {x : rows . x = 0} as a list of vectors."""
    if ncols is None:
        ncols = len(rows[0])
    red, pivots = row_reduce(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(rows, rhs):
    """One solution x of rows . x = rhs, or None if inconsistent."""
    n = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = row_reduce(aug)
    if n in pivots:
        return None
    x = [ZERO] * n
    for row, p in zip(red, pivots):
        x[p] = row[n]
    return x


def coordinates(vec, basis):
    """Coefficients c with sum c_i basis_i = vec, or None if vec is outside the span."""
    cols = [[b[i] for b in basis] for i in range(len(vec))]
    return solve(cols, list(vec))


def det(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if n == 3:
        return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    total = ZERO
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = ONE
        for i, j in enumerate(perm):
            term = term * m[i][j]
        total = total + term if sign > 0 else total - term
    return total


def identity(n: int):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def inverse(m):
    n = len(m)
    aug = [list(r) + e for r, e in zip(m, identity(n))]
    red, pivots = row_reduce(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return [row[n:] for row in red]


def matmul(a, b):
    cols = list(zip(*b))
    out = []
    for row in a:
        out_row = []
        for col in cols:
            acc = ZERO
            for x, y in zip(row, col):
                if x and y:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(out_row)
    return out


def vecmat(v, m):
    """Row vector times matrix."""
    n = len(m[0])
    out = [ZERO] * n
    for x, row in zip(v, m):
        if x:
            for j in range(n):
                if row[j]:
                    out[j] = out[j] + x * row[j]
    return out


def transpose(m):
    return [list(r) for r in zip(*m)]
