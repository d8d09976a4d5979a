"""Small exact linear algebra over Scalar matrices.

Matrices are lists of lists (rows) of Scalar, all of one cyclotomic order.
Sizes here are tiny (at most 2^7 square), so everything is dense.
"""

from __future__ import annotations

from .field import Scalar

Matrix = list


def zeros(rows: int, cols: int, order: int) -> list[list[Scalar]]:
    z = Scalar.zero(order)
    return [[z] * cols for _ in range(rows)]


def identity(n: int, order: int) -> list[list[Scalar]]:
    out = zeros(n, n, order)
    one = Scalar.one(order)
    for i in range(n):
        out[i][i] = one
    return out


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = None
            for t in range(k):
                if a[i][t].is_zero() or b[t][j].is_zero():
                    continue
                term = a[i][t] * b[t][j]
                acc = term if acc is None else acc + term
            row.append(acc if acc is not None else Scalar.zero(a[i][0].order))
        out.append(row)
    return out


def mat_eq(a, b) -> bool:
    return len(a) == len(b) and all(ra == rb for ra, rb in zip(a, b))


def mat_inverse(a):
    """Exact inverse by Gauss-Jordan; raises ZeroDivisionError if singular."""
    n = len(a)
    order = a[0][0].order
    work = [list(row) + list(irow) for row, irow in zip(a, identity(n, order))]
    for col in range(n):
        piv = next((r for r in range(col, n) if not work[r][col].is_zero()), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        work[col], work[piv] = work[piv], work[col]
        inv = work[col][col].inverse()
        work[col] = [inv * c for c in work[col]]
        for r in range(n):
            if r != col and not work[r][col].is_zero():
                f = work[r][col]
                work[r] = [c - f * p for c, p in zip(work[r], work[col])]
    return [row[n:] for row in work]


def exact_rank(a) -> int:
    """Rank by fraction-free (Bareiss) elimination.

    Entries after step k are k x k minors of the input, so every division by
    the previous pivot is exact; over Q(zeta_N) it is performed with one field
    inversion per pivot step.
    """
    if not a or not a[0]:
        return 0
    rows = [list(r) for r in a if any(not c.is_zero() for c in r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    order = rows[0][0].order
    prev_inv = Scalar.one(order)
    rank = 0
    col = 0
    while rank < len(rows) and col < ncols:
        piv_row = next(
            (r for r in range(rank, len(rows)) if not rows[r][col].is_zero()), None)
        if piv_row is None:
            col += 1
            continue
        rows[rank], rows[piv_row] = rows[piv_row], rows[rank]
        piv = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            head = rows[r][col]
            if head.is_zero():
                rows[r] = [prev_inv * (piv * c) for c in rows[r]]
            else:
                rows[r] = [
                    prev_inv * (piv * c - head * p)
                    for c, p in zip(rows[r], rows[rank])
                ]
        prev_inv = piv.inverse()
        rank += 1
        col += 1
    return rank


def nullspace(a):
    """Basis of the right kernel, as coefficient vectors (lists of Scalar)."""
    if not a:
        return []
    order = a[0][0].order
    rows = [list(r) for r in a]
    ncols = len(rows[0])
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if not rows[r][col].is_zero()), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = rows[rank][col].inverse()
        rows[rank] = [inv * c for c in rows[rank]]
        for r in range(len(rows)):
            if r != rank and not rows[r][col].is_zero():
                f = rows[r][col]
                rows[r] = [c - f * p for c, p in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    zero, one = Scalar.zero(order), Scalar.one(order)
    for fc in free:
        vec = [zero] * ncols
        vec[fc] = one
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][fc]
        basis.append(vec)
    return basis


def numeric_rank(a, tol: float = 1e-8) -> int:
    """Floating-point SVD rank of the complex embedding (independent oracle)."""
    import numpy as np

    if not a or not a[0]:
        return 0
    m = np.array([[c.to_complex() for c in row] for row in a], dtype=complex)
    s = np.linalg.svd(m, compute_uv=False)
    if s.size == 0:
        return 0
    cutoff = tol * max(float(s[0]), 1.0)
    return int((s > cutoff).sum())


def row_span_rank(vectors) -> int:
    """Rank of a list of coefficient vectors."""
    return exact_rank([list(v) for v in vectors])
