"""Exact Gaussian elimination over a :class:`~cyclogrs.galois.FieldSpec`.

Matrices are 2-D int64 arrays of element encodings.  Over a prime field the
field methods reduce to plain modular arithmetic, so the same code serves
F_p and F_{p^m}.
"""

from __future__ import annotations

import numpy as np

from .galois import FieldSpec


def rref(A, field: FieldSpec) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and the pivot columns."""
    R = np.array(A, dtype=np.int64, copy=True)
    if R.ndim != 2:
        raise ValueError("rref expects a 2-D array")
    rows, cols = R.shape
    if field.m == 1:
        return _rref_prime(R, field.p)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            R[[r, i]] = R[[i, r]]
        if R[r, c] != 1:
            R[r] = field.mul(R[r], field.inv(R[r, c]))
        col = R[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            R[hit] = field.sub(R[hit], field.mul(col[hit, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R, pivots


def _rref_prime(R: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    rows, cols = R.shape
    R %= p
    inverses = [0] + [pow(a, p - 2, p) for a in range(1, p)]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            R[[r, i]] = R[[i, r]]
        a = int(R[r, c])
        if a != 1:
            R[r, c:] = (R[r, c:] * inverses[a]) % p
        col = R[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            if p == 2:
                R[hit, c:] ^= R[r, c:]
            else:
                R[hit, c:] = (R[hit, c:] - col[hit, None] * R[r, c:]) % p
        pivots.append(c)
        r += 1
    return R, pivots


def rank(A, field: FieldSpec) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(rref(A, field)[1])


def row_basis(A, field: FieldSpec) -> np.ndarray:
    """Nonzero rows of the RREF: a canonical basis of the row space."""
    A = np.asarray(A, dtype=np.int64)
    if A.shape[0] == 0:
        return A.reshape(0, A.shape[1])
    R, piv = rref(A, field)
    return R[: len(piv)]


def nullspace(A, field: FieldSpec) -> np.ndarray:
    """Rows spanning {x : A x^T = 0}."""
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    R, piv = rref(A, field)
    free = [j for j in range(n) if j not in set(piv)]
    out = np.zeros((len(free), n), dtype=np.int64)
    for t, f in enumerate(free):
        out[t, f] = 1
        out[t, piv] = field.neg(R[: len(piv), f])
    return out


def independent_rows(A, field: FieldSpec) -> list[int]:
    """Indices of rows that are independent of all earlier rows.

    The pivot columns of rref(A^T) are exactly these, so the rank of every
    prefix ``A[:r]`` is ``sum(i < r for i in result)``.
    """
    A = np.asarray(A, dtype=np.int64)
    if A.shape[0] == 0:
        return []
    if field.m > 1:
        return rref(A.T, field)[1]
    p = field.p
    n = A.shape[1]
    inverses = [0] + [pow(a, p - 2, p) for a in range(1, p)]
    basis = np.zeros((n, n), dtype=np.int64)  # reduced rows, pivot columns in `piv`
    piv: list[int] = []
    out = []
    for i, row in enumerate(A % p):
        if piv:
            row = (row - row[piv] @ basis[: len(piv)]) % p
        nz = np.flatnonzero(row)
        if nz.size == 0:
            continue
        c = int(nz[0])
        row = (row * inverses[int(row[c])]) % p
        r = len(piv)
        if r:
            col = basis[:r, c].copy()
            basis[:r] = (basis[:r] - col[:, None] * row[None, :]) % p
        basis[r] = row
        piv.append(c)
        out.append(i)
        if len(piv) == n:
            break
    return out


def same_row_space(A, B, field: FieldSpec) -> bool:
    a, b = row_basis(A, field), row_basis(B, field)
    return a.shape == b.shape and np.array_equal(a, b)
