"""Dense linear algebra over a table-backed field.

Matrices are 2-D numpy arrays of element indices.  Elimination is
deterministic: columns are processed left to right and the pivot is the first
row with a nonzero entry, so canonical solutions (free variables zero) are
reproducible.
"""

from __future__ import annotations

import numpy as np

from .fxpoly import DTYPE


def rref(F, M: np.ndarray, *, augment: int = 0) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; pivots are never chosen in the last
    ``augment`` columns."""
    R = np.array(M, dtype=DTYPE, copy=True)
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols - augment):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            R[[r, pr]] = R[[pr, r]]
        inv = int(F.INV[R[r, c]])
        if inv != 1:
            R[r] = F.MUL[inv][R[r]]
        factors = R[:, c].copy()
        factors[r] = 0
        nzr = np.flatnonzero(factors)
        if nzr.size:
            R[nzr] = F.SUB[R[nzr], F.MUL[factors[nzr][:, None], R[r][None, :]]]
        pivots.append(c)
        r += 1
    return R, pivots


def rank(F, M: np.ndarray) -> int:
    return len(rref(F, M)[1])


def solve(F, M: np.ndarray, rhs: np.ndarray):
    """Canonical solution of M x = rhs (free variables zero), or None."""
    rows, cols = M.shape
    A = np.concatenate([M, np.asarray(rhs, dtype=DTYPE).reshape(rows, 1)], axis=1)
    R, pivots = rref(F, A, augment=1)
    r = len(pivots)
    if r < rows and np.any(R[r:, cols]):
        return None
    x = np.zeros(cols, dtype=DTYPE)
    for i, c in enumerate(pivots):
        x[c] = R[i, cols]
    return x


def nullspace(F, M: np.ndarray) -> np.ndarray:
    """Basis of the right kernel as rows, canonical (one per free column)."""
    rows, cols = M.shape
    R, pivots = rref(F, M)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=DTYPE)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = F.NEG[R[i, fc]]
    return basis


def mat_vec(F, M: np.ndarray, v: np.ndarray) -> np.ndarray:
    """M @ v over the field (v is a 1-D index array)."""
    v = np.asarray(v, dtype=DTYPE)
    P = F.MUL[M, v[None, :]]
    # pairwise tree reduction with the addition table
    while P.shape[1] > 1:
        half = P.shape[1] // 2
        Q = F.ADD[P[:, :half], P[:, half : 2 * half]]
        if P.shape[1] % 2:
            Q = np.concatenate([Q, P[:, -1:]], axis=1)
        P = Q
    return P[:, 0] if P.shape[1] else np.zeros(M.shape[0], dtype=DTYPE)


def mat_mul(F, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    out = np.zeros((A.shape[0], B.shape[1]), dtype=DTYPE)
    for k in range(A.shape[1]):
        col = A[:, k]
        if np.any(col):
            out = F.ADD[out, F.MUL[col[:, None], B[k][None, :]]]
    return out
