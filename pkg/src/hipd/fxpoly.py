"""Dense univariate polynomials over a table-backed field.

A polynomial is a little-endian numpy array of element indices with no
trailing zeros; the zero polynomial is the empty array.  Every function takes
the :class:`~hipd.gf.FieldSpec` as its first argument where arithmetic is
needed and never mutates its inputs.
"""

from __future__ import annotations

import numpy as np

DTYPE = np.int16

ZERO = np.zeros(0, dtype=DTYPE)
ONE = np.ones(1, dtype=DTYPE)


def from_ints(coeffs) -> np.ndarray:
    return normalize(np.asarray(list(coeffs), dtype=DTYPE))


def normalize(a: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(a)
    if nz.size == 0:
        return ZERO
    return a[: nz[-1] + 1].astype(DTYPE, copy=False)


def deg(a: np.ndarray) -> int:
    """Degree; -1 for the zero polynomial."""
    return a.size - 1


def is_zero(a: np.ndarray) -> bool:
    return a.size == 0


def equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.size == b.size and bool(np.all(a == b))


def constant(c: int) -> np.ndarray:
    return ZERO if c == 0 else np.array([c], dtype=DTYPE)


def x_power(k: int, c: int = 1) -> np.ndarray:
    if c == 0:
        return ZERO
    out = np.zeros(k + 1, dtype=DTYPE)
    out[k] = c
    return out


def add(F, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.size < b.size:
        a, b = b, a
    if b.size == 0:
        return a
    out = a.copy()
    out[: b.size] = F.ADD[a[: b.size], b]
    if a.size == b.size:
        return normalize(out)
    return out


def neg(F, a: np.ndarray) -> np.ndarray:
    return F.NEG[a] if a.size else ZERO


def sub(F, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return add(F, a, neg(F, b))


def scale(F, a: np.ndarray, c: int) -> np.ndarray:
    if c == 0 or a.size == 0:
        return ZERO
    return F.MUL[c][a]


def shift(a: np.ndarray, k: int) -> np.ndarray:
    """Multiply by X^k."""
    if a.size == 0 or k == 0:
        return a
    return np.concatenate([np.zeros(k, dtype=DTYPE), a])


def mul(F, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.size == 0 or b.size == 0:
        return ZERO
    if a.size > b.size:
        a, b = b, a
    out = np.zeros(a.size + b.size - 1, dtype=DTYPE)
    ADD, MUL = F.ADD, F.MUL
    for i in np.flatnonzero(a):
        seg = out[i : i + b.size]
        out[i : i + b.size] = ADD[seg, MUL[a[i]][b]]
    return out


def pow_(F, a: np.ndarray, k: int) -> np.ndarray:
    if k < 0:
        raise ValueError("negative polynomial power")
    out = ONE
    base = a
    while k:
        if k & 1:
            out = mul(F, out, base)
        base = mul(F, base, base)
        k >>= 1
    return out


def divmod_(F, a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    if b.size == 0:
        raise ZeroDivisionError("polynomial division by zero")
    if a.size < b.size:
        return ZERO, a
    r = a.copy()
    db = b.size - 1
    q = np.zeros(a.size - db, dtype=DTYPE)
    inv_lead = F._inv[int(b[-1])]
    MUL, SUB = F.MUL, F.SUB
    for i in range(a.size - 1, db - 1, -1):
        c = int(r[i])
        if c:
            c = F._mul[c][inv_lead]
            q[i - db] = c
            r[i - db : i + 1] = SUB[r[i - db : i + 1], MUL[c][b]]
    return normalize(q), normalize(r[:db])


def mod(F, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return divmod_(F, a, b)[1]


def eval_at(F, a: np.ndarray, x: int) -> int:
    """Horner evaluation, element index in and out."""
    mul_t, add_t = F._mul, F._add
    acc = 0
    for c in a[::-1]:
        acc = add_t[mul_t[acc][x]][int(c)]
    return acc


def truncate(a: np.ndarray, n: int) -> np.ndarray:
    return normalize(a[:n]) if a.size > n else a


def mul_trunc(F, a: np.ndarray, b: np.ndarray, n: int) -> np.ndarray:
    return truncate(mul(F, a, b), n)
