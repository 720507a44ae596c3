"""Table-driven exact arithmetic in GF(q^2) for a prime power q = p^e.

A :class:`FieldSpec` fixes the defining modulus deterministically: the monic
irreducible polynomial of degree 2e over GF(p) whose little-endian coefficient
vector (c_0, c_1, ...) encodes the smallest integer value c_0 + c_1*p + ....
Elements are indexed 0 .. q^2-1 the same way, so index 0 is the zero element
and index 1 is the one element, and the enumeration order of the field is the
index order.

All binary operations are precomputed into dense numpy tables; bulk data
structures elsewhere in the package hold raw element indices and index into
these tables directly, while :class:`FieldElement` wraps a single index with
operator overloading for scalar work.
"""

from __future__ import annotations

import functools

import numpy as np

__all__ = [
    "FieldElement",
    "FieldSpec",
    "artin_schreier_roots",
    "build_field",
    "frobenius_q",
]

#: largest q built without an explicit override (n = q^3 stays <= 4096)
MAX_DESK_Q = 16

_DTYPE = np.int16


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _digits(v: int, p: int, k: int) -> list[int]:
    """Little-endian base-p digits of v, padded to length k."""
    out = []
    for _ in range(k):
        v, r = divmod(v, p)
        out.append(r)
    return out


def _fp_mod(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial b, coefficients over GF(p)."""
    a = list(a)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            for k in range(db + 1):
                a[i - db + k] = (a[i - db + k] - c * b[k]) % p
    del a[db:]
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _fp_mod(out, mod, p)


def _is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division against every monic polynomial of degree <= deg/2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for v in range(p**d):
            divisor = _digits(v, p, d) + [1]
            if not _fp_mod(poly, divisor, p):
                return False
    return True


def _smallest_irreducible(p: int, deg: int) -> tuple[int, ...]:
    for v in range(p**deg):
        cand = _digits(v, p, deg) + [1]
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise RuntimeError(f"no irreducible polynomial of degree {deg} over GF({p})")


class FieldElement:
    """A single element of GF(q^2), stored as its enumeration index."""

    __slots__ = ("field", "idx")

    def __init__(self, field: "FieldSpec", idx: int):
        self.field = field
        self.idx = int(idx)

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Little-endian coefficient vector over GF(p), length 2e."""
        return tuple(int(c) for c in self.field._digit_rows[self.idx])

    def _same(self, other) -> int:
        if not isinstance(other, FieldElement) or other.field is not self.field:
            raise TypeError("operands belong to different fields")
        return other.idx

    def __add__(self, other):
        return FieldElement(self.field, self.field._add[self.idx][self._same(other)])

    def __sub__(self, other):
        return FieldElement(self.field, self.field._sub[self.idx][self._same(other)])

    def __mul__(self, other):
        return FieldElement(self.field, self.field._mul[self.idx][self._same(other)])

    def __neg__(self):
        return FieldElement(self.field, self.field._neg[self.idx])

    def __truediv__(self, other):
        j = self._same(other)
        if j == 0:
            raise ZeroDivisionError("division by the zero field element")
        return FieldElement(self.field, self.field._mul[self.idx][self.field._inv[j]])

    def __pow__(self, m: int):
        return FieldElement(self.field, self.field.pow(self.idx, m))

    def __bool__(self):
        return self.idx != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field is other.field and self.idx == other.idx
        return NotImplemented

    def __hash__(self):
        return hash((id(self.field), self.idx))

    def __repr__(self):
        return f"GF({self.field.order}):{list(self.coeffs)}"


class FieldSpec:
    """GF(q^2) = GF(p)[Z]/(modulus) with dense operation tables.

    Attributes of interest::

        p, e, q      -- characteristic, extension degree of q, q = p^e
        order        -- q^2, the number of elements
        modulus      -- monic irreducible of degree 2e, little-endian tuple
        ADD/SUB/MUL  -- (order x order) numpy index tables
        NEG/INV/FROB -- (order,) numpy index tables (INV[0] = 0 sentinel)
    """

    def __init__(self, p: int, e: int, *, allow_large: bool = False):
        if not _is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        if e < 1:
            raise ValueError(f"extension degree must be positive, got {e}")
        q = p**e
        if q > MAX_DESK_Q and not allow_large:
            raise ValueError(
                f"q={q} exceeds the desk-scale limit {MAX_DESK_Q}; "
                "pass allow_large=True to override"
            )
        self.p = p
        self.e = e
        self.q = q
        self.order = q * q
        self.modulus = _smallest_irreducible(p, 2 * e)
        self._build_tables()

    # -- construction ---------------------------------------------------

    def _build_tables(self):
        p, order = self.p, self.order
        k = 2 * self.e
        digit_rows = np.array([_digits(v, p, k) for v in range(order)], dtype=np.int64)
        self._digit_rows = digit_rows
        enc = p ** np.arange(k, dtype=np.int64)

        self.ADD = ((digit_rows[:, None, :] + digit_rows[None, :, :]) % p @ enc).astype(_DTYPE)
        self.NEG = ((-digit_rows) % p @ enc).astype(_DTYPE)
        self.SUB = self.ADD[:, self.NEG]

        mod = list(self.modulus)

        def mul_slow(a: int, b: int) -> int:
            prod = _fp_mulmod(_digits(a, p, k), _digits(b, p, k), mod, p)
            return sum(c * p**i for i, c in enumerate(prod))

        # discrete-log tables over a multiplicative generator
        gen = None
        for cand in range(1, order):
            x, steps = cand, 1
            while x != 1:
                x = mul_slow(x, cand)
                steps += 1
            if steps == order - 1:
                gen = cand
                break
        if gen is None:
            raise RuntimeError("no multiplicative generator found (modulus not irreducible?)")

        exp = np.zeros(order - 1, dtype=np.int64)
        log = np.zeros(order, dtype=np.int64)
        x = 1
        for i in range(order - 1):
            exp[i] = x
            log[x] = i
            x = mul_slow(x, gen)

        m = order - 1
        ksum = (log[1:, None] + log[None, 1:]) % m
        MUL = np.zeros((order, order), dtype=_DTYPE)
        MUL[1:, 1:] = exp[ksum]
        self.MUL = MUL

        INV = np.zeros(order, dtype=_DTYPE)
        INV[1:] = exp[(-log[1:]) % m]
        self.INV = INV

        FROB = np.zeros(order, dtype=_DTYPE)
        FROB[1:] = exp[(log[1:] * self.q) % m]
        self.FROB = FROB

        # plain-list mirrors for scalar-heavy code paths
        self._add = self.ADD.tolist()
        self._sub = self.SUB.tolist()
        self._mul = self.MUL.tolist()
        self._neg = self.NEG.tolist()
        self._inv = self.INV.tolist()
        self._frob = self.FROB.tolist()

    # -- scalar helpers (element indices in, element index out) ---------

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._sub[a][b]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of the zero field element")
        return self._inv[a]

    def pow(self, a: int, m: int) -> int:
        """a**m by square-and-multiply; negative m inverts first."""
        if m < 0:
            a, m = self.inv(a), -m
        out, base = 1, a
        while m:
            if m & 1:
                out = self._mul[out][base]
            base = self._mul[base][base]
            m >>= 1
        return out

    def from_int(self, c: int) -> int:
        """Index of the prime-subfield element c mod p."""
        return c % self.p

    def elem(self, idx: int) -> FieldElement:
        if not 0 <= idx < self.order:
            raise ValueError(f"element index {idx} out of range")
        return FieldElement(self, idx)

    def from_coeffs(self, coeffs) -> FieldElement:
        coeffs = list(coeffs)
        if len(coeffs) != 2 * self.e:
            raise ValueError(f"expected {2 * self.e} coefficients, got {len(coeffs)}")
        idx = sum((c % self.p) * self.p**i for i, c in enumerate(coeffs))
        return FieldElement(self, idx)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def elements(self):
        """All field elements in enumeration (index) order."""
        return (FieldElement(self, i) for i in range(self.order))

    def __repr__(self):
        return f"FieldSpec(p={self.p}, e={self.e}, modulus={list(self.modulus)})"


@functools.lru_cache(maxsize=None)
def _cached_field(p: int, e: int, allow_large: bool) -> FieldSpec:
    return FieldSpec(p, e, allow_large=allow_large)


def build_field(p: int, e: int, *, allow_large: bool = False) -> FieldSpec:
    """Construct (and cache) GF(q^2) for q = p^e."""
    return _cached_field(p, e, allow_large)


def frobenius_q(a: FieldElement) -> FieldElement:
    """The map a -> a^q, computed by square-and-multiply."""
    return FieldElement(a.field, a.field.pow(a.idx, a.field.q))


def artin_schreier_roots(alpha: FieldElement) -> set[FieldElement]:
    """All q solutions b of b^q + b = alpha^(q+1).

    The left-hand side is GF(p)-linear in b, so the solutions are found by
    one linear solve over GF(p) plus an enumeration of the kernel.
    """
    F = alpha.field
    p, k = F.p, 2 * F.e
    rhs_idx = F.mul(F._frob[alpha.idx], alpha.idx)

    # matrix of b -> b^q + b in the power basis, columns over GF(p)
    cols = []
    for i in range(k):
        basis_idx = p**i
        image = F.add(F._frob[basis_idx], basis_idx)
        cols.append(_digits(image, p, k))
    A = [[cols[j][i] for j in range(k)] for i in range(k)]
    b = _digits(rhs_idx, p, k)

    # Gaussian elimination mod p
    piv_cols = []
    r = 0
    for c in range(k):
        pr = next((i for i in range(r, k) if A[i][c] % p), None)
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        b[r], b[pr] = b[pr], b[r]
        inv = pow(A[r][c], -1, p)
        A[r] = [(x * inv) % p for x in A[r]]
        b[r] = (b[r] * inv) % p
        for i in range(k):
            if i != r and A[i][c] % p:
                f = A[i][c]
                A[i] = [(x - f * y) % p for x, y in zip(A[i], A[r])]
                b[i] = (b[i] - f * b[r]) % p
        piv_cols.append(c)
        r += 1
    for i in range(r, k):
        if b[i] % p:
            raise RuntimeError("Artin-Schreier equation unexpectedly unsolvable")

    free_cols = [c for c in range(k) if c not in piv_cols]
    if p ** len(free_cols) != F.q:
        raise RuntimeError(
            f"Artin-Schreier solution count {p ** len(free_cols)} != q={F.q}"
        )

    particular = [0] * k
    for i, c in enumerate(piv_cols):
        particular[c] = b[i]
    kernel = []
    for f in free_cols:
        v = [0] * k
        v[f] = 1
        for i, c in enumerate(piv_cols):
            v[c] = (-A[i][f]) % p
        kernel.append(v)

    roots = set()
    for combo in range(p ** len(free_cols)):
        sel = _digits(combo, p, len(free_cols))
        vec = particular[:]
        for s, kv in zip(sel, kernel):
            if s:
                vec = [(x + s * y) % p for x, y in zip(vec, kv)]
        roots.add(FieldElement(F, sum(c * p**i for i, c in enumerate(vec))))
    if len(roots) != F.q:
        raise RuntimeError("Artin-Schreier roots are not distinct")
    return roots
