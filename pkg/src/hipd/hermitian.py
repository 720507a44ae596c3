"""The Hermitian curve y^q + y = x^(q+1) over GF(q^2) and its coordinate ring.

Ring elements use the vector representation: a length-q tuple of univariate
polynomials (a_0, ..., a_{q-1}) over GF(q^2) standing for sum_i a_i(X) Y^i.
The degree function is deg_H(X^i Y^j) = i*q + j*(q+1); it is additive on
products and injective on monomials with j < q, which is what makes exact
division and degree bookkeeping cheap in this representation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import fxpoly, linalg
from .fxpoly import DTYPE, ZERO
from .gf import FieldElement, FieldSpec, artin_schreier_roots

NEG_INF = float("-inf")

Point = tuple[int, int]


class CurveParams:
    """The affine rational points and numeric invariants of one curve."""

    def __init__(self, field: FieldSpec):
        self.field = field
        q = field.q
        self.q = q
        self.n = q**3
        self.g = q * (q - 1) // 2
        points: list[Point] = []
        for a_idx in range(field.order):
            roots = sorted(r.idx for r in artin_schreier_roots(field.elem(a_idx)))
            points.extend((a_idx, b_idx) for b_idx in roots)
        if len(points) != self.n or len(set(points)) != self.n:
            raise RuntimeError("curve point enumeration is inconsistent")
        for a_idx, b_idx in points:
            lhs = field.add(field.pow(b_idx, q), b_idx)
            rhs = field.pow(a_idx, q + 1)
            if lhs != rhs:
                raise RuntimeError(f"point ({a_idx},{b_idx}) is not on the curve")
        self.points = tuple(points)
        self._series_cache: dict[Point, np.ndarray] = {}

    def __repr__(self):
        return f"CurveParams(q={self.q}, n={self.n}, g={self.g})"


def build_curve(field: FieldSpec) -> CurveParams:
    return CurveParams(field)


class RingElement:
    """An element of the coordinate ring in vector representation."""

    __slots__ = ("curve", "comps")

    def __init__(self, curve: CurveParams, comps):
        if len(comps) != curve.q:
            raise ValueError(f"expected {curve.q} components, got {len(comps)}")
        self.curve = curve
        self.comps = tuple(fxpoly.normalize(np.asarray(c, dtype=DTYPE)) for c in comps)

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, curve: CurveParams) -> "RingElement":
        return cls(curve, [ZERO] * curve.q)

    @classmethod
    def one(cls, curve: CurveParams) -> "RingElement":
        return cls.monomial(curve, 0, 0)

    @classmethod
    def monomial(cls, curve: CurveParams, i: int, j: int, c: int = 1) -> "RingElement":
        if not 0 <= j < curve.q:
            raise ValueError(f"Y-power {j} outside [0, q)")
        comps = [ZERO] * curve.q
        comps[j] = fxpoly.x_power(i, c)
        return cls(curve, comps)

    @classmethod
    def from_x_poly(cls, curve: CurveParams, poly: np.ndarray) -> "RingElement":
        comps = [ZERO] * curve.q
        comps[0] = poly
        return cls(curve, comps)

    # -- arithmetic -------------------------------------------------------

    def _same(self, other) -> "RingElement":
        if not isinstance(other, RingElement) or other.curve is not self.curve:
            raise TypeError("operands belong to different curves")
        return other

    def __add__(self, other):
        o = self._same(other)
        F = self.curve.field
        return RingElement(self.curve, [fxpoly.add(F, a, b) for a, b in zip(self.comps, o.comps)])

    def __sub__(self, other):
        o = self._same(other)
        F = self.curve.field
        return RingElement(self.curve, [fxpoly.sub(F, a, b) for a, b in zip(self.comps, o.comps)])

    def __neg__(self):
        F = self.curve.field
        return RingElement(self.curve, [fxpoly.neg(F, a) for a in self.comps])

    def __mul__(self, other):
        return ring_mul(self, self._same(other))

    def scaled(self, c: int) -> "RingElement":
        F = self.curve.field
        return RingElement(self.curve, [fxpoly.scale(F, a, c) for a in self.comps])

    def scalar_poly_mul(self, u: np.ndarray) -> "RingElement":
        F = self.curve.field
        return RingElement(self.curve, [fxpoly.mul(F, a, u) for a in self.comps])

    def __bool__(self):
        return any(c.size for c in self.comps)

    def is_zero(self) -> bool:
        return not self

    def __eq__(self, other):
        if not isinstance(other, RingElement) or other.curve is not self.curve:
            return NotImplemented
        return all(fxpoly.equal(a, b) for a, b in zip(self.comps, other.comps))

    def __hash__(self):
        return hash((id(self.curve), tuple(tuple(int(x) for x in c) for c in self.comps)))

    def coefficient(self, i: int, j: int) -> int:
        comp = self.comps[j]
        return int(comp[i]) if i < comp.size else 0

    def monomials(self):
        """Yield (i, j, coeff_idx) for every nonzero monomial."""
        for j, comp in enumerate(self.comps):
            for i in np.flatnonzero(comp):
                yield int(i), j, int(comp[i])

    def __repr__(self):
        terms = [f"{c}*X^{i}Y^{j}" for i, j, c in self.monomials()]
        return "Ring(" + (" + ".join(terms) if terms else "0") + ")"


def ring_mul(a: RingElement, b: RingElement) -> RingElement:
    """Product in the ring, reducing Y^q -> X^(q+1) - Y."""
    curve = a.curve
    F = curve.field
    q = curve.q
    ext = [ZERO] * (2 * q - 1)
    for i, ai in enumerate(a.comps):
        if ai.size == 0:
            continue
        for j, bj in enumerate(b.comps):
            if bj.size:
                ext[i + j] = fxpoly.add(F, ext[i + j], fxpoly.mul(F, ai, bj))
    for k in range(2 * q - 2, q - 1, -1):
        high = ext[k]
        if high.size == 0:
            continue
        ext[k - q] = fxpoly.add(F, ext[k - q], fxpoly.shift(high, q + 1))
        ext[k - q + 1] = fxpoly.sub(F, ext[k - q + 1], high)
    return RingElement(curve, ext[:q])


def deg_hermite(a: RingElement):
    """max over components of q*deg(a_i) + i*(q+1); -inf for zero."""
    q = a.curve.q
    best = NEG_INF
    for i, comp in enumerate(a.comps):
        if comp.size:
            d = q * (comp.size - 1) + i * (q + 1)
            if d > best:
                best = d
    return best


def leading_term(a: RingElement) -> tuple[int, int, int]:
    """(deg_H, Y-power, coeff index) of the unique leading monomial."""
    q = a.curve.q
    best = None
    for i, comp in enumerate(a.comps):
        if comp.size:
            d = q * (comp.size - 1) + i * (q + 1)
            if best is None or d > best[0]:
                best = (d, i, int(comp[-1]))
    if best is None:
        raise ValueError("zero element has no leading term")
    return best


def evaluate(a: RingElement, P: Point) -> FieldElement:
    """a(alpha, beta) by substitution."""
    F = a.curve.field
    alpha, beta = P
    mul_t, add_t = F._mul, F._add
    acc = 0
    for comp in reversed(a.comps):
        acc = add_t[mul_t[acc][beta]][fxpoly.eval_at(F, comp, alpha)]
    return FieldElement(F, acc)


def monomials_leq(curve: CurveParams, bound: int) -> list[tuple[int, int]]:
    """All basis monomials (i, j) with j < q and deg_H <= bound, ascending."""
    q = curve.q
    out = []
    for j in range(q):
        top = bound - j * (q + 1)
        if top < 0:
            continue
        out.extend((i, j) for i in range(top // q + 1))
    out.sort(key=lambda m: m[0] * q + m[1] * (q + 1))
    return out


# -- vector-representation product matrices -------------------------------


def mu_matrix(b: RingElement) -> list[list[np.ndarray]]:
    """q x (2q-1) banded matrix with row i the components of b shifted by i."""
    q = b.curve.q
    rows = []
    for i in range(q):
        row = [ZERO] * (2 * q - 1)
        for t in range(q):
            row[i + t] = b.comps[t]
        rows.append(row)
    return rows


def xi_matrix(curve: CurveParams) -> list[list[np.ndarray]]:
    """(2q-1) x q reduction matrix: identity on top, the Y^q substitution below."""
    q = curve.q
    F = curve.field
    rows = [[ZERO] * q for _ in range(2 * q - 1)]
    for i in range(q):
        rows[i][i] = fxpoly.ONE
    minus_one = fxpoly.constant(F._neg[1])
    for i in range(q - 1):
        rows[q + i][i] = fxpoly.x_power(q + 1)
        rows[q + i][i + 1] = minus_one
    return rows


def mu_xi_product(a: RingElement, b: RingElement) -> RingElement:
    """Product computed as vec(a) * mu(b) * Xi; cross-check path for ring_mul."""
    curve = a.curve
    F = curve.field
    q = curve.q
    mu = mu_matrix(b)
    xi = xi_matrix(curve)
    mid = [ZERO] * (2 * q - 1)
    for i in range(q):
        ai = a.comps[i]
        if ai.size == 0:
            continue
        for c in range(2 * q - 1):
            if mu[i][c].size:
                mid[c] = fxpoly.add(F, mid[c], fxpoly.mul(F, ai, mu[i][c]))
    out = [ZERO] * q
    for c in range(2 * q - 1):
        mc = mid[c]
        if mc.size == 0:
            continue
        for k in range(q):
            if xi[c][k].size:
                out[k] = fxpoly.add(F, out[k], fxpoly.mul(F, mc, xi[c][k]))
    return RingElement(curve, out)


def mu_xi_block(b: RingElement) -> list[list[np.ndarray]]:
    """The q x q matrix mu(b) * Xi acting on vector representations."""
    curve = b.curve
    F = curve.field
    q = curve.q
    mu = mu_matrix(b)
    xi = xi_matrix(curve)
    out = [[ZERO] * q for _ in range(q)]
    for i in range(q):
        for c in range(2 * q - 1):
            mic = mu[i][c]
            if mic.size == 0:
                continue
            for k in range(q):
                if xi[c][k].size:
                    out[i][k] = fxpoly.add(F, out[i][k], fxpoly.mul(F, mic, xi[c][k]))
    return out


# -- local expansions and valuations --------------------------------------


@dataclass(frozen=True)
class LocalExpansion:
    point: Point
    precision: int
    series: np.ndarray  # coefficients of Y in powers of t = X - alpha


def _y_series(curve: CurveParams, P: Point, precision: int) -> np.ndarray:
    cached = curve._series_cache.get(P)
    if cached is not None and cached.size >= precision:
        return cached[:precision]
    F = curve.field
    q = curve.q
    alpha, beta = P
    # coefficients of (alpha + t)^(q+1)
    rhs = [0] * max(precision, q + 2)
    for m in range(q + 2):
        c = _binom_mod_p(q + 1, m, F.p)
        if c:
            rhs[m] = F._mul[c][F.pow(alpha, q + 1 - m)]
    b = np.zeros(precision, dtype=DTYPE)
    b[0] = beta
    for m in range(1, precision):
        v = rhs[m] if m < len(rhs) else 0
        if m % q == 0:
            v = F._sub[v][F.pow(int(b[m // q]), q)]
        b[m] = v
    curve._series_cache[P] = b
    return b


def _binom_mod_p(nn: int, kk: int, p: int) -> int:
    import math

    if kk < 0 or kk > nn:
        return 0
    return math.comb(nn, kk) % p


def local_expansion(curve: CurveParams, P: Point, precision: int) -> LocalExpansion:
    """Power series of Y at the affine point P in the local parameter X - alpha."""
    if precision < 1:
        raise ValueError("precision must be positive")
    return LocalExpansion(P, precision, _y_series(curve, P, precision))


def taylor_shift(F, poly: np.ndarray, alpha: int) -> np.ndarray:
    """Coefficients of poly(alpha + t) as a polynomial in t."""
    lin = np.array([alpha, 1], dtype=DTYPE)
    acc = ZERO
    for c in poly[::-1]:
        acc = fxpoly.add(F, fxpoly.mul(F, acc, lin), fxpoly.constant(int(c)))
    return acc


def _expand_at_point(a: RingElement, P: Point, prec: int) -> np.ndarray:
    """Series of a(alpha + t, beta(t)) modulo t^prec, dense length prec."""
    curve = a.curve
    F = curve.field
    series = _y_series(curve, P, prec)
    alpha = P[0]
    acc = ZERO
    for comp in reversed(a.comps):
        acc = fxpoly.mul_trunc(F, acc, series, prec)
        acc = fxpoly.add(F, acc, fxpoly.truncate(taylor_shift(F, comp, alpha), prec))
    out = np.zeros(prec, dtype=DTYPE)
    out[: acc.size] = acc
    return out


def valuation_at(a: RingElement, P: Point, cap: int) -> int:
    """Order of vanishing of a at P in [0, cap]; cap means >= cap."""
    if cap < 1:
        raise ValueError("cap must be positive")
    expansion = _expand_at_point(a, P, cap)
    nz = np.flatnonzero(expansion)
    return int(nz[0]) if nz.size else cap


# -- exact division --------------------------------------------------------


def _vectorize(a: RingElement, width: int) -> np.ndarray:
    q = a.curve.q
    out = np.zeros(q * width, dtype=DTYPE)
    for j, comp in enumerate(a.comps):
        out[j * width : j * width + comp.size] = comp
    return out


def exact_divide(a: RingElement, b: RingElement):
    """The f with b*f = a, or None when no such ring element exists.

    Solves for the monomial coefficients of f by linear algebra and verifies
    the product exactly; 'not divisible' is a normal outcome.
    """
    if not b:
        raise ZeroDivisionError("division by the zero ring element")
    curve = a.curve
    if not a:
        return RingElement.zero(curve)
    F = curve.field
    q = curve.q
    target = deg_hermite(a)
    bound = target - deg_hermite(b)
    if bound < 0:
        return None
    candidates = monomials_leq(curve, bound)
    width = target // q + 1
    cols = np.zeros((q * width, len(candidates)), dtype=DTYPE)
    for idx, (i, j) in enumerate(candidates):
        prod = ring_mul(b, RingElement.monomial(curve, i, j))
        cols[:, idx] = _vectorize(prod, width)
    rhs = _vectorize(a, width)
    x = linalg.solve(F, cols, rhs)
    if x is None:
        return None
    f = RingElement.zero(curve)
    for idx, (i, j) in enumerate(candidates):
        if x[idx]:
            f = f + RingElement.monomial(curve, i, j, int(x[idx]))
    if ring_mul(b, f) != a:
        return None
    return f


def divide_by_scalar_poly(a: RingElement, u: np.ndarray):
    """Componentwise exact division by a univariate polynomial, or None."""
    if u.size == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    F = a.curve.field
    quots = []
    for comp in a.comps:
        qq, rr = fxpoly.divmod_(F, comp, u)
        if rr.size:
            return None
        quots.append(qq)
    return RingElement(a.curve, quots)
