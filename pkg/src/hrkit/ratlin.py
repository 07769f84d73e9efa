"""Exact rational dense linear algebra.

Every matrix is stored as an integer numerator array (numpy ``object`` dtype
holding Python ints) over one positive common denominator.  Products take an
``int64`` fast path whenever the entry bounds guarantee no overflow, which is
the common case for the small-integer generators used throughout the package.

Elimination is fraction-free: rows are combined with integer multipliers and
divided by their content (gcd of the row), so no Fraction objects appear in
the inner loops.  Pivoting is canonical (leftmost column, first row) and there
is no randomness anywhere in this module, so outputs are reproducible.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

log = logging.getLogger(__name__)

Rat = Fraction

_INT64_SAFE = 2**62


def _as_int_array(a) -> np.ndarray:
    arr = np.array(a, dtype=object)
    return arr


def _absmax(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return max(abs(int(a.max())), abs(int(a.min())))


def imatmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact integer matrix product of two object-int arrays."""
    inner = a.shape[-1]
    if _absmax(a) * _absmax(b) * max(inner, 1) < _INT64_SAFE:
        return (a.astype(np.int64) @ b.astype(np.int64)).astype(object)
    return a.dot(b)


def _content(row: np.ndarray) -> int:
    return int(np.gcd.reduce(row.ravel())) if row.size else 0


class RatMatrix:
    """Immutable dense matrix of rationals, ``num / den`` in lowest terms."""

    __slots__ = ("num", "den")

    def __init__(self, num, den: int = 1):
        num = _as_int_array(num)
        if num.ndim != 2:
            raise ValueError(f"RatMatrix needs a 2-d array, got shape {num.shape}")
        den = int(den)
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = -num, -den
        if den != 1 and num.size:
            g = math.gcd(_content(num), den)
            if g > 1:
                num = num // g
                den //= g
        elif not num.size:
            den = 1
        if num.size and not num.any():
            den = 1
        num.flags.writeable = False
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatMatrix is immutable")

    # -- constructors -------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RatMatrix":
        rows = [[Fraction(x) for x in r] for r in rows]
        if not rows:
            return cls(np.zeros((0, 0), dtype=object))
        den = reduce(lambda x, y: x * y // math.gcd(x, y), (x.denominator for r in rows for x in r), 1)
        num = [[x.numerator * (den // x.denominator) for x in r] for r in rows]
        return cls(np.array(num, dtype=object).reshape(len(rows), len(rows[0])), den)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(np.zeros((rows, cols), dtype=int).astype(object))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(np.eye(n, dtype=int).astype(object))

    @classmethod
    def column(cls, values: Iterable) -> "RatMatrix":
        return cls.from_rows([[x] for x in values]) if values is not None else None

    # -- basic protocol -----------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.num.shape

    @property
    def rows(self) -> int:
        return self.num.shape[0]

    @property
    def cols(self) -> int:
        return self.num.shape[1]

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return Fraction(int(self.num[i, j]), self.den)

    def entries(self) -> list[Fraction]:
        """Row-major entries as Fractions."""
        return [Fraction(int(x), self.den) for x in self.num.ravel()]

    def tolist(self) -> list[list[Fraction]]:
        return [[Fraction(int(x), self.den) for x in row] for row in self.num]

    def __repr__(self) -> str:
        if self.den == 1:
            return f"RatMatrix({self.num.tolist()})"
        return f"RatMatrix({self.num.tolist()}, den={self.den})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.den == other.den and self.shape == other.shape and bool((self.num == other.num).all())

    def __hash__(self) -> int:
        return hash((self.shape, self.den, tuple(self.num.ravel().tolist())))

    def is_zero(self) -> bool:
        return not self.num.any()

    @property
    def T(self) -> "RatMatrix":
        return RatMatrix(self.num.T.copy(), self.den)

    # -- arithmetic ---------------------------------------------------
    def _aligned(self, other: "RatMatrix"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        den = self.den * other.den // math.gcd(self.den, other.den)
        return self.num * (den // self.den), other.num * (den // other.den), den

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        a, b, den = self._aligned(other)
        return RatMatrix(a + b, den)

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        a, b, den = self._aligned(other)
        return RatMatrix(a - b, den)

    def __neg__(self) -> "RatMatrix":
        return RatMatrix(-self.num, self.den)

    def scale(self, c) -> "RatMatrix":
        c = Fraction(c)
        return RatMatrix(self.num * c.numerator, self.den * c.denominator)

    def __mul__(self, c) -> "RatMatrix":
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        return RatMatrix(imatmul(self.num, other.num), self.den * other.den)

    def is_skew(self) -> bool:
        return bool((self.num == -self.num.T).all())

    def flat(self) -> list[Fraction]:
        return self.entries()


def kron(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    return RatMatrix(np.kron(a.num, b.num), a.den * b.den)


def block_diag(*blocks: RatMatrix) -> RatMatrix:
    if not blocks:
        return RatMatrix.zeros(0, 0)
    den = reduce(lambda x, y: x * y // math.gcd(x, y), (b.den for b in blocks), 1)
    n = sum(b.rows for b in blocks)
    m = sum(b.cols for b in blocks)
    out = np.zeros((n, m), dtype=int).astype(object)
    r = c = 0
    for b in blocks:
        out[r:r + b.rows, c:c + b.cols] = b.num * (den // b.den)
        r += b.rows
        c += b.cols
    return RatMatrix(out, den)


def hstack(mats: Sequence[RatMatrix]) -> RatMatrix:
    den = reduce(lambda x, y: x * y // math.gcd(x, y), (m.den for m in mats), 1)
    return RatMatrix(np.hstack([m.num * (den // m.den) for m in mats]), den)


def vstack(mats: Sequence[RatMatrix]) -> RatMatrix:
    den = reduce(lambda x, y: x * y // math.gcd(x, y), (m.den for m in mats), 1)
    return RatMatrix(np.vstack([m.num * (den // m.den) for m in mats]), den)


def bracket(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    """Commutator ``ab - ba``."""
    if a.shape != b.shape or a.rows != a.cols:
        raise ValueError(f"bracket needs equal square matrices, got {a.shape} and {b.shape}")
    return a @ b - b @ a


# ---------------------------------------------------------------------------
# fraction-free elimination


def rref_int(m: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced echelon form of an integer matrix without fractions.

    Returns the nonzero rows and the pivot columns.  Each pivot row has a
    positive pivot entry and every other row is zero in that column; rows are
    divided by their content.  Pivot choice is leftmost column, first row.
    """
    a = np.array(m, dtype=object)
    if a.ndim != 2:
        raise ValueError("rref_int needs a 2-d array")
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        if a[r, c] < 0:
            a[r] = -a[r]
        g = _content(a[r])
        if g > 1:
            a[r] = a[r] // g
        piv = a[r].copy()
        pv = piv[c]
        others = np.flatnonzero(a[:, c])
        others = others[others != r]
        if others.size:
            f = a[others, c].copy()
            a[others] = a[others] * pv - np.outer(f, piv)
            for i in others:
                g = _content(a[i])
                if g > 1:
                    a[i] = a[i] // g
        pivots.append(c)
        r += 1
    return a[:r], pivots


def _nullspace_from_rref(red: np.ndarray, pivots: list[int], cols: int) -> list[RatMatrix]:
    pivot_set = set(pivots)
    out = []
    for f in range(cols):
        if f in pivot_set:
            continue
        vec = [Fraction(0)] * cols
        vec[f] = Fraction(1)
        for i, c in enumerate(pivots):
            if red[i, f]:
                vec[c] = Fraction(-int(red[i, f]), int(red[i, c]))
        out.append(RatMatrix.column(vec))
    return out


def nullspace(m: RatMatrix) -> list[RatMatrix]:
    """Basis of ``ker m`` as column vectors, one per free column."""
    red, pivots = rref_int(m.num)
    return _nullspace_from_rref(red, pivots, m.cols)


def nullspace_int(m: np.ndarray) -> list[list[Fraction]]:
    """Same as :func:`nullspace` for a raw integer array; returns plain lists."""
    red, pivots = rref_int(m)
    return [v.entries() for v in _nullspace_from_rref(red, pivots, m.shape[1])]


def rank(m: RatMatrix) -> int:
    return len(rref_int(m.num)[1])


def _common_columns(vectors: Sequence[RatMatrix]) -> np.ndarray:
    den = reduce(lambda x, y: x * y // math.gcd(x, y), (v.den for v in vectors), 1)
    return np.hstack([v.num * (den // v.den) for v in vectors])


def solve_membership(v: RatMatrix, basis: Sequence[RatMatrix]) -> list[Fraction] | None:
    """Coefficients expressing column ``v`` in ``span(basis)``, or None."""
    if not basis:
        return [] if v.is_zero() else None
    for b in basis:
        if b.shape != v.shape:
            raise ValueError("all vectors must have the same shape")
    aug = _common_columns(list(basis) + [v])
    red, pivots = rref_int(aug)
    k = len(basis)
    if k in pivots:
        return None
    coeffs = [Fraction(0)] * k
    for i, c in enumerate(pivots):
        coeffs[c] = Fraction(int(red[i, k]), int(red[i, c]))
    return coeffs


def solve(a: RatMatrix, b: RatMatrix) -> RatMatrix | None:
    """A particular solution ``x`` of ``a x = b`` (free variables zero), or None."""
    den = a.den * b.den // math.gcd(a.den, b.den)
    aug = np.hstack([a.num * (den // a.den), b.num * (den // b.den)])
    red, pivots = rref_int(aug)
    n = a.cols
    if any(p >= n for p in pivots):
        return None
    x = [[Fraction(0)] * b.cols for _ in range(n)]
    for i, c in enumerate(pivots):
        for j in range(b.cols):
            x[c][j] = Fraction(int(red[i, n + j]), int(red[i, c]))
    return RatMatrix.from_rows(x)


def inverse(a: RatMatrix) -> RatMatrix:
    if a.rows != a.cols:
        raise ValueError("inverse of a non-square matrix")
    x = solve(a, RatMatrix.identity(a.rows))
    if x is None or rank(a) < a.rows:
        raise ZeroDivisionError("singular matrix")
    return x


def independent_columns(m: np.ndarray) -> list[int]:
    """Pivot columns of an integer matrix (a maximal independent set)."""
    return rref_int(m)[1]


def column_space(vectors: Sequence[RatMatrix]) -> list[RatMatrix]:
    """Independent subset (in order) spanning the same space."""
    if not vectors:
        return []
    piv = independent_columns(_common_columns(vectors))
    return [vectors[i] for i in piv]


# ---------------------------------------------------------------------------
# commutant


def _commutant_dense(mats: Sequence[RatMatrix], m: int) -> list[RatMatrix]:
    eye = np.eye(m, dtype=int).astype(object)
    blocks = [np.kron(eye, a.num.T) - np.kron(a.num, eye) for a in mats]
    if not blocks:
        sol = [[Fraction(int(i == j)) for j in range(m * m)] for i in range(m * m)]
    else:
        sol = nullspace_int(np.vstack(blocks))
    return [RatMatrix.from_rows([v[i * m:(i + 1) * m] for i in range(m)]) for v in sol]


def _cyclic_basis(mats: Sequence[np.ndarray], v: np.ndarray, m: int):
    """Krylov basis ``b_t = A_{g_t} b_{p_t}`` grown from ``v``; None if not cyclic."""
    basis = [v]
    parent = [(-1, -1)]
    echelon: list[tuple[int, np.ndarray]] = []

    def reduce_vec(w):
        w = w.copy()
        for pc, row in echelon:
            if w[pc]:
                w = w * row[pc] - w[pc] * row
                g = _content(w)
                if g > 1:
                    w = w // g
        return w

    def push(w):
        nz = np.flatnonzero(w)
        pc = int(nz[0])
        if w[pc] < 0:
            w = -w
        for k, (qc, row) in enumerate(echelon):
            if row[pc]:
                row = row * w[pc] - row[pc] * w
                g = _content(row)
                echelon[k] = (qc, row // g if g > 1 else row)
        echelon.append((pc, w))

    push(reduce_vec(v))
    t = 0
    while t < len(basis) and len(basis) < m:
        for i, a in enumerate(mats):
            w = imatmul(a, basis[t].reshape(-1, 1)).ravel()
            r = reduce_vec(w)
            if r.any():
                push(r)
                basis.append(w)
                parent.append((t, i))
                if len(basis) == m:
                    break
        t += 1
    if len(basis) < m:
        return None
    return basis, parent


def _commutant_cyclic(mats: Sequence[RatMatrix], m: int, v: np.ndarray) -> list[RatMatrix] | None:
    ints = [a.num for a in mats]
    grown = _cyclic_basis(ints, v, m)
    if grown is None:
        return None
    basis, parent = grown
    bmat = RatMatrix(np.stack(basis, axis=1))
    binv = inverse(bmat)
    # W_t maps w to the image X b_t of any commuting X with X v = w
    walk = [np.eye(m, dtype=int).astype(object)]
    for t in range(1, m):
        p, i = parent[t]
        walk.append(imatmul(ints[i], walk[p]))
    walk_arr = np.stack(walk)  # (m, m, m): t, row, col

    def candidate(w: list[Fraction]) -> RatMatrix:
        wv = RatMatrix.column(w)
        cols = hstack([RatMatrix(walk[t]) @ wv for t in range(m)])
        return cols @ binv

    def commutes(x: RatMatrix) -> bool:
        return all((x @ a - a @ x).is_zero() for a in mats)

    equations: list[np.ndarray] = []
    order = [(t, i) for t in range(m) for i in range(len(ints))]
    step = max(1, len(ints))
    pos = 0
    while True:
        batch = order[pos:pos + step]
        pos += step
        for t, i in batch:
            target = RatMatrix(imatmul(ints[i], basis[t].reshape(-1, 1)))
            beta = binv @ target  # coordinates in the Krylov basis
            den = beta.den
            lhs = np.tensordot(beta.num.ravel(), walk_arr, axes=(0, 0))
            eq = lhs - imatmul(ints[i], walk[t]) * den
            equations.append(eq)
        sol = nullspace_int(np.vstack(equations)) if equations else None
        if sol is None:
            continue
        cands = [candidate(w) for w in sol]
        if all(commutes(x) for x in cands):
            return cands
        if pos >= len(order):
            raise AssertionError("commutant certification failed with all equations present")


def commutant(mats: Sequence[RatMatrix], size: int | None = None) -> list[RatMatrix]:
    """Basis of ``{X : XA = AX for all A in mats}``.

    Small sizes solve the full ``m^2``-unknown system.  Larger ones look for a
    cyclic vector: then a commuting ``X`` is fixed by ``Xv`` and only ``m``
    unknowns remain; equations are added until every candidate is certified
    to commute exactly.
    """
    if mats:
        m = mats[0].rows
        for a in mats:
            if a.shape != (m, m):
                raise ValueError("commutant needs square matrices of equal size")
    elif size is None:
        raise ValueError("size required when mats is empty")
    else:
        m = size
    if m <= 12 or not mats:
        return _commutant_dense(mats, m)
    # fixed start vectors: e_1, then two dense deterministic patterns
    starts = [np.eye(m, dtype=int)[0].astype(object)]
    starts += [np.array([(k * 7919 + s) % 19 - 9 for k in range(m)], dtype=object) for s in (3, 11)]
    for v in starts:
        if not v.any():
            continue
        res = _commutant_cyclic(mats, m, v)
        if res is not None:
            return res
    log.warning("no cyclic vector found; dense commutant on %d unknowns", m * m)
    return _commutant_dense(mats, m)
