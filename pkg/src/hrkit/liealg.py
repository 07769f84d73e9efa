"""Matrix Lie algebras: classical compact forms, ranks, Cartan subalgebras.

Conventions
-----------
* ``C^n`` is realified as ``R^{2n}`` interleaved ``(x1, y1, x2, y2, ...)``.
* ``H^n`` is realified as ``R^{4n}`` interleaved ``(1, i, j, k)`` per
  coordinate.  Matrices act on the left, quaternionic scalars on the right.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

from .ratlin import RatMatrix, bracket, imatmul, inverse, nullspace_int, rref_int

COEFF_RANGE = 9
DEFAULT_SEEDS = (0, 1, 2)
RETRY_ROUNDS = 3


class GenericityError(RuntimeError):
    """Random samples never agreed on a generic value."""

    def __init__(self, what: str, values: Sequence[int]):
        super().__init__(f"genericity not established for {what}: sampled values {list(values)}")
        self.values = list(values)


# ---------------------------------------------------------------------------
# small fixed matrices

def _mat(rows) -> RatMatrix:
    return RatMatrix.from_rows(rows)


# left multiplication by i, j, k on H = R^4 with basis (1, i, j, k)
LEFT_I = _mat([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])
LEFT_J = _mat([[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]])
LEFT_K = _mat([[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]])
# right multiplication by i, j
RIGHT_I = _mat([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
RIGHT_J = _mat([[0, 0, -1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0]])
COMPLEX_I = _mat([[0, -1], [1, 0]])


def _unit(n: int, i: int, j: int) -> np.ndarray:
    e = np.zeros((n, n), dtype=int)
    e[i, j] = 1
    return e


def complex_to_real(re: np.ndarray, im: np.ndarray) -> np.ndarray:
    """Realify an ``n x n`` complex integer matrix given as two real parts."""
    n = re.shape[0]
    out = np.zeros((2 * n, 2 * n), dtype=object)
    out[0::2, 0::2] = re
    out[1::2, 1::2] = re
    out[0::2, 1::2] = -im
    out[1::2, 0::2] = im
    return out


def quaternion_to_real(parts: Sequence[np.ndarray]) -> np.ndarray:
    """Realify a quaternion matrix ``a + b i + c j + d k`` (left action)."""
    a, b, c, d = (np.asarray(p, dtype=object) for p in parts)
    n = a.shape[0]
    out = np.zeros((4 * n, 4 * n), dtype=object)
    for coeff, unit in zip((a, b, c, d), (np.eye(4, dtype=int), LEFT_I.num, LEFT_J.num, LEFT_K.num)):
        out += np.kron(coeff, np.asarray(unit, dtype=object))
    return out


# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class MatLieAlgebra:
    ambient_dim: int
    basis: tuple[RatMatrix, ...]
    label: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(self.basis))
        for b in self.basis:
            if b.shape != (self.ambient_dim, self.ambient_dim):
                raise ValueError(f"basis matrix of shape {b.shape} on R^{self.ambient_dim}")

    @property
    def dim(self) -> int:
        return len(self.basis)

    # integer stack of the basis over one denominator
    @cached_property
    def _stack(self) -> tuple[np.ndarray, int]:
        if not self.basis:
            return np.zeros((0, self.ambient_dim, self.ambient_dim), dtype=object), 1
        den = 1
        for b in self.basis:
            den = den * b.den // math.gcd(den, b.den)
        arr = np.stack([b.num * (den // b.den) for b in self.basis])
        return arr, den

    @cached_property
    def _positions(self) -> tuple[np.ndarray, RatMatrix]:
        """Matrix positions on which the basis is independent, and the
        inverse of the basis restricted to them."""
        arr, den = self._stack
        n = self.dim
        flat = arr.reshape(n, -1)
        used = np.flatnonzero(flat.any(axis=0))
        red, piv = rref_int(flat[:, used])
        if len(piv) != n:
            raise ValueError(f"basis of {self.label or 'algebra'} is linearly dependent")
        pos = used[piv]
        sub = RatMatrix(flat[:, pos], den)  # row i = basis element i at the positions
        return pos, inverse(sub)

    def coordinates(self, x: RatMatrix, check: bool = True) -> list[Fraction] | None:
        """Coefficients of ``x`` in the basis, or None if ``x`` is outside the span."""
        if not self.basis:
            return [] if x.is_zero() else None
        pos, inv = self._positions
        vals = RatMatrix(x.num.reshape(1, -1)[:, pos], x.den)
        coeffs = vals @ inv
        out = coeffs.entries()
        if check and not (self.combine(out) == x):
            return None
        return out

    def combine(self, coeffs: Sequence) -> RatMatrix:
        arr, den = self._stack
        c = RatMatrix.from_rows([list(coeffs)]) if len(coeffs) else None
        if c is None:
            return RatMatrix.zeros(self.ambient_dim, self.ambient_dim)
        m = self.ambient_dim
        tot = imatmul(c.num, arr.reshape(self.dim, -1)).reshape(m, m)
        return RatMatrix(tot, c.den * den)

    def validate(self) -> None:
        """Assert skewness, independence and bracket closure."""
        for b in self.basis:
            if not b.is_skew():
                raise AssertionError(f"{self.label}: generator is not skew-symmetric")
        if not self.basis:
            return
        self._positions  # independence
        bad = closure_defect(self)
        if bad is not None:
            raise AssertionError(f"{self.label}: bracket of generators {bad} leaves the span")

    def is_skew(self) -> bool:
        return all(b.is_skew() for b in self.basis)


def closure_defect(alg: MatLieAlgebra) -> tuple[int, int] | None:
    """First pair (i, j) whose bracket is not in the span, else None."""
    arr, den = alg._stack
    n, m = alg.dim, alg.ambient_dim
    pos, inv = alg._positions
    flat = arr.reshape(n, -1)
    for i in range(n):
        left = arr[i]
        rest = arr[i + 1:]
        if not len(rest):
            continue
        br = np.stack([imatmul(left, r) - imatmul(r, left) for r in rest])  # den^2
        brf = br.reshape(len(rest), -1)
        coeffs = RatMatrix(brf[:, pos], den * den) @ inv  # rows: coefficients
        recon = imatmul(coeffs.num, flat)  # over coeffs.den * den
        # compare brf / den^2 with recon / (coeffs.den * den)
        lhs = brf * (coeffs.den * den)
        rhs = recon * (den * den)
        diff = np.flatnonzero((lhs != rhs).any(axis=1))
        if diff.size:
            return (i, i + 1 + int(diff[0]))
    return None


@dataclass(frozen=True, eq=False)
class CartanData:
    algebra: MatLieAlgebra
    cartan_basis: tuple[RatMatrix, ...]
    rank: int
    coefficients: tuple[tuple[Fraction, ...], ...] = field(default=())


# ---------------------------------------------------------------------------
# classical algebras

@lru_cache(maxsize=None)
def classical(kind: str, n: int) -> MatLieAlgebra:
    """Compact real form of a classical algebra with entries in {0, 1, -1}.

    ``so(n)`` acts on R^n, ``su(n)`` and ``u(n)`` on C^n = R^{2n}, ``sp(n)``
    on H^n = R^{4n}.
    """
    if kind not in ("so", "su", "u", "sp"):
        raise ValueError(f"unknown classical type {kind!r}; expected so, su, u or sp")
    if not isinstance(n, int) or n < 1 or (kind == "so" and n < 2):
        raise ValueError(f"invalid size {n!r} for {kind}")
    gens: list[np.ndarray] = []
    zero = np.zeros((n, n), dtype=int)
    if kind == "so":
        for i in range(n):
            for j in range(i + 1, n):
                gens.append(_unit(n, i, j) - _unit(n, j, i))
    elif kind in ("su", "u"):
        for i in range(n):
            for j in range(i + 1, n):
                gens.append(complex_to_real(_unit(n, i, j) - _unit(n, j, i), zero))
                gens.append(complex_to_real(zero, _unit(n, i, j) + _unit(n, j, i)))
        if kind == "u":
            for i in range(n):
                gens.append(complex_to_real(zero, _unit(n, i, i)))
        else:
            for i in range(n - 1):
                gens.append(complex_to_real(zero, _unit(n, i, i) - _unit(n, i + 1, i + 1)))
    else:
        for i in range(n):
            for q in (1, 2, 3):
                parts = [zero] * 4
                parts[q] = _unit(n, i, i)
                gens.append(quaternion_to_real(parts))
        for i in range(n):
            for j in range(i + 1, n):
                gens.append(quaternion_to_real([_unit(n, i, j) - _unit(n, j, i), zero, zero, zero]))
                for q in (1, 2, 3):
                    parts = [zero] * 4
                    parts[q] = _unit(n, i, j) + _unit(n, j, i)
                    gens.append(quaternion_to_real(parts))
    size = {"so": n, "su": 2 * n, "u": 2 * n, "sp": 4 * n}[kind]
    alg = MatLieAlgebra(size, tuple(RatMatrix(g) for g in gens), f"{kind}({n})")
    alg.validate()
    return alg


def classical_dim(kind: str, n: int) -> int:
    return {"so": n * (n - 1) // 2, "su": n * n - 1, "u": n * n, "sp": n * (2 * n + 1)}[kind]


def classical_rank(kind: str, n: int) -> int:
    return {"so": n // 2, "su": n - 1, "u": n, "sp": n}[kind]


# ---------------------------------------------------------------------------
# rank and Cartan subalgebras

def random_coefficients(seed: int, count: int) -> list[int]:
    """Integer draw uniform in [-9, 9]^count, never all zero."""
    rng = np.random.default_rng(seed)
    while True:
        c = [int(x) for x in rng.integers(-COEFF_RANGE, COEFF_RANGE + 1, size=count)]
        if any(c) or count == 0:
            return c


def centralizer_coefficients(alg: MatLieAlgebra, x: RatMatrix) -> list[list[Fraction]]:
    """Kernel of ``c -> [x, sum c_i b_i]``.

    Brackets with ``x`` stay inside the algebra, so reading them on the
    independent positions loses nothing.
    """
    if not alg.basis:
        return []
    return nullspace_int(np.stack(_common(alg, x), axis=1))


def _common(alg: MatLieAlgebra, x: RatMatrix) -> list[np.ndarray]:
    arr, den = alg._stack
    pos, _ = alg._positions
    xs = x.num
    out = []
    for b in arr:
        br = imatmul(xs, b) - imatmul(b, xs)
        out.append(br.reshape(-1)[pos])
    return out


def _derived_seeds(seeds: Sequence[int], round_: int) -> list[int]:
    return [int(s) + 1_000_003 * round_ for s in seeds]


def algebra_rank(alg: MatLieAlgebra, seeds: Sequence[int] = DEFAULT_SEEDS) -> tuple[int, CartanData]:
    """Rank as the minimal centralizer dimension of random generic elements.

    Non-generic draws only enlarge the centralizer, so the minimum over
    seeds is kept.  If the seeds disagree, fresh rounds are drawn; the value
    is accepted once a full round agrees with the running minimum.
    """
    if alg.dim == 0:
        return 0, CartanData(alg, (), 0, ())
    seeds = list(seeds) or list(DEFAULT_SEEDS)
    sampled: list[int] = []
    best = None
    for rnd in range(RETRY_ROUNDS + 1):
        round_vals = []
        for s in _derived_seeds(seeds, rnd):
            x = alg.combine(random_coefficients(s, alg.dim))
            ker = centralizer_coefficients(alg, x)
            round_vals.append(len(ker))
            sampled.append(len(ker))
            if best is None or len(ker) < len(best):
                best = ker
        if all(v == len(best) for v in round_vals):
            basis = tuple(alg.combine(c) for c in best)
            data = CartanData(alg, basis, len(best), tuple(tuple(c) for c in best))
            return len(best), data
    raise GenericityError(f"rank of {alg.label or 'algebra'}", sampled)


def fixed_space(c: CartanData, rep_mats: Sequence[RatMatrix] | None = None) -> list[RatMatrix]:
    """Common kernel of the Cartan elements acting through ``rep_mats``.

    ``rep_mats`` is indexed like the algebra basis; when omitted the Cartan
    elements act through the algebra's own realization.
    """
    if rep_mats is None:
        ops = list(c.cartan_basis)
        m = c.algebra.ambient_dim
    else:
        ops = [combine_mats(rep_mats, coeffs) for coeffs in c.coefficients]
        m = rep_mats[0].rows if rep_mats else 0
    if not ops:
        return [RatMatrix.column([1 if i == j else 0 for i in range(m)]) for j in range(m)]
    den = 1
    for o in ops:
        den = den * o.den // math.gcd(den, o.den)
    stacked = np.vstack([o.num * (den // o.den) for o in ops])
    return [RatMatrix.column(v) for v in nullspace_int(stacked)]


def combine_mats(mats: Sequence[RatMatrix], coeffs: Sequence) -> RatMatrix:
    m = mats[0].rows
    out = RatMatrix.zeros(m, m)
    for c, a in zip(coeffs, mats):
        if c:
            out = out + a.scale(c)
    return out
