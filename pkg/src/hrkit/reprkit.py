"""Representations of products of classical algebras, built by combinators.

A :class:`LinearRep` carries an abstract algebra (a tuple of factors with
structure constants) and one skew matrix per abstract generator.  Factors
are identified by ``uid``; two representations that mention the same uid act
through the same abstract factor when summed or tensored.

Every representation has a field tag:

* ``real``: no extra structure recorded;
* ``complex``: commutes with the interleaved complex structure ``I (x) i``;
* ``quaternionic``: commutes with right multiplication by ``i, j, k`` in the
  interleaved ``(1, i, j, k)`` layout.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

from . import clifford
from .liealg import (
    COMPLEX_I,
    RIGHT_I,
    RIGHT_J,
    MatLieAlgebra,
    classical,
    classical_dim,
)
from .ratlin import RatMatrix, block_diag, commutant, imatmul, kron, nullspace_int

FIELDS = ("real", "complex", "quaternionic")
_uids = itertools.count(1)


def new_uid() -> int:
    return next(_uids)


# ---------------------------------------------------------------------------
# abstract algebras


@dataclass(frozen=True)
class Factor:
    """One simple (or one-dimensional) direct factor.

    ``kind`` is ``so``, ``su``, ``u``, ``sp`` or ``z`` (a circle).  Spin
    factors use kind ``so``.
    """

    kind: str
    size: int
    uid: int

    @property
    def dim(self) -> int:
        return 1 if self.kind == "z" else classical_dim(self.kind, self.size)

    @property
    def name(self) -> str:
        return "u(1)" if self.kind == "z" else f"{self.kind}({self.size})"

    def reference(self) -> MatLieAlgebra:
        return reference_algebra(self.kind, self.size)


@lru_cache(maxsize=None)
def reference_algebra(kind: str, size: int) -> MatLieAlgebra:
    if kind == "z":
        return MatLieAlgebra(2, (COMPLEX_I,), "u(1)")
    return classical(kind, size)


@lru_cache(maxsize=None)
def factor_constants(kind: str, size: int) -> dict[tuple[int, int], tuple[tuple[int, Fraction], ...]]:
    """Sparse structure constants ``[b_i, b_j] = sum c_k b_k`` for ``i < j``."""
    alg = reference_algebra(kind, size)
    arr, den = alg._stack
    out = {}
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            br = RatMatrix(arr[i].dot(arr[j]) - arr[j].dot(arr[i]), den * den)
            if br.is_zero():
                continue
            coeffs = alg.coordinates(br, check=False)
            out[(i, j)] = tuple((k, c) for k, c in enumerate(coeffs) if c)
    return out


@dataclass(frozen=True)
class AbstractLieAlgebra:
    factors: tuple[Factor, ...] = ()

    @property
    def dim(self) -> int:
        return sum(f.dim for f in self.factors)

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        return tuple(itertools.accumulate((f.dim for f in self.factors), initial=0))[:-1]

    @property
    def factor_markers(self) -> list[tuple[str, range]]:
        return [(f.name, range(o, o + f.dim)) for f, o in zip(self.factors, self.offsets)]

    def index_of(self, uid: int) -> int:
        for i, f in enumerate(self.factors):
            if f.uid == uid:
                return i
        raise KeyError(uid)

    def merge(self, other: "AbstractLieAlgebra") -> "AbstractLieAlgebra":
        seen = {f.uid: f for f in self.factors}
        extra = []
        for f in other.factors:
            if f.uid in seen:
                if (seen[f.uid].kind, seen[f.uid].size) != (f.kind, f.size):
                    raise ValueError(f"shared factor {f.uid} has clashing types "
                                     f"{seen[f.uid].name} and {f.name}")
            else:
                extra.append(f)
        return AbstractLieAlgebra(self.factors + tuple(extra))

    def structure_constants(self) -> dict[tuple[int, int], tuple[tuple[int, Fraction], ...]]:
        out = {}
        for f, o in zip(self.factors, self.offsets):
            for (i, j), terms in factor_constants(f.kind, f.size).items():
                out[(o + i, o + j)] = tuple((o + k, c) for k, c in terms)
        return out

    def constant(self, i: int, j: int, k: int) -> Fraction:
        if i == j:
            return Fraction(0)
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        for kk, c in self.structure_constants().get((i, j), ()):
            if kk == k:
                return sign * c
        return Fraction(0)

    def realization(self) -> MatLieAlgebra:
        """Faithful block-diagonal realization by the reference factors."""
        refs = [f.reference() for f in self.factors]
        total = sum(r.ambient_dim for r in refs)
        basis = []
        start = 0
        for r in refs:
            for b in r.basis:
                blocks = [RatMatrix.zeros(start, start)] if start else []
                blocks.append(b)
                rest = total - start - r.ambient_dim
                if rest:
                    blocks.append(RatMatrix.zeros(rest, rest))
                basis.append(block_diag(*blocks))
            start += r.ambient_dim
        return MatLieAlgebra(total, tuple(basis), self.label)

    @property
    def label(self) -> str:
        return "+".join(f.name for f in self.factors) or "0"


# ---------------------------------------------------------------------------
# representations


@dataclass(frozen=True, eq=False)
class LinearRep:
    algebra: AbstractLieAlgebra
    degree: int
    mats: tuple[RatMatrix, ...]
    field: str = "real"
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "mats", tuple(self.mats))
        if self.field not in FIELDS:
            raise ValueError(f"unknown field tag {self.field!r}")
        if len(self.mats) != self.algebra.dim:
            raise ValueError(f"{len(self.mats)} matrices for an algebra of dimension {self.algebra.dim}")
        for m in self.mats:
            if m.shape != (self.degree, self.degree):
                raise ValueError(f"matrix of shape {m.shape} in a degree-{self.degree} representation")

    def validate(self) -> None:
        """Assert skewness, the field structure and the homomorphism identity."""
        for i, m in enumerate(self.mats):
            if not m.is_skew():
                raise AssertionError(f"{self.label}: generator {i} is not skew-symmetric")
        for j in structure_markers(self.field, self.degree):
            for i, m in enumerate(self.mats):
                if not (m @ j == j @ m):
                    raise AssertionError(f"{self.label}: generator {i} breaks the {self.field} structure")
        defect = homomorphism_defect(self)
        if defect is not None:
            raise AssertionError(f"{self.label}: bracket of generators {defect} is not represented")

    def markers(self) -> list[RatMatrix]:
        return structure_markers(self.field, self.degree)


def structure_markers(field_: str, degree: int) -> list[RatMatrix]:
    if field_ == "complex":
        return [kron(RatMatrix.identity(degree // 2), COMPLEX_I)]
    if field_ == "quaternionic":
        return list(right_quaternion_ops(degree // 4)[:2])
    return []


def _common_stack(mats: Sequence[RatMatrix]) -> tuple[np.ndarray, int]:
    den = 1
    for m in mats:
        den = den * m.den // math.gcd(den, m.den)
    return np.stack([m.num * (den // m.den) for m in mats]), den


def homomorphism_defect(r: LinearRep) -> tuple[int, int] | None:
    """First generator pair whose bracket differs from the structure constants."""
    if not r.mats:
        return None
    arr, den = _common_stack(r.mats)
    consts = r.algebra.structure_constants()
    n = len(r.mats)
    owner = []
    for fi, f in enumerate(r.algebra.factors):
        owner += [fi] * f.dim
    for i in range(n):
        for j in range(i + 1, n):
            br = imatmul(arr[i], arr[j]) - imatmul(arr[j], arr[i])
            if owner[i] != owner[j]:
                if br.any():
                    return (i, j)
                continue
            terms = consts.get((i, j), ())
            if terms:
                lcm = 1
                for _, c in terms:
                    lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
                rhs = sum(arr[k] * (c.numerator * (lcm // c.denominator)) for k, c in terms)
                # br / den^2 == rhs / (den * lcm)
                if not (br * lcm == rhs * den).all():
                    return (i, j)
            elif br.any():
                return (i, j)
    return None


def _finish(r: LinearRep) -> LinearRep:
    r.validate()
    return r


# ---------------------------------------------------------------------------
# structure operators


@lru_cache(maxsize=None)
def right_quaternion_ops(n: int) -> tuple[RatMatrix, RatMatrix, RatMatrix]:
    """Right multiplication by ``i, j, k`` on ``H^n = R^{4n}``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    eye = RatMatrix.identity(n)
    j1, j2 = kron(eye, RIGHT_I), kron(eye, RIGHT_J)
    return j1, j2, j1 @ j2


def is_quaternionic_embedding(r: LinearRep, n: int) -> bool:
    if r.degree != 4 * n:
        raise ValueError(f"degree {r.degree} is not 4*{n}")
    return first_noncommuting(r) is None


def first_noncommuting(r: LinearRep) -> int | None:
    """Index of a generator failing to commute with the right quaternion
    multiplications, or None."""
    if r.degree % 4:
        return 0 if r.mats else None
    js = right_quaternion_ops(r.degree // 4)
    for i, m in enumerate(r.mats):
        for j in js:
            if not (m @ j == j @ m):
                return i
    return None


def _quaternionic_to_complex_sign(degree: int) -> RatMatrix:
    # (a, b, c, d) -> (a, b, c, -d): the pairs (a + bi, c - di) are complex
    # coordinates for which right multiplication by i is the standard structure
    return RatMatrix(np.diag([(-1 if k % 4 == 3 else 1) for k in range(degree)]).astype(object))


def complex_mats(r: LinearRep) -> list[RatMatrix]:
    """The realified matrices in standard complex coordinates."""
    if r.field == "complex":
        return list(r.mats)
    if r.field == "quaternionic":
        s = _quaternionic_to_complex_sign(r.degree)
        return [s @ m @ s for m in r.mats]
    raise ValueError(f"{r.label or 'representation'} carries no complex structure")


def as_complex(r: LinearRep) -> LinearRep:
    if r.field == "complex":
        return r
    return LinearRep(r.algebra, r.degree, complex_mats(r), "complex", r.label)


# complex matrices as (re, im) pairs


def _split(m: RatMatrix) -> tuple[RatMatrix, RatMatrix]:
    return RatMatrix(m.num[0::2, 0::2], m.den), RatMatrix(m.num[1::2, 0::2], m.den)


def _realify(re: RatMatrix, im: RatMatrix) -> RatMatrix:
    den = re.den * im.den // math.gcd(re.den, im.den)
    out = np.zeros((2 * re.rows, 2 * re.cols), dtype=int).astype(object)
    a, b = re.num * (den // re.den), im.num * (den // im.den)
    out[0::2, 0::2] = a
    out[1::2, 1::2] = a
    out[0::2, 1::2] = -b
    out[1::2, 0::2] = b
    return RatMatrix(out, den)


def _cmul(x, y):
    return (x[0] @ y[0] - x[1] @ y[1], x[0] @ y[1] + x[1] @ y[0])


def _cadjoint(x):
    return (x[0].T, -x[1].T)


# ---------------------------------------------------------------------------
# basic representations


def _factors_for(kind: str, n: int, uid: int | None) -> Factor:
    return Factor(kind, n, new_uid() if uid is None else uid)


def std_rep(kind: str, n: int, center: bool = False, uid: int | None = None,
            center_uid: int | None = None) -> LinearRep:
    """Defining representation; ``center`` adjoins scalar multiplication by i."""
    alg = classical(kind, n)
    f = _factors_for(kind, n, uid)
    label = f"std({'z*' if center else ''}{kind}({n}))"
    if not center:
        field_ = {"so": "real", "su": "complex", "u": "complex", "sp": "quaternionic"}[kind]
        return _finish(LinearRep(AbstractLieAlgebra((f,)), alg.ambient_dim, alg.basis, field_, label))
    if kind == "u":
        raise ValueError("u(n) already contains its center; use z*su(n) or u(n)")
    if kind == "so":
        mats = [kron(b, RatMatrix.identity(2)) for b in alg.basis]
        deg = 2 * n
    elif kind == "su":
        mats, deg = list(alg.basis), 2 * n
    else:
        s = _quaternionic_to_complex_sign(4 * n)
        mats, deg = [s @ b @ s for b in alg.basis], 4 * n
    mats.append(kron(RatMatrix.identity(deg // 2), COMPLEX_I))
    z = _factors_for("z", 1, center_uid)
    return _finish(LinearRep(AbstractLieAlgebra((f, z)), deg, mats, "complex", label))


def trivial(d: int) -> LinearRep:
    if d < 0:
        raise ValueError("trivial degree must be non-negative")
    field_ = "quaternionic" if d % 4 == 0 else "real"
    return LinearRep(AbstractLieAlgebra(), d, (), field_, f"trivial({d})")


def adj(kind: str, n: int, uid: int | None = None) -> LinearRep:
    """Adjoint representation in the reference basis.

    Only algebras whose reference basis is orthonormal for an invariant form
    give skew matrices this way; the others are rejected.
    """
    alg = reference_algebra(kind, n)
    f = _factors_for(kind, n, uid)
    consts = factor_constants(kind, n)
    d = alg.dim
    mats = []
    for i in range(d):
        m = [[Fraction(0)] * d for _ in range(d)]
        for j in range(d):
            if i == j:
                continue
            key, sign = ((i, j), 1) if i < j else ((j, i), -1)
            for k, c in consts.get(key, ()):
                m[k][j] += sign * c
        mats.append(RatMatrix.from_rows(m))
    if not all(m.is_skew() for m in mats):
        raise NotImplementedError(f"adjoint of {kind}({n}) is not skew in the reference basis")
    return _finish(LinearRep(AbstractLieAlgebra((f,)), d, mats, "real", f"adj({kind}({n}))"))


# ---------------------------------------------------------------------------
# combinators


def relabel(r: LinearRep, mapping: dict[int, int]) -> LinearRep:
    """Rename factor uids of ``r`` (``old -> new``)."""
    factors = tuple(Factor(f.kind, f.size, mapping.get(f.uid, f.uid)) for f in r.algebra.factors)
    return LinearRep(AbstractLieAlgebra(factors), r.degree, r.mats, r.field, r.label)


def _share(r1: LinearRep, r2: LinearRep, shared: dict[int, int] | None) -> LinearRep:
    """Apply ``shared`` = {factor position in r2: factor position in r1}."""
    if not shared:
        return r2
    mapping = {}
    for p2, p1 in shared.items():
        f1, f2 = r1.algebra.factors[p1], r2.algebra.factors[p2]
        if (f1.kind, f1.size) != (f2.kind, f2.size):
            raise ValueError(f"cannot identify {f2.name} with {f1.name}")
        mapping[f2.uid] = f1.uid
    return relabel(r2, mapping)


def _lift(r: LinearRep, target: AbstractLieAlgebra) -> list[RatMatrix | None]:
    """Matrices of ``r`` indexed by the generators of ``target`` (None = 0)."""
    out: list[RatMatrix | None] = [None] * target.dim
    for f, o in zip(r.algebra.factors, r.algebra.offsets):
        t = target.offsets[target.index_of(f.uid)]
        for k in range(f.dim):
            out[t + k] = r.mats[o + k]
    return out


def dsum(r1: LinearRep, r2: LinearRep, shared: dict[int, int] | None = None) -> LinearRep:
    """Direct sum over the product of both algebras (shared factors merged)."""
    r2 = _share(r1, r2, shared)
    alg = r1.algebra.merge(r2.algebra)
    if r1.field == r2.field:
        field_, m1, m2 = r1.field, r1, r2
    elif "real" in (r1.field, r2.field):
        field_, m1, m2 = "real", r1, r2
    else:
        field_, m1, m2 = "complex", as_complex(r1), as_complex(r2)
    l1, l2 = _lift(m1, alg), _lift(m2, alg)
    z1, z2 = RatMatrix.zeros(r1.degree, r1.degree), RatMatrix.zeros(r2.degree, r2.degree)
    mats = [block_diag(a if a is not None else z1, b if b is not None else z2) for a, b in zip(l1, l2)]
    label = f"{r1.label} + {r2.label}"
    return _finish(LinearRep(alg, r1.degree + r2.degree, mats, field_, label))


def tprod(r1: LinearRep, r2: LinearRep, shared: dict[int, int] | None = None) -> LinearRep:
    """Tensor product acting by ``X (x) 1 + 1 (x) Y``.

    real (x) anything is taken over R with the real factor first; two
    complex-compatible factors are tensored over C.
    """
    r2 = _share(r1, r2, shared)
    alg = r1.algebra.merge(r2.algebra)
    label = f"tensor({r1.label}, {r2.label})"
    if r2.field == "real" and r1.field != "real":
        a, b = r2, r1
    else:
        a, b = r1, r2
    la, lb = _lift(a, alg), _lift(b, alg)
    if a.field == "real":
        ia, ib = RatMatrix.identity(a.degree), RatMatrix.identity(b.degree)
        mats = []
        for x, y in zip(la, lb):
            m = RatMatrix.zeros(a.degree * b.degree, a.degree * b.degree)
            if x is not None:
                m = m + kron(x, ib)
            if y is not None:
                m = m + kron(ia, y)
            mats.append(m)
        return _finish(LinearRep(alg, a.degree * b.degree, mats, b.field, label))
    ca, cb = _lift(as_complex(a), alg), _lift(as_complex(b), alg)
    na, nb = a.degree // 2, b.degree // 2
    ia, ib = RatMatrix.identity(na), RatMatrix.identity(nb)
    zero = RatMatrix.zeros(na * nb, na * nb)
    mats = []
    for x, y in zip(ca, cb):
        re, im = zero, zero
        if x is not None:
            xr, xi = _split(x)
            re, im = re + kron(xr, ib), im + kron(xi, ib)
        if y is not None:
            yr, yi = _split(y)
            re, im = re + kron(ia, yr), im + kron(ia, yi)
        mats.append(_realify(re, im))
    return _finish(LinearRep(alg, 2 * na * nb, mats, "complex", label))


def dual(r: LinearRep) -> LinearRep:
    """Complex conjugate representation; real and quaternionic ones are
    self-dual and returned unchanged."""
    if r.field != "complex":
        return LinearRep(r.algebra, r.degree, r.mats, r.field, f"dual({r.label})")
    c = RatMatrix(np.diag([(-1) ** k for k in range(r.degree)]).astype(object))
    return _finish(LinearRep(r.algebra, r.degree, [c @ m @ c for m in r.mats], "complex", f"dual({r.label})"))


def _perm_sign(seq: Sequence[int]) -> int:
    inv = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return -1 if inv % 2 else 1


def _wedge_matrix(a: RatMatrix, basis: list[tuple[int, ...]], index: dict) -> RatMatrix:
    n = len(basis)
    out = [[Fraction(0)] * n for _ in range(n)]
    nz = [(t, s, a[t, s]) for t in range(a.rows) for s in range(a.cols) if a.num[t, s]]
    by_col: dict[int, list] = {}
    for t, s, v in nz:
        by_col.setdefault(s, []).append((t, v))
    for col, subset in enumerate(basis):
        for pos, s in enumerate(subset):
            for t, v in by_col.get(s, ()):
                if t != s and t in subset:
                    continue
                new = list(subset)
                new[pos] = t
                sign = _perm_sign(new)
                out[index[tuple(sorted(new))]][col] += sign * v
    return RatMatrix.from_rows(out)


def lambda_k(r: LinearRep, k: int) -> LinearRep:
    """k-th exterior power over C."""
    if r.field == "real":
        raise ValueError("wedge needs a complex structure")
    n = r.degree // 2
    if not 0 <= k <= n:
        raise ValueError(f"wedge degree {k} out of range 0..{n}")
    basis = list(itertools.combinations(range(n), k))
    index = {b: i for i, b in enumerate(basis)}
    mats = []
    for m in complex_mats(r):
        re, im = _split(m)
        mats.append(_realify(_wedge_matrix(re, basis, index), _wedge_matrix(im, basis, index)))
    return _finish(LinearRep(r.algebra, 2 * len(basis), mats, "complex", f"wedge({k}, {r.label})"))


def _sym_matrix(a: RatMatrix, basis: list[tuple[int, ...]], index: dict) -> RatMatrix:
    n = len(basis)
    out = [[Fraction(0)] * n for _ in range(n)]
    for col, multiset in enumerate(basis):
        for pos, s in enumerate(multiset):
            for t in range(a.rows):
                v = a.num[t, s]
                if not v:
                    continue
                new = list(multiset)
                new[pos] = t
                out[index[tuple(sorted(new))]][col] += Fraction(int(v), a.den)
    return RatMatrix.from_rows(out)


def sym_k(r: LinearRep, k: int) -> LinearRep:
    """k-th symmetric power over C in a rational unitary basis."""
    if r.field == "real":
        raise ValueError("sym needs a complex structure")
    if k < 0:
        raise ValueError("symmetric degree must be non-negative")
    n = r.degree // 2
    basis = list(itertools.combinations_with_replacement(range(n), k))
    index = {b: i for i, b in enumerate(basis)}
    # monomials are orthogonal with squared norm prod(multiplicity!)
    gram = [Fraction(math.prod(math.factorial(b.count(i)) for i in set(b))) for b in basis]
    cm = []
    for m in complex_mats(r):
        re, im = _split(m)
        cm.append((_sym_matrix(re, basis, index), _sym_matrix(im, basis, index)))
    vectors = [_unit_vector(len(basis), i) for i in range(len(basis))]
    mats = restrict_complex(cm, vectors, gram)
    return _finish(LinearRep(r.algebra, 2 * len(basis), mats, "complex", f"sym{k}({r.label})"))


def sym2(r: LinearRep) -> LinearRep:
    return sym_k(r, 2)


# ---------------------------------------------------------------------------
# rational unitary bases


def _unit_vector(n: int, i: int) -> tuple[list[Fraction], list[Fraction]]:
    re = [Fraction(0)] * n
    re[i] = Fraction(1)
    return re, [Fraction(0)] * n


def two_squares(n: int) -> tuple[int, int] | None:
    for x in range(math.isqrt(n) + 1):
        y2 = n - x * x
        y = math.isqrt(y2)
        if y * y == y2:
            return x, y
    return None


def four_squares(n: int) -> tuple[int, int, int, int]:
    for a in range(math.isqrt(n) + 1):
        for b in range(a, math.isqrt(n - a * a) + 1):
            rest = two_squares(n - a * a - b * b)
            if rest is not None:
                return a, b, rest[0], rest[1]
    raise AssertionError("Lagrange four-square search failed")


def _hnorm(v, gram) -> Fraction:
    re, im = v
    return sum((a * a + b * b) * g for a, b, g in zip(re, im, gram))


def _cscale(c: tuple[Fraction, Fraction], v):
    x, y = c
    re, im = v
    return [x * a - y * b for a, b in zip(re, im)], [x * b + y * a for a, b in zip(re, im)]


def _cadd(u, v):
    return [a + b for a, b in zip(u[0], v[0])], [a + b for a, b in zip(u[1], v[1])]


def unitary_normalize(vectors, gram) -> list:
    """Turn an orthogonal family into an orthonormal one using only Q(i)
    scalars and 2x2 unitary mixing of equal-norm vectors."""
    norms = [_hnorm(v, gram) for v in vectors]
    out: list = [None] * len(vectors)
    pending: dict[Fraction, list[int]] = {}
    for i, nrm in enumerate(norms):
        p, q = nrm.numerator, nrm.denominator
        xy = two_squares(p * q)
        if xy is not None:
            out[i] = _cscale((Fraction(xy[0], p), Fraction(xy[1], p)), vectors[i])
        else:
            pending.setdefault(nrm, []).append(i)
    for nrm, idx in pending.items():
        if len(idx) % 2:
            raise NotImplementedError(f"no rational unitary basis: unpaired squared norm {nrm}")
        p, q = nrm.numerator, nrm.denominator
        a1, a2, b1, b2 = (Fraction(t, p) for t in four_squares(p * q))
        for i, j in zip(idx[0::2], idx[1::2]):
            v1, v2 = vectors[i], vectors[j]
            out[i] = _cadd(_cscale((a1, a2), v1), _cscale((b1, b2), v2))
            out[j] = _cadd(_cscale((-b1, b2), v1), _cscale((a1, -a2), v2))
    return out


def restrict_complex(cmats, vectors, gram) -> list[RatMatrix]:
    """Realified action of complex matrices on the span of orthogonal
    ``vectors`` (w.r.t. the diagonal Hermitian ``gram``), which must be
    invariant."""
    unit = unitary_normalize(vectors, gram)
    u = (RatMatrix.from_rows([list(x) for x in zip(*[v[0] for v in unit])]),
         RatMatrix.from_rows([list(x) for x in zip(*[v[1] for v in unit])]))
    g = RatMatrix.from_rows([[gram[i] if i == j else 0 for j in range(len(gram))] for i in range(len(gram))])
    ustar_g = _cmul(_cadjoint(u), (g, RatMatrix.zeros(g.rows, g.cols)))
    out = []
    for a in cmats:
        au = _cmul(a, u)
        small = _cmul(ustar_g, au)
        if not (_cmul(u, small)[0] == au[0] and _cmul(u, small)[1] == au[1]):
            raise AssertionError("subspace is not invariant")
        out.append(_realify(*small))
    return out


# ---------------------------------------------------------------------------
# special modules


def spin_rep(n: int, uid: int | None = None) -> LinearRep:
    """Spin(7) on R^8, Spin(11) on R^64 = H^16, half-spin Spin(12) on R^64."""
    if n == 7:
        gammas, field_ = clifford.octonion_gammas(), "real"
    elif n in (11, 12):
        gammas, field_ = clifford.cl11_gammas(), "quaternionic"
    else:
        raise ValueError(f"spin representation of Spin({n}) not supported (7, 11, 12)")
    g = [RatMatrix(x) for x in gammas]
    mats = []
    for i in range(n):
        for j in range(i + 1, n):
            if j < len(g):
                mats.append((g[j] @ g[i]).scale(Fraction(1, 2)))
            else:
                # the last direction of so(12) acts through the volume trick
                mats.append(g[i].scale(Fraction(-1, 2)))
    f = _factors_for("so", n, uid)
    return _finish(LinearRep(AbstractLieAlgebra((f,)), g[0].rows, mats, field_, f"spinrep({n})"))


def sp3_fourteen(uid: int | None = None) -> LinearRep:
    """The 14-dimensional complex module of sp(3) inside the third exterior
    power of C^6, orthogonal to ``omega ^ C^6``."""
    std = std_rep("sp", 3, uid=uid)
    n = 6
    basis = list(itertools.combinations(range(n), 3))
    index = {b: i for i, b in enumerate(basis)}
    pairs = [(0, 1), (2, 3), (4, 5)]
    vectors = []
    for a in pairs[0]:
        for b in pairs[1]:
            for c in pairs[2]:
                vectors.append(_unit_vector(len(basis), index[(a, b, c)]))
    for x in range(n):
        others = [p for p in pairs if x not in p]
        re = [Fraction(0)] * len(basis)
        for sgn, (p, q) in zip((1, -1), others):
            word = [p, q, x]
            re[index[tuple(sorted(word))]] += sgn * _perm_sign(word)
        vectors.append((re, [Fraction(0)] * len(basis)))
    cm = []
    for m in complex_mats(std):
        re, im = _split(m)
        cm.append((_wedge_matrix(re, basis, index), _wedge_matrix(im, basis, index)))
    mats = restrict_complex(cm, vectors, [Fraction(1)] * len(basis))
    return _finish(LinearRep(std.algebra, 28, mats, "complex", "sp3_fourteen"))


# ---------------------------------------------------------------------------
# Frobenius-Schur type


@dataclass(frozen=True)
class StructureType:
    tag: str
    commutant_dim: int


def _scalar_of(m: RatMatrix) -> Fraction | None:
    n = m.rows
    if not (m == RatMatrix.identity(n).scale(m[0, 0])):
        return None
    return m[0, 0]


def _is_division(basis: list[RatMatrix], n: int) -> bool:
    """Traceless part satisfies Clifford relations with a positive form."""
    # traceless elements of the commutant
    traces = [[sum((b[i, i] for i in range(n)), Fraction(0))] for b in basis]
    coeffs = nullspace_int(np.array([[t[0] for t in traces]], dtype=object)) if basis else []
    ys = [sum((b.scale(c) for b, c in zip(basis, cv) if c), RatMatrix.zeros(n, n)) for cv in coeffs]
    gmat = []
    for a in ys:
        row = []
        for b in ys:
            s = _scalar_of(a @ b + b @ a)
            if s is None:
                return False
            row.append(-s / 2)
        gmat.append(row)
    # Sylvester criterion
    for k in range(1, len(gmat) + 1):
        sub = RatMatrix.from_rows([r[:k] for r in gmat[:k]])
        if _det(sub) <= 0:
            return False
    return True


def _det(m: RatMatrix) -> Fraction:
    a = [[m[i, j] for j in range(m.cols)] for i in range(m.rows)]
    n, det = len(a), Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det


def structure_type(r: LinearRep) -> StructureType:
    com = commutant(list(r.mats), r.degree)
    d = len(com)
    tags = {1: "real", 2: "complex", 4: "quaternionic"}
    if d in tags and _is_division(com, r.degree):
        return StructureType(tags[d], d)
    return StructureType("reducible-or-undetermined", d)


# ---------------------------------------------------------------------------
# quaternionic realizations


def _anticommuting_structure(r: LinearRep) -> RatMatrix | None:
    """A skew ``X`` with ``X^2 = -1`` commuting with ``r`` and anticommuting
    with the complex structure, if the rep is of quaternionic type."""
    jc = r.markers()[0]
    deg = r.degree
    com = commutant(list(r.mats), deg)
    if len(com) < 2:
        return None
    # coefficients c with (sum c_i X_i) Jc + Jc (sum c_i X_i) = 0
    cols = [(x @ jc + jc @ x) for x in com]
    den = 1
    for c in cols:
        den = den * c.den // math.gcd(den, c.den)
    sys_ = np.stack([c.num.reshape(-1) * (den // c.den) for c in cols], axis=1)
    sol = nullspace_int(sys_)
    cands = []
    for cv in sol:
        x = sum((b.scale(c) for b, c in zip(com, cv) if c), RatMatrix.zeros(deg, deg))
        x = (x - x.T).scale(Fraction(1, 2))
        if not x.is_zero():
            cands.append(x)
    if not cands:
        return None
    pool = cands[:2]
    for a, b in itertools.product(range(-4, 5), repeat=2) if len(pool) == 2 else [(1, 0)]:
        if not (a or b):
            continue
        x = pool[0].scale(a) + (pool[1].scale(b) if len(pool) == 2 else RatMatrix.zeros(deg, deg))
        lam = _scalar_of(x @ x)
        if lam is None or lam >= 0:
            continue
        lam = -lam
        rn, rd = math.isqrt(lam.numerator), math.isqrt(lam.denominator)
        if rn * rn == lam.numerator and rd * rd == lam.denominator:
            return x.scale(Fraction(rd, rn))
    raise NotImplementedError("quaternionic structure with irrational normalization")


def _standardize_quaternionic(r: LinearRep, x: RatMatrix) -> LinearRep:
    deg = r.degree
    jc = r.markers()[0]
    covered: set[int] = set()
    cols: list[RatMatrix] = []
    for p in range(deg):
        if p in covered:
            continue
        u = RatMatrix.column([1 if i == p else 0 for i in range(deg)])
        fs = [u, jc @ u, x @ u, x @ jc @ u]
        support = set()
        for f in fs:
            support |= {i for i in range(deg) if f.num[i, 0]}
        if len(support) != 4 or support & covered:
            raise NotImplementedError("quaternionic structure not aligned with coordinate blocks")
        covered |= support
        cols.extend(fs)
    den = 1
    for c in cols:
        den = den * c.den // math.gcd(den, c.den)
    p_mat = RatMatrix(np.hstack([c.num * (den // c.den) for c in cols]), den)
    mats = [p_mat.T @ m @ p_mat for m in r.mats]
    return _finish(LinearRep(r.algebra, deg, mats, "quaternionic", r.label))


def quaternionify(r: LinearRep) -> LinearRep:
    """A quaternionic representation built from ``r``.

    Quaternionic ones are returned as is; complex ones of quaternionic type
    are rewritten in quaternionic coordinates; other complex ones become
    ``V (x)_C H`` and real ones ``V (x)_R H``.
    """
    if r.field == "quaternionic":
        return r
    deg = r.degree
    if r.field == "complex":
        jc = r.markers()[0]
        has_center = any(m == jc for m in r.mats)
        x = None if has_center else _anticommuting_structure(r)
        if x is not None:
            return _standardize_quaternionic(r, x)
        return tensor_over_c(r)
    mats = [kron(m, RatMatrix.identity(4)) for m in r.mats]
    return _finish(LinearRep(r.algebra, 4 * deg, mats, "quaternionic", r.label))


def tensor_over_c(r: LinearRep) -> LinearRep:
    """``V (x)_C H = V + conj(V)`` for a complex (or quaternionic, read as
    complex) representation."""
    deg = r.degree
    idx = 4 * np.arange(deg // 2)
    mats = []
    for m in complex_mats(r):
        out = np.zeros((2 * deg, 2 * deg), dtype=int).astype(object)
        # both complex coordinates of each quaternion slot carry a copy
        for s in (0, 1):
            for a in (0, 1):
                for b in (0, 1):
                    out[np.ix_(idx + 2 * s + a, idx + 2 * s + b)] = m.num[a::2, b::2]
        mats.append(RatMatrix(out, m.den))
    return _finish(LinearRep(r.algebra, 2 * deg, mats, "quaternionic", r.label))


def adjoin_circle(r: LinearRep, generator: RatMatrix, uid: int | None = None) -> LinearRep:
    """Add a one-dimensional factor acting by ``generator``, which must be
    skew and commute with ``r``."""
    alg = AbstractLieAlgebra(r.algebra.factors + (Factor("z", 1, new_uid() if uid is None else uid),))
    return _finish(LinearRep(alg, r.degree, list(r.mats) + [generator], r.field, r.label))


def add_center(r: LinearRep, uid: int | None = None) -> LinearRep:
    """Adjoin scalar multiplication by i on a complex representation."""
    c = as_complex(r)
    return adjoin_circle(c, c.markers()[0], uid)


def as_real(r: LinearRep) -> LinearRep:
    """Forget the complex or quaternionic structure."""
    return LinearRep(r.algebra, r.degree, r.mats, "real", r.label)


def complexify(r: LinearRep) -> LinearRep:
    """``V (x)_R C`` of a real representation."""
    mats = [kron(m, RatMatrix.identity(2)) for m in r.mats]
    return _finish(LinearRep(r.algebra, 2 * r.degree, mats, "complex", r.label))
