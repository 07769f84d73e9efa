"""Principal isotropy, cohomogeneity and homogeneity rank.

``hrk = rk G - rk H - c`` where ``H`` is a principal isotropy group and ``c``
the cohomogeneity.  Everything is computed from one faithful realization of
the acting algebra plus the action matrices, which need not be faithful.
Actions on ``HP^{n-1}`` are handled linearly: the right scalar ``sp(1)`` is
adjoined and the computation runs on ``H^n``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .liealg import (
    DEFAULT_SEEDS,
    RETRY_ROUNDS,
    GenericityError,
    MatLieAlgebra,
    _derived_seeds,
    algebra_rank,
    combine_mats,
    fixed_space,
    random_coefficients,
)
from .ratlin import RatMatrix, column_space, nullspace_int, solve
from .reprkit import (
    AbstractLieAlgebra,
    Factor,
    LinearRep,
    dsum,
    first_noncommuting,
    new_uid,
    right_quaternion_ops,
)


class EmbeddingError(ValueError):
    """The representation does not commute with the right quaternion scalars."""


@dataclass
class HrkReport:
    space: str
    dim_g: int
    rank_g: int
    dim_isotropy: int
    rank_isotropy: int
    cohomogeneity: int
    hrk: int
    seeds: list[int]
    samples_agreed: bool
    derived_series_dims: list[int]
    isotropy_basis: list[RatMatrix] = field(default_factory=list, repr=False)

    def as_dict(self) -> dict:
        return {
            "space": self.space,
            "dim_g": self.dim_g,
            "rank_g": self.rank_g,
            "dim_isotropy": self.dim_isotropy,
            "rank_isotropy": self.rank_isotropy,
            "cohomogeneity": self.cohomogeneity,
            "hrk": self.hrk,
            "seeds": list(self.seeds),
            "samples_agreed": self.samples_agreed,
            "derived_series_dims": list(self.derived_series_dims),
        }


@dataclass
class Isotropy:
    coefficients: list[list[Fraction]]  # kernel vectors in the abstract basis
    point: RatMatrix
    algebra: MatLieAlgebra
    sampled: list[int]
    agreed: bool


@dataclass
class SliceData:
    point: RatMatrix
    isotropy: MatLieAlgebra
    isotropy_coefficients: list[list[Fraction]]
    slice_basis: list[RatMatrix]
    slice_mats: list[RatMatrix]  # coordinates in slice_basis, one per isotropy generator
    ambient_slice_mats: list[RatMatrix]  # P Y P on the whole space, skew
    delta: int

    @property
    def dim(self) -> int:
        return len(self.slice_basis)


# ---------------------------------------------------------------------------
# core


def _stack(mats: Sequence[RatMatrix]) -> tuple[np.ndarray, int]:
    den = 1
    for m in mats:
        den = den * m.den // math.gcd(den, m.den)
    return np.stack([m.num * (den // m.den) for m in mats]), den


def stabilizer(action: Sequence[RatMatrix], v: RatMatrix) -> list[list[Fraction]]:
    """Kernel of ``c -> sum c_i A_i v``."""
    if not action:
        return []
    arr, _ = _stack(action)
    cols = arr.dot(v.num[:, 0])  # (N, m)
    return nullspace_int(cols.T)


def _subalgebra(real: MatLieAlgebra, coeffs: list[list[Fraction]], label: str) -> MatLieAlgebra:
    basis = tuple(real.combine(c) for c in coeffs)
    alg = MatLieAlgebra(real.ambient_dim, basis, label)
    if basis:
        alg._positions  # independence
        from .liealg import closure_defect

        bad = closure_defect(alg)
        if bad is not None:
            raise AssertionError(f"isotropy of {real.label} is not bracket-closed at {bad}")
    return alg


def _random_point(seed: int, m: int) -> RatMatrix:
    return RatMatrix.column(random_coefficients(seed, m))


def generic_isotropy(real: MatLieAlgebra, action: Sequence[RatMatrix], m: int,
                     seeds: Sequence[int] = DEFAULT_SEEDS) -> Isotropy:
    """Isotropy algebra of a generic point: the smallest stabilizer over
    random integer points, accepted once a full round of seeds agrees."""
    seeds = list(seeds) or list(DEFAULT_SEEDS)
    if m == 0:
        # the only point is the origin
        ker = [[Fraction(int(i == j)) for j in range(real.dim)] for i in range(real.dim)]
        return Isotropy(ker, RatMatrix.zeros(0, 1), real, [], True)
    sampled: list[int] = []
    best = None
    for rnd in range(RETRY_ROUNDS + 1):
        vals = []
        for s in _derived_seeds(seeds, rnd):
            v = _random_point(s, m)
            ker = stabilizer(action, v)
            vals.append(len(ker))
            sampled.append(len(ker))
            if best is None or len(ker) < len(best[0]):
                best = (ker, v)
        if all(x == len(best[0]) for x in vals):
            ker, v = best
            alg = _subalgebra(real, ker, f"isotropy in {real.label}")
            agreed = all(x == len(ker) for x in sampled)
            return Isotropy(ker, v, alg, sampled, agreed)
    raise GenericityError("principal isotropy dimension", sampled)


def derived_series_dims(alg: MatLieAlgebra) -> list[int]:
    dims = [alg.dim]
    cur = list(alg.basis)
    while cur:
        brs = [a @ b - b @ a for i, a in enumerate(cur) for b in cur[i + 1:]]
        brs = [b for b in brs if not b.is_zero()]
        if not brs:
            dims.append(0)
            break
        flat = [RatMatrix(b.num.reshape(-1, 1), b.den) for b in brs]
        span = column_space(flat)
        if len(span) == len(cur):
            break
        n = alg.ambient_dim
        cur = [RatMatrix(s.num.reshape(n, n), s.den) for s in span]
        dims.append(len(cur))
    return dims


@lru_cache(maxsize=None)
def _factor_rank(kind: str, size: int, seeds: tuple[int, ...]) -> int:
    from .reprkit import reference_algebra

    return algebra_rank(reference_algebra(kind, size), seeds)[0]


def group_rank(algebra: AbstractLieAlgebra, seeds: Sequence[int] = DEFAULT_SEEDS) -> int:
    return sum(_factor_rank(f.kind, f.size, tuple(seeds)) for f in algebra.factors)


def _linear_core(real: MatLieAlgebra, action: Sequence[RatMatrix], m: int, rank_g: int,
                 seeds: Sequence[int], space: str) -> HrkReport:
    iso = generic_isotropy(real, action, m, seeds)
    rank_h = algebra_rank(iso.algebra, seeds)[0]
    c = m - (real.dim - iso.algebra.dim)
    return HrkReport(space, real.dim, rank_g, iso.algebra.dim, rank_h, c, rank_g - rank_h - c,
                     list(seeds), iso.agreed, derived_series_dims(iso.algebra), list(iso.algebra.basis))


def hrk_linear(r: LinearRep, seeds: Sequence[int] = DEFAULT_SEEDS) -> HrkReport:
    seeds = list(seeds) or list(DEFAULT_SEEDS)
    real = r.algebra.realization()
    return _linear_core(real, r.mats, r.degree, group_rank(r.algebra, seeds), seeds,
                        f"linear({r.degree})")


def hrk_action(real: MatLieAlgebra, action: Sequence[RatMatrix], m: int,
               seeds: Sequence[int] = DEFAULT_SEEDS) -> HrkReport:
    """hrk for an explicit (realization, action) pair, e.g. a slice."""
    seeds = list(seeds) or list(DEFAULT_SEEDS)
    rank_g = algebra_rank(real, seeds)[0]
    return _linear_core(real, action, m, rank_g, seeds, f"linear({m})")


# ---------------------------------------------------------------------------
# quaternionic projective space


def with_right_scalars(r: LinearRep) -> LinearRep:
    """``r`` extended by the commuting right multiplications by ``sp(1)``."""
    bad = first_noncommuting(r)
    if bad is not None:
        name = r.algebra.label
        raise EmbeddingError(f"generator {bad} of {name} does not commute with the right "
                             f"quaternion scalars on R^{r.degree}")
    n = r.degree // 4
    j1, j2, j3 = right_quaternion_ops(n)
    # L_q -> -R_q is a homomorphism since R_a R_b = R_{ba}; R_k = -J1 J2
    extra = [-j1, -j2, j3]
    alg = AbstractLieAlgebra(r.algebra.factors + (Factor("sp", 1, new_uid()),))
    ext = LinearRep(alg, r.degree, list(r.mats) + extra, "real", f"{r.label} x sp(1)")
    ext.validate()
    return ext


def hrk_projective(r: LinearRep, seeds: Sequence[int] = DEFAULT_SEEDS) -> HrkReport:
    """Action on ``HP^{n-1}`` for ``r`` on ``H^n``."""
    seeds = list(seeds) or list(DEFAULT_SEEDS)
    ext = with_right_scalars(r)
    n = r.degree // 4
    real_ext = ext.algebra.realization()
    iso = generic_isotropy(real_ext, ext.mats, ext.degree, seeds)
    # the isotropy projects injectively to g; realize it there
    real_g = r.algebra.realization()
    proj = [c[: r.algebra.dim] for c in iso.coefficients]
    iso_g = _subalgebra(real_g, proj, "projective isotropy")
    rank_g = group_rank(r.algebra, seeds)
    rank_ext = group_rank(ext.algebra, seeds)
    if rank_ext != rank_g + 1:
        raise AssertionError("adjoining sp(1) did not raise the rank by one")
    rank_h = algebra_rank(iso_g, seeds)[0]
    c_lin = ext.degree - (ext.algebra.dim - len(iso.coefficients))
    c = c_lin - 1
    return HrkReport(f"quaternionic_projective({n})", r.algebra.dim, rank_g, iso_g.dim, rank_h, c,
                     rank_g - rank_h - c, list(seeds), iso.agreed, derived_series_dims(iso_g),
                     list(iso_g.basis))


# ---------------------------------------------------------------------------
# slices and the structural identities


def slice_at(r: LinearRep, v: RatMatrix, seeds: Sequence[int] = DEFAULT_SEEDS) -> SliceData:
    if v.is_zero():
        raise ValueError("slice needs a nonzero point")
    real = r.algebra.realization()
    coeffs = stabilizer(r.mats, v)
    iso = _subalgebra(real, coeffs, "isotropy at point")
    m = r.degree
    tangent = column_space([a @ v for a in r.mats]) if r.mats else []
    if tangent:
        arr, den = _stack(tangent)
        normal = [RatMatrix.column(x) for x in nullspace_int(arr[:, :, 0])]
    else:
        normal = [RatMatrix.column([1 if i == j else 0 for i in range(m)]) for j in range(m)]
    ys = [combine_mats(r.mats, c) for c in coeffs]
    slice_mats, ambient = [], []
    if not normal:
        slice_mats = [RatMatrix.zeros(0, 0) for _ in ys]
        ambient = [RatMatrix.zeros(m, m) for _ in ys]
    else:
        s_arr, s_den = _stack(normal)
        s = RatMatrix(s_arr[:, :, 0].T, s_den)
        # orthogonal projector onto the slice
        gram = s.T @ s
        proj = s @ solve(gram, s.T)
        for y in ys:
            coords = solve(s, y @ s)
            if coords is None:
                raise AssertionError("isotropy does not preserve the slice")
            slice_mats.append(coords)
            ambient.append(proj @ y @ proj)
    delta = group_rank(r.algebra, seeds) - algebra_rank(iso, seeds)[0]
    return SliceData(v, iso, coeffs, normal, slice_mats, ambient, delta)


def slice_identity_sides(r: LinearRep, v: RatMatrix, seeds: Sequence[int] = DEFAULT_SEEDS) -> tuple[int, int]:
    """``hrk(G, V)`` and ``hrk(G_v, slice) + delta``."""
    lhs = hrk_linear(r, seeds).hrk
    sd = slice_at(r, v, seeds)
    rhs = hrk_action(sd.isotropy, sd.slice_mats, sd.dim, seeds).hrk + sd.delta
    return lhs, rhs


def check_slice_identity(r: LinearRep, v: RatMatrix, seeds: Sequence[int] = DEFAULT_SEEDS) -> bool:
    lhs, rhs = slice_identity_sides(r, v, seeds)
    return lhs == rhs


def subadditivity_audit(r1: LinearRep, r2: LinearRep,
                        seeds: Sequence[int] = DEFAULT_SEEDS) -> tuple[int, int, int, bool]:
    """``(hrk(V1+V2), hrk(V1), hrk(V2), hrk(V1+V2) <= hrk(V1) + hrk(V2))``.

    Both representations must act through the same factors (same uids).
    """
    if {f.uid for f in r1.algebra.factors} != {f.uid for f in r2.algebra.factors}:
        raise ValueError("subadditivity needs both representations of the same algebra")
    both = dsum(r1, r2)
    h, h1, h2 = (hrk_linear(x, seeds).hrk for x in (both, r1, r2))
    return h, h1, h2, h <= h1 + h2


@dataclass(frozen=True)
class BredonResult:
    dim_fixed: int
    cohomogeneity: int
    rank_g: int
    rank_isotropy: int

    @property
    def holds(self) -> bool:
        # the fixed space of a linear action always contains 0
        return self.dim_fixed <= self.cohomogeneity - self.rank_g + self.rank_isotropy


def bredon_check(r: LinearRep, seeds: Sequence[int] = DEFAULT_SEEDS) -> BredonResult:
    seeds = list(seeds) or list(DEFAULT_SEEDS)
    rep = hrk_linear(r, seeds)
    real = r.algebra.realization()
    _, cartan = algebra_rank(real, seeds)
    if r.mats:
        fixed = fixed_space(cartan, list(r.mats))
    else:
        fixed = [None] * r.degree
    return BredonResult(len(fixed), rep.cohomogeneity, rep.rank_g, rep.rank_isotropy)
