"""Maximal subgroup tables, the classification list and the survey driver.

Descriptors carry a module type: ``H`` (subgroups of Sp(n) on H^n), ``C``
(subgroups of U(n) on C^n) or ``R`` (subgroups of SO(n) on R^n).  A
descriptor's ``size`` is the dimension of that module over its field.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import weyl
from .engine import HrkReport, hrk_projective
from .liealg import COMPLEX_I, DEFAULT_SEEDS, classical_dim
from .ratlin import RatMatrix, block_diag, kron
from .reprkit import (AbstractLieAlgebra, LinearRep, adjoin_circle, add_center, as_complex,
                      as_real, complexify, dsum, lambda_k, new_uid, quaternionify, relabel,
                      sp3_fourteen, spin_rep, std_rep, sym_k, tensor_over_c, tprod, trivial)

SURVEY_CEILING = 6

PRUNED = "pruned(dim-condition)"
SURVIVES = "survives-dim-condition"
UNSUPPORTED = "unsupported(exceptional)"


def verified(h: int) -> str:
    return f"verified-hrk({h})"


@dataclass(frozen=True)
class GroupDescriptor:
    name: str
    family: str
    params: tuple
    module: str
    size: int
    dim: int
    rank: int
    builder: Callable[[], LinearRep] | None = field(default=None, compare=False, repr=False)
    blocks: tuple["GroupDescriptor", ...] = ()
    exceptional: bool = False
    note: str = ""

    @property
    def constructible(self) -> bool:
        return self.builder is not None and not self.exceptional

    def build(self) -> LinearRep:
        if not self.constructible:
            raise NotImplementedError(f"no constructor for {self.name}")
        return self.builder()

    def dim_condition(self) -> bool:
        if self.module != "H":
            raise ValueError("the dimension condition is stated for HP^{n-1}")
        return weyl.dim_condition_hp(self.dim, self.rank, self.size)


@dataclass
class CandidateChain:
    chain: tuple[GroupDescriptor, ...]
    verdict: str
    report: HrkReport | None = None
    forced: bool = False
    note: str = ""

    @property
    def key(self) -> str:
        return " > ".join(g.name for g in self.chain)

    @property
    def hrk(self) -> int | None:
        return None if self.report is None else self.report.hrk

    def as_dict(self) -> dict:
        out = {"chain": self.key, "verdict": self.verdict,
               "report": None if self.report is None else self.report.as_dict()}
        if self.forced:
            out["forced"] = True
        if self.note:
            out["note"] = self.note
        return out


# ---------------------------------------------------------------------------
# small builders


def _empty_c() -> LinearRep:
    return LinearRep(AbstractLieAlgebra(), 2, (), "complex", "C^1")


def _su_c(n: int) -> LinearRep:
    return std_rep("su", n) if n > 1 else _empty_c()


def _s_u(k: int, l: int) -> LinearRep:
    """S(U(k) x U(l)) on C^{k+l}: the center acts with weights l and -k."""
    r = dsum(_su_c(k), _su_c(l))
    z = block_diag(kron(RatMatrix.identity(k), COMPLEX_I).scale(l),
                   kron(RatMatrix.identity(l), COMPLEX_I).scale(-k))
    return adjoin_circle(r, z)


def _so_r(n: int) -> LinearRep:
    return std_rep("so", n) if n > 1 else trivial(1)


def _fresh(r: LinearRep) -> LinearRep:
    """Copy of ``r`` with new factor uids, so equal blocks stay independent."""
    return relabel(r, {f.uid: new_uid() for f in r.algebra.factors})


def _dsum_all(reps: Sequence[LinearRep]) -> LinearRep:
    out = _fresh(reps[0])
    for r in reps[1:]:
        out = dsum(out, _fresh(r))
    return out


def _cached(fn: Callable[[], LinearRep]) -> Callable[[], LinearRep]:
    memo: list[LinearRep] = []

    def get() -> LinearRep:
        if not memo:
            r = fn()
            r.validate()
            memo.append(r)
        return memo[0]
    return get


def _desc(name, family, params, module, size, dim, rank, builder=None, **kw) -> GroupDescriptor:
    return GroupDescriptor(name, family, tuple(params), module, size, dim, rank,
                           None if builder is None else _cached(builder), **kw)


# ---------------------------------------------------------------------------
# irreducible images rho(H)


def _scan_types(degree: int):
    for r in range(1, degree):
        yield "A", r
    for r in range(3, (degree - 1) // 2 + 1):
        yield "B", r
    for r in range(2, degree // 2 + 1):
        yield "C", r
    for r in range(4, degree // 2 + 1):
        yield "D", r
    for letter, r in (("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)):
        yield letter, r


def _canonical_weight(rs: weyl.RootSystem, w: tuple[int, ...]) -> bool:
    """Keep one weight per orbit of the diagram symmetries that only change
    the image up to conjugacy."""
    if rs.type_letter in ("A", "E") and weyl.minus_w0(rs, w) > w:
        return False
    if rs.type_letter == "D" and w[:-2] + (w[-1], w[-2]) > w:
        return False
    return True


def irreducibles(degree: int, fs_type: str, ambient_dim: int) -> list[tuple[weyl.RootSystem, tuple[int, ...]]]:
    """Simple ``H`` and highest weights with a ``degree``-dimensional irreducible
    of the given Frobenius-Schur type whose image is a proper subgroup."""
    out = []
    for letter, r in _scan_types(degree):
        rs = weyl.root_system(letter, r)
        if rs.dim >= ambient_dim:
            continue
        for w, d in weyl.monotone_filter(rs, degree):
            if d != degree or not any(w) or not _canonical_weight(rs, w):
                continue
            if weyl.frobenius_schur(rs, w) == fs_type:
                out.append((rs, w))
    return out


def _weight_str(w) -> str:
    return ",".join(map(str, w))


def _rho_builder(rs: weyl.RootSystem, w: tuple[int, ...], fs_type: str):
    t, r = rs.type_letter, rs.rank
    unit = [i for i, c in enumerate(w) if c]
    if fs_type == "quaternionic":
        if t == "A" and r == 1:
            return lambda: quaternionify(sym_k(std_rep("su", 2), w[0]))
        if t == "A" and r == 5 and w == (0, 0, 1, 0, 0):
            return lambda: quaternionify(lambda_k(std_rep("su", 6), 3))
        if t == "C" and r == 3 and w == (0, 0, 1):
            return lambda: quaternionify(sp3_fourteen())
        if t == "B" and r == 5 and w == (0, 0, 0, 0, 1):
            return lambda: spin_rep(11)
        if t == "D" and r == 6 and w in ((0, 0, 0, 0, 0, 1), (0, 0, 0, 0, 1, 0)):
            return lambda: spin_rep(12)
    elif fs_type == "complex" and t == "A":
        if len(unit) == 1 and w[unit[0]] == 1:
            return lambda: lambda_k(std_rep("su", r + 1), unit[0] + 1)
        if unit == [0]:
            return lambda: sym_k(std_rep("su", r + 1), w[0])
    elif fs_type == "real" and t == "B" and r == 3 and w == (0, 0, 1):
        return lambda: spin_rep(7)
    return None


def _rho_descriptors(degree: int, fs_type: str, module: str, size: int, ambient_dim: int):
    out = []
    for rs, w in irreducibles(degree, fs_type, ambient_dim):
        exceptional = rs.type_letter in "EFG"
        builder = None if exceptional else _rho_builder(rs, w, fs_type)
        out.append(_desc(f"rho[{rs.name}:{_weight_str(w)}]", "rho", (rs.type_letter, rs.rank, w),
                         module, size, rs.dim, rs.rank, builder, exceptional=exceptional))
    return out


# ---------------------------------------------------------------------------
# classical groups and the tables


def classical_group(family: str, n: int) -> GroupDescriptor:
    """Sp(n) on H^n, SU(n) or U(n) on C^n, SO(n) on R^n."""
    if family == "sp":
        return _desc(f"Sp({n})", "sp", (n,), "H", n, classical_dim("sp", n), n,
                     lambda: std_rep("sp", n))
    if family == "su":
        return _desc(f"SU({n})", "su", (n,), "C", n, classical_dim("su", n), n - 1,
                     lambda: _su_c(n))
    if family == "u":
        return _desc(f"U({n})", "u", (n,), "C", n, n * n, n, lambda: std_rep("u", n))
    if family == "so":
        return _desc(f"SO({n})", "so", (n,), "R", n, classical_dim("so", n), n // 2,
                     lambda: _so_r(n))
    raise ValueError(f"unsupported family {family!r}; expected so, su, sp or u")


def _splits(n: int, lo: int = 1):
    return [(k, n - k) for k in range(lo, n // 2 + 1)]


def _factor_pairs(n: int, lo: int):
    return [(p, n // p) for p in range(lo, n + 1) if n % p == 0 and n // p >= lo and p <= n // p]


def _sp_rows(n: int) -> list[GroupDescriptor]:
    out = [_desc(f"U({n})", "u", (n,), "H", n, n * n, n, lambda: tensor_over_c(std_rep("u", n)))]
    for k, l in _splits(n):
        out.append(product([classical_group("sp", k), classical_group("sp", l)]))
    for p in range(3, n + 1):
        if n % p == 0:
            q = n // p
            out.append(_desc(f"SO({p})(x)Sp({q})", "sosp", (p, q), "H", n,
                             classical_dim("so", p) + classical_dim("sp", q), p // 2 + q,
                             lambda p=p, q=q: tprod(std_rep("so", p), std_rep("sp", q))))
    out += _rho_descriptors(2 * n, "quaternionic", "H", n, classical_dim("sp", n))
    return out


def s_u(k: int, l: int, module: str = "C") -> GroupDescriptor:
    d = GroupDescriptor(f"S(U({k})xU({l}))", "s_u", (k, l), "C", k + l, k * k + l * l - 1,
                        k + l - 1, _cached(lambda: _s_u(k, l)))
    return d if module == "C" else on_h(d)


def _su_rows(n: int) -> list[GroupDescriptor]:
    out = []
    if n >= 2:
        out.append(_desc(f"SO({n})", "so_in_su", (n,), "C", n, classical_dim("so", n), n // 2,
                         lambda: complexify(_so_r(n))))
    if n % 2 == 0 and n >= 4:
        m = n // 2
        out.append(_desc(f"Sp({m})", "sp_in_su", (m,), "C", n, classical_dim("sp", m), m,
                         lambda: as_complex(std_rep("sp", m))))
    for k, l in _splits(n):
        out.append(s_u(k, l))
    for p, q in _factor_pairs(n, 3):
        out.append(_desc(f"SU({p})(x)SU({q})", "su_su", (p, q), "C", n, p * p + q * q - 2, p + q - 2,
                         lambda p=p, q=q: tprod(std_rep("su", p), std_rep("su", q))))
    out += _rho_descriptors(n, "complex", "C", n, classical_dim("su", n))
    return out


def _so_rows(n: int) -> list[GroupDescriptor]:
    out = []
    for k, l in _splits(n):
        out.append(_desc(f"SO({l})xSO({k})", "so_so", (l, k), "R", n,
                         classical_dim("so", k) + classical_dim("so", l), k // 2 + l // 2,
                         lambda k=k, l=l: dsum(_so_r(l), _so_r(k))))
    if n % 2 == 0 and n >= 4:
        m = n // 2
        out.append(_desc(f"U({m})", "u_in_so", (m,), "R", n, m * m, m,
                         lambda: as_real(std_rep("u", m))))
    for p, q in _factor_pairs(n, 3):
        out.append(_desc(f"SO({p})(x)SO({q})", "so_so_t", (p, q), "R", n,
                         classical_dim("so", p) + classical_dim("so", q), p // 2 + q // 2,
                         lambda p=p, q=q: tprod(std_rep("so", p), std_rep("so", q))))
    if n % 4 == 0:
        for p, q in _factor_pairs(n // 4, 1):
            if p * q > 1:
                out.append(_desc(f"Sp({p})(x)Sp({q})", "sp_sp_t", (p, q), "R", n,
                                 classical_dim("sp", p) + classical_dim("sp", q), p + q,
                                 note="no constructor for Sp(a)(x)Sp(b) over R"))
    out += _rho_descriptors(n, "real", "R", n, classical_dim("so", n))
    return out


def with_center(d: GroupDescriptor) -> GroupDescriptor:
    """``Z . H`` for a C-module descriptor: adjoin scalar multiplication by i."""
    if d.family == "s_u":
        k, l = d.params
        blocks = (classical_group("u", k), classical_group("u", l))
        return GroupDescriptor(f"U({k})xU({l})", "uxu", (k, l), "C", d.size, d.dim + 1, d.rank + 1,
                               _cached(lambda: dsum(std_rep("u", k), std_rep("u", l))), blocks)
    b = d.builder
    return GroupDescriptor(f"Z.{d.name}", "z_" + d.family, d.params, "C", d.size, d.dim + 1,
                           d.rank + 1, None if b is None else _cached(lambda: add_center(b())),
                           exceptional=d.exceptional, note=d.note)


def _u_rows(n: int) -> list[GroupDescriptor]:
    return [classical_group("su", n)] + [with_center(d) for d in _su_rows(n)]


def maximal_subgroups(g: GroupDescriptor) -> list[GroupDescriptor]:
    """Rows of the maximal subgroup tables for a classical group."""
    if g.family not in ("sp", "su", "so", "u") or len(g.params) != 1:
        raise ValueError(f"unsupported family for {g.name}; expected Sp(n), SU(n), SO(n) or U(n)")
    n = g.params[0]
    return {"sp": _sp_rows, "su": _su_rows, "so": _so_rows, "u": _u_rows}[g.family](n)


# ---------------------------------------------------------------------------
# H-module descriptors


def on_h(d: GroupDescriptor) -> GroupDescriptor:
    """A subgroup of U(n) seen in Sp(n) through ``C^n (x)_C H``."""
    if d.module == "H":
        return d
    if d.module != "C":
        raise ValueError(f"{d.name} is not a complex module")
    if d.family == "uxu":
        return product([on_h(b) for b in d.blocks])
    if d.family == "z_sp_in_su":
        return z_sp(d.params[0])
    b = d.builder
    family = {"u": "u", "su": "su"}.get(d.family, "c_" + d.family)
    return GroupDescriptor(d.name, family, d.params, "H", d.size, d.dim, d.rank,
                           None if b is None else _cached(lambda: tensor_over_c(b())),
                           exceptional=d.exceptional, note=d.note)


def trivial_block(m: int = 1) -> GroupDescriptor:
    return _desc(f"1[H^{m}]" if m > 1 else "1", "trivial", (m,), "H", m, 0, 0,
                 lambda: trivial(4 * m))


def _flatten(blocks) -> list[GroupDescriptor]:
    out = []
    for b in blocks:
        out += _flatten(b.blocks) if b.family == "product" else [b]
    return out


def product(blocks: Sequence[GroupDescriptor]) -> GroupDescriptor:
    """Block-diagonal product acting on the direct sum of the blocks."""
    blocks = sorted(_flatten(blocks), key=lambda b: (-b.size, b.name))
    if any(b.module != "H" for b in blocks):
        blocks = [on_h(b) if b.module == "C" else b for b in blocks]
    if len(blocks) == 1:
        return blocks[0]
    ok = all(b.constructible for b in blocks)
    builder = _cached(lambda: _dsum_all([b.build() for b in blocks])) if ok else None
    return GroupDescriptor("x".join(b.name for b in blocks), "product", (), "H",
                           sum(b.size for b in blocks), sum(b.dim for b in blocks),
                           sum(b.rank for b in blocks), builder, tuple(blocks),
                           any(b.exceptional for b in blocks))


def diagonal(kind: str, k: int) -> GroupDescriptor:
    """U(k) or Sp(k) embedded diagonally in two equal blocks."""
    if kind == "u":
        return _desc(f"U({k})_diag", "u_diag", (k,), "H", 2 * k, k * k, k,
                     lambda: dsum(tensor_over_c(std_rep("u", k)), tensor_over_c(std_rep("u", k)), {0: 0}))
    return _desc(f"Sp({k})_diag", "sp_diag", (k,), "H", 2 * k, classical_dim("sp", k), k,
                 lambda: dsum(std_rep("sp", k), std_rep("sp", k), {0: 0}))


def z_sp(k: int) -> GroupDescriptor:
    return _desc(f"Z.Sp({k})", "zsp", (k,), "H", 2 * k, classical_dim("sp", k) + 1, k + 1,
                 lambda: tensor_over_c(std_rep("sp", k, center=True)))


def z_so(p: int) -> GroupDescriptor:
    return _desc(f"Z.SO({p})", "zso", (p,), "H", p, classical_dim("so", p) + 1, p // 2 + 1,
                 lambda: tensor_over_c(std_rep("so", p, center=True)))


def sp_in_su(k: int) -> GroupDescriptor:
    return _desc(f"Sp({k})<SU({2 * k})", "sp_in_su", (k,), "H", 2 * k, classical_dim("sp", k), k,
                 lambda: tensor_over_c(as_complex(std_rep("sp", k))))


def z_su2_su(q: int) -> GroupDescriptor:
    return _desc(f"Z.SU(2)(x)SU({q})", "z_su_su", (2, q), "H", 2 * q, q * q + 3, q + 1,
                 lambda: tensor_over_c(add_center(tprod(std_rep("su", 2), std_rep("su", q)))))


def so_sp1(p: int) -> GroupDescriptor:
    return _desc(f"SO({p})(x)Sp(1)", "sosp", (p, 1), "H", p, classical_dim("so", p) + 3, p // 2 + 1,
                 lambda: tprod(_so_r(p), std_rep("sp", 1)))


def _times_sp1(d: GroupDescriptor) -> GroupDescriptor:
    """``H1 (x) Sp(1)`` for an R-module descriptor ``H1``."""
    b = d.builder
    return GroupDescriptor(f"[{d.name}](x)Sp(1)", "r_sp1", d.params, "H", d.size, d.dim + 3,
                           d.rank + 1,
                           None if b is None else _cached(lambda: tprod(b(), std_rep("sp", 1))),
                           exceptional=d.exceptional, note=d.note)


def _z_sp_children(k: int) -> list[GroupDescriptor]:
    out = [sp_in_su(k)]
    for d in maximal_subgroups(classical_group("sp", k)):
        if d.family == "u":
            # Z . U(k) inside U(2k)
            out.append(_desc(f"Z.U({k})", "z_u_in_sp", (k,), "H", 2 * k, k * k + 1, k + 1,
                             lambda: tensor_over_c(add_center(as_complex(tensor_over_c(std_rep("u", k)))))))
        elif d.family == "product":
            a, b = (x.params[0] for x in d.blocks)
            out.append(_desc(f"Z.(Sp({a})xSp({b}))", "z_spsp", (a, b), "H", 2 * k, d.dim + 1, d.rank + 1,
                             lambda a=a, b=b: tensor_over_c(add_center(as_complex(
                                 dsum(std_rep("sp", a), std_rep("sp", b)))))))
        else:
            bd = d.builder
            out.append(GroupDescriptor(f"Z.{d.name}", "z_" + d.family, d.params, "H", 2 * k, d.dim + 1,
                                       d.rank + 1,
                                       None if bd is None else _cached(
                                           lambda bd=bd: tensor_over_c(add_center(as_complex(bd())))),
                                       exceptional=d.exceptional))
    return out


def children(d: GroupDescriptor) -> list[GroupDescriptor]:
    """Subgroups of an H-module node examined by the survey, without repeats."""
    out, seen = [], set()
    for c in _children(d):
        if c.name not in seen:
            seen.add(c.name)
            out.append(c)
    return out


def _children(d: GroupDescriptor) -> list[GroupDescriptor]:
    f = d.family
    if f == "sp":
        n = d.params[0]
        return maximal_subgroups(d) if n > 1 else [on_h(classical_group("u", 1))]
    if f == "u":
        n = d.params[0]
        out = [on_h(x) for x in maximal_subgroups(classical_group("u", n))]
        if n == 1:
            out = [trivial_block(1)]
        if n % 2 == 0 and n // 2 >= 3:
            out.append(z_su2_su(n // 2))
        return out
    if f == "zsp":
        return _z_sp_children(d.params[0])
    if f == "sosp" and d.params[1] == 1:
        p = d.params[0]
        return [z_so(p)] + [_times_sp1(x) for x in maximal_subgroups(classical_group("so", p))]
    if f == "product":
        out = []
        blocks = list(d.blocks)
        for i, b in enumerate(blocks):
            for c in children(b):
                out.append(product(blocks[:i] + [c] + blocks[i + 1:]))
        if len(blocks) == 2:
            x, y = blocks
            if x.family == "u" and y.family == "u":
                out.append(s_u(min(x.size, y.size), max(x.size, y.size), "H"))
                if x.size == y.size:
                    out.append(diagonal("u", x.size))
            if x.family == "sp" and y.family == "sp" and x.size == y.size:
                out.append(diagonal("sp", x.size))
        return out
    return []


# ---------------------------------------------------------------------------
# hrk evaluation with a cache keyed by descriptor name


_HRK_CACHE: dict[tuple[str, int, tuple[int, ...]], HrkReport] = {}


def evaluate(d: GroupDescriptor, seeds: Sequence[int] = DEFAULT_SEEDS) -> HrkReport:
    key = (d.name, d.size, tuple(seeds))
    if key not in _HRK_CACHE:
        _HRK_CACHE[key] = hrk_projective(d.build(), seeds)
    return _HRK_CACHE[key]


def classify(d: GroupDescriptor, seeds: Sequence[int] = DEFAULT_SEEDS,
             force: bool = False) -> tuple[str, HrkReport | None, str]:
    """Verdict, report (if computed) and a note for one node."""
    if d.exceptional:
        return UNSUPPORTED, None, ""
    passes = d.dim_condition()
    if not passes and not force:
        return PRUNED, None, ""
    if not d.constructible:
        note = d.note or "no constructor"
        return (SURVIVES if passes else PRUNED), None, note
    try:
        report = evaluate(d, seeds)
    except NotImplementedError as exc:
        return (SURVIVES if passes else PRUNED), None, str(exc)
    if not passes:
        return PRUNED, report, ""
    return verified(report.hrk), report, ""


def survey(n: int, seeds: Sequence[int] = DEFAULT_SEEDS, max_depth: int = 3,
           force_pruned: bool = False) -> list[CandidateChain]:
    """Breadth-first walk down from Sp(n).

    Only nodes with hrk 0 are expanded: a group containing a subgroup of
    vanishing hrk has vanishing hrk itself.  Each group is expanded once,
    at its first (shortest) chain.
    """
    if not 1 <= n <= SURVEY_CEILING:
        raise ValueError(f"survey size must be between 1 and {SURVEY_CEILING}")
    seeds = tuple(seeds)
    root = classical_group("sp", n)
    out: list[CandidateChain] = []
    expanded: set[str] = set()
    queue = deque([(root,)])
    while queue:
        chain = queue.popleft()
        node = chain[-1]
        verdict, report, note = classify(node, seeds, force_pruned)
        out.append(CandidateChain(chain, verdict, report, force_pruned and verdict == PRUNED
                                  and report is not None, note))
        if verdict != verified(0) or node.name in expanded or len(chain) > max_depth:
            continue
        expanded.add(node.name)
        for c in children(node):
            queue.append(chain + (c,))
    return out


def factor_verdicts(d: GroupDescriptor, seeds: Sequence[int] = DEFAULT_SEEDS) -> list[int]:
    """hrk of each block of a product on its own HP^{n_i - 1}."""
    return [evaluate(b, seeds).hrk for b in d.blocks]


# ---------------------------------------------------------------------------
# the classification list and the exclusion ledger


@dataclass
class TheoremEntry:
    case: str
    group: GroupDescriptor
    note: str = ""


def _with_sp1(sigma: GroupDescriptor, r: int) -> GroupDescriptor:
    return product([sigma] + [classical_group("sp", 1)] * r) if r else sigma


def _sigma_list(m: int) -> list[tuple[str, GroupDescriptor, str]]:
    out = []
    for k in range(1, m // 2 + 1):
        l = m - k
        if k % 2 or l % 2:
            out.append(("2a", s_u(k, l, "H"), ""))
    for k in range(2, m // 2 + 1):
        rest = m - 2 * k
        zs = z_sp(k)
        g = zs if rest == 0 else product([zs, on_h(classical_group("u", rest))])
        out.append(("2b", g, "encoded as Z.Sp(k)xU(m-2k); correspondence with "
                              "S(U(1)Sp(k)xU(m-2k)) flagged for review"))
    out.append(("2c", on_h(classical_group("u", m)), ""))
    out.append(("2c", classical_group("sp", m), ""))
    if m >= 3:
        out.append(("2c", so_sp1(m), ""))
    specials = {2: [("A", 1, (3,))], 7: [("C", 3, (0, 0, 1))], 10: [("A", 5, (0, 0, 1, 0, 0))],
                16: [("D", 6, (0, 0, 0, 0, 0, 1)), ("B", 5, (0, 0, 0, 0, 1))]}
    for letter, rank, w in specials.get(m, []):
        rs = weyl.root_system(letter, rank)
        out.append(("2c", _desc(f"rho[{rs.name}:{_weight_str(w)}]", "rho", (letter, rank, w), "H", m,
                                rs.dim, rank, _rho_builder(rs, w, "quaternionic")), ""))
    if m == 8:
        out.append(("2d", _desc("Spin(7)(x)Sp(1)", "spin7sp1", (), "H", 8, 24, 4,
                                lambda: tprod(spin_rep(7), std_rep("sp", 1))), ""))
    return out


def e7_entry() -> GroupDescriptor:
    rs = weyl.root_system("E", 7)
    return GroupDescriptor("rho[E7:0,0,0,0,0,0,1]", "rho", ("E", 7, (0, 0, 0, 0, 0, 0, 1)), "H", 28,
                           rs.dim, 7, None, exceptional=True)


def theorem_entries(n: int) -> list[TheoremEntry]:
    """Instances of the classification list realizable on H^n."""
    if n < 2:
        raise ValueError("the classification list starts at n = 2")
    out = [TheoremEntry("1", product([classical_group("sp", 1)] * (n - 1) + [trivial_block(1)]))]
    for r in range(0, n - 1):
        m = n - r
        for case, sigma, note in _sigma_list(m):
            out.append(TheoremEntry(case, _with_sp1(sigma, r), note))
    if n >= 28:
        out.append(TheoremEntry("2c", _with_sp1(e7_entry(), n - 28)))
    else:
        out.append(TheoremEntry("2c", e7_entry(), "Wolf space E7/(E7 x Sp(1)) lives on HP^27"))
    seen, unique = set(), []
    for e in out:
        if e.group.name not in seen:
            seen.add(e.group.name)
            unique.append(e)
    return unique


@dataclass
class Exclusion:
    group: GroupDescriptor
    cohomogeneity: int | None = None
    hrk: int | None = None  # exact expected value, else only hrk < 0


def exclusions(n: int) -> list[Exclusion]:
    out = []
    if n % 2 == 0:
        k = n // 2
        out.append(Exclusion(diagonal("u", k)))
        if k >= 2:
            out.append(Exclusion(sp_in_su(k)))
        if k >= 6:
            out.append(Exclusion(z_su2_su(k), hrk=-2))
    if n >= 4:
        out.append(Exclusion(z_so(n), cohomogeneity=5, hrk=-2))
    for r in range(2, n // 2 + 1):
        s2 = n - 2 * r
        if s2 >= 4 and s2 % 2 == 0 and r <= s2 // 2:
            out.append(Exclusion(product([z_sp(r), z_sp(s2 // 2)]), cohomogeneity=8, hrk=-2))
    for ks in itertools.combinations_with_replacement(range(1, n), 3):
        if sum(ks) == n:
            c = 8 if min(ks) >= 2 else None
            out.append(Exclusion(product([on_h(classical_group("u", k)) for k in ks]), c, -2))
    return out


def exclusion_problems(ex: Exclusion, rep: HrkReport) -> list[str]:
    """Differences between a computed report and the recorded expectation."""
    problems = []
    want = ex.hrk if ex.hrk is not None else "<0"
    if rep.hrk >= 0 or (ex.hrk is not None and rep.hrk != ex.hrk):
        problems.append(f"hrk expected {want}, computed {rep.hrk}")
    if ex.cohomogeneity is not None and rep.cohomogeneity != ex.cohomogeneity:
        problems.append(f"cohomogeneity expected {ex.cohomogeneity}, computed {rep.cohomogeneity}")
    return problems


@dataclass
class VerifyResult:
    n: int
    rows: list[dict]
    verified: int
    unsupported: int
    skipped: int
    failures: list[str]

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        line = f"{self.verified} cases verified, {self.unsupported} unsupported"
        if self.skipped:
            line += f", {self.skipped} failing the dimension condition"
        return line


def verify_theorem(n: int, seeds: Sequence[int] = DEFAULT_SEEDS) -> VerifyResult:
    seeds = tuple(seeds)
    rows, failures = [], []
    ver = uns = skipped = 0
    for e in theorem_entries(n):
        g = e.group
        row = {"chain": g.name, "kind": "theorem", "case": e.case, "expected": {"hrk": 0}}
        if e.note:
            row["note"] = e.note
        if g.exceptional or not g.constructible:
            row["verdict"], row["report"] = UNSUPPORTED, None
            uns += 1
        else:
            rep = evaluate(g, seeds)
            row["report"] = rep.as_dict()
            if not g.dim_condition():
                # literal instances too small to satisfy the necessary condition
                row["verdict"] = PRUNED
                skipped += 1
            elif rep.hrk == 0:
                row["verdict"] = verified(0)
                ver += 1
            else:
                row["verdict"] = "fail"
                failures.append(f"{g.name} (case {e.case}): expected hrk 0, computed {rep.hrk}")
        rows.append(row)
    for ex in exclusions(n):
        g = ex.group
        rep = evaluate(g, seeds)
        expected = {"hrk": ex.hrk if ex.hrk is not None else "<0"}
        if ex.cohomogeneity is not None:
            expected["cohomogeneity"] = ex.cohomogeneity
        row = {"chain": g.name, "kind": "exclusion", "expected": expected, "report": rep.as_dict()}
        problems = exclusion_problems(ex, rep)
        if problems:
            row["verdict"] = "fail"
            failures.append(f"{g.name} (exclusion): " + "; ".join(problems))
        else:
            row["verdict"] = verified(rep.hrk)
            ver += 1
        rows.append(row)
    return VerifyResult(n, rows, ver, uns, skipped, failures)


def table_rows(family: str, n: int) -> list[GroupDescriptor]:
    return maximal_subgroups(classical_group(family, n))
