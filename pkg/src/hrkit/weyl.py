"""Root data of the simple types and the Weyl dimension formula.

Simple roots are numbered as in Bourbaki.  ``cartan[i][j]`` is
``<alpha_i^vee, alpha_j>`` and ``lengths[i]`` is ``(alpha_i, alpha_i) / 2``
normalized so that the short roots have 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

TYPES = "ABCDEFG"


def _chain(n: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(n - 1)]


def _diagram(letter: str, n: int) -> tuple[list[tuple[int, int]], list[int]]:
    """Edges (0-based) and root lengths."""
    if letter == "A" and n >= 1:
        return _chain(n), [1] * n
    if letter == "B" and n >= 2:
        return _chain(n), [2] * (n - 1) + [1]
    if letter == "C" and n >= 2:
        return _chain(n), [1] * (n - 1) + [2]
    if letter == "D" and n >= 3:
        return _chain(n - 1) + [(n - 3, n - 1)], [1] * n
    if letter == "E" and n in (6, 7, 8):
        # 1-3-4-5-6(-7-8) with 2 attached to 4
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(k, k + 1) for k in range(4, n - 1)]
        return edges, [1] * n
    if letter == "F" and n == 4:
        return _chain(4), [2, 2, 1, 1]
    if letter == "G" and n == 2:
        return _chain(2), [1, 3]
    raise ValueError(f"no simple type {letter}{n}")


@dataclass(frozen=True)
class RootSystem:
    type_letter: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    lengths: tuple[int, ...]
    root_coeffs: tuple[tuple[int, ...], ...]  # positive roots in the simple-root basis

    @property
    def name(self) -> str:
        return f"{self.type_letter}{self.rank}"

    @property
    def positive_roots(self) -> list[tuple[int, ...]]:
        """Positive roots in the fundamental-weight basis."""
        n = self.rank
        return [tuple(sum(k[j] * self.cartan[i][j] for j in range(n)) for i in range(n))
                for k in self.root_coeffs]

    @property
    def rho(self) -> tuple[Fraction, ...]:
        roots = self.positive_roots
        return tuple(Fraction(sum(r[i] for r in roots), 2) for i in range(self.rank))

    @property
    def dim(self) -> int:
        return self.rank + 2 * len(self.root_coeffs)

    def pair(self, k1, k2) -> int:
        """Inner product of two roots given in the simple-root basis."""
        n = self.rank
        return sum(k1[i] * k2[j] * self.lengths[i] * self.cartan[i][j] for i in range(n) for j in range(n))


@lru_cache(maxsize=None)
def root_system(letter: str, n: int) -> RootSystem:
    letter = letter.upper()
    edges, lengths = _diagram(letter, n)
    adj = {(i, j) for i, j in edges} | {(j, i) for i, j in edges}
    cartan = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                cartan[i][j] = 2
            elif (i, j) in adj:
                # (alpha_i, alpha_j) = -max(d_i, d_j)
                cartan[i][j] = -max(lengths[i], lengths[j]) // lengths[i]
    roots = _positive_roots(cartan, n)
    return RootSystem(letter, n, tuple(map(tuple, cartan)), tuple(lengths), tuple(roots))


def _positive_roots(cartan, n) -> list[tuple[int, ...]]:
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    known = set(simple)
    layer = list(simple)
    out = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # length of the alpha_i-string below beta
                p, down = 0, list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in known:
                        p += 1
                    else:
                        break
                pairing = sum(beta[j] * cartan[i][j] for j in range(n))
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in known:
                        known.add(up)
                        nxt.append(up)
        out += sorted(nxt)
        layer = nxt
    return out


def _check_weight(rs: RootSystem, w) -> tuple[int, ...]:
    w = tuple(int(c) for c in w)
    if len(w) != rs.rank:
        raise ValueError(f"weight {w} has length {len(w)}, expected {rs.rank} for {rs.name}")
    if any(c < 0 for c in w):
        raise ValueError(f"weight {w} is not dominant")
    return w


def weyl_dim(rs: RootSystem, w) -> int:
    """Dimension of the irreducible module with highest weight ``w``."""
    w = _check_weight(rs, w)
    num, den = 1, 1
    for k in rs.root_coeffs:
        num *= sum((c + 1) * ki * d for c, ki, d in zip(w, k, rs.lengths))
        den *= sum(ki * d for ki, d in zip(k, rs.lengths))
    q = Fraction(num, den)
    if q.denominator != 1:
        raise ArithmeticError(f"non-integral Weyl dimension {q} for {rs.name} {w}")
    return int(q)


def monotone_filter(rs: RootSystem, bound: int) -> list[tuple[tuple[int, ...], int]]:
    """All dominant weights of dimension at most ``bound``, with dimensions.

    The dimension strictly increases along every coordinate, so only
    weights that pass are extended.
    """
    if bound < 1:
        return []
    zero = (0,) * rs.rank
    seen = {zero}
    stack = [zero]
    found = []
    while stack:
        w = stack.pop()
        d = weyl_dim(rs, w)
        if d > bound:
            continue
        found.append((w, d))
        for i in range(rs.rank):
            up = w[:i] + (w[i] + 1,) + w[i + 1:]
            if up not in seen:
                seen.add(up)
                stack.append(up)
    return sorted(found, key=lambda t: (t[1], t[0]))


def minus_w0(rs: RootSystem, w) -> tuple[int, ...]:
    """Highest weight of the dual module."""
    w = tuple(w)
    n, t = rs.rank, rs.type_letter
    if t == "A":
        return w[::-1]
    if t == "D" and n % 2:
        return w[:-2] + (w[-1], w[-2])
    if t == "E" and n == 6:
        return (w[5], w[1], w[4], w[3], w[2], w[0])
    return w


def frobenius_schur(rs: RootSystem, w) -> str:
    """``real``, ``complex`` or ``quaternionic`` type of an irreducible."""
    w = _check_weight(rs, w)
    if minus_w0(rs, w) != w:
        return "complex"
    # <lambda, 2 rho^vee> summed over positive coroots
    total = Fraction(0)
    for k in rs.root_coeffs:
        d_alpha = Fraction(rs.pair(k, k), 2)
        total += Fraction(sum(c * ki * d for c, ki, d in zip(w, k, rs.lengths))) / d_alpha
    if total.denominator != 1:
        raise ArithmeticError("non-integral pairing with 2 rho^vee")
    return "quaternionic" if int(total) % 2 else "real"


def dim_condition(group_dim: int, group_rank: int, space_dim: int) -> bool:
    """Necessary condition ``dim G + rk G >= dim M`` for vanishing hrk."""
    return group_dim + group_rank >= space_dim


def dim_condition_hp(group_dim: int, group_rank: int, n: int) -> bool:
    """The condition on ``HP^{n-1}``."""
    return dim_condition(group_dim, group_rank, 4 * (n - 1))


def quaternionic_irreducible_condition(group_dim: int, group_rank: int, degree: int) -> bool:
    """Irreducible of quaternionic type and complex degree ``degree``."""
    return group_dim + group_rank >= 2 * degree - 4


def complex_type_condition(group_dim: int, group_rank: int, degree: int) -> bool:
    """Irreducible of complex type and complex degree ``degree``."""
    return group_dim + group_rank >= 4 * degree - 6
