"""Real Clifford generators with entries in {0, 1, -1}.

All gammas are skew-symmetric, square to ``-1`` and pairwise anticommute.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

# imaginary octonion units multiply along the lines of the Fano plane
FANO = ((1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 7), (5, 6, 1), (6, 7, 2), (7, 1, 3))

_SIGMA1 = np.array([[0, 1], [1, 0]], dtype=object)
_EPS = np.array([[0, -1], [1, 0]], dtype=object)


def octonion_product(a: int, b: int) -> tuple[int, int]:
    """``e_a e_b = sign * e_c`` for basis units (0 is the real unit)."""
    if a == 0:
        return 1, b
    if b == 0:
        return 1, a
    if a == b:
        return -1, 0
    for line in FANO:
        if a in line and b in line:
            i, j = line.index(a), line.index(b)
            c = line[3 - i - j]
            return (1 if (j - i) % 3 == 1 else -1), c
    raise AssertionError("unreachable")


@lru_cache(maxsize=None)
def octonion_gammas() -> tuple[np.ndarray, ...]:
    """Left multiplication by ``e_1..e_7`` on the octonions ``R^8``."""
    out = []
    for a in range(1, 8):
        m = np.zeros((8, 8), dtype=object)
        for b in range(8):
            s, c = octonion_product(a, b)
            m[c, b] = s
        out.append(m)
    return tuple(out)


@lru_cache(maxsize=None)
def cl8_gammas() -> tuple[np.ndarray, ...]:
    """Eight generators on ``R^16``."""
    eye8 = np.eye(8, dtype=int).astype(object)
    gs = [np.kron(g, _SIGMA1) for g in octonion_gammas()]
    gs.append(np.kron(eye8, _EPS))
    return tuple(gs)


def volume(gammas) -> np.ndarray:
    out = np.eye(gammas[0].shape[0], dtype=int).astype(object)
    for g in gammas:
        out = out.dot(g)
    return out


@lru_cache(maxsize=None)
def cl11_gammas() -> tuple[np.ndarray, ...]:
    """Eleven generators on ``R^64 = R^16 (x) H`` commuting with right
    multiplication by quaternions on the ``H`` factor."""
    from .liealg import LEFT_I, LEFT_J, LEFT_K

    eta = cl8_gammas()
    omega = volume(eta)
    eye4 = np.eye(4, dtype=int).astype(object)
    gs = [np.kron(omega, np.asarray(q.num, dtype=object)) for q in (LEFT_I, LEFT_J, LEFT_K)]
    gs += [np.kron(e, eye4) for e in eta]
    return tuple(gs)


def check_clifford(gammas) -> None:
    n = gammas[0].shape[0]
    eye = np.eye(n, dtype=int).astype(object)
    for i, a in enumerate(gammas):
        if not (a.T == -a).all():
            raise AssertionError(f"gamma {i} not skew")
        if not (a.dot(a) == -eye).all():
            raise AssertionError(f"gamma {i} does not square to -1")
        for j in range(i + 1, len(gammas)):
            b = gammas[j]
            if (a.dot(b) + b.dot(a)).any():
                raise AssertionError(f"gammas {i}, {j} do not anticommute")
