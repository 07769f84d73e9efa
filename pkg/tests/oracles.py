"""Independent reference computations used only by the tests."""

from __future__ import annotations

from fractions import Fraction

import sympy


def _form(cartan, lengths):
    """Gram matrix of the fundamental weights.

    ``cartan[i][j] = <alpha_i^vee, alpha_j>``, so alpha_j has weight
    coordinates given by column j, and (omega_i, alpha_j) = delta_ij d_j.
    """
    inv = sympy.Matrix(cartan).inv()
    n = len(cartan)
    return [[Fraction(str(lengths[i] * inv[i, j])) for j in range(n)] for i in range(n)]


def _simple(cartan):
    n = len(cartan)
    return [tuple(cartan[i][j] for i in range(n)) for j in range(n)]


def _roots(cartan):
    """All roots in fundamental-weight coordinates, by Weyl reflections of
    the simple roots."""
    n = len(cartan)
    simple = _simple(cartan)
    seen = set(simple)
    todo = list(simple)
    while todo:
        mu = todo.pop()
        for i in range(n):
            img = tuple(mu[j] - mu[i] * simple[i][j] for j in range(n))
            if img not in seen:
                seen.add(img)
                todo.append(img)
    a_inv = sympy.Matrix(cartan).inv()
    positive = []
    for mu in seen:
        coeffs = a_inv * sympy.Matrix(list(mu))
        if all(c >= 0 for c in coeffs):
            positive.append(mu)
    return positive


def freudenthal_dim(cartan, lengths, weight) -> int:
    """Dimension of the irreducible module via Freudenthal's multiplicity
    recursion."""
    n = len(cartan)
    form = _form(cartan, lengths)
    pos = _roots(cartan)
    simple = _simple(cartan)

    def ip(x, y):
        return sum(Fraction(x[i]) * y[j] * form[i][j] for i in range(n) for j in range(n))

    lam = tuple(weight)
    rho = tuple([1] * n)
    lr = tuple(a + b for a, b in zip(lam, rho))
    top = ip(lr, lr)
    mult = {lam: 1}
    layer = [lam]
    while layer:
        cand = set()
        for mu in layer:
            for a in simple:
                cand.add(tuple(x - y for x, y in zip(mu, a)))
        nxt = []
        for mu in sorted(cand):
            if mu in mult:
                continue
            mr = tuple(a + b for a, b in zip(mu, rho))
            den = top - ip(mr, mr)
            if den == 0:
                continue
            total = Fraction(0)
            for al in pos:
                k = 1
                while True:
                    nu = tuple(x + k * y for x, y in zip(mu, al))
                    m = mult.get(nu)
                    if m is None:
                        break
                    total += m * ip(nu, al)
                    k += 1
            m = 2 * total / den
            if m:
                assert m.denominator == 1
                mult[mu] = int(m)
                nxt.append(mu)
        layer = nxt
    return sum(mult.values())
