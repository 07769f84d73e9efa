from math import comb

import pytest

from hrkit.reprkit import (AbstractLieAlgebra, Factor, adj, add_center, as_complex, complexify, dsum, dual,
                           four_squares, is_quaternionic_embedding, lambda_k, quaternionify,
                           sp3_fourteen, spin_rep, std_rep, structure_type, sym_k, sym2,
                           tensor_over_c, tprod, trivial, two_squares)


@pytest.mark.parametrize("kind,n,degree,field", [("so", 3, 3, "real"), ("su", 3, 6, "complex"),
                                                 ("u", 2, 4, "complex"), ("sp", 2, 8, "quaternionic")])
def test_std_reps(kind, n, degree, field):
    r = std_rep(kind, n)
    r.validate()
    assert (r.degree, r.field) == (degree, field)


def test_center_marker():
    r = std_rep("su", 3, center=True)
    assert r.algebra.dim == 9
    assert r.mats[-1] == r.markers()[0]
    with pytest.raises(ValueError):
        std_rep("u", 2, center=True)


def test_dsum_keeps_factors_distinct_unless_shared():
    a = std_rep("so", 3)
    b = std_rep("so", 3)
    assert dsum(a, b).algebra.dim == 6
    shared = dsum(a, std_rep("so", 3, uid=a.algebra.factors[0].uid))
    assert shared.algebra.dim == 3
    assert dsum(a, b, {0: 0}).algebra.dim == 3


def test_field_rules():
    assert dsum(std_rep("su", 2), std_rep("sp", 1)).field == "complex"
    assert dsum(std_rep("so", 2), std_rep("sp", 1)).field == "real"
    assert tprod(std_rep("so", 3), std_rep("sp", 1)).field == "quaternionic"
    # H (x) H is tensored over C here, giving a complex module
    assert tprod(std_rep("sp", 1), std_rep("sp", 1)).field == "complex"


@pytest.mark.parametrize("n,k", [(4, 2), (5, 2), (6, 3)])
def test_wedge_degree(n, k):
    r = lambda_k(std_rep("su", n), k)
    r.validate()
    assert r.degree == 2 * comb(n, k)


@pytest.mark.parametrize("n,k", [(2, 2), (2, 3), (3, 2)])
def test_sym_degree(n, k):
    r = sym_k(std_rep("su", n), k)
    r.validate()
    assert r.degree == 2 * comb(n + k - 1, k)


def test_sym2_is_sym_k():
    assert sym2(std_rep("su", 2)).degree == 6


def test_wedge_needs_complex_structure():
    with pytest.raises(ValueError):
        lambda_k(std_rep("so", 4), 2)
    with pytest.raises(ValueError):
        lambda_k(std_rep("su", 3), 4)


def test_dual_is_an_involution_on_markers():
    r = std_rep("su", 3)
    d = dual(r)
    d.validate()
    assert dual(d).mats == r.mats


def test_adjoint():
    a = adj("so", 3)
    a.validate()
    assert a.degree == 3


def test_trivial_fields():
    assert trivial(4).field == "quaternionic"
    assert trivial(3).field == "real"
    with pytest.raises(ValueError):
        trivial(-1)


@pytest.mark.parametrize("n", [1, 2, 5, 13, 21, 97, 1000])
def test_sums_of_squares(n):
    a, b, c, d = four_squares(n)
    assert a * a + b * b + c * c + d * d == n
    t = two_squares(n)
    if t is not None:
        assert t[0] ** 2 + t[1] ** 2 == n


def test_spin_reps():
    s7 = spin_rep(7)
    s7.validate()
    assert (s7.degree, s7.algebra.dim, s7.field) == (8, 21, "real")
    s11 = spin_rep(11)
    assert (s11.degree, s11.algebra.dim, s11.field) == (64, 55, "quaternionic")
    assert is_quaternionic_embedding(s11, 16)
    with pytest.raises(ValueError):
        spin_rep(9)


def test_sp3_module():
    r = sp3_fourteen()
    r.validate()
    assert r.degree == 28


@pytest.mark.parametrize("build,tag,cdim", [
    (lambda: std_rep("sp", 1), "quaternionic", 4),
    (lambda: as_complex(std_rep("sp", 2)), "quaternionic", 4),
    (lambda: std_rep("so", 5), "real", 1),
    (lambda: std_rep("u", 3), "complex", 2),
    (lambda: spin_rep(7), "real", 1),
    (lambda: sym_k(std_rep("su", 2), 3), "quaternionic", 4),
    # realified sym^2 C^2 is R^3 + R^3
    (lambda: sym_k(std_rep("su", 2), 2), "reducible-or-undetermined", 4),
    (lambda: sp3_fourteen(), "quaternionic", 4),
])
def test_structure_type(build, tag, cdim):
    st = structure_type(build())
    assert (st.tag, st.commutant_dim) == (tag, cdim)


@pytest.mark.parametrize("build,degree", [
    (lambda: lambda_k(std_rep("su", 6), 3), 40),
    (lambda: sym_k(std_rep("su", 2), 3), 8),
    (lambda: sp3_fourteen(), 28),
    (lambda: std_rep("su", 3), 12),
    (lambda: std_rep("so", 3), 12),
    (lambda: std_rep("sp", 2, center=True), 16),
])
def test_quaternionify(build, degree):
    q = quaternionify(build())
    q.validate()
    assert q.field == "quaternionic"
    assert q.degree == degree
    assert is_quaternionic_embedding(q, degree // 4)


def test_tensor_over_c_doubles():
    q = tensor_over_c(std_rep("su", 2))
    q.validate()
    assert q.degree == 8


def test_add_center():
    r = add_center(complexify(std_rep("so", 3)))
    r.validate()
    assert (r.algebra.dim, r.degree) == (4, 6)
    with pytest.raises(ValueError):
        add_center(std_rep("so", 3))


def test_factor_clash():
    a = AbstractLieAlgebra((Factor("so", 3, 999_001),))
    b = AbstractLieAlgebra((Factor("su", 2, 999_001),))
    with pytest.raises(ValueError):
        a.merge(b)
