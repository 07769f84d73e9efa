import itertools

import pytest

from hrkit import catalog as C
from hrkit.catalog import PRUNED, UNSUPPORTED, verified
from hrkit.liealg import algebra_rank

SEEDS = (1, 2, 3)


def names(ds):
    return [d.name for d in ds]


def test_maximal_subgroups_examples():
    sp3 = names(C.maximal_subgroups(C.classical_group("sp", 3)))
    assert {"U(3)", "Sp(2)xSp(1)", "SO(3)(x)Sp(1)", "rho[A1:5]"} <= set(sp3)
    su4 = names(C.maximal_subgroups(C.classical_group("su", 4)))
    assert {"SO(4)", "Sp(2)", "S(U(1)xU(3))", "S(U(2)xU(2))"} <= set(su4)
    so4 = names(C.maximal_subgroups(C.classical_group("so", 4)))
    assert "U(2)" in so4 and "SO(2)xSO(2)" in so4
    with pytest.raises(ValueError):
        C.maximal_subgroups(C.z_sp(2))


@pytest.mark.parametrize("family,n", [("sp", 2), ("sp", 3), ("sp", 4), ("su", 4), ("su", 6),
                                      ("so", 5), ("so", 6), ("u", 4)])
def test_table_fidelity(family, n):
    for d in C.maximal_subgroups(C.classical_group(family, n)):
        if not d.constructible:
            continue
        r = d.build()
        real = r.algebra.realization()
        assert real.dim == d.dim, d.name
        assert algebra_rank(real, SEEDS)[0] == d.rank, d.name


def test_product_fidelity():
    for d in [C.z_sp(2), C.z_so(4), C.sp_in_su(3), C.diagonal("u", 3), C.so_sp1(5),
              C.product([C.z_sp(2), C.on_h(C.classical_group("u", 2))])]:
        real = d.build().algebra.realization()
        assert (real.dim, algebra_rank(real, SEEDS)[0]) == (d.dim, d.rank), d.name


def _by_key(chains):
    return {c.key: c for c in chains}


def test_survey_n2():
    s = _by_key(C.survey(2, SEEDS))
    assert s["Sp(2) > U(2)"].verdict == verified(0)
    assert s["Sp(2) > Sp(1)xSp(1)"].verdict == verified(0)


def test_survey_n4_center_matters():
    s = _by_key(C.survey(4, SEEDS))
    assert s["Sp(4) > U(4) > Z.Sp(2)"].verdict == verified(0)
    centerless = s["Sp(4) > U(4) > Z.Sp(2) > Sp(2)<SU(4)"]
    assert centerless.hrk is not None and centerless.hrk < 0
    # Z.SO(4) fails the dimension condition at n = 4 and is pruned
    assert s["Sp(4) > U(4) > Z.SO(4)"].verdict == PRUNED
    assert not C.z_so(4).dim_condition()


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_survey_invariants(n):
    chains = C.survey(n, SEEDS)
    for c in chains:
        if c.report is not None:
            assert c.report.hrk <= 0, c.key
        if c.verdict == PRUNED:
            assert not c.chain[-1].dim_condition()
    keys = [c.key for c in chains]
    assert len(keys) == len(set(keys))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_product_consistency(n):
    for c in C.survey(n, SEEDS):
        node = c.chain[-1]
        if node.blocks and c.verdict == verified(0):
            assert C.factor_verdicts(node, SEEDS) == [0] * len(node.blocks), c.key


@pytest.mark.parametrize("n", [2, 3, 4])
def test_pruning_is_sound(n):
    forced = [c for c in C.survey(n, SEEDS, force_pruned=True) if c.verdict == PRUNED]
    assert forced
    for c in forced:
        assert c.report is not None and c.forced
        assert c.report.hrk < 0, c.key


def test_forced_z_so4():
    s = _by_key(C.survey(4, SEEDS, force_pruned=True))
    assert s["Sp(4) > U(4) > Z.SO(4)"].report.hrk == -2


def test_survey_bounds():
    with pytest.raises(ValueError):
        C.survey(C.SURVEY_CEILING + 1)


def test_theorem_entries():
    e3 = {(e.case, e.group.name) for e in C.theorem_entries(3)}
    assert ("1", "1xSp(1)xSp(1)") in e3
    e6 = {(e.case, e.group.name) for e in C.theorem_entries(6)}
    assert ("2a", "S(U(3)xU(3))") in e6
    e8 = {(e.case, e.group.name) for e in C.theorem_entries(8)}
    assert ("2d", "Spin(7)(x)Sp(1)") in e8
    e7 = [e for e in C.theorem_entries(4) if e.group.exceptional]
    assert [e.group.name for e in e7] == ["rho[E7:0,0,0,0,0,0,1]"]


def test_case_one_entries_vanish():
    for n in (3, 4):
        entry = next(e for e in C.theorem_entries(n) if e.case == "1")
        assert C.evaluate(entry.group, SEEDS).hrk == 0


def test_verify_examples_n6():
    rep = C.evaluate(C.s_u(3, 3, "H"), SEEDS)
    assert (rep.hrk, rep.cohomogeneity) == (0, 4)
    g = C.product([C.z_sp(2), C.on_h(C.classical_group("u", 2))])
    assert g.name == "Z.Sp(2)xU(2)"
    rep = C.evaluate(g, SEEDS)
    assert (rep.hrk, rep.cohomogeneity) == (0, 5)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_verify_theorem_small(n):
    res = C.verify_theorem(n, SEEDS)
    assert res.passed, res.failures
    assert res.unsupported >= 1
    assert res.summary().startswith(f"{res.verified} cases verified, {res.unsupported} unsupported")
    for row in res.rows:
        if row["chain"].startswith("rho[E7"):
            assert row["verdict"] == UNSUPPORTED


def test_mixed_sp_product_exclusion_mismatch():
    # computed value differs from the recorded exclusion: the failure must be reported
    ex = next(x for x in C.exclusions(8) if x.group.name == "Z.Sp(2)xZ.Sp(2)")
    rep = C.evaluate(ex.group, SEEDS)
    assert (rep.hrk, rep.cohomogeneity) == (0, 6)
    problems = C.exclusion_problems(ex, rep)
    assert len(problems) == 2
    assert "hrk expected -2, computed 0" in problems[0]


def _sub_products(d):
    blocks = d.blocks
    for size in range(1, len(blocks)):
        for sub in itertools.combinations(blocks, size):
            yield C.product(list(sub)) if len(sub) > 1 else sub[0]


def test_restriction_to_invariant_subspaces():
    # a block sub-product acts on an invariant HP^{k-1}; negative hrk there forces negative hrk
    # on the whole space
    nodes = {}
    for n in (3, 4, 5):
        for c in C.survey(n, SEEDS):
            if c.chain[-1].blocks and c.report is not None:
                nodes[c.chain[-1].name] = c.chain[-1]
    for n in (4, 5, 6):
        for ex in C.exclusions(n):
            if ex.group.blocks:
                nodes[ex.group.name] = ex.group
    checked = 0
    for d in nodes.values():
        whole = C.evaluate(d, SEEDS).hrk
        for sub in _sub_products(d):
            if C.evaluate(sub, SEEDS).hrk < 0:
                assert whole < 0, (d.name, sub.name)
            checked += 1
    assert checked > 50
