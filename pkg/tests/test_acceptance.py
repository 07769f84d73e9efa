"""Acceptance criteria 1-9.  Each test prints one PASS/FAIL line."""

import json
import random
import time
from contextlib import contextmanager

import pytest

from hrkit import catalog as C
from hrkit import cli, weyl
from hrkit.engine import (bredon_check, check_slice_identity, hrk_projective,
                          subadditivity_audit)
from hrkit.parser import build
from hrkit.reprkit import dsum, std_rep

from corpus import SP2_SUBGROUPS, random_point, same_algebra_pairs, slice_corpus
from oracles import freudenthal_dim

SEEDS = (0, 1, 2)


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(label, limit=None):
        detail = []
        t0 = time.perf_counter()
        try:
            yield detail
            elapsed = time.perf_counter() - t0
            if limit is not None:
                assert elapsed < limit, f"took {elapsed:.1f} s, limit {limit} s"
        except AssertionError as exc:
            with capsys.disabled():
                print(f"\nFAIL criterion {label}: {exc}")
            raise
        with capsys.disabled():
            extra = f" ({'; '.join(detail)})" if detail else ""
            print(f"\nPASS criterion {label}{extra} [{time.perf_counter() - t0:.1f} s]")
    return run


@pytest.fixture(autouse=True)
def fresh_cache():
    # timings below must include the computation itself
    C._HRK_CACHE.clear()
    yield


def test_criterion_1_u3_pair(criterion, capsys):
    with criterion("1: U(3)xU(3) on HP^5", limit=30) as detail:
        code = cli.main(["compute", "--rep", "std(u(3))+std(u(3))", "--space", "hp",
                         "--format", "json", "--seed", "0"])
        out = capsys.readouterr().out
        d = json.loads(out)
        assert code == 0
        got = (d["cohomogeneity"], d["hrk"], d["dim_isotropy"], d["rank_isotropy"])
        detail.append("c, hrk, dim h, rk h = %d, %d, %d, %d" % got)
        assert got == (4, 0, 2, 2)


def test_criterion_2_z_so(criterion):
    with criterion("2: Z.SO(n) in U(n), n = 5, 6") as detail:
        for n in (5, 6):
            t0 = time.perf_counter()
            rep = hrk_projective(C.z_so(n).build(), SEEDS)
            dt = time.perf_counter() - t0
            detail.append(f"n={n}: c {rep.cohomogeneity}, hrk {rep.hrk}, {dt:.1f} s")
            assert (rep.cohomogeneity, rep.hrk) == (5, -2), detail[-1]
            assert dt < 60, detail[-1]


def test_criterion_3_center(criterion):
    with criterion("3: Z.Sp(k) vs centerless Sp(k), k = 2, 3") as detail:
        for k in (2, 3):
            for d, want_zero in ((C.z_sp(k), True), (C.sp_in_su(k), False)):
                t0 = time.perf_counter()
                rep = hrk_projective(d.build(), SEEDS)
                dt = time.perf_counter() - t0
                detail.append(f"{d.name}: hrk {rep.hrk}")
                assert (rep.hrk == 0) if want_zero else (rep.hrk < 0), detail[-1]
                assert dt < 60, f"{d.name} took {dt:.1f} s"


def test_criterion_4_spin7(criterion):
    entry = next(e for e in C.theorem_entries(8) if e.case == "2d")
    with criterion("4: Spin(7)(x)Sp(1) on HP^7", limit=120) as detail:
        rep = hrk_projective(entry.group.build(), SEEDS)
        detail.append(f"hrk {rep.hrk}, dim h {rep.dim_isotropy}")
        assert (rep.hrk, rep.dim_isotropy) == (0, 0)


def test_criterion_5_case_one(criterion):
    with criterion("5: Sp(1)^(n-1) on rho_s + ... + rho_s + 1, n = 3, 4") as detail:
        for n in (3, 4):
            t0 = time.perf_counter()
            entry = next(e for e in C.theorem_entries(n) if e.case == "1")
            rep = hrk_projective(entry.group.build(), SEEDS)
            dt = time.perf_counter() - t0
            detail.append(f"n={n}: hrk {rep.hrk}")
            assert rep.hrk == 0 and dt < 30, detail[-1]


def test_criterion_6_wedge3(criterion):
    with criterion("6: SU(6) on wedge^3 C^6", limit=300) as detail:
        r = build("wedge(3, std(su(6)))", quaternionic=True)
        assert r.degree == 40
        rep = hrk_projective(r, SEEDS)
        detail.append(f"hrk {rep.hrk}, c {rep.cohomogeneity}")
        assert rep.hrk == 0


def test_criterion_7_properties(criterion):
    with criterion("7: property suite") as detail:
        # (a) nonpositivity over the survey, and (f) products
        computed = violations = products = bad_products = 0
        for n in range(2, C.SURVEY_CEILING + 1):
            for ch in C.survey(n, SEEDS):
                if ch.report is None:
                    continue
                computed += 1
                violations += ch.report.hrk > 0
                node = ch.chain[-1]
                if node.blocks and ch.report.hrk == 0:
                    products += 1
                    bad_products += any(C.factor_verdicts(node, SEEDS))
        detail.append(f"a: {violations} of {computed}")
        assert violations == 0, detail[-1]

        # (b) subadditivity
        pairs = same_algebra_pairs(random.Random(17))
        fails = sum(not subadditivity_audit(r1, r2, SEEDS)[3] for r1, r2 in pairs)
        detail.append(f"b: {fails} of {len(pairs)}")
        assert fails == 0, detail[-1]

        # (c) slice identity
        rng = random.Random(2024)
        points = [(r, random_point(rng, r.degree)) for r in slice_corpus() for _ in range(4)]
        fails = sum(not check_slice_identity(r, v, SEEDS) for r, v in points)
        detail.append(f"c: {fails} of {len(points)}")
        assert fails == 0 and len(points) == 20, detail[-1]

        # (d) Bredon, over the same corpus
        reps = slice_corpus() + [r for p in pairs for r in p]
        fails = sum(not bredon_check(r, SEEDS).holds for r in reps)
        detail.append(f"d: {fails} of {len(reps)}")
        assert fails == 0, detail[-1]

        # (e) adjoining Sp(n) to G in Sp(2)
        fails = checked = 0
        for make in SP2_SUBGROUPS.values():
            g = make()
            assert hrk_projective(g, SEEDS).hrk == 0
            for n in (1, 2):
                checked += 1
                fails += hrk_projective(dsum(g, std_rep("sp", n)), SEEDS).hrk != 0
        detail.append(f"e: {fails} of {checked}")
        assert fails == 0, detail[-1]

        detail.append(f"f: {bad_products} of {products}")
        assert bad_products == 0 and products > 0, detail[-1]


CHECKS_8 = [("A", 5, (0, 0, 1, 0, 0), 20), ("C", 3, (0, 0, 1), 14),
            ("B", 5, (0, 0, 0, 0, 1), 32), ("E", 7, (0, 0, 0, 0, 0, 0, 1), 56)]


def test_criterion_8_weyl(criterion):
    with criterion("8: Weyl dimensions and monotonicity", limit=10) as detail:
        for letter, n, w, dim in CHECKS_8:
            rs = weyl.root_system(letter, n)
            got = (weyl.weyl_dim(rs, w), freudenthal_dim(rs.cartan, rs.lengths, w))
            assert got == (dim, dim), f"{letter}{n} {w}: {got}"
        detail.append("20, 14, 32, 56 match the oracle")
        rng = random.Random(8)
        types = [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("G", 2), ("F", 4), ("E", 6)]
        for _ in range(100):
            rs = weyl.root_system(*rng.choice(types))
            lo = tuple(rng.randint(0, 3) for _ in range(rs.rank))
            i = rng.randrange(rs.rank)
            hi = tuple(c + (1 if j == i else rng.randint(0, 1)) for j, c in enumerate(lo))
            assert weyl.weyl_dim(rs, lo) < weyl.weyl_dim(rs, hi), (rs.name, lo, hi)
        detail.append("100 monotone pairs")


def test_criterion_9_determinism(criterion, capsys):
    with criterion("9: verify-theorem --n 4 is byte-identical") as detail:
        outs = []
        for _ in range(2):
            C._HRK_CACHE.clear()
            code = cli.main(["verify-theorem", "--n", "4", "--seed", "5"])
            outs.append(capsys.readouterr().out)
            assert code == 0
        detail.append(f"{len(outs[0])} bytes")
        assert outs[0] == outs[1]
