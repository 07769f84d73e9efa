import random

import pytest
from hypothesis import given, settings, strategies as st

from hrkit import weyl
from oracles import freudenthal_dim

TYPES = [("A", 1), ("A", 2), ("A", 4), ("B", 2), ("B", 3), ("C", 3), ("D", 4), ("D", 5),
         ("G", 2), ("F", 4), ("E", 6)]


@pytest.mark.parametrize("letter,n,count", [("A", 5, 15), ("B", 4, 16), ("C", 3, 9), ("D", 5, 20),
                                            ("E", 6, 36), ("E", 7, 63), ("E", 8, 120),
                                            ("F", 4, 24), ("G", 2, 6)])
def test_positive_root_counts(letter, n, count):
    assert len(weyl.root_system(letter, n).root_coeffs) == count


def test_group_dimensions():
    assert weyl.root_system("E", 7).dim == 133
    assert weyl.root_system("G", 2).dim == 14
    assert weyl.root_system("C", 3).dim == 21


@pytest.mark.parametrize("letter,n,w,dim", [
    ("A", 5, (0, 0, 1, 0, 0), 20),
    ("C", 3, (0, 0, 1), 14),
    ("B", 5, (0, 0, 0, 0, 1), 32),
    ("E", 7, (0, 0, 0, 0, 0, 0, 1), 56),
    ("D", 6, (0, 0, 0, 0, 0, 1), 32),
    ("G", 2, (1, 0), 7),
    ("F", 4, (0, 0, 0, 1), 26),
])
def test_weyl_dim_against_freudenthal(letter, n, w, dim):
    rs = weyl.root_system(letter, n)
    assert weyl.weyl_dim(rs, w) == dim
    assert freudenthal_dim(rs.cartan, rs.lengths, w) == dim


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(TYPES[:9]), st.data())
def test_random_small_weights_match_oracle(t, data):
    rs = weyl.root_system(*t)
    w = tuple(data.draw(st.lists(st.integers(0, 2), min_size=rs.rank, max_size=rs.rank)))
    if sum(w) > 3:
        w = tuple(min(c, 1) for c in w)
    assert weyl.weyl_dim(rs, w) == freudenthal_dim(rs.cartan, rs.lengths, w)


def test_monotonicity_on_random_pairs():
    rng = random.Random(7)
    for _ in range(100):
        rs = weyl.root_system(*rng.choice(TYPES))
        lo = tuple(rng.randint(0, 3) for _ in range(rs.rank))
        i = rng.randrange(rs.rank)
        hi = tuple(c + (rng.randint(1, 2) if j == i else rng.randint(0, 1)) for j, c in enumerate(lo))
        assert weyl.weyl_dim(rs, lo) < weyl.weyl_dim(rs, hi)


def test_monotone_filter_is_complete():
    rs = weyl.root_system("B", 3)
    found = dict(weyl.monotone_filter(rs, 40))
    brute = {}
    for a in range(5):
        for b in range(5):
            for c in range(5):
                d = weyl.weyl_dim(rs, (a, b, c))
                if d <= 40:
                    brute[(a, b, c)] = d
    assert found == brute


@pytest.mark.parametrize("letter,n,w,kind", [
    ("A", 1, (1,), "quaternionic"),
    ("A", 1, (2,), "real"),
    ("A", 1, (3,), "quaternionic"),
    ("A", 2, (1, 0), "complex"),
    ("A", 5, (0, 0, 1, 0, 0), "quaternionic"),
    ("A", 3, (0, 1, 0), "real"),
    ("C", 3, (0, 0, 1), "quaternionic"),
    ("C", 3, (1, 0, 0), "quaternionic"),
    ("B", 5, (0, 0, 0, 0, 1), "quaternionic"),
    ("B", 3, (0, 0, 1), "real"),
    ("D", 6, (0, 0, 0, 0, 0, 1), "quaternionic"),
    ("D", 5, (0, 0, 0, 0, 1), "complex"),
    ("E", 7, (0, 0, 0, 0, 0, 0, 1), "quaternionic"),
    ("E", 6, (1, 0, 0, 0, 0, 0), "complex"),
    ("G", 2, (1, 0), "real"),
])
def test_frobenius_schur(letter, n, w, kind):
    assert weyl.frobenius_schur(weyl.root_system(letter, n), w) == kind


def test_bad_inputs():
    with pytest.raises(ValueError):
        weyl.root_system("E", 5)
    rs = weyl.root_system("A", 2)
    with pytest.raises(ValueError):
        weyl.weyl_dim(rs, (1,))
    with pytest.raises(ValueError):
        weyl.weyl_dim(rs, (1, -1))


def test_dimension_conditions():
    # U(3) x U(3) on HP^5
    assert weyl.dim_condition_hp(18, 6, 6)
    # Z.SO(4) on HP^3
    assert not weyl.dim_condition_hp(7, 3, 4)
    assert weyl.quaternionic_irreducible_condition(35, 5, 20)
    assert not weyl.complex_type_condition(8, 2, 6)
