import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from csmkit.strata import (
    AmbientSpace,
    StratumSet,
    canonical_bits,
    moebius_transform,
    orbit_dimension,
    strata_of_dimension,
    superset_moebius_transform,
    superset_zeta_transform,
    zeta_transform,
)

from oracles import brute_moebius, brute_zeta, random_lattice_vector, subsets


def S(n, *members):
    return StratumSet.of(n, members)


@pytest.mark.parametrize(
    "stratum, expected",
    [(S(5, 3), 0), (S(2, 0, 1, 2), 2), (S(4, 0, 2), 1)],
)
def test_orbit_dimension(stratum, expected):
    assert orbit_dimension(stratum) == expected


def test_strata_of_dimension_small():
    got = strata_of_dimension(AmbientSpace(2), 1)
    assert [s.members for s in got] == [(0, 1), (0, 2), (1, 2)]
    assert [s.members for s in strata_of_dimension(AmbientSpace(2), 2)] == [(0, 1, 2)]


def test_strata_of_dimension_count_matches_enumeration():
    # all 3-subsets of a 5-set
    assert len(strata_of_dimension(AmbientSpace(4), 2)) == sum(1 for s in subsets(4) if len(s) == 3) == 10


@pytest.mark.parametrize("k", [-1, 3])
def test_strata_of_dimension_range(k):
    with pytest.raises(ValueError):
        strata_of_dimension(AmbientSpace(2), k)


def test_strata_counts():
    for n in range(13):
        total = 0
        for k in range(n + 1):
            c = len(strata_of_dimension(AmbientSpace(n), k))
            assert c == comb(n + 1, k + 1)
            total += c
        assert total == 2 ** (n + 1) - 1


def test_canonical_order_is_total_and_deterministic():
    order = canonical_bits(4)
    assert order == canonical_bits(4)
    assert len(set(order)) == len(order) == 31
    keys = [(bin(b).count("1"), b) for b in order]
    assert keys == sorted(keys)


def test_invalid_strata():
    with pytest.raises(ValueError):
        StratumSet(AmbientSpace(2), 0)
    with pytest.raises(ValueError):
        S(2, 3)
    with pytest.raises(ValueError):
        AmbientSpace(-1)


def test_ambient_cap(monkeypatch):
    with pytest.raises(ValueError):
        AmbientSpace(21)
    monkeypatch.setenv("CSMKIT_MAX_AMBIENT", "25")
    assert AmbientSpace(21).n == 21


def test_zeta_examples():
    F = Fraction
    assert zeta_transform([0, 1, 1, 1]) == (0, 1, 1, 3)
    assert zeta_transform([0, 0, 0, 1]) == (0, 0, 0, 1)
    assert zeta_transform([0] * 8) == (F(0),) * 8


def test_moebius_examples():
    assert moebius_transform([0, 1, 1, 3]) == (0, 1, 1, 1)
    e = [0] * 8
    e[0b111] = 1
    # brute Moebius over all 7 subsets gives back the indicator of {0,1,2}
    assert list(moebius_transform(e)) == brute_moebius(e, 2) == e


def test_transforms_match_brute_force():
    rng = random.Random(7)
    for n in range(5):
        v = random_lattice_vector(rng, n)
        assert list(zeta_transform(v)) == brute_zeta(v, n)
        assert list(moebius_transform(v)) == brute_moebius(v, n)


def test_superset_transforms():
    # 1_{P_{01}} in P^2 has orbit vector = down-set indicator of {0,1}
    a = [0] * 8
    a[0b011] = 1
    assert superset_zeta_transform(a) == (0, 1, 1, 1, 0, 0, 0, 0)
    rng = random.Random(3)
    v = random_lattice_vector(rng, 3)
    assert list(superset_moebius_transform(superset_zeta_transform(v))) == v


def test_bad_vector_length():
    with pytest.raises(ValueError):
        zeta_transform([0, 1, 2])


lattice_vectors = st.integers(0, 5).flatmap(
    lambda n: st.lists(
        st.fractions(max_denominator=50).filter(lambda x: abs(x) < 1000),
        min_size=2 ** (n + 1),
        max_size=2 ** (n + 1),
    ).map(lambda v: [Fraction(0)] + v[1:])
)


@given(lattice_vectors)
@settings(max_examples=100, deadline=None)
def test_round_trips(v):
    assert list(moebius_transform(zeta_transform(v))) == v
    assert list(zeta_transform(moebius_transform(v))) == v
