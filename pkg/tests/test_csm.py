import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from csmkit.constructible import (
    ConstructibleFunction,
    euler_integral,
    indicator_L,
    indicator_orbit,
    indicator_projective,
    indicator_subspace,
)
from csmkit.csm import (
    csm,
    csm_closed_rule,
    csm_component,
    decompose_into_csm,
    deck_group_order,
    mpc_on_projective,
    total_chern_coefficients,
    verify_quotient_isomorphism,
    verify_theorem1,
)
from csmkit.homology import HomologyClass, component, fundamental_class, top_component
from csmkit.strata import AmbientSpace, StratumSet

from oracles import csm_by_chern_classes, random_fraction, subsets, to_bits


def H(*c):
    return HomologyClass.of(len(c) - 1, c)


def test_csm_examples():
    assert csm(indicator_projective(2)) == H(3, 3, 1)
    assert csm(indicator_orbit(StratumSet.of(2, [0, 2]))) == H(0, 1, 0)
    assert csm(indicator_orbit(StratumSet.of(0, [0]))) == H(1)
    assert csm(indicator_orbit(StratumSet.of(3, [1]))) == H(1, 0, 0, 0)


def test_orbit_rule_derived_from_chern_classes():
    # Moebius-expand 1_{O_S} into closed subspaces and apply c(TP^k) cap [P^k]
    for n in range(5):
        for S in subsets(n):
            expected = csm_by_chern_classes({S: Fraction(1)}, n)
            assert list(csm(indicator_orbit(StratumSet(AmbientSpace(n), to_bits(S)))).coeffs) == expected


def test_two_paths_agree_on_every_stratum():
    for n in range(11):
        amb = AmbientSpace(n)
        bit_samples = range(1, amb.size) if n <= 6 else (1, 3, amb.full, (amb.full >> 1) | 1, 0b10110)
        for bits in bit_samples:
            f = indicator_orbit(StratumSet(amb, bits))
            assert csm(f) == csm_closed_rule(f)
            g = indicator_subspace(StratumSet(amb, bits))
            assert csm(g) == csm_closed_rule(g)


@given(st.integers(0, 5), st.integers(0, 10**6))
@settings(max_examples=50, deadline=None)
def test_two_paths_agree_on_random_functions(n, seed):
    rng = random.Random(seed)
    values = {b: random_fraction(rng) for b in range(1, 1 << (n + 1))}
    f = ConstructibleFunction.from_orbit_values(n, values)
    assert csm(f) == csm_closed_rule(f)
    brute = {frozenset(i for i in range(n + 1) if b >> i & 1): c for b, c in values.items()}
    assert list(csm(f).coeffs) == csm_by_chern_classes(brute, n)


def test_total_chern_coefficients():
    assert total_chern_coefficients(0) == (1,)
    assert total_chern_coefficients(1) == (1, 2)
    assert total_chern_coefficients(3) == (1, 4, 6, 4)
    # degree-0 part of csm(1_{P^1}) is chi(P^1)
    assert csm(indicator_projective(1))[0] == euler_integral(indicator_projective(1)) == 2
    with pytest.raises(ValueError):
        total_chern_coefficients(-1)


def test_degree_zero_part_is_euler_integral():
    rng = random.Random(5)
    for n in range(6):
        f = ConstructibleFunction.from_orbit_values(n, {b: random_fraction(rng) for b in range(1, 1 << (n + 1))})
        assert csm(f)[0] == euler_integral(f)


def test_components():
    for n in range(6):
        assert csm_component(indicator_projective(n), n) == fundamental_class(n)
        for T in AmbientSpace(n).strata():
            f = indicator_orbit(T)
            total = HomologyClass.zero(n)
            for i in range(n + 1):
                c = csm_component(f, i)
                if i != T.dimension:
                    assert c.is_zero()
                total = total + c
            assert total == csm(f)


def test_weak_normalization():
    for n in range(11):
        assert top_component(csm(indicator_projective(n))) == fundamental_class(n)


def test_degree_collapse():
    # mpc_i(1_{P^n}) = mpc_i(1_{L_i})
    for n in range(8):
        for i in range(n + 1):
            assert csm_component(indicator_projective(n), i) == csm_component(indicator_L(n, i), i)


def test_integrality():
    f = indicator_L(4, 2).scale(3) - indicator_subspace(StratumSet.of(4, [0, 3])).scale(7)
    assert all(c.denominator == 1 for c in csm(f).coeffs)


def test_theorem1_examples():
    w = verify_theorem1(2, 1)
    assert w.ok and w.lhs == w.rhs == H(0, 3, 0)
    w = verify_theorem1(5, 0)
    assert w.ok and w.lhs == HomologyClass.linear_subspace(5, 0).scale(6)
    assert w.lhs[0] == euler_integral(indicator_projective(5))
    with pytest.raises(ValueError):
        verify_theorem1(3, 3)


def test_theorem1_grid():
    for n in range(1, 11):
        for i in range(n):
            assert verify_theorem1(n, i)


def test_quotient_examples():
    w = verify_quotient_isomorphism(2, 2)
    assert w.ok and w.details["diagonal"] == [1, 2, 4] and w.lhs == w.rhs == 4
    assert verify_quotient_isomorphism(3, 1).ok
    w = verify_quotient_isomorphism(2, 3)
    assert w.ok and w.details["diagonal"] == [1, 3, 9] and w.lhs == 9


def test_deck_group_order():
    for n in range(4):
        for d in range(1, 5):
            assert deck_group_order(n, d) == d**n


def test_decompose_csm():
    N = 5
    values = [csm(indicator_projective(m)) for m in range(N + 1)]
    dec = decompose_into_csm(values)
    assert dec.coefficients == (1,) * (N + 1)
    assert dec.residual_vanishes


def test_decompose_single_component():
    values = [component(csm(indicator_projective(m)), 2) if m >= 2 else HomologyClass.zero(m) for m in range(5)]
    dec = decompose_into_csm(values)
    assert dec.coefficients == (0, 0, 1, 0, 0)
    assert dec.residual_vanishes


def test_decompose_combination():
    r = [Fraction(5), Fraction(-1, 2)]
    values = [mpc_on_projective(0, m).scale(r[0]) + mpc_on_projective(1, m).scale(r[1]) for m in range(4)]
    dec = decompose_into_csm(values)
    assert dec.coefficients == (5, Fraction(-1, 2), 0, 0)
    assert dec.residual_vanishes


def test_decompose_detects_non_csm():
    # tau(1_{P^m}) = [P^m] only: top coefficients 1 everywhere, but lower terms missing
    values = [fundamental_class(m) for m in range(3)]
    dec = decompose_into_csm(values)
    assert dec.coefficients == (1, 1, 1)
    assert not dec.residual_vanishes


def test_mpc_on_projective_matches_csm():
    for m in range(7):
        for i in range(m + 1):
            assert mpc_on_projective(i, m) == HomologyClass.linear_subspace(m, i).scale(comb(m + 1, i + 1))
            assert mpc_on_projective(i, m) == csm_component(indicator_projective(m), i)
