from collections import Counter
from fractions import Fraction
from itertools import combinations

import pytest

from bwbdirac.errors import CapExceeded, DomainError
from bwbdirac.rootsys import Weight, build_root_system
from bwbdirac.spinor import (exterior_np_character, from_roots, levi, levi_subsystems,
                             nilspin_identity_holds, nilspin_rhs, rho_prime,
                             spinor_by_degree, spinor_character, torus)

A1 = build_root_system("A", 1)
A2 = build_root_system("A", 2)


def test_rho_prime_examples():
    assert rho_prime(A2, torus(A2)) == A2.rho
    assert rho_prime(A2, levi(A2, [1])) == Weight([0, Fraction(3, 2)])
    assert rho_prime(A2, levi(A2, [1, 2])) == Weight.zero(2)


def test_a1_spinor():
    S = spinor_character(A1)
    assert S.even.terms == {Weight.of(1): 1}
    assert S.odd.terms == {Weight.of(-1): 1}


def test_spinor_weights_are_rho_minus_subset_sums():
    """Independent check by brute-force subset enumeration."""
    for t, n in [("A", 2), ("B", 2), ("G", 2), ("A", 3)]:
        rs = build_root_system(t, n)
        S = spinor_character(rs)
        expected = Counter()
        for k in range(len(rs.positive_roots) + 1):
            for A in combinations(rs.positive_roots, k):
                w = rs.rho
                for a in A:
                    w = w - a
                expected[(w, k % 2)] += 1
        got = Counter()
        for parity, ch in ((0, S.even), (1, S.odd)):
            for w, m in ch.terms.items():
                got[(w, parity)] += m
        assert got == expected


@pytest.mark.parametrize("t,n", [("A", 2), ("B", 2), ("G", 2), ("C", 3)])
def test_masses(t, n):
    rs = build_root_system(t, n)
    S = spinor_character(rs)
    m = len(rs.positive_roots)
    assert S.even.mass == S.odd.mass == 2 ** (m - 1)
    assert exterior_np_character(rs).mass == 2 ** m
    assert sum(ch.mass for ch in spinor_by_degree(rs).values()) == 2 ** m


def test_spinor_by_degree_matches_parity():
    rs = build_root_system("B", 2)
    S = spinor_character(rs)
    by_deg = spinor_by_degree(rs)
    even = sum((ch for d, ch in by_deg.items() if d % 2 == 0), start=by_deg[0].scaled(0))
    assert even == S.even


def test_empty_complement():
    full = levi(A2, [1, 2])
    S = spinor_character(A2, full)
    assert S.even.terms == {Weight.zero(2): 1} and not S.odd.terms
    assert nilspin_identity_holds(A2, full)


@pytest.mark.parametrize("t,n", [("A", 3), ("B", 3), ("C", 3), ("G", 2), ("D", 4)])
def test_nilspin_all_levis(t, n):
    rs = build_root_system(t, n)
    for sub in levi_subsystems(rs):
        assert exterior_np_character(rs, sub) == nilspin_rhs(rs, sub)


def test_subsystem_validation():
    sub = levi(A2, [1])
    assert sub.is_levi
    assert set(sub.complement) == set(A2.positive_roots) - {A2.simple_roots[0]}
    with pytest.raises(DomainError):
        levi(A2, [3])
    # {alpha_1, alpha_2} without alpha_1 + alpha_2 is not closed
    with pytest.raises(DomainError):
        from_roots(A2, A2.simple_roots)


def test_subset_cap():
    e8 = build_root_system("E", 8)
    with pytest.raises(CapExceeded):
        spinor_character(e8)
