from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bwbdirac.errors import DomainError
from bwbdirac.rootsys import (Weight, build_root_system, cartan_matrix, coroot_pairing,
                              dim_irrep, inner, is_dominant, is_regular, norm_sq,
                              parse_type, parse_weight)

SUPPORTED = [("A", n) for n in range(1, 9)] + [("B", n) for n in range(2, 9)] \
    + [("C", n) for n in range(2, 9)] + [("D", n) for n in range(3, 9)] \
    + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]

# |Phi+| from the classification
POSITIVE_COUNT = {"A": lambda n: n * (n + 1) // 2, "B": lambda n: n * n,
                  "C": lambda n: n * n, "D": lambda n: n * (n - 1),
                  "E": {6: 36, 7: 63, 8: 120}.get, "F": {4: 24}.get, "G": {2: 6}.get}


@pytest.mark.parametrize("t,n", SUPPORTED)
def test_positive_root_count(t, n):
    rs = build_root_system(t, n)
    assert len(rs.positive_roots) == POSITIVE_COUNT[t](n)


@pytest.mark.parametrize("t,n", SUPPORTED)
def test_rho_is_half_sum(t, n):
    rs = build_root_system(t, n)
    total = Weight.zero(n)
    for a in rs.positive_roots:
        total = total + a
    assert total * Fraction(1, 2) == rs.rho
    assert rs.rho == Weight([1] * n)


@pytest.mark.parametrize("t,n", SUPPORTED)
def test_gram_symmetric_positive_and_dual_basis(t, n):
    rs = build_root_system(t, n)
    for i in range(n):
        for j in range(n):
            assert rs.gram[i][j] == rs.gram[j][i]
            assert rs.gram[i][j] > 0
            # <omega_i, alpha_j^vee> = delta_ij
            assert coroot_pairing(rs, rs.fundamental_weight(i + 1), rs.simple_roots[j]) == (i == j)


def test_small_examples():
    a1 = build_root_system("A", 1)
    assert a1.positive_roots == (Weight.of(2),)
    assert inner(a1, Weight.of(1), Weight.of(1)) == Fraction(1, 2)
    a2 = build_root_system("A", 2)
    assert len(a2.positive_roots) == 3 and a2.rho == Weight.of(1, 1)
    assert norm_sq(a2, a2.rho) == 2
    assert len(build_root_system("G", 2).positive_roots) == 6


def test_conventions():
    assert cartan_matrix("G", 2) == ((2, -1), (-3, 2))
    assert cartan_matrix("B", 2) == ((2, -2), (-1, 2))
    assert cartan_matrix("C", 2) == ((2, -1), (-2, 2))
    b2 = build_root_system("B", 2)
    assert b2.root_lengths_sq == (2, 1)


def test_dim_irrep_examples():
    a2 = build_root_system("A", 2)
    assert dim_irrep(a2, Weight.of(1, 1)) == 8
    assert dim_irrep(build_root_system("A", 1), Weight.of(3)) == 4
    for t, n in [("E", 8), ("G", 2), ("C", 3)]:
        assert dim_irrep(build_root_system(t, n), Weight.zero(n)) == 1
    assert dim_irrep(build_root_system("G", 2), Weight.of(1, 0)) == 7
    assert dim_irrep(build_root_system("E", 8), Weight.of(0, 0, 0, 0, 0, 0, 0, 1)) == 248


def test_dominance_and_regularity():
    a2 = build_root_system("A", 2)
    assert is_dominant(a2, Weight.of(0, 0))
    assert not is_dominant(a2, Weight.of(-1, 2))
    assert is_regular(a2, Weight.of(-1, 2))
    assert not is_regular(a2, Weight.of(1, -1))


def test_parsers():
    assert parse_type("g2").name == "G2"
    assert parse_weight("-2,1", 2) == Weight.of(-2, 1)
    assert parse_weight("0,3/2") == Weight([0, Fraction(3, 2)])
    for bad in ["Z3", "A0", "B1", "D2", "E9", ""]:
        with pytest.raises(DomainError):
            parse_type(bad)
    with pytest.raises(DomainError):
        parse_weight("1,x")
    with pytest.raises(DomainError):
        parse_weight("1", 2)


def test_weight_arithmetic_and_json():
    w = Weight([1, Fraction(1, 2)])
    assert w.labels() == [1, "1/2"]
    assert not w.is_integral
    assert (w + w).is_integral
    assert Weight([Fraction(4, 2)]).coords == (2,)
    with pytest.raises(DomainError):
        Weight.of(1) + Weight.of(1, 2)


labels = st.lists(st.integers(-4, 4), min_size=2, max_size=2)


@given(labels, labels, labels)
def test_inner_bilinear_symmetric(x, y, z):
    rs = build_root_system("G", 2)
    X, Y, Z = map(Weight, (x, y, z))
    assert inner(rs, X, Y) == inner(rs, Y, X)
    assert inner(rs, X + Y, Z) == inner(rs, X, Z) + inner(rs, Y, Z)
    assert norm_sq(rs, X) >= 0
