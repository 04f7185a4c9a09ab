import warnings
from collections import Counter

import numpy as np
import pytest

from bwbdirac.charring import freudenthal_multiplicities
from bwbdirac.diracmat import (KernelThresholdWarning, _kernel, _lie_data, block_checks,
                               build_clifford_model, build_irrep_matrices,
                               cubic_dirac_matrix, gamma_map, invariant_form,
                               kernel_report, kernel_summary, matrix_supertrace,
                               random_rotation, reference_basis, verify_square,
                               DiracBlock)
from bwbdirac.errors import CapExceeded, DomainError
from bwbdirac.mckean import supertrace
from bwbdirac.rootsys import Weight, build_root_system, inner
from bwbdirac.spinor import spinor_character

A1 = build_root_system("A", 1)
A2 = build_root_system("A", 2)
B2 = build_root_system("B", 2)
G2 = build_root_system("G", 2)
RANK2 = [A2, B2, G2]


def _comm(a, b):
    return a @ b - b @ a


def test_irrep_examples():
    r = build_irrep_matrices(A1, Weight.of(1))
    assert r.dimension == 2 and sorted(w.coords for w in r.weight_labels) == [(-1,), (1,)]
    r = build_irrep_matrices(A1, Weight.of(3))
    assert sorted(w.coords[0] for w in r.weight_labels) == [-3, -1, 1, 3]
    r = build_irrep_matrices(A2, Weight.of(1, 1))
    assert r.dimension == 8 and Counter(r.weight_labels)[Weight.of(0, 0)] == 2


@pytest.mark.parametrize("rs,lam", [(A2, (2, 1)), (B2, (1, 1)), (G2, (1, 0)), (G2, (2, 0))])
def test_weights_match_freudenthal(rs, lam):
    r = build_irrep_matrices(rs, Weight(lam))
    assert Counter(r.weight_labels) == Counter(freudenthal_multiplicities(rs, Weight(lam)).terms)
    d = build_irrep_matrices(rs, Weight(lam), dual=True)
    assert Counter(d.weight_labels) == Counter(-w for w in r.weight_labels)


@pytest.mark.parametrize("rs,lam", [(A2, (1, 1)), (B2, (0, 2)), (G2, (1, 0))])
def test_representation_is_unitary_and_a_homomorphism(rs, lam):
    """Brackets computed in the module equal brackets pushed from the reference module."""
    rep = build_irrep_matrices(rs, Weight(lam))
    t_ref, p_ref = reference_basis(rs)
    gens, refs = rep.generators, t_ref + p_ref
    basis = np.array([m.ravel() for m in refs]).T
    for X in gens:
        assert np.max(np.abs(X + X.conj().T)) < 1e-8
    for a in range(len(gens)):
        for b in range(a + 1, len(gens), 2):
            # expand [ref_a, ref_b] in the reference basis, push it forward
            coeff = np.linalg.lstsq(basis, _comm(refs[a], refs[b]).ravel(), rcond=None)[0]
            pushed = sum(c * g for c, g in zip(coeff, gens))
            assert np.max(np.abs(_comm(gens[a], gens[b]) - pushed)) < 1e-8


@pytest.mark.parametrize("rs", RANK2)
def test_bases_are_orthonormal(rs):
    t_ref, p_ref = reference_basis(rs)
    B = np.array([[invariant_form(rs, x, y) for y in t_ref + p_ref] for x in t_ref + p_ref])
    assert np.max(np.abs(B - np.eye(len(B)))) < 1e-10


def test_caps():
    with pytest.raises(DomainError):
        build_irrep_matrices(build_root_system("A", 3), Weight.of(1, 0, 0))
    with pytest.raises(CapExceeded):
        build_irrep_matrices(A2, Weight.of(6, 6))


@pytest.mark.parametrize("rs", [A1] + RANK2)
def test_clifford_relations(rs):
    cm = build_clifford_model(rs)
    assert cm.p_dimension == 2 * len(rs.positive_roots)
    c = cm.gamma_matrices
    eye = np.eye(c[0].shape[0])
    for i in range(len(c)):
        assert np.max(np.abs(c[i] @ cm.grading + cm.grading @ c[i])) < 1e-10
        for j in range(len(c)):
            anti = c[i] @ c[j] + c[j] @ c[i]
            assert np.max(np.abs(anti + 2 * (i == j) * eye)) < 1e-10


@pytest.mark.parametrize("rs", [A1] + RANK2)
def test_gamma_eigenvalues_are_spinor_weights(rs):
    cm = build_clifford_model(rs)
    assert np.max(np.abs(gamma_map(rs, cm, [0.0] * rs.rank))) == 0
    rng = np.random.default_rng(3)
    z = rng.standard_normal(rs.rank)
    g = gamma_map(rs, cm, z)
    assert np.max(np.abs(g @ cm.grading - cm.grading @ g)) < 1e-10
    # z in the orthonormal t-basis -> functional value of a weight
    M = _lie_data(rs).t_orth
    S = spinor_character(rs)
    expected = []
    for ch in (S.even, S.odd):
        for w, m in ch.terms.items():
            val = sum(z[a] * M[a, j] * float(w.coords[j])
                      for a in range(rs.rank) for j in range(rs.rank))
            expected += [val] * m
    eig = np.linalg.eigvals(g)
    assert np.max(np.abs(eig.real)) < 1e-8
    assert np.allclose(np.sort(eig.imag), np.sort(expected), atol=1e-8)


def test_dirac_examples_a1():
    b = cubic_dirac_matrix(A1, Weight.of(1), Weight.of(3))
    assert b.space_dim == 0 and b.D.shape == (0, 0)
    b = cubic_dirac_matrix(A1, Weight.of(3), Weight.of(3))
    assert (b.space_dim, b.even_dim) == (1, 1) and np.allclose(b.D, 0)
    b = cubic_dirac_matrix(A1, Weight.of(5), Weight.of(3))
    assert (b.space_dim, b.even_dim, b.odd_dim) == (2, 1, 1)
    assert np.allclose(b.D @ b.D, 10 * np.eye(2), atol=1e-10)


def test_verify_square_examples():
    v = verify_square(A1, Weight.of(3), Weight.of(3))
    assert v.scalar == 0 and v.max_abs_dev < 1e-8
    assert verify_square(A1, Weight.of(5), Weight.of(3)).scalar == 10
    v = verify_square(A2, Weight.of(0, 0), Weight.of(-2, 1))
    assert v.scalar == 0 and v.space_dim == 1
    assert cubic_dirac_matrix(A2, Weight.of(0, 0), Weight.of(-2, 1)).odd_dim == 1


@pytest.mark.parametrize("rs", RANK2)
def test_square_hermitian_odd_rank2(rs):
    for mu in [Weight.of(a, b) for a in range(-2, 2) for b in range(-2, 2)]:
        r2 = inner(rs, mu + rs.rho, mu + rs.rho)
        for lam in [Weight.of(0, 0), Weight.of(1, 0), Weight.of(0, 1), Weight.of(1, 1)]:
            blk = cubic_dirac_matrix(rs, lam, mu)
            chk = block_checks(blk)
            assert chk["hermitian_dev"] < 1e-8 and chk["odd_dev"] < 1e-8
            sq = verify_square(rs, lam, mu)
            assert sq.max_abs_dev < 1e-8
            assert sq.scalar == inner(rs, lam + rs.rho, lam + rs.rho) - r2


@pytest.mark.parametrize("rs", RANK2)
def test_basis_independence(rs):
    O = random_rotation(2 * len(rs.positive_roots), seed=11)
    assert np.allclose(O @ O.T, np.eye(len(O)))
    lam, mu = rs.highest_root, Weight.of(0, 0)
    a = cubic_dirac_matrix(rs, lam, mu)
    b = cubic_dirac_matrix(rs, lam, mu, rotation=O)
    assert np.max(np.abs(a.D - b.D)) < 1e-7
    assert verify_square(rs, lam, mu, rotation=O).max_abs_dev < 1e-8


def test_kernel_examples():
    (e,) = [e for e in kernel_report(A1, Weight.of(3)) if e.kernel_dim]
    assert (e.lam, e.kernel_dim, e.parity, e.degrees) == (Weight.of(3), 1, "even", (0,))
    (e,) = [e for e in kernel_report(A2, Weight.of(-2, 1)) if e.kernel_dim]
    assert (e.lam, e.kernel_dim, e.parity, e.degrees) == (Weight.of(0, 0), 1, "odd", (1,))
    assert kernel_report(A1, Weight.of(-1)) == []
    s = kernel_summary(A2, Weight.of(-2, 1))
    assert s == {"total_kernel_dim": 1, "degrees": [1], "parities": ["odd"]}


def test_kernel_warning_band():
    blk = DiracBlock(Weight.of(0), Weight.of(0), 2, 1, 1,
                     np.array([[0, 1e-6], [1e-6, 0]], dtype=complex),
                     np.diag([1.0, -1.0]), (0, 1))
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        null = _kernel(blk)
    assert any(issubclass(w.category, KernelThresholdWarning) for w in caught)
    assert null.shape[1] == 0


@pytest.mark.parametrize("rs,mu", [(A2, (1, -2)), (A2, (-2, 1)), (B2, (0, -2)), (A1, (4,))])
def test_matrix_supertrace_agrees(rs, mu):
    mu = Weight(mu)
    theta = [0.3, -0.8][: rs.rank]
    r2 = inner(rs, mu + rs.rho, mu + rs.rho) + 3
    a = matrix_supertrace(rs, mu, theta, 0.4, r2)
    b = supertrace(rs, mu, theta, 0.4, r2)
    assert abs(a - b) < 1e-6
