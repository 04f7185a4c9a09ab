"""Explicit matrices for Kostant's cubic Dirac operator at low rank.

Irreducible modules are built exactly from the Cartan matrix: each weight
space of ``V_lam`` is spanned by ``f_j u`` for ``u`` in the weight spaces one
step up, and linear relations are detected through the raising operators
(a vector of non-highest weight in an irreducible module vanishes iff every
``e_i`` kills it).  The Shapovalov form then gives an orthonormal basis in
which ``e_i^dagger = f_i``, i.e. a unitary module of the compact form.

The spin module of ``p = t^perp`` is the fermionic Fock space on the positive
roots, with Clifford relation ``c(Y)^2 = -|Y|^2``.  The invariant form on
``g`` is fixed through the trace form of the adjoint module so that its dual
on ``t*`` is the form used by :mod:`bwbdirac.rootsys`.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .charring import evaluate_at_torus, freudenthal_multiplicities
from .errors import CapExceeded, DomainError, InternalConsistencyError
from .index import DEFAULT_CANDIDATE_CAP, shell_enumerate
from .rootsys import RootSystem, Weight, dim_irrep, inner, is_dominant
from .spinor import spinor_by_degree

DEFAULT_MATRIX_CAP = 200
MAX_RANK = 2
KERNEL_TOL = 1e-6
WARN_BAND = (1e-9, 1e-4)


class KernelThresholdWarning(UserWarning):
    """A singular value fell in the ambiguous band around the kernel cut-off."""


# --------------------------------------------------------------------------
# Exact highest-weight modules

def _rref(cols: list[list[Fraction]]):
    """Pivot columns and coordinates of every column w.r.t. the pivots."""
    if not cols:
        return [], []
    m = len(cols[0])
    ncols = len(cols)
    A = [[Fraction(cols[c][r]) for c in range(ncols)] for r in range(m)]
    pivots = []
    row = 0
    for c in range(ncols):
        if row == m:
            break
        piv = next((r for r in range(row, m) if A[r][c] != 0), None)
        if piv is None:
            continue
        A[row], A[piv] = A[piv], A[row]
        p = A[row][c]
        A[row] = [x / p for x in A[row]]
        for r in range(m):
            if r != row and A[r][c] != 0:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[row])]
        pivots.append(c)
        row += 1
    coords = [[A[r][c] for r in range(len(pivots))] for c in range(ncols)]
    return pivots, coords


@dataclass
class _ExactModule:
    weights: list[Weight]            # weight-space order (by depth)
    dims: dict[Weight, int]
    E: dict[tuple[Weight, int], list]  # (w, i): rows dim(w+a_i), cols dim(w)
    F: dict[tuple[Weight, int], list]  # (w, j): rows dim(w), cols dim(w+a_j)
    gram: dict[Weight, list]


def _matvec(M, v):
    return [sum(a * b for a, b in zip(row, v)) for row in M]


@lru_cache(maxsize=64)
def _exact_module(rs: RootSystem, lam: Weight) -> _ExactModule:
    ch = freudenthal_multiplicities(rs, lam)
    n = rs.rank
    simple = rs.simple_roots
    depth = {w: sum(rs.to_root_coords(lam - w)) for w in ch.terms}
    order = sorted(ch.terms, key=lambda w: (depth[w], w))
    dims = {lam: 1}
    spans = {lam: [None]}
    E: dict = {}
    F: dict = {}
    for w in order[1:]:
        cands = [(j, k) for j in range(n) if (w + simple[j]) in dims
                 for k in range(dims[w + simple[j]])]
        targets = [(i, w + simple[i]) for i in range(n) if (w + simple[i]) in dims]
        cols = []
        for j, k in cands:
            uj = w + simple[j]
            col = []
            for i, ti in targets:
                top = uj + simple[i]
                if top in dims:
                    eiu = [row[k] for row in E[(uj, i)]]
                    vec = _matvec(F[(ti, j)], eiu)
                else:
                    vec = [Fraction(0)] * dims[ti]
                if i == j:
                    vec[k] += uj.coords[i]
                col.extend(vec)
            cols.append(col)
        pivots, coords = _rref(cols)
        d = len(pivots)
        if d != ch.mult(w):
            raise InternalConsistencyError(
                f"weight {w} of V{lam}: built dimension {d}, Freudenthal gives {ch.mult(w)}")
        dims[w] = d
        spans[w] = [cands[p] for p in pivots]
        offset = 0
        for i, ti in targets:
            block = [[cols[p][offset + r] for p in pivots] for r in range(dims[ti])]
            E[(w, i)] = block
            offset += dims[ti]
        for j in range(n):
            up = w + simple[j]
            if up in dims:
                Fm = [[Fraction(0)] * dims[up] for _ in range(d)]
                for c, (jj, k) in enumerate(cands):
                    if jj == j:
                        for r in range(d):
                            Fm[r][k] = coords[c][r]
                F[(w, j)] = Fm
    gram = {lam: [[Fraction(1)]]}
    for w in order[1:]:
        basis = spans[w]
        d = dims[w]
        G = [[Fraction(0)] * d for _ in range(d)]
        for a, (j, k) in enumerate(basis):
            Gup = gram[w + simple[j]]
            Ej = E[(w, j)]
            for b in range(d):
                G[a][b] = sum(Gup[k][l] * Ej[l][b] for l in range(len(Gup)))
        gram[w] = G
    return _ExactModule(order, dims, E, F, gram)


# --------------------------------------------------------------------------
# Unitary matrix models

def _transpose(M):
    return [list(r) for r in zip(*M)]


def _mat_mul(A, B):
    Bt = _transpose(B)
    return [[sum(x * y for x, y in zip(r, c)) for c in Bt] for r in A]


def _inv_unit_upper(U):
    n = len(U)
    X = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        for r in range(c - 1, -1, -1):
            X[r][c] = -sum(U[r][k] * X[k][c] for k in range(r + 1, c + 1))
    return X


def _ldl(G, w):
    """Exact ``G = L diag(D) L^T`` with ``L`` unit lower triangular."""
    n = len(G)
    if any(G[a][b] != G[b][a] for a in range(n) for b in range(n)):
        raise InternalConsistencyError(f"Shapovalov form not symmetric at {w}")
    L = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    D = [Fraction(0)] * n
    for j in range(n):
        D[j] = G[j][j] - sum(L[j][k] ** 2 * D[k] for k in range(j))
        if D[j] <= 0:
            raise InternalConsistencyError(f"Shapovalov form not positive at {w}")
        for i in range(j + 1, n):
            L[i][j] = (G[i][j] - sum(L[i][k] * L[j][k] * D[k] for k in range(j))) / D[j]
    return L, D

@dataclass
class _Unitary:
    dim: int
    weights: list[Weight]            # one per basis vector
    e: list[np.ndarray]              # simple raising operators
    f: list[np.ndarray]
    h: list[np.ndarray]              # coroots, diagonal


@lru_cache(maxsize=64)
def _unitary(rs: RootSystem, lam: Weight) -> _Unitary:
    mod = _exact_module(rs, lam)
    offsets = {}
    labels = []
    pos = 0
    for w in mod.weights:
        offsets[w] = pos
        pos += mod.dims[w]
        labels.extend([w] * mod.dims[w])
    dim = pos
    fac = {w: _ldl(mod.gram[w], w) for w in mod.weights}
    n = rs.rank
    e = [np.zeros((dim, dim)) for _ in range(n)]
    f = [np.zeros((dim, dim)) for _ in range(n)]

    def place(target, src, dst, M, mats):
        # new coordinates: c_new = sqrt(D) L^T c_old, done exactly up to the sqrt
        (Ld, Dd), (Ls, Ds) = fac[dst], fac[src]
        X = _mat_mul(_transpose(Ld), _mat_mul(M, _inv_unit_upper(_transpose(Ls))))
        blk = np.array([[float(X[r][c]) * math.sqrt(Dd[r] / Ds[c]) if X[r][c] else 0.0
                         for c in range(len(Ds))] for r in range(len(Dd))])
        mats[target][offsets[dst]:offsets[dst] + len(Dd), offsets[src]:offsets[src] + len(Ds)] = blk

    for (w, i), M in mod.E.items():
        place(i, w, w + rs.simple_roots[i], M, e)
    for (w, j), M in mod.F.items():
        place(j, w + rs.simple_roots[j], w, M, f)
    h = [np.diag([float(x.coords[i]) for x in labels]) for i in range(n)]
    for i in range(n):
        if not np.allclose(e[i].T, f[i], atol=1e-10):
            raise InternalConsistencyError(f"V{lam}: e_{i + 1}^T != f_{i + 1}")
    return _Unitary(dim, labels, e, f, h)


def _comm(a, b):
    return a @ b - b @ a


@lru_cache(maxsize=None)
def _recipe(rs: RootSystem) -> tuple:
    """Per positive root: (simple index i, index of beta - alpha_i), parent -1 if simple."""
    idx = {rc: k for k, rc in enumerate(rs.positive_roots_rootcoords)}
    out = []
    for rc in rs.positive_roots_rootcoords:
        if sum(rc) == 1:
            out.append((rc.index(1), -1))
            continue
        for i in range(rs.rank):
            down = list(rc)
            down[i] -= 1
            if tuple(down) in idx:
                out.append((i, idx[tuple(down)]))
                break
    return tuple(out)


def _root_vectors(rs: RootSystem, U: _Unitary) -> list[np.ndarray]:
    """Raising operators ``E_beta`` for every positive root, via fixed commutators."""
    order = sorted(range(len(rs.positive_roots)),
                   key=lambda k: sum(rs.positive_roots_rootcoords[k]))
    res: dict[int, np.ndarray] = {}
    for k in order:
        i, parent = _recipe(rs)[k]
        res[k] = U.e[i] if parent < 0 else _comm(U.e[i], res[parent])
    return [res[k] for k in range(len(rs.positive_roots))]


@dataclass(frozen=True, eq=False)
class _LieData:
    """Scale of the invariant form and the normalisation of root vectors."""

    trace_scale: float          # <X, Y> = -trace_scale * tr_ref(X Y)
    root_norms: tuple[float, ...]
    t_orth: np.ndarray          # rows: orthonormal t-basis in terms of i*h_j
    ref: _Unitary


@lru_cache(maxsize=None)
def _lie_data(rs: RootSystem) -> _LieData:
    ref = _unitary(rs, rs.highest_root)
    b11 = 4 / float(rs.root_lengths_sq[0])
    scale = b11 / float(np.trace(ref.h[0] @ ref.h[0]))
    Es = _root_vectors(rs, ref)
    norms = []
    for Eb in Es:
        Fb = Eb.conj().T
        # |E - F|^2 = 2 * scale * tr(E F)
        norms.append(math.sqrt(2 * scale * float(np.trace(Eb @ Fb).real)))
    n = rs.rank
    Gt = np.array([[4 * float(inner(rs, rs.simple_roots[a], rs.simple_roots[b]))
                    / float(rs.root_lengths_sq[a] * rs.root_lengths_sq[b])
                    for b in range(n)] for a in range(n)])
    L = np.linalg.cholesky(Gt)
    return _LieData(scale, tuple(norms), np.linalg.inv(L), ref)


def _compact_basis(rs: RootSystem, U: _Unitary, data: _LieData):
    """Orthonormal bases of t and p as skew-Hermitian matrices on ``U``."""
    ih = [1j * h for h in U.h]
    t = [sum(data.t_orth[a, j] * ih[j] for j in range(rs.rank)) for a in range(rs.rank)]
    p = []
    for Eb, nb in zip(_root_vectors(rs, U), data.root_norms):
        Fb = Eb.conj().T
        p.append((Eb - Fb) / nb)
        p.append(1j * (Eb + Fb) / nb)
    return t, p


@dataclass(frozen=True, eq=False)
class MatrixRep:
    """Unitary model of ``V_lam`` (or its dual) for the compact form.

    ``t_generators`` / ``p_generators`` are the images of orthonormal bases of
    ``t`` and ``p``; ``weight_labels`` gives the T-weight of each basis vector.
    """

    lam: Weight
    dimension: int
    t_generators: tuple[np.ndarray, ...]
    p_generators: tuple[np.ndarray, ...]
    weight_labels: tuple[Weight, ...]
    is_dual: bool = False

    @property
    def generators(self) -> tuple[np.ndarray, ...]:
        return self.t_generators + self.p_generators

    def dual(self) -> "MatrixRep":
        neg = lambda ms: tuple(-m.T for m in ms)
        return MatrixRep(self.lam, self.dimension, neg(self.t_generators),
                         neg(self.p_generators), tuple(-w for w in self.weight_labels),
                         not self.is_dual)


def _check_rank(rs: RootSystem) -> None:
    if rs.rank > MAX_RANK:
        raise DomainError(f"matrix models are limited to rank <= {MAX_RANK}; {rs.name} has rank {rs.rank}")


def build_irrep_matrices(rs: RootSystem, lam: Weight, dual: bool = False,
                         cap: int = DEFAULT_MATRIX_CAP) -> MatrixRep:
    _check_rank(rs)
    d = dim_irrep(rs, lam)
    if d > cap:
        raise CapExceeded(f"dim V{lam} = {d} exceeds the matrix cap of {cap}")
    U = _unitary(rs, lam)
    t, p = _compact_basis(rs, U, _lie_data(rs))
    rep = MatrixRep(lam, U.dim, tuple(t), tuple(p), tuple(U.weights))
    return rep.dual() if dual else rep


def invariant_form(rs: RootSystem, X_ref: np.ndarray, Y_ref: np.ndarray) -> float:
    """``<X, Y>`` for elements given as matrices on the reference (adjoint) module."""
    return float((-_lie_data(rs).trace_scale * np.trace(X_ref @ Y_ref)).real)


def reference_basis(rs: RootSystem):
    """Orthonormal t- and p-bases on the adjoint reference module."""
    data = _lie_data(rs)
    return _compact_basis(rs, data.ref, data)


# --------------------------------------------------------------------------
# Clifford module

@dataclass(frozen=True, eq=False)
class CliffordModel:
    """Fock-space spin module for ``p``.

    ``gamma_matrices[k]`` is ``c(Y_k)``; ``grading`` is diagonal with entry
    ``(-1)^degree``.  ``weights`` are the T-weights of the Fock basis vectors
    under the spin action and ``degrees`` the exterior degree of each, read
    so that a vector of weight ``-(rho - sum(A))`` has degree ``|A|`` (this is
    the module S*).
    """

    p_dimension: int
    gamma_matrices: tuple[np.ndarray, ...]
    grading: np.ndarray
    weights: tuple[Weight, ...]
    degrees: tuple[int, ...]


def _fock_operators(m: int):
    sig = np.array([[0.0, 1.0], [0.0, 0.0]])
    Z = np.diag([1.0, -1.0])
    I = np.eye(2)
    out = []
    for k in range(m):
        ops = [Z] * k + [sig] + [I] * (m - k - 1)
        a = np.array([[1.0]])
        for o in ops:
            a = np.kron(a, o)
        out.append(a)
    return out


def _gamma_from(structure_t: np.ndarray, cl: Sequence[np.ndarray]) -> np.ndarray:
    """``1/4 sum_ij <Z, [Y_i, Y_j]> c_i c_j`` given the coefficient matrix."""
    d = cl[0].shape[0] if cl else 1
    out = np.zeros((d, d), dtype=complex)
    for i in range(len(cl)):
        for j in range(len(cl)):
            s = structure_t[i, j]
            if s:
                out += 0.25 * s * (cl[i] @ cl[j])
    return out


def _structure(rs: RootSystem, Z_ref: np.ndarray, p_ref: Sequence[np.ndarray]) -> np.ndarray:
    m = len(p_ref)
    out = np.zeros((m, m))
    for i in range(m):
        for j in range(i + 1, m):
            v = invariant_form(rs, Z_ref, _comm(p_ref[i], p_ref[j]))
            out[i, j] = v
            out[j, i] = -v
    out[np.abs(out) < 1e-13] = 0.0
    return out


def gamma_map(rs: RootSystem, cm: CliffordModel, z: Sequence[float],
              rotation: np.ndarray | None = None) -> np.ndarray:
    """Spin action of ``z`` (coordinates in the orthonormal t-basis).

    In the Clifford normalisation ``Y^2 = -|Y|^2/2`` with the opposite bracket
    orientation this is ``-1/2 sum <z, [Y_i, Y_j]> Y_i Y_j``; with
    ``c(Y)^2 = -|Y|^2`` it reads ``1/4 sum <z, [Y_i, Y_j]> c_i c_j``.
    """
    t_ref, p_ref = reference_basis(rs)
    p_ref, cl = _rotated(p_ref, cm.gamma_matrices, rotation)
    Z = sum(float(c) * T for c, T in zip(z, t_ref))
    if not isinstance(Z, np.ndarray):
        return np.zeros_like(cm.grading, dtype=complex)
    return _gamma_from(_structure(rs, Z, p_ref), cl)


def _rotated(p_list, cl, rotation):
    if rotation is None:
        return list(p_list), list(cl)
    O = np.asarray(rotation)
    new_p = [sum(O[l, k] * p_list[l] for l in range(len(p_list))) for k in range(len(p_list))]
    new_c = [sum(O[l, k] * cl[l] for l in range(len(cl))) for k in range(len(cl))]
    return new_p, new_c


@lru_cache(maxsize=None)
def build_clifford_model(rs: RootSystem) -> CliffordModel:
    _check_rank(rs)
    m = len(rs.positive_roots)
    ann = _fock_operators(m)
    cl = []
    for a in ann:
        ad = a.T
        cl.append((ad - a).astype(complex))
        cl.append(1j * (ad + a))
    dim = 2 ** m
    # spin weights: gamma(i h_j) has eigenvalue i * (label j)
    _, p_ref = reference_basis(rs)
    ref = _lie_data(rs).ref
    labels = []
    for j in range(rs.rank):
        g = _gamma_from(_structure(rs, 1j * ref.h[j], p_ref), cl)
        diag = np.diag(g)
        if np.max(np.abs(g - np.diag(diag))) > 1e-9:
            raise InternalConsistencyError("spin action of t is not diagonal on Fock states")
        labels.append(diag.imag)
    weights = []
    for s in range(dim):
        coords = []
        for j in range(rs.rank):
            v = labels[j][s]
            f = Fraction(round(2 * v), 2)
            if abs(v - float(f)) > 1e-8:
                raise InternalConsistencyError(f"non-half-integral spin weight {v}")
            coords.append(f)
        weights.append(Weight(coords))
    occ = [bin(s).count("1") for s in range(dim)]
    vac = weights[0]
    if vac == -rs.rho:
        degrees = occ
    elif vac == rs.rho:
        degrees = [m - o for o in occ]
    else:
        raise InternalConsistencyError(f"Fock vacuum has weight {vac}, expected +-rho")
    by_deg: dict[int, dict] = {}
    for w, d in zip(weights, degrees):
        by_deg.setdefault(d, {})
        by_deg[d][w] = by_deg[d].get(w, 0) + 1
    for d, ch in spinor_by_degree(rs).items():
        if {-w: m for w, m in ch.terms.items()} != by_deg.get(d, {}):
            raise InternalConsistencyError(f"Fock states of degree {d} do not match S*")
    grading = np.diag([(-1.0) ** d for d in degrees])
    return CliffordModel(2 * m, tuple(cl), grading, tuple(weights), tuple(degrees))


# --------------------------------------------------------------------------
# The cubic Dirac operator

@dataclass(frozen=True, eq=False)
class DiracBlock:
    """``D`` on ``(V_lam* (x) S* (x) U_{mu+rho})^T``."""

    lam: Weight
    mu: Weight
    space_dim: int
    even_dim: int
    odd_dim: int
    D: np.ndarray
    grading: np.ndarray
    degrees: tuple[int, ...]


@lru_cache(maxsize=16)
def _spin_part(rs: RootSystem, rotation_key: tuple | None):
    """Rotated p-basis on the reference module, Clifford images, cubic term."""
    cm = build_clifford_model(rs)
    _, p_ref = reference_basis(rs)
    rotation = None if rotation_key is None else np.array(rotation_key)
    p_ref, cl = _rotated(p_ref, cm.gamma_matrices, rotation)
    cubic = np.zeros_like(cl[0])
    for k in range(len(cl)):
        cubic += cl[k] @ _gamma_from(_structure(rs, p_ref[k], p_ref), cl) / 3.0
    return cm, cl, cubic


def _invariant_indices(rs: RootSystem, rep: MatrixRep, cm: CliffordModel, mu: Weight):
    target = -(mu + rs.rho)
    pairs = [(a, s) for a, wv in enumerate(rep.weight_labels)
             for s, ws in enumerate(cm.weights) if wv + ws == target]
    return [a for a, _ in pairs], [s for _, s in pairs]


def cubic_dirac_matrix(rs: RootSystem, lam: Weight, mu: Weight,
                       rotation: np.ndarray | None = None,
                       cap: int = DEFAULT_MATRIX_CAP) -> DiracBlock:
    """Restriction of the cubic Dirac operator to the T-invariants.

    ``D = sum_k rho*(Y_k) (x) c(Y_k) + 1 (x) 1/3 sum_k c(Y_k) gamma(Y_k)`` on
    ``V_lam* (x) S*``, assembled only on the weight ``-(mu + rho)`` part.
    ``rotation`` (orthogonal, size dim p) replaces the orthonormal basis of p
    by ``Y'_k = sum_l O[l, k] Y_l``.
    """
    _check_rank(rs)
    if not lam.is_integral or not is_dominant(rs, lam):
        raise DomainError(f"highest weight {lam} must be dominant integral")
    if not mu.is_integral:
        raise DomainError("weight must be integral")
    key = None if rotation is None else tuple(map(tuple, np.asarray(rotation)))
    rep = build_irrep_matrices(rs, lam, dual=True, cap=cap)
    cm, cl, cubic = _spin_part(rs, key)
    _, p_rep = _rotated(rep.p_generators, rep.p_generators,
                        None if key is None else np.array(key))
    A, S = _invariant_indices(rs, rep, cm, mu)
    degrees = tuple(cm.degrees[s] for s in S)
    n = len(A)
    D = np.zeros((n, n), dtype=complex)
    if n:
        A_ = np.array(A)
        S_ = np.array(S)
        for P, c in zip(p_rep, cl):
            D += P[np.ix_(A_, A_)] * c[np.ix_(S_, S_)]
        D += (A_[:, None] == A_[None, :]) * cubic[np.ix_(S_, S_)]
    grading = np.diag([(-1.0) ** d for d in degrees])
    even = sum(1 for d in degrees if d % 2 == 0)
    return DiracBlock(lam, mu, n, even, n - even, D, grading, degrees)


def random_rotation(p_dimension: int, seed: int = 0) -> np.ndarray:
    rng = np.random.default_rng(seed)
    Q, R = np.linalg.qr(rng.standard_normal((p_dimension, p_dimension)))
    return Q * np.sign(np.diag(R))


@dataclass(frozen=True)
class SquareCheck:
    scalar: Fraction
    max_abs_dev: float
    space_dim: int


def verify_square(rs: RootSystem, lam: Weight, mu: Weight,
                  rotation: np.ndarray | None = None) -> SquareCheck:
    """Compare ``D^2`` with ``(|lam+rho|^2 - |mu+rho|^2) I``."""
    blk = cubic_dirac_matrix(rs, lam, mu, rotation)
    scalar = (inner(rs, lam + rs.rho, lam + rs.rho)
              - inner(rs, mu + rs.rho, mu + rs.rho))
    if blk.space_dim == 0:
        return SquareCheck(Fraction(scalar), 0.0, 0)
    dev = np.max(np.abs(blk.D @ blk.D - float(scalar) * np.eye(blk.space_dim)))
    return SquareCheck(Fraction(scalar), float(dev), blk.space_dim)


def block_checks(blk: DiracBlock) -> dict:
    """Hermiticity and grading-oddness defects of a Dirac block."""
    if blk.space_dim == 0:
        return {"hermitian_dev": 0.0, "odd_dev": 0.0}
    D, g = blk.D, blk.grading
    return {"hermitian_dev": float(np.max(np.abs(D - D.conj().T))),
            "odd_dev": float(np.max(np.abs(g @ D + D @ g)))}


# --------------------------------------------------------------------------
# Kernels

@dataclass(frozen=True)
class KernelEntry:
    lam: Weight
    space_dim: int
    even_dim: int
    odd_dim: int
    scalar: Fraction
    max_dev: float
    kernel_dim: int
    kernel_even: int
    kernel_odd: int
    degrees: tuple[int, ...]

    @property
    def parity(self) -> str | None:
        if self.kernel_dim == 0:
            return None
        if self.kernel_odd == 0:
            return "even"
        if self.kernel_even == 0:
            return "odd"
        return "mixed"

    def to_json(self) -> dict:
        return {"lambda": self.lam.labels(), "space_dim": self.space_dim,
                "even_dim": self.even_dim, "odd_dim": self.odd_dim,
                "scalar": str(self.scalar), "max_dev": self.max_dev,
                "kernel": {"dim": self.kernel_dim, "parity": self.parity,
                           "degrees": list(self.degrees)}}


def _kernel(blk: DiracBlock, tol: float = KERNEL_TOL):
    if blk.space_dim == 0:
        return np.zeros((0, 0))
    _, s, Vh = np.linalg.svd(blk.D)
    for v in s:
        if WARN_BAND[0] <= v <= WARN_BAND[1]:
            warnings.warn(f"singular value {v:.3e} near kernel threshold at lam={blk.lam}",
                          KernelThresholdWarning)
    return Vh[s < tol].conj().T


def kernel_report(rs: RootSystem, mu: Weight, radius_sq=None,
                  cap: int = DEFAULT_CANDIDATE_CAP, tol: float = KERNEL_TOL,
                  matrix_cap: int = DEFAULT_MATRIX_CAP) -> list[KernelEntry]:
    """Kernel of ``D`` on each summand ``lam`` of the ball, split by grading and degree.

    ``radius_sq`` defaults to ``|mu+rho|^2`` (the shell and everything inside).
    """
    _check_rank(rs)
    r2 = inner(rs, mu + rs.rho, mu + rs.rho)
    if radius_sq is None:
        radius_sq = r2
    out = []
    for lam in shell_enumerate(rs, radius_sq, cap):
        blk = cubic_dirac_matrix(rs, lam, mu, cap=matrix_cap)
        sq = inner(rs, lam + rs.rho, lam + rs.rho) - r2
        dev = (float(np.max(np.abs(blk.D @ blk.D - float(sq) * np.eye(blk.space_dim))))
               if blk.space_dim else 0.0)
        null = _kernel(blk, tol)
        k = null.shape[1] if null.size else 0
        even_idx = [i for i, d in enumerate(blk.degrees) if d % 2 == 0]
        odd_idx = [i for i, d in enumerate(blk.degrees) if d % 2 == 1]
        if k:
            P = null @ null.conj().T
            k_even = int(round(np.trace(P[np.ix_(even_idx, even_idx)]).real)) if even_idx else 0
            k_odd = int(round(np.trace(P[np.ix_(odd_idx, odd_idx)]).real)) if odd_idx else 0
            degs = sorted({d for i, d in enumerate(blk.degrees)
                           if np.linalg.norm(null[i, :]) > 1e-8})
        else:
            k_even = k_odd = 0
            degs = []
        out.append(KernelEntry(lam, blk.space_dim, blk.even_dim, blk.odd_dim,
                               Fraction(sq), dev, k, k_even, k_odd, tuple(degs)))
    return out


def kernel_summary(rs: RootSystem, mu: Weight, radius_sq=None) -> dict:
    """Totals of :func:`kernel_report`, weighting each summand by ``dim V_lam``."""
    entries = kernel_report(rs, mu, radius_sq)
    total = sum(dim_irrep(rs, e.lam) * e.kernel_dim for e in entries)
    degs = sorted({d for e in entries for d in e.degrees})
    parities = {e.parity for e in entries if e.kernel_dim}
    return {"total_kernel_dim": total, "degrees": degs,
            "parities": sorted(p for p in parities if p)}


def matrix_supertrace(rs: RootSystem, mu: Weight, theta: Sequence[float], t: float,
                      radius_sq) -> complex:
    """``sum_lam chi_lam(theta) * str(exp(-t D_lam^2))`` from the matrix blocks."""
    total = 0j
    for lam in shell_enumerate(rs, radius_sq):
        blk = cubic_dirac_matrix(rs, lam, mu)
        if blk.space_dim == 0:
            continue
        w, V = np.linalg.eigh(blk.D @ blk.D)
        heat = (V * np.exp(-t * w)) @ V.conj().T
        st = np.trace(blk.grading @ heat)
        chi = evaluate_at_torus(freudenthal_multiplicities(rs, lam), theta)
        total += chi * st
    return complex(total)
