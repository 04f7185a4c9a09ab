"""Weyl groups: reflections, the dot action, and dominant representatives."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Sequence

from .errors import CapExceeded, DomainError
from .rootsys import (RootSystem, Weight, coroot_pairing, is_regular,
                      positive_pairings)

DEFAULT_WEYL_CAP = 10**6

Matrix = tuple[tuple, ...]


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element.

    ``word`` lists 1-based generator indices, ``w = s_{word[0]} ... s_{word[-1]}``.
    ``matrix`` acts on column vectors of Dynkin labels.
    """

    word: tuple[int, ...]
    matrix: Matrix

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def sign(self) -> int:
        return -1 if len(self.word) % 2 else 1


def _matmul(A: Matrix, B: Matrix) -> Matrix:
    n = len(A)
    return tuple(tuple(sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n))
                 for i in range(n))


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def act(w: WeylElement, x: Weight) -> Weight:
    M = w.matrix
    if len(M) != len(x):
        raise DomainError(f"weight {x} does not match rank {len(M)}")
    return Weight(sum(M[j][k] * x.coords[k] for k in range(len(M)))
                  for j in range(len(M)))


def _coroot_vector(rs: RootSystem, beta: Weight) -> tuple:
    # c with <x, beta^vee> = sum_k c_k x_k
    return tuple(coroot_pairing(rs, rs.fundamental_weight(k + 1), beta)
                 for k in range(rs.rank))


def reflection_matrix(rs: RootSystem, beta: Weight) -> Matrix:
    """Matrix of ``x -> x - <x, beta^vee> beta``."""
    c = _coroot_vector(rs, beta)
    n = rs.rank
    return tuple(tuple(int(j == k) - beta.coords[j] * c[k] for k in range(n))
                 for j in range(n))


@lru_cache(maxsize=None)
def _simple_matrices(rs: RootSystem) -> tuple[Matrix, ...]:
    C = rs.cartan_matrix
    n = rs.rank
    return tuple(
        tuple(tuple(int(j == k) - (C[i][j] if k == i else 0) for k in range(n))
              for j in range(n))
        for i in range(n))


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement((), _identity(rs.rank))


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    if not 1 <= i <= rs.rank:
        raise DomainError(f"simple reflection index {i} out of range 1..{rs.rank}")
    return WeylElement((i,), _simple_matrices(rs)[i - 1])


def from_word(rs: RootSystem, word: Sequence[int]) -> WeylElement:
    """Element ``s_{word[0]} ... s_{word[-1]}`` with a canonical reduced word."""
    M = _identity(rs.rank)
    S = _simple_matrices(rs)
    for i in word:
        if not 1 <= i <= rs.rank:
            raise DomainError(f"simple reflection index {i} out of range 1..{rs.rank}")
        M = _matmul(M, S[i - 1])
    return WeylElement(reduced_word(rs, M), M)


def reduced_word(rs: RootSystem, M: Matrix) -> tuple[int, ...]:
    """Canonical reduced word, read off by greedy descent of ``w(rho)``."""
    x = [sum(M[j][k] for k in range(rs.rank)) for j in range(rs.rank)]
    C = rs.cartan_matrix
    word = []
    while True:
        i = next((k for k, v in enumerate(x) if v < 0), None)
        if i is None:
            return tuple(word)
        xi = x[i]
        x = [x[j] - xi * C[i][j] for j in range(rs.rank)]
        word.append(i + 1)


def multiply(rs: RootSystem, a: WeylElement, b: WeylElement) -> WeylElement:
    M = _matmul(a.matrix, b.matrix)
    return WeylElement(reduced_word(rs, M), M)


def inverse(rs: RootSystem, w: WeylElement) -> WeylElement:
    return from_word(rs, tuple(reversed(w.word)))


def weyl_group_order(rs: RootSystem) -> int:
    n = rs.rank
    return {
        "A": lambda: factorial(n + 1),
        "B": lambda: 2**n * factorial(n),
        "C": lambda: 2**n * factorial(n),
        "D": lambda: 2**(n - 1) * factorial(n),
        "E": lambda: {6: 51840, 7: 2903040, 8: 696729600}[n],
        "F": lambda: 1152,
        "G": lambda: 12,
    }[rs.type_label]()


def enumerate_reflection_group(rs: RootSystem, generators: Sequence[Weight],
                               point: Weight, cap: int = DEFAULT_WEYL_CAP
                               ) -> list[WeylElement]:
    """Group generated by reflections in ``generators`` (a simple system).

    ``point`` must be regular for the generated group; elements are
    identified by their image of it.  Words use 1-based generator indices.
    Output is ordered by (length, word).
    """
    mats = [reflection_matrix(rs, b) for b in generators]
    cvecs = [_coroot_vector(rs, b) for b in generators]
    n = rs.rank
    start = WeylElement((), _identity(n))
    seen = {point: start}
    layer = [(point, start)]
    out = [start]
    while layer:
        nxt = []
        for p, w in layer:
            for g, (S, c) in enumerate(zip(mats, cvecs)):
                if sum(ci * pi for ci, pi in zip(c, p.coords)) <= 0:
                    continue
                q = Weight(sum(S[j][k] * p.coords[k] for k in range(n))
                           for j in range(n))
                if q in seen:
                    continue
                v = WeylElement((g + 1,) + w.word, _matmul(S, w.matrix))
                seen[q] = v
                nxt.append((q, v))
                out.append(v)
                if len(out) > cap:
                    raise CapExceeded(f"reflection group exceeds cap of {cap} elements")
        layer = nxt
    out.sort(key=lambda v: (len(v.word), v.word))
    return out


def enumerate_weyl_group(rs: RootSystem, cap: int = DEFAULT_WEYL_CAP
                         ) -> list[WeylElement]:
    order = weyl_group_order(rs)
    if order > cap:
        raise CapExceeded(
            f"|W({rs.name})| = {order} exceeds the Weyl group cap of {cap}")
    return enumerate_reflection_group(rs, rs.simple_roots, rs.rho, cap)


def shifted_act(rs: RootSystem, w: WeylElement, lam: Weight) -> Weight:
    """Dot action ``w(lam + rho) - rho``."""
    return act(w, lam + rs.rho) - rs.rho


@dataclass(frozen=True)
class DominantShift:
    status: str  # "free" or "singular"
    w: WeylElement | None = None
    lam: Weight | None = None
    length: int | None = None

    @property
    def free(self) -> bool:
        return self.status == "free"


def make_dominant_shifted(rs: RootSystem, mu: Weight) -> DominantShift:
    """Find the unique ``w`` with ``w(mu+rho)`` dominant, if ``mu+rho`` is regular."""
    if len(mu) != rs.rank:
        raise DomainError(f"weight {mu} does not match rank {rs.rank}")
    if not mu.is_integral:
        raise DomainError("weight must be integral")
    x = mu + rs.rho
    if not is_regular(rs, x):
        return DominantShift("singular")
    C = rs.cartan_matrix
    applied = []
    coords = list(x.coords)
    while True:
        i = next((k for k, v in enumerate(coords) if v < 0), None)
        if i is None:
            break
        xi = coords[i]
        coords = [coords[j] - xi * C[i][j] for j in range(rs.rank)]
        applied.append(i + 1)
    # applying s_{i1}, then s_{i2}, ... means w = s_{ik} ... s_{i1}
    w = from_word(rs, tuple(reversed(applied)))
    lam = Weight(coords) - rs.rho
    return DominantShift("free", w, lam, len(applied))


def length_mu(rs: RootSystem, mu: Weight) -> int:
    """Number of positive roots pairing negatively with ``mu + rho``.

    This is the length of the Weyl element carrying ``mu + rho`` into the
    dominant chamber; it is only defined when ``mu + rho`` is regular.
    """
    pairings = positive_pairings(rs, mu + rs.rho)
    if any(p == 0 for p in pairings):
        raise DomainError(f"mu + rho = {mu + rs.rho} is singular; length undefined")
    return sum(1 for p in pairings if p < 0)
