"""Root systems of the simple types A-G in exact rational arithmetic.

Everything is written in the fundamental-weight basis (Dynkin labels).  The
invariant form is normalised so that long roots have squared length 2; all
predicates used downstream are invariant under a positive rescaling of the
form, so nothing depends on this choice beyond keeping values rational.
"""

from __future__ import annotations

import math
import operator
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import DomainError

Rational = int | Fraction


def _norm(x) -> Rational:
    # keep integral values as plain ints: cheaper arithmetic, same hash
    if type(x) is int:
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, int):
        return x
    if isinstance(x, float):
        if not x.is_integer():
            raise DomainError(f"weights must be exact; got float {x!r}")
        return int(x)
    return _norm(Fraction(x))


@dataclass(frozen=True, order=True)
class Weight:
    """Exact weight in Dynkin-label coordinates."""

    coords: tuple

    def __init__(self, coords: Iterable):
        coords = tuple(coords)
        if not all(type(c) is int for c in coords):
            coords = tuple(_norm(c) for c in coords)
        object.__setattr__(self, "coords", coords)

    @classmethod
    def of(cls, *labels) -> "Weight":
        return cls(labels)

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def _check(self, other: "Weight") -> None:
        if len(other.coords) != len(self.coords):
            raise DomainError(
                f"dimension mismatch: {len(self.coords)} vs {len(other.coords)}"
            )

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(map(operator.add, self.coords, other.coords))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(map(operator.sub, self.coords, other.coords))

    def __neg__(self) -> "Weight":
        return Weight(map(operator.neg, self.coords))

    def __mul__(self, k) -> "Weight":
        return Weight(k * a for a in self.coords)

    __rmul__ = __mul__

    @property
    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coords)

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def labels(self) -> list:
        """JSON-friendly labels: ints stay ints, fractions become "p/q"."""
        return [c if isinstance(c, int) else str(c) for c in self.coords]

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


# --------------------------------------------------------------------------
# Cartan data

_VALID = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


def cartan_matrix(type_label: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Bourbaki-ordered Cartan matrix, ``C[i][j] = <alpha_i, alpha_j^vee>``."""
    t, n = type_label, rank
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, cij=-1, cji=-1):
        C[i][j] = cij
        C[j][i] = cji

    if t in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if t == "B":
            link(n - 2, n - 1, -2, -1)
        elif t == "C":
            link(n - 2, n - 1, -1, -2)
    elif t == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif t == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif t == "F":
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
    elif t == "G":
        link(0, 1, -1, -3)
    return tuple(tuple(row) for row in C)


def _root_lengths_sq(C) -> tuple[Fraction, ...]:
    n = len(C)
    lengths: list[Fraction | None] = [None] * n
    lengths[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and C[i][j] and lengths[j] is None:
                # C[i][j] |a_j|^2 = C[j][i] |a_i|^2
                lengths[j] = lengths[i] * Fraction(C[j][i], C[i][j])
                stack.append(j)
    top = max(lengths)
    return tuple(2 * x / top for x in lengths)


def _inverse(M) -> list[list[Fraction]]:
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(M)]
    for col in range(n):
        piv = next(r for r in range(col, n) if A[r][col] != 0)
        A[col], A[piv] = A[piv], A[col]
        p = A[col][col]
        A[col] = [x / p for x in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return [row[n:] for row in A]


def _positive_roots_rootcoords(C) -> list[tuple[int, ...]]:
    """Positive roots in simple-root coordinates, by root-string recursion."""
    n = len(C)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = list(simple)
    known = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # alpha_i-string through beta: beta - p a_i, ..., beta + q a_i
                p = 0
                probe = list(beta)
                while True:
                    probe[i] -= 1
                    if tuple(probe) in known:
                        p += 1
                    else:
                        break
                pairing = sum(beta[j] * C[j][i] for j in range(n))
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in known:
                        known.add(up)
                        roots.append(up)
                        nxt.append(up)
        layer = nxt
    return roots


@dataclass(frozen=True, eq=False)
class RootSystem:
    type_label: str
    rank: int
    cartan_matrix: tuple[tuple[int, ...], ...]
    simple_roots: tuple[Weight, ...]
    positive_roots: tuple[Weight, ...]
    gram: tuple[tuple[Fraction, ...], ...]
    rho: Weight
    root_lengths_sq: tuple[Fraction, ...] = field(repr=False)
    positive_roots_rootcoords: tuple[tuple[int, ...], ...] = field(repr=False)

    def __eq__(self, other):
        return (isinstance(other, RootSystem)
                and (self.type_label, self.rank) == (other.type_label, other.rank))

    def __hash__(self):
        return hash((self.type_label, self.rank))

    @property
    def name(self) -> str:
        return f"{self.type_label}{self.rank}"

    def __repr__(self) -> str:
        return f"RootSystem({self.name})"

    @cached_property
    def _gram_int(self):
        den = math.lcm(*(g.denominator for row in self.gram for g in row))
        return den, tuple(tuple(int(g * den) for g in row) for row in self.gram)

    @cached_property
    def positive_coroots(self) -> tuple[tuple[int, ...], ...]:
        """Integer vectors c with <x, alpha^vee> = sum_k c_k x_k for each positive root."""
        out = []
        for rc in self.positive_roots_rootcoords:
            beta = self.from_root_coords(rc)
            a_sq = inner(self, beta, beta)
            out.append(tuple(_norm(n * self.root_lengths_sq[j] / a_sq)
                             for j, n in enumerate(rc)))
        return tuple(out)

    def from_root_coords(self, rc: Sequence) -> Weight:
        """Convert simple-root coordinates to Dynkin labels."""
        C = self.cartan_matrix
        return Weight(sum(rc[i] * C[i][j] for i in range(self.rank))
                      for j in range(self.rank))

    @cached_property
    def _to_root_matrix(self):
        # x_root = x_dynkin . C^{-1}
        return _inverse(self.cartan_matrix)

    def to_root_coords(self, x: Weight) -> tuple:
        Ci = self._to_root_matrix
        return tuple(_norm(sum(x[i] * Ci[i][j] for i in range(self.rank)))
                     for j in range(self.rank))

    def fundamental_weight(self, i: int) -> Weight:
        """omega_i, 1-based index."""
        return Weight(int(k == i - 1) for k in range(self.rank))

    @cached_property
    def highest_root(self) -> Weight:
        idx = max(range(len(self.positive_roots)),
                  key=lambda k: sum(self.positive_roots_rootcoords[k]))
        return self.positive_roots[idx]


def build_root_system(type_label: str, rank: int) -> RootSystem:
    """Construct the root system of the simple type ``type_label`` ``rank``."""
    t = str(type_label).upper()
    if t not in _VALID:
        raise DomainError(f"unknown type {type_label!r}; expected one of A-G")
    if not isinstance(rank, int) or not _VALID[t](rank):
        raise DomainError(
            f"invalid rank {rank!r} for type {t} "
            "(A n>=1, B n>=2, C n>=2, D n>=3, E n in 6..8, F n=4, G n=2)")
    C = cartan_matrix(t, rank)
    lengths = _root_lengths_sq(C)
    Ci = _inverse(C)
    gram = tuple(tuple(Ci[j][i] * lengths[i] / 2 for j in range(rank))
                 for i in range(rank))
    rcs = _positive_roots_rootcoords(C)
    simple = tuple(Weight(row) for row in C)
    pos = tuple(Weight(sum(rc[i] * C[i][j] for i in range(rank))
                       for j in range(rank)) for rc in rcs)
    return RootSystem(
        type_label=t,
        rank=rank,
        cartan_matrix=C,
        simple_roots=simple,
        positive_roots=pos,
        gram=gram,
        rho=Weight((1,) * rank),
        root_lengths_sq=lengths,
        positive_roots_rootcoords=tuple(rcs),
    )


_TYPE_RE = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")


def parse_type(text: str) -> RootSystem:
    """Parse a label like ``"A2"`` or ``"g2"``."""
    m = _TYPE_RE.match(text or "")
    if not m:
        raise DomainError(f"cannot parse group type {text!r} (expected e.g. A2, G2)")
    return build_root_system(m.group(1).upper(), int(m.group(2)))


def parse_weight(text: str, rank: int | None = None) -> Weight:
    """Parse comma-separated rational labels, e.g. ``"-2,1"`` or ``"0,3/2"``."""
    try:
        parts = [Fraction(p.strip()) for p in str(text).split(",")]
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"cannot parse weight {text!r}") from None
    w = Weight(parts)
    if rank is not None and len(w) != rank:
        raise DomainError(f"weight {text!r} has {len(w)} labels, rank is {rank}")
    return w


# --------------------------------------------------------------------------
# Forms and predicates

def _check_dim(rs: RootSystem, *xs: Weight) -> None:
    for x in xs:
        if len(x) != rs.rank:
            raise DomainError(
                f"weight {x} has {len(x)} labels but {rs.name} has rank {rs.rank}")


def inner(rs: RootSystem, x: Weight, y: Weight) -> Rational:
    """Exact invariant inner product ``x^T gram y``."""
    _check_dim(rs, x, y)
    den, G = rs._gram_int
    n = rs.rank
    total = 0
    for i in range(n):
        xi = x.coords[i]
        if xi:
            row = G[i]
            total += xi * sum(row[j] * y.coords[j] for j in range(n))
    return _norm(Fraction(total) / den)


def norm_sq(rs: RootSystem, x: Weight) -> Rational:
    return inner(rs, x, x)


def coroot_pairing(rs: RootSystem, x: Weight, alpha: Weight) -> Rational:
    """``2<x, alpha> / <alpha, alpha>``."""
    _check_dim(rs, x, alpha)
    if alpha.is_zero:
        raise DomainError("coroot pairing with the zero vector is undefined")
    return _norm(Fraction(2 * inner(rs, x, alpha)) / inner(rs, alpha, alpha))


def positive_pairings(rs: RootSystem, x: Weight) -> list:
    """``<x, alpha^vee>`` for every positive root, in ``rs.positive_roots`` order."""
    _check_dim(rs, x)
    return [_norm(sum(c * v for c, v in zip(cr, x.coords)))
            for cr in rs.positive_coroots]


def is_dominant(rs: RootSystem, x: Weight) -> bool:
    _check_dim(rs, x)
    return all(c >= 0 for c in x.coords)


def is_regular(rs: RootSystem, x: Weight) -> bool:
    return all(p != 0 for p in positive_pairings(rs, x))


def dim_irrep(rs: RootSystem, lam: Weight) -> int:
    """Weyl dimension formula."""
    _check_dim(rs, lam)
    if not lam.is_integral:
        raise DomainError(f"highest weight {lam} must be integral")
    if not is_dominant(rs, lam):
        raise DomainError(f"highest weight {lam} is not dominant")
    shifted = lam + rs.rho
    num = Fraction(1)
    for a in rs.positive_roots:
        num *= Fraction(inner(rs, shifted, a)) / inner(rs, rs.rho, a)
    assert num.denominator == 1
    return int(num)
