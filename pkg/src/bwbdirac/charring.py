"""The formal character ring R(T).

Characters are finite maps from weights to integer multiplicities.  Weight
systems of irreducibles come from Freudenthal's recursion; everything else
(tensor products, duals, the pairing ``<E, F>_T = dim Hom_T(E, F)``) is
bookkeeping on those maps.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import TYPE_CHECKING, Iterable, Mapping, Sequence

from .errors import DomainError
from .rootsys import RootSystem, Weight, coroot_pairing, inner, is_dominant
from .weyl import act

if TYPE_CHECKING:
    from .spinor import Subsystem


@dataclass(frozen=True, eq=False)
class FormalCharacter:
    """Element of R(T): weight -> integer multiplicity (zeros never stored)."""

    terms: Mapping[Weight, int]
    context: str
    virtual: bool = field(default=False)

    def __init__(self, terms: Mapping[Weight, int] | Iterable[tuple[Weight, int]],
                 context: str, virtual: bool | None = None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Weight, int] = {}
        for w, m in items:
            if m:
                clean[w] = clean.get(w, 0) + int(m)
        clean = {w: m for w, m in clean.items() if m}
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "context", context)
        neg = any(m < 0 for m in clean.values())
        object.__setattr__(self, "virtual", bool(virtual) or neg)

    def __eq__(self, other) -> bool:
        return (isinstance(other, FormalCharacter) and self.context == other.context
                and self.terms == other.terms)

    __hash__ = None

    def __repr__(self) -> str:
        body = ", ".join(f"{w}:{m}" for w, m in self.items())
        return f"FormalCharacter[{self.context}]{{{body}}}"

    def mult(self, w: Weight) -> int:
        return self.terms.get(w, 0)

    @property
    def mass(self) -> int:
        return sum(self.terms.values())

    def items(self) -> list[tuple[Weight, int]]:
        return sorted(self.terms.items())

    def _same(self, other: "FormalCharacter") -> None:
        if self.context != other.context:
            raise DomainError(
                f"character contexts differ: {self.context} vs {other.context}")

    def __add__(self, other: "FormalCharacter") -> "FormalCharacter":
        self._same(other)
        out = dict(self.terms)
        for w, m in other.terms.items():
            out[w] = out.get(w, 0) + m
        return FormalCharacter(out, self.context, self.virtual or other.virtual)

    def __sub__(self, other: "FormalCharacter") -> "FormalCharacter":
        return self + other.scaled(-1)

    def scaled(self, k: int) -> "FormalCharacter":
        return FormalCharacter({w: k * m for w, m in self.terms.items()},
                               self.context, self.virtual or k < 0)

    def to_json(self) -> list[dict]:
        return [{"weight": w.labels(), "mult": m} for w, m in self.items()]

    @classmethod
    def from_json(cls, rows: Sequence[Mapping], context: str) -> "FormalCharacter":
        return cls(((Weight(Fraction(str(x)) for x in r["weight"]), int(r["mult"]))
                    for r in rows), context)


def single(rs: RootSystem, nu: Weight, mult: int = 1) -> FormalCharacter:
    """The one-dimensional T-module ``U_nu``."""
    if len(nu) != rs.rank:
        raise DomainError(f"weight {nu} does not match rank {rs.rank}")
    return FormalCharacter({nu: mult}, rs.name)


def trivial(rs: RootSystem) -> FormalCharacter:
    return single(rs, Weight.zero(rs.rank))


# --------------------------------------------------------------------------
# Weight systems

def _dominantize(C, coords: list) -> tuple:
    n = len(coords)
    while True:
        i = next((k for k, v in enumerate(coords) if v < 0), None)
        if i is None:
            return tuple(coords)
        xi = coords[i]
        coords = [coords[j] - xi * C[i][j] for j in range(n)]


def _orbit(rs: RootSystem, x: Weight) -> set[Weight]:
    C = rs.cartan_matrix
    n = rs.rank
    seen = {x}
    stack = [x]
    while stack:
        p = stack.pop()
        for i in range(n):
            c = p.coords[i]
            if c:
                q = Weight(p.coords[j] - c * C[i][j] for j in range(n))
                if q not in seen:
                    seen.add(q)
                    stack.append(q)
    return seen


def weyl_orbit(rs: RootSystem, x: Weight) -> list[Weight]:
    """The W-orbit of ``x`` (plain action), sorted."""
    return sorted(_orbit(rs, x))


def dominant_weights_below(rs: RootSystem, lam: Weight) -> list[Weight]:
    """Dominant weights ``mu <= lam`` (lam - mu a nonnegative root combination)."""
    seen = {lam}
    stack = [lam]
    while stack:
        mu = stack.pop()
        for a in rs.positive_roots:
            nu = mu - a
            if nu not in seen and is_dominant(rs, nu):
                seen.add(nu)
                stack.append(nu)
    return sorted(seen)


@lru_cache(maxsize=4096)
def _freudenthal_dominant(rs: RootSystem, lam: Weight) -> dict[Weight, int]:
    C = rs.cartan_matrix
    doms = dominant_weights_below(rs, lam)
    depth = {mu: sum(rs.to_root_coords(lam - mu)) for mu in doms}
    doms.sort(key=lambda mu: (depth[mu], mu))
    lam_rho = inner(rs, lam + rs.rho, lam + rs.rho)
    pos = [(a, rc) for a, rc in zip(rs.positive_roots, rs.positive_roots_rootcoords)]
    mult: dict[Weight, int] = {lam: 1}
    for mu in doms[1:]:
        gap = rs.to_root_coords(lam - mu)
        total = Fraction(0)
        for a, rc in pos:
            k = 1
            while True:
                rest = [g - k * r for g, r in zip(gap, rc)]
                if min(rest) < 0:
                    break
                nu = mu + k * a
                m = mult.get(Weight(_dominantize(C, list(nu.coords))), 0)
                if m:
                    total += inner(rs, nu, a) * m
                k += 1
        denom = lam_rho - inner(rs, mu + rs.rho, mu + rs.rho)
        val = 2 * total / denom
        if Fraction(val).denominator != 1:
            raise ArithmeticError(f"non-integral multiplicity {val} at {mu}")
        if val:
            mult[mu] = int(val)
    return mult


def freudenthal_multiplicities(rs: RootSystem, lam: Weight) -> FormalCharacter:
    """Full weight system of ``V_lam`` via Freudenthal's recursion."""
    if len(lam) != rs.rank:
        raise DomainError(f"weight {lam} does not match rank {rs.rank}")
    if not lam.is_integral or not is_dominant(rs, lam):
        raise DomainError(f"highest weight {lam} must be dominant integral")
    return _irrep_character(rs, lam)


@lru_cache(maxsize=4096)
def _irrep_character(rs: RootSystem, lam: Weight) -> FormalCharacter:
    terms = {}
    for mu, m in _freudenthal_dominant(rs, lam).items():
        for nu in _orbit(rs, mu):
            terms[nu] = m
    return FormalCharacter(terms, rs.name)


def irrep_character(rs: RootSystem, lam: Weight) -> FormalCharacter:
    return freudenthal_multiplicities(rs, lam)


# --------------------------------------------------------------------------
# Ring operations

def tensor(a: FormalCharacter, b: FormalCharacter) -> FormalCharacter:
    a._same(b)
    out: dict[Weight, int] = {}
    for wa, ma in a.terms.items():
        for wb, mb in b.terms.items():
            w = wa + wb
            out[w] = out.get(w, 0) + ma * mb
    return FormalCharacter(out, a.context, a.virtual or b.virtual)


def dual(a: FormalCharacter) -> FormalCharacter:
    return FormalCharacter({-w: m for w, m in a.terms.items()}, a.context, a.virtual)


def pairing_T(e: FormalCharacter, f: FormalCharacter) -> int:
    """``dim Hom_T(E, F)``, extended bilinearly to virtual characters."""
    e._same(f)
    if len(f.terms) < len(e.terms):
        e, f = f, e
    return sum(m * f.terms.get(w, 0) for w, m in e.terms.items())


def evaluate_at_torus(a: FormalCharacter, theta: Sequence[float]) -> complex:
    """Character value at ``exp(theta)``: ``sum mult * exp(i <nu, theta>)``."""
    th = [float(t) for t in theta]
    total = 0j
    for w, m in a.items():
        if len(w) != len(th):
            raise DomainError(f"theta has {len(th)} entries, weight {w} has {len(w)}")
        phase = sum(float(c) * t for c, t in zip(w.coords, th))
        total += m * cmath.exp(1j * phase)
    return total


def h_irrep_multiplicity(sub: "Subsystem", e: FormalCharacter, mu: Weight) -> int:
    """Multiplicity of the H-irreducible with highest weight ``mu`` in ``e``.

    Weyl alternation over W(H):
    ``sum_w sign(w) * mult_e(w(mu + rho_H) - rho_H)``.  ``mu`` only needs to be
    integral against the subsystem's coroots (it may be a half-integral
    weight of G, e.g. ``mu + rho'``).
    """
    rs = sub.rs
    if len(mu) != rs.rank:
        raise DomainError(f"weight {mu} does not match rank {rs.rank}")
    pairings = [coroot_pairing(rs, mu, b) for b in sub.simple_roots]
    if any(not isinstance(p, int) or p < 0 for p in pairings):
        raise DomainError(f"{mu} is not dominant integral for the subsystem")
    if e.context != rs.name:
        raise DomainError(f"character context {e.context} does not match {rs.name}")
    rho_h = sub.rho_h
    shifted = mu + rho_h
    total = 0
    for w in sub.weyl_group():
        total += w.sign * e.mult(act(w, shifted) - rho_h)
    return total


def decompose(sub: "Subsystem", e: FormalCharacter) -> dict[Weight, int]:
    """Multiplicities of all H-irreducibles in an H-symmetric character."""
    out = {}
    for w in sorted(e.terms):
        if sub.is_dominant(w):
            m = h_irrep_multiplicity(sub, e, w)
            if m:
                out[w] = m
    return out
