"""Spinor and exterior-algebra characters for G/T and maximal-rank G/H.

For a closed subsystem Phi_+(h) of the positive roots, the complement
Phi_+ \\ Phi_+(h) spans n_+ (mod h).  Its exterior algebra has T-weights equal
to subset sums; the spinor module has weights ``rho' - (subset sum)``.  Both
are graded by subset size, and the even/odd split is by parity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .charring import FormalCharacter, dual, single, tensor
from .errors import CapExceeded, DomainError
from .rootsys import RootSystem, Weight, coroot_pairing
from .weyl import WeylElement, enumerate_reflection_group

DEFAULT_SUBSET_CAP = 24


@dataclass(frozen=True, eq=False)
class Subsystem:
    """A closed subset of the positive roots, modelling a maximal-rank H."""

    rs: RootSystem
    roots_plus: tuple[Weight, ...]
    simple_subset: tuple[int, ...] | None = None

    def __post_init__(self):
        pos = set(self.rs.positive_roots)
        mine = set(self.roots_plus)
        if not mine <= pos:
            raise DomainError("subsystem roots must be positive roots")
        for a in self.roots_plus:
            for b in self.roots_plus:
                if (a + b) in pos and (a + b) not in mine:
                    raise DomainError(
                        f"subsystem not closed: {a} + {b} = {a + b} missing")

    def __eq__(self, other):
        return (isinstance(other, Subsystem) and self.rs == other.rs
                and set(self.roots_plus) == set(other.roots_plus))

    def __hash__(self):
        return hash((self.rs, frozenset(self.roots_plus)))

    @property
    def is_levi(self) -> bool:
        return self.simple_subset is not None

    @cached_property
    def complement(self) -> tuple[Weight, ...]:
        mine = set(self.roots_plus)
        return tuple(a for a in self.rs.positive_roots if a not in mine)

    @cached_property
    def simple_roots(self) -> tuple[Weight, ...]:
        if self.simple_subset is not None:
            return tuple(self.rs.simple_roots[i - 1] for i in self.simple_subset)
        mine = set(self.roots_plus)
        return tuple(a for a in self.roots_plus
                     if not any((a - b) in mine for b in self.roots_plus))

    @cached_property
    def rho_h(self) -> Weight:
        total = Weight.zero(self.rs.rank)
        for a in self.roots_plus:
            total = total + a
        return total * Fraction(1, 2)

    def is_dominant(self, mu: Weight) -> bool:
        return all(coroot_pairing(self.rs, mu, b) >= 0 for b in self.simple_roots)

    def weyl_group(self) -> list[WeylElement]:
        return _subsystem_weyl(self)


_WH_CACHE: dict = {}


def _subsystem_weyl(sub: Subsystem) -> list[WeylElement]:
    if sub not in _WH_CACHE:
        _WH_CACHE[sub] = enumerate_reflection_group(sub.rs, sub.simple_roots, sub.rho_h)
    return _WH_CACHE[sub]


def levi(rs: RootSystem, indices: Iterable[int]) -> Subsystem:
    """Levi subsystem generated by the simple roots with the given 1-based indices."""
    idx = tuple(sorted(set(indices)))
    for i in idx:
        if not 1 <= i <= rs.rank:
            raise DomainError(f"simple root index {i} out of range 1..{rs.rank}")
    zero_based = {i - 1 for i in idx}
    roots = tuple(a for a, rc in zip(rs.positive_roots, rs.positive_roots_rootcoords)
                  if all(c == 0 or j in zero_based for j, c in enumerate(rc)))
    return Subsystem(rs, roots, idx)


def torus(rs: RootSystem) -> Subsystem:
    """The empty subsystem: H = T."""
    return Subsystem(rs, (), ())


def from_roots(rs: RootSystem, roots: Sequence[Weight]) -> Subsystem:
    """Arbitrary closed subsystem (not certified by the test suite)."""
    return Subsystem(rs, tuple(roots), None)


@dataclass(frozen=True)
class GradedCharacter:
    even: FormalCharacter
    odd: FormalCharacter

    @property
    def mass(self) -> int:
        return self.even.mass + self.odd.mass

    @property
    def euler(self) -> FormalCharacter:
        return self.even - self.odd

    def __eq__(self, other):
        return (isinstance(other, GradedCharacter) and self.even == other.even
                and self.odd == other.odd)

    def to_json(self) -> dict:
        return {"even": self.even.to_json(), "odd": self.odd.to_json()}


def _check_cap(sub: Subsystem, cap: int) -> None:
    if len(sub.complement) > cap:
        raise CapExceeded(
            f"{len(sub.complement)} complement roots exceed the subset cap of {cap} "
            f"(2^{len(sub.complement)} subsets)")


def subset_sums_by_degree(rs: RootSystem, sub: Subsystem,
                          cap: int = DEFAULT_SUBSET_CAP) -> dict[int, dict[Weight, int]]:
    """``degree -> {subset sum: count}`` over subsets of the complement roots."""
    _check_cap(sub, cap)
    n = rs.rank
    states: dict[tuple, int] = {((0,) * n, 0): 1}
    for a in sub.complement:
        ac = a.coords
        nxt = dict(states)
        for (w, d), c in states.items():
            key = (tuple(x + y for x, y in zip(w, ac)), d + 1)
            nxt[key] = nxt.get(key, 0) + c
        states = nxt
    out: dict[int, dict[Weight, int]] = {}
    for (w, d), c in states.items():
        out.setdefault(d, {})[Weight(w)] = c
    return out


def _graded(rs, by_degree, transform) -> GradedCharacter:
    even: dict[Weight, int] = {}
    odd: dict[Weight, int] = {}
    for d, terms in by_degree.items():
        tgt = even if d % 2 == 0 else odd
        for w, c in terms.items():
            w = transform(w)
            tgt[w] = tgt.get(w, 0) + c
    return GradedCharacter(FormalCharacter(even, rs.name), FormalCharacter(odd, rs.name))


def exterior_np_character(rs: RootSystem, sub: Subsystem | None = None,
                          cap: int = DEFAULT_SUBSET_CAP) -> GradedCharacter:
    """Character of the exterior algebra on the complement roots, graded by parity."""
    sub = sub or torus(rs)
    return _graded(rs, subset_sums_by_degree(rs, sub, cap), lambda w: w)


def rho_prime(rs: RootSystem, sub: Subsystem | None = None) -> Weight:
    """Half the sum of the complement roots."""
    sub = sub or torus(rs)
    total = Weight.zero(rs.rank)
    for a in sub.complement:
        total = total + a
    return total * Fraction(1, 2)


def spinor_character(rs: RootSystem, sub: Subsystem | None = None,
                     cap: int = DEFAULT_SUBSET_CAP) -> GradedCharacter:
    """Spinor module of p = h^perp; S+ collects the even exterior degrees.

    Built as the graded tensor product over complement roots of the
    two-dimensional spinors ``e^{a/2}`` (degree 0) + ``e^{-a/2}`` (degree 1),
    so its weights are ``rho' - (subset sum)``.
    """
    sub = sub or torus(rs)
    _check_cap(sub, cap)
    n = rs.rank
    # doubled coordinates keep the half-roots integral
    even: dict[tuple, int] = {(0,) * n: 1}
    odd: dict[tuple, int] = {}
    for a in sub.complement:
        ac = a.coords
        new_even: dict[tuple, int] = {}
        new_odd: dict[tuple, int] = {}
        for src, up, down in ((even, new_even, new_odd), (odd, new_odd, new_even)):
            for w, c in src.items():
                k = tuple(x + y for x, y in zip(w, ac))
                up[k] = up.get(k, 0) + c
                k = tuple(x - y for x, y in zip(w, ac))
                down[k] = down.get(k, 0) + c
        even, odd = new_even, new_odd
    half = Fraction(1, 2)
    return GradedCharacter(
        FormalCharacter({Weight(x * half for x in w): c for w, c in even.items()}, rs.name),
        FormalCharacter({Weight(x * half for x in w): c for w, c in odd.items()}, rs.name))


def spinor_by_degree(rs: RootSystem, sub: Subsystem | None = None,
                     cap: int = DEFAULT_SUBSET_CAP) -> dict[int, FormalCharacter]:
    """Spinor weights split by exterior degree (subset size)."""
    sub = sub or torus(rs)
    rp = rho_prime(rs, sub)
    return {d: FormalCharacter({rp - w: c for w, c in terms.items()}, rs.name)
            for d, terms in sorted(subset_sums_by_degree(rs, sub, cap).items())}


def nilspin_rhs(rs: RootSystem, sub: Subsystem | None = None,
                cap: int = DEFAULT_SUBSET_CAP) -> GradedCharacter:
    """``S* (x) U_rho'`` computed from the spinor character, gradewise."""
    sub = sub or torus(rs)
    S = spinor_character(rs, sub, cap)
    u = single(rs, rho_prime(rs, sub))
    return GradedCharacter(tensor(dual(S.even), u), tensor(dual(S.odd), u))


def nilspin_identity_holds(rs: RootSystem, sub: Subsystem | None = None,
                           cap: int = DEFAULT_SUBSET_CAP) -> bool:
    return exterior_np_character(rs, sub, cap) == nilspin_rhs(rs, sub, cap)


def levi_subsystems(rs: RootSystem) -> list[Subsystem]:
    """All 2^rank Levi subsystems, including the torus and the whole system."""
    out = []
    for mask in range(2 ** rs.rank):
        out.append(levi(rs, [i + 1 for i in range(rs.rank) if mask >> i & 1]))
    return out
