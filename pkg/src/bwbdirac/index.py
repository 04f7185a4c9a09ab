"""Equivariant index of the cubic Dirac operator on G/T and G/H.

Two independent routes:

* :func:`bwb_index` -- closed form: ``(-1)^l(mu) [V_{w.mu}]`` when ``mu + rho``
  is regular, else zero.
* :func:`oracle_index` -- sum over the Casimir shell
  ``|lam + rho| = |mu + rho|`` of ``[V_lam] <V_lam (x) (S+ - S-), U_{mu+rho}>_T``,
  with every pairing computed from weight multiplicities.

Their agreement is the main consistency check of the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .charring import (FormalCharacter, freudenthal_multiplicities,
                       h_irrep_multiplicity, pairing_T, single, tensor)
from .errors import CapExceeded, DomainError, InternalConsistencyError
from .rootsys import RootSystem, Weight, dim_irrep, inner, is_dominant
from .spinor import (Subsystem, rho_prime, spinor_by_degree,
                     spinor_character, torus)
from .weyl import make_dominant_shifted

DEFAULT_CANDIDATE_CAP = 10**7


@dataclass(frozen=True)
class IndexResult:
    zero: bool
    sign: int | None = None
    lam: Weight | None = None
    length: int | None = None
    dimension: int | None = None

    @classmethod
    def nothing(cls) -> "IndexResult":
        return cls(True)

    def to_json(self) -> dict:
        if self.zero:
            return {"zero": True}
        return {"zero": False, "sign": self.sign, "lambda": self.lam.labels(),
                "length": self.length, "dimension": self.dimension}

    def __str__(self) -> str:
        if self.zero:
            return "0"
        s = "+" if self.sign > 0 else "-"
        return f"{s}[V{self.lam}] (length {self.length}, dim {self.dimension})"


def _require_integral(rs: RootSystem, mu: Weight) -> None:
    if len(mu) != rs.rank:
        raise DomainError(f"weight {mu} has {len(mu)} labels, rank is {rs.rank}")
    if not mu.is_integral:
        raise DomainError("weight must be integral")


def bwb_index(rs: RootSystem, mu: Weight) -> IndexResult:
    """Closed-form index on G/T."""
    _require_integral(rs, mu)
    d = make_dominant_shifted(rs, mu)
    if not d.free:
        return IndexResult.nothing()
    return IndexResult(False, -1 if d.length % 2 else 1, d.lam, d.length,
                       dim_irrep(rs, d.lam))


# --------------------------------------------------------------------------
# Pairings

@lru_cache(maxsize=2048)
def _twisted(rs: RootSystem, lam: Weight, sub: Subsystem, degree: int | None
             ) -> tuple[FormalCharacter, ...]:
    """``V_lam (x) S+`` and ``V_lam (x) S-`` or, with a degree, ``V_lam (x) S_degree``."""
    V = freudenthal_multiplicities(rs, lam)
    if degree is None:
        S = spinor_character(rs, sub)
        return tensor(V, S.even), tensor(V, S.odd)
    return (tensor(V, spinor_by_degree(rs, sub)[degree]),)


def kostant_pairing(rs: RootSystem, lam: Weight, mu: Weight) -> tuple[int, int]:
    """``(<V_lam (x) S+, U_{mu+rho}>_T, <V_lam (x) S-, U_{mu+rho}>_T)``."""
    _require_integral(rs, mu)
    if not lam.is_integral or not is_dominant(rs, lam):
        raise DomainError(f"highest weight {lam} must be dominant integral")
    plus, minus = _twisted(rs, lam, torus(rs), None)
    u = single(rs, mu + rs.rho)
    return pairing_T(plus, u), pairing_T(minus, u)


def pairing_by_degree(rs: RootSystem, lam: Weight, mu: Weight,
                      sub: Subsystem | None = None) -> dict[int, int]:
    """Pairing of ``V_lam (x) S`` with the twist, split by exterior degree.

    For ``sub`` = torus this is ``<V_lam (x) S_d, U_{mu+rho}>_T``; otherwise the
    H-multiplicity of ``W_{mu+rho'}`` in ``V_lam (x) S_d``.  Zero entries omitted.
    """
    sub = sub or torus(rs)
    target = mu + rho_prime(rs, sub)
    out = {}
    for d in spinor_by_degree(rs, sub):
        (ch,) = _twisted(rs, lam, sub, d)
        if sub.roots_plus:
            m = h_irrep_multiplicity(sub, ch, target)
        else:
            m = ch.mult(target)
        if m:
            out[d] = m
    return out


# --------------------------------------------------------------------------
# Shell oracle

def shell_enumerate(rs: RootSystem, radius_sq, cap: int = DEFAULT_CANDIDATE_CAP
                    ) -> list[Weight]:
    """Dominant integral ``lam`` with ``|lam + rho|^2 <= radius_sq``.

    Sorted by ``(|lam + rho|^2, lam)``.
    """
    R = Fraction(radius_sq)
    if R < 0:
        raise DomainError("radius_sq must be nonnegative")
    bounds = []
    for i in range(rs.rank):
        # all gram entries are positive, so |lam+rho|^2 >= (lam_i+1)^2 gram_ii
        c = math.isqrt(math.floor(R / rs.gram[i][i])) + 1
        while c > 0 and c * c * rs.gram[i][i] > R:
            c -= 1
        bounds.append(c - 1)
    if any(b < 0 for b in bounds):
        return []
    count = math.prod(b + 1 for b in bounds)
    if count > cap:
        raise CapExceeded(f"shell enumeration needs {count} candidates, cap is {cap}")
    out = []

    def rec(prefix):
        if len(prefix) == rs.rank:
            lam = Weight(prefix)
            n = inner(rs, lam + rs.rho, lam + rs.rho)
            if n <= R:
                out.append((n, lam))
            return
        for c in range(bounds[len(prefix)] + 1):
            rec(prefix + [c])

    rec([])
    out.sort(key=lambda t: (t[0], t[1]))
    return [lam for _, lam in out]


def exact_shell(rs: RootSystem, mu: Weight, sub: Subsystem | None = None,
                cap: int = DEFAULT_CANDIDATE_CAP) -> list[Weight]:
    """Dominant ``lam`` with ``|lam + rho|^2 == |mu + rho|^2`` exactly."""
    r2 = inner(rs, mu + rs.rho, mu + rs.rho)
    return [lam for lam in shell_enumerate(rs, r2, cap)
            if inner(rs, lam + rs.rho, lam + rs.rho) == r2]


def _package(rs: RootSystem, mu: Weight, contributions: list) -> IndexResult:
    if not contributions:
        return IndexResult.nothing()
    if len(contributions) > 1:
        raise InternalConsistencyError(
            f"mu={mu}: {len(contributions)} shell members contribute: "
            + ", ".join(f"{lam}->{c}" for lam, c, _ in contributions))
    lam, coeff, degrees = contributions[0]
    if coeff not in (1, -1):
        raise InternalConsistencyError(f"mu={mu}: coefficient {coeff} at {lam}")
    if len(degrees) != 1:
        raise InternalConsistencyError(
            f"mu={mu}: contribution at {lam} spread over degrees {degrees}")
    (degree, mult), = degrees.items()
    if mult != 1 or (-1) ** degree != coeff:
        raise InternalConsistencyError(
            f"mu={mu}: degree {degree} (mult {mult}) inconsistent with sign {coeff}")
    return IndexResult(False, coeff, lam, degree, dim_irrep(rs, lam))


def oracle_index(rs: RootSystem, mu: Weight,
                 cap: int = DEFAULT_CANDIDATE_CAP) -> IndexResult:
    """Index from the shell sum of supertrace pairings (G/T).

    The length is read off as the exterior degree carrying the surviving
    pairing, not from the Weyl group.
    """
    _require_integral(rs, mu)
    contributions = []
    for lam in exact_shell(rs, mu, cap=cap):
        p, q = kostant_pairing(rs, lam, mu)
        if p - q:
            contributions.append((lam, p - q, pairing_by_degree(rs, lam, mu)))
    return _package(rs, mu, contributions)


def gh_index(rs: RootSystem, sub: Subsystem, mu: Weight) -> IndexResult:
    """Closed-form index on G/H, twist ``W_{mu + rho'}``.

    ``mu`` must be integral and dominant for the subsystem.  The regularity
    test and dot action use the full ``rho`` because ``rho' + rho_h = rho``.
    """
    _require_integral(rs, mu)
    if not sub.is_dominant(mu):
        raise DomainError(f"{mu} is not dominant for the subsystem")
    return bwb_index(rs, mu)


def gh_oracle_index(rs: RootSystem, sub: Subsystem, mu: Weight,
                    cap: int = DEFAULT_CANDIDATE_CAP) -> IndexResult:
    """Shell-sum index on G/H with H-multiplicities from Weyl alternation."""
    _require_integral(rs, mu)
    if not sub.is_dominant(mu):
        raise DomainError(f"{mu} is not dominant for the subsystem")
    contributions = []
    for lam in exact_shell(rs, mu, cap=cap):
        by_deg = pairing_by_degree(rs, lam, mu, sub)
        coeff = sum((-1) ** d * m for d, m in by_deg.items())
        if coeff:
            contributions.append((lam, coeff, by_deg))
    return _package(rs, mu, contributions)


def label_box(rank: int, n: int):
    """All integral weights with labels in ``[-n, n]``, lexicographic."""
    from itertools import product
    return [Weight(c) for c in product(range(-n, n + 1), repeat=rank)]
