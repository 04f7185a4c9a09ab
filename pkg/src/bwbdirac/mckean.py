"""Truncated equivariant supertrace ``Str(g exp(-t D^2))`` on G/T.

On the Peter-Weyl summand indexed by ``lam`` the square of the cubic Dirac
operator is the scalar ``|lam+rho|^2 - |mu+rho|^2``, so the supertrace is a
finite sum of characters weighted by pairings and Gaussian factors.  Off the
shell the pairing difference vanishes identically, which is what makes the
sum independent of ``t``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .charring import evaluate_at_torus, freudenthal_multiplicities
from .errors import DomainError
from .index import DEFAULT_CANDIDATE_CAP, kostant_pairing, shell_enumerate
from .rootsys import RootSystem, Weight, inner


def supertrace_terms(rs: RootSystem, mu: Weight, radius_sq,
                     cap: int = DEFAULT_CANDIDATE_CAP):
    """``(lam, pairing difference, D^2 scalar)`` for each ``lam`` in the ball."""
    r2 = inner(rs, mu + rs.rho, mu + rs.rho)
    if Fraction(radius_sq) < r2:
        raise DomainError(
            f"radius_sq={radius_sq} is too small; need at least |mu+rho|^2 = {r2}")
    out = []
    for lam in shell_enumerate(rs, radius_sq, cap):
        p, q = kostant_pairing(rs, lam, mu)
        out.append((lam, p - q, inner(rs, lam + rs.rho, lam + rs.rho) - r2))
    return out


def supertrace(rs: RootSystem, mu: Weight, theta: Sequence[float], t: float,
               radius_sq, cap: int = DEFAULT_CANDIDATE_CAP) -> complex:
    if not t > 0:
        raise DomainError("t must be positive")
    if len(theta) != rs.rank:
        raise DomainError(f"theta needs {rs.rank} entries")
    total = 0j
    for lam, diff, scalar in supertrace_terms(rs, mu, radius_sq, cap):
        if diff:
            chi = evaluate_at_torus(freudenthal_multiplicities(rs, lam), theta)
            total += chi * diff * math.exp(-t * float(scalar))
    return total


@dataclass(frozen=True)
class TReport:
    ts: tuple[float, ...]
    values: tuple[complex, ...]
    max_rel_dev: float

    def rows(self) -> list[dict]:
        return [{"t": t, "value_re": v.real, "value_im": v.imag}
                for t, v in zip(self.ts, self.values)]


def t_independence_report(rs: RootSystem, mu: Weight, theta: Sequence[float],
                          ts: Sequence[float], radius_sq) -> TReport:
    """Supertrace at several ``t`` and the largest pairwise relative deviation.

    Relative deviation of a pair is ``|a - b| / max(|a|, |b|)``; a pair of
    exact zeros counts as 0.
    """
    if len(ts) < 2:
        raise DomainError("need at least two values of t")
    values = tuple(supertrace(rs, mu, theta, t, radius_sq) for t in ts)
    dev = 0.0
    for a, b in itertools.combinations(values, 2):
        scale = max(abs(a), abs(b))
        if scale:
            dev = max(dev, abs(a - b) / scale)
    return TReport(tuple(ts), values, dev)
