"""Run configuration: caps, tolerances and output format.

A config file is plain ``key = value`` lines (``#`` starts a comment).  The
CLI reads the file named by ``$BWBDIRAC_CONFIG`` if set.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from pathlib import Path

from .errors import DomainError

ENV_VAR = "BWBDIRAC_CONFIG"
FORMATS = ("table", "json")


@dataclass(frozen=True)
class Config:
    type_label: str | None = None
    weyl_cap: int = 10**6
    subset_cap: int = 24
    candidate_cap: int = 10**7
    matrix_cap: int = 200
    hermitian_tol: float = 1e-8
    kernel_tol: float = 1e-6
    supertrace_tol: float = 1e-9
    format: str | None = None   # None: each command picks its natural format

    def __post_init__(self):
        for name in ("weyl_cap", "subset_cap", "candidate_cap", "matrix_cap"):
            if getattr(self, name) <= 0:
                raise DomainError(f"{name} must be positive")
        for name in ("hermitian_tol", "kernel_tol", "supertrace_tol"):
            if not 0 < getattr(self, name) < 1:
                raise DomainError(f"{name} must lie in (0, 1)")
        if self.format is not None and self.format not in FORMATS:
            raise DomainError(f"format must be one of {', '.join(FORMATS)}")

    def updated(self, **changes) -> "Config":
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


def parse_config(text: str) -> Config:
    types = {f.name: f.type for f in fields(Config)}
    values = {}
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise DomainError(f"config line {n}: expected key = value")
        key, val = (p.strip() for p in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in types:
            raise DomainError(f"config line {n}: unknown key {key!r}")
        t = types[key]
        try:
            if "int" in t:
                values[key] = int(float(val)) if "e" in val.lower() else int(val)
            elif "float" in t:
                values[key] = float(val)
            else:
                values[key] = val
        except ValueError:
            raise DomainError(f"config line {n}: bad value {val!r} for {key}") from None
    return Config(**values)


def load_config(path: str | os.PathLike | None = None) -> Config:
    path = path or os.environ.get(ENV_VAR)
    if not path:
        return Config()
    p = Path(path)
    if not p.is_file():
        raise DomainError(f"config file {p} not found")
    return parse_config(p.read_text())
