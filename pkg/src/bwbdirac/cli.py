"""Command-line frontend.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 internal-consistency
failure (closed form and oracle disagree).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import diracmat, dsl
from .config import FORMATS, Config, load_config
from .errors import DomainError, InternalConsistencyError
from .index import (bwb_index, gh_index, gh_oracle_index, kostant_pairing, label_box,
                    oracle_index, pairing_by_degree)
from .mckean import supertrace, t_independence_report
from .rootsys import RootSystem, Weight, inner, parse_type, parse_weight
from .spinor import levi
from .weyl import weyl_group_order


class UsageError(Exception):
    def __init__(self, message: str, usage: str | None = None):
        super().__init__(message)
        self.usage = usage


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}", self.format_usage())


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _floats(text: str, what: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",")]
    except ValueError:
        raise DomainError(f"cannot parse {what} {text!r}") from None


def _group(args, cfg: Config) -> RootSystem:
    label = args.type or cfg.type_label
    if not label:
        raise UsageError("--type is required (or set type_label in the config file)")
    return parse_type(label)


def _weight(rs: RootSystem, text: str | None, flag: str) -> Weight:
    if text is None:
        raise UsageError(f"{flag} is required")
    return parse_weight(text, rs.rank)


def _sub(rs: RootSystem, text: str | None):
    if not text:
        return None
    try:
        idx = [int(x) for x in text.split(",")]
    except ValueError:
        raise DomainError(f"cannot parse subsystem {text!r}") from None
    return levi(rs, idx)


def _radius(rs: RootSystem, mu: Weight, text: str | None) -> Fraction:
    if text is None:
        return Fraction(inner(rs, mu + rs.rho, mu + rs.rho))
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"cannot parse radius {text!r}") from None


# --------------------------------------------------------------------------
# Subcommands; each returns (exit code, lines)

def cmd_rootsys(args, cfg, fmt):
    rs = _group(args, cfg)
    if args.root_coords:
        show = lambda w: Weight(rs.to_root_coords(w)).labels()
    else:
        show = lambda w: w.labels()
    data = {"type": rs.name, "rank": rs.rank,
            "cartan_matrix": [list(r) for r in rs.cartan_matrix],
            "coordinates": "root" if args.root_coords else "dynkin",
            "rho": show(rs.rho),
            "positive_roots": [show(a) for a in rs.positive_roots],
            "weyl_order": weyl_group_order(rs)}
    if fmt == "json":
        return 0, [_dump(data)]
    lines = [f"type {rs.name}  rank {rs.rank}  |W| = {data['weyl_order']}",
             "cartan matrix: " + "; ".join(" ".join(str(c) for c in r) for r in rs.cartan_matrix),
             f"rho ({data['coordinates']}): {data['rho']}",
             f"positive roots ({len(rs.positive_roots)}):"]
    lines += [f"  {r}" for r in data["positive_roots"]]
    return 0, lines


def cmd_index(args, cfg, fmt):
    rs = _group(args, cfg)
    mu = _weight(rs, args.mu, "--mu")
    res = oracle_index(rs, mu, cfg.candidate_cap) if args.oracle else bwb_index(rs, mu)
    return 0, [_dump(res.to_json()) if fmt == "json" else str(res)]


def cmd_gh_index(args, cfg, fmt):
    rs = _group(args, cfg)
    mu = _weight(rs, args.mu, "--mu")
    sub = _sub(rs, args.sub)
    if sub is None:
        raise UsageError("--sub is required")
    if args.oracle:
        res = gh_oracle_index(rs, sub, mu, cfg.candidate_cap)
    else:
        res = gh_index(rs, sub, mu)
    return 0, [_dump(res.to_json()) if fmt == "json" else str(res)]


def cmd_verify(args, cfg, fmt):
    rs = _group(args, cfg)
    sub = _sub(rs, args.sub)
    checked = 0
    mismatches = []
    for mu in label_box(rs.rank, args.box):
        if sub is not None and not sub.is_dominant(mu):
            continue
        checked += 1
        if sub is None:
            closed = bwb_index(rs, mu)
            oracle = lambda: oracle_index(rs, mu, cfg.candidate_cap)
        else:
            closed = gh_index(rs, sub, mu)
            oracle = lambda: gh_oracle_index(rs, sub, mu, cfg.candidate_cap)
        try:
            other = oracle()
        except InternalConsistencyError as exc:
            mismatches.append({"mu": mu.labels(), "closed_form": closed.to_json(),
                               "oracle": str(exc)})
            continue
        if other != closed:
            mismatches.append({"mu": mu.labels(), "closed_form": closed.to_json(),
                               "oracle": other.to_json()})
    summary = (f"checked {checked} weights: all match" if not mismatches
               else f"checked {checked} weights: {len(mismatches)} mismatch"
               + ("es" if len(mismatches) > 1 else ""))
    code = 3 if mismatches else 0
    if fmt == "json":
        return code, [_dump({"checked": checked, "mismatches": mismatches, "summary": summary})]
    lines = [f"mismatch at mu={m['mu']}: closed form {_dump(m['closed_form'])}, "
             f"oracle {m['oracle'] if isinstance(m['oracle'], str) else _dump(m['oracle'])}"
             for m in mismatches]
    return code, lines + [summary]


def cmd_pairing(args, cfg, fmt):
    rs = _group(args, cfg)
    mu = _weight(rs, args.mu, "--mu")
    lam = _weight(rs, args.lam, "--lambda")
    p, q = kostant_pairing(rs, lam, mu)
    by_deg = pairing_by_degree(rs, lam, mu)
    data = {"lambda": lam.labels(), "mu": mu.labels(), "plus": p, "minus": q,
            "difference": p - q,
            "by_degree": [{"degree": d, "mult": m} for d, m in sorted(by_deg.items())]}
    if fmt == "json":
        return 0, [_dump(data)]
    degs = ", ".join(f"{d}:{m}" for d, m in sorted(by_deg.items())) or "none"
    return 0, [f"lambda={lam} mu={mu}: S+ {p}, S- {q}, difference {p - q}; by degree {degs}"]


def cmd_supertrace(args, cfg, fmt):
    rs = _group(args, cfg)
    mu = _weight(rs, args.mu, "--mu")
    theta = _floats(args.theta, "theta") if args.theta else [0.0] * rs.rank
    ts = _floats(args.ts, "ts")
    if any(t <= 0 for t in ts):
        raise DomainError("t must be positive")
    radius = _radius(rs, mu, args.radius_sq)
    rep = None
    if len(ts) > 1:
        rep = t_independence_report(rs, mu, theta, ts, radius)
        rows = rep.rows()
    else:
        v = supertrace(rs, mu, theta, ts[0], radius)
        rows = [{"t": ts[0], "value_re": v.real, "value_im": v.imag}]
    if fmt == "json":
        return 0, [_dump(rows)]
    lines = [f"t={r['t']:g}  value={r['value_re']:.12g}{r['value_im']:+.3g}i" for r in rows]
    if rep is not None:
        lines.append(f"max relative deviation {rep.max_rel_dev:.3e}")
    return 0, lines


def cmd_dirac(args, cfg, fmt):
    rs = _group(args, cfg)
    mu = _weight(rs, args.mu, "--mu")
    radius = _radius(rs, mu, args.radius_sq)
    if args.lam is not None and args.radius_sq is None:
        lam = parse_weight(args.lam, rs.rank)
        radius = max(radius, Fraction(inner(rs, lam + rs.rho, lam + rs.rho)))
    entries = diracmat.kernel_report(rs, mu, radius,
                                     cap=cfg.candidate_cap, tol=cfg.kernel_tol,
                                     matrix_cap=cfg.matrix_cap)
    if args.lam is not None:
        lam = parse_weight(args.lam, rs.rank)
        entries = [e for e in entries if e.lam == lam]
    bad = [e for e in entries if e.max_dev >= cfg.hermitian_tol]
    code = 3 if bad else 0
    if fmt == "json":
        return code, [_dump([e.to_json() for e in entries])]
    lines = []
    for e in entries:
        k = f"kernel {e.kernel_dim}" + (f" {e.parity} deg {list(e.degrees)}" if e.kernel_dim else "")
        lines.append(f"lambda={e.lam} dim {e.space_dim} ({e.even_dim}+{e.odd_dim}) "
                     f"D^2={e.scalar} dev {e.max_dev:.1e} {k}")
    return code, lines


def cmd_eval(args, cfg, fmt):
    rs = _group(args, cfg)
    if args.expr is None:
        raise UsageError("--expr is required")
    value = dsl.evaluate(rs, dsl.parse(args.expr))
    kind = dsl.kind_of(value)
    if fmt == "json":
        return 0, [_dump({"result_kind": kind, "value": dsl.value_to_json(value)})]
    if kind == "character":
        return 0, [f"{w} : {m}" for w, m in value.items()] or ["0"]
    return 0, [str(value)]


COMMANDS = {
    "rootsys": (cmd_rootsys, "json", "root system data"),
    "index": (cmd_index, "json", "equivariant index on G/T"),
    "verify": (cmd_verify, "table", "closed form vs shell oracle over a label box"),
    "pairing": (cmd_pairing, "json", "Kostant pairing for one (lambda, mu)"),
    "supertrace": (cmd_supertrace, "json", "truncated McKean-Singer supertrace"),
    "dirac": (cmd_dirac, "json", "explicit cubic Dirac matrices and kernels (rank <= 2)"),
    "gh-index": (cmd_gh_index, "json", "equivariant index on G/H for a Levi subsystem"),
    "eval": (cmd_eval, "json", "evaluate a character-ring expression"),
}


def build_parser() -> _Parser:
    parser = _Parser(prog="bwbdirac", description="Equivariant index of the cubic Dirac operator")
    subs = parser.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    for name, (_, _, helptext) in COMMANDS.items():
        p = subs.add_parser(name, help=helptext)
        p.add_argument("--type", help="group type, e.g. A2")
        p.add_argument("--format", choices=FORMATS)
        if name in ("index", "gh-index", "pairing", "supertrace", "dirac"):
            p.add_argument("--mu", help="weight, comma-separated Dynkin labels")
        if name in ("pairing", "dirac"):
            p.add_argument("--lambda", dest="lam", help="highest weight")
        if name in ("gh-index", "verify"):
            p.add_argument("--sub", help="comma list of simple-root indices (1-based)")
        if name in ("index", "gh-index"):
            p.add_argument("--oracle", action="store_true", help="use the shell oracle")
        if name == "verify":
            p.add_argument("--box", type=int, default=3, help="labels range over [-N, N]")
        if name in ("supertrace", "dirac"):
            p.add_argument("--radius-sq", help="truncation |lam+rho|^2 <= R (default |mu+rho|^2)")
        if name == "supertrace":
            p.add_argument("--theta", help="torus point, comma list")
            p.add_argument("--ts", default="0.1,1,10", help="comma list of t values")
        if name == "rootsys":
            p.add_argument("--root-coords", action="store_true",
                           help="show roots in simple-root coordinates")
        if name == "eval":
            p.add_argument("--expr")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a command is required")
        cfg = load_config()
        func, default_fmt, _ = COMMANDS[args.command]
        fmt = args.format or cfg.format or default_fmt
        code, lines = func(args, cfg, fmt)
    except UsageError as exc:
        print(exc.usage or parser.format_usage(), end="", file=sys.stderr)
        print(exc, file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 3
    for line in lines:
        print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
