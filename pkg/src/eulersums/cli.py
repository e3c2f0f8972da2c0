"""Command-line harness: verify single identities, run grid suites with a
worker pool, list the registry, and inspect kernel expansions and residue
ledgers.

Subcommands
    verify    one identity at explicit parameters (or its whole default grid)
    suite     batch verification from a JSON config, JSON/CSV/text reports
    list      registry table
    residues  residue-ledger magnitudes over a ladder of cutoffs
    table1    local kernel-expansion coefficients and validation error

Exit status: 0 all records pass, 1 at least one verification failure,
2 configuration/usage error.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from mpmath import mp, mpf

from .core import make_context
from .identities import (REGISTRY, ParamPoint, default_grid, get_identity,
                         verify_identity)
from .residues import (expand_kernel, residues_even_kernel,
                       residues_odd_kernel, residue_sum_check,
                       validate_expansion)

_INT_FIELDS = {"s", "m", "p", "n_small"}


class ConfigError(Exception):
    pass


# ---------------------------------------------------------------------------
# Parameter parsing / formatting
# ---------------------------------------------------------------------------

def parse_params(spec: Optional[str]) -> Optional[Dict[str, str]]:
    if not spec:
        return None
    out = {}
    for item in spec.split(","):
        if "=" not in item:
            raise ConfigError(f"bad parameter assignment {item!r}; "
                              "expected key=value")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def point_from_dict(d: Dict[str, str]) -> ParamPoint:
    kw = {}
    for k, v in d.items():
        if k in _INT_FIELDS:
            kw[k] = int(v)
        elif k in ("a", "b", "x", "y"):
            kw[k] = Fraction(v)
        else:
            raise ConfigError(f"unknown parameter name {k!r}")
    return ParamPoint(**kw)


def _dec(v, digits: int) -> str:
    return mp.nstr(mpf(v), digits + 5, strip_zeros=False)


# ---------------------------------------------------------------------------
# Suite configuration and report
# ---------------------------------------------------------------------------

@dataclass
class SuiteConfig:
    identities: List[str]
    digits: int = 40
    grid_override: Optional[List[Dict]] = None
    workers: int = 1
    output_path: str = ""
    format: str = "text"

    KEYS = ("identities", "digits", "grid_override", "workers",
            "output_path", "format")

    @classmethod
    def from_json(cls, path: str) -> "SuiteConfig":
        with open(path) as fh:
            raw = json.load(fh)
        unknown = set(raw) - set(cls.KEYS)
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        cfg = cls(**raw)
        cfg.validate()
        return cfg

    def validate(self) -> None:
        if self.identities == "all" or self.identities == ["all"]:
            self.identities = [e.id for e in REGISTRY]
        known = {e.id for e in REGISTRY}
        bad = [i for i in self.identities if i not in known]
        if bad:
            raise ConfigError(f"unknown identity ids: {bad}")
        if self.digits < 10:
            raise ConfigError("digits must be >= 10")
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")
        if self.format not in ("json", "csv", "text"):
            raise ConfigError(f"unknown format {self.format!r}")
        if self.grid_override is not None:
            for entry in self.grid_override:
                if set(entry) != {"id", "params"}:
                    raise ConfigError("grid_override entries need exactly "
                                      "'id' and 'params'")

    def as_dict(self) -> Dict:
        return {"identities": self.identities, "digits": self.digits,
                "grid_override": self.grid_override, "workers": self.workers,
                "output_path": self.output_path, "format": self.format}


@dataclass
class SuiteReport:
    config: Dict
    results: List[Dict]
    summary: Dict = field(default_factory=dict)

    def finalize(self) -> "SuiteReport":
        failed = [r for r in self.results if not r["pass"]]
        worst = "0"
        # error records carry an empty residual and cannot be compared
        numeric = [r["residual"] for r in self.results if r["residual"]]
        if numeric:
            worst = max(numeric, key=lambda s: mpf(s))
        self.summary = {
            "total": len(self.results),
            "passed": len(self.results) - len(failed),
            "failed": len(failed),
            "worst_residual": worst,
            "total_ms": sum(r["ms"] for r in self.results),
        }
        return self


def run_point(identity_id: str, params: Dict[str, str], digits: int) -> Dict:
    """Verify one (identity, point) job; always returns a record, recording
    evaluator errors as failures rather than raising."""
    entry = get_identity(identity_id)
    ctx = make_context(digits)
    t0 = time.monotonic()
    record = {"id": identity_id, "equation": entry.equation, "params": params}
    try:
        res = verify_identity(entry, point_from_dict(params), ctx)
        with mp.workdps(ctx.working_dps):
            record.update({
                "lhs": _dec(res.lhs.value, digits),
                "rhs": _dec(res.rhs.value, digits),
                "residual": _dec(res.residual, digits),
                "budget": _dec(res.budget, digits),
                "pass": res.passed,
            })
            if res.corrected_residual is not None:
                record["corrected_residual"] = _dec(res.corrected_residual,
                                                    digits)
            if res.note:
                record["note"] = res.note
    except Exception as exc:  # recorded, never aborts the suite
        record.update({"lhs": "", "rhs": "", "residual": "", "budget": "",
                       "pass": False, "error": f"{type(exc).__name__}: {exc}"})
    record["ms"] = int((time.monotonic() - t0) * 1000)
    return record


def _jobs_for(cfg: SuiteConfig) -> List[tuple]:
    jobs = []
    if cfg.grid_override is not None:
        for entry in cfg.grid_override:
            if entry["id"] not in cfg.identities:
                raise ConfigError(f"grid_override id {entry['id']!r} not in "
                                  "the identities list")
            jobs.append((entry["id"], dict(entry["params"]), cfg.digits))
    else:
        for ident in cfg.identities:
            for p in default_grid(get_identity(ident)):
                jobs.append((ident, p.as_dict(), cfg.digits))
    return jobs


def run_suite(cfg: SuiteConfig) -> SuiteReport:
    jobs = _jobs_for(cfg)
    if cfg.workers > 1:
        with concurrent.futures.ProcessPoolExecutor(cfg.workers) as pool:
            results = list(pool.map(_run_job, jobs, chunksize=4))
    else:
        results = [run_point(*j) for j in jobs]
    results.sort(key=lambda r: (r["id"], json.dumps(r["params"], sort_keys=True)))
    report = SuiteReport(cfg.as_dict(), results).finalize()
    text = format_report(report, cfg.format)
    if cfg.output_path:
        with open(cfg.output_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return report


def _run_job(job: tuple) -> Dict:
    return run_point(*job)


def format_report(report: SuiteReport, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"config": report.config, "results": report.results,
                           "summary": report.summary}, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["id", "equation", "params", "residual", "budget",
                    "pass", "ms"])
        for r in report.results:
            w.writerow([r["id"], r["equation"],
                        ",".join(f"{k}={v}" for k, v in r["params"].items()),
                        r["residual"], r["budget"], r["pass"], r["ms"]])
        return buf.getvalue()
    lines = []
    for r in report.results:
        ps = ",".join(f"{k}={v}" for k, v in r["params"].items())
        status = "PASS" if r["pass"] else "FAIL"
        extra = f"  [{r['error']}]" if r.get("error") else ""
        corr = f"  corrected={r['corrected_residual']}" \
            if r.get("corrected_residual") else ""
        lines.append(f"{status}  {r['id']:6s} {r['equation']:10s} [{ps}]  "
                     f"residual={r['residual']}  budget={r['budget']}  "
                     f"{r['ms']} ms{extra}{corr}")
    s = report.summary
    lines.append(f"{s['passed']}/{s['total']} passed, "
                 f"worst residual {s['worst_residual']}, "
                 f"{s['total_ms']} ms total")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Subcommand drivers
# ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    params = parse_params(args.param)
    cfg = SuiteConfig(identities=[args.id], digits=args.digits,
                      grid_override=[{"id": args.id, "params": params}]
                      if params else None,
                      format=args.format, output_path=args.out or "")
    cfg.validate()
    report = run_suite(cfg)
    return 0 if report.summary["failed"] == 0 else 1


def cmd_suite(args) -> int:
    cfg = SuiteConfig.from_json(args.config)
    if args.workers is not None:
        cfg.workers = args.workers
    if args.format is not None:
        cfg.format = args.format
    if args.out is not None:
        cfg.output_path = args.out
    cfg.validate()
    report = run_suite(cfg)
    return 0 if report.summary["failed"] == 0 else 1


def cmd_list(_args) -> int:
    for e in REGISTRY:
        print(f"{e.id:6s} — Eq. {e.equation}")
        print(f"        {e.description}")
        print(f"        parameters: {e.param_signature}")
    print(f"{len(REGISTRY)} identities registered")
    return 0


def cmd_residues(args) -> int:
    ctx = make_context(args.digits)
    a = mpf(Fraction(args.a).numerator) / Fraction(args.a).denominator
    ladder = sorted({100, 1000, args.N})
    ladder = [n for n in ladder if n <= args.N]
    prev = None
    for N in ladder:
        if args.s is None:
            ledger = residues_even_kernel(a, args.m, N, ctx)
        else:
            ledger = residues_odd_kernel(a, args.m, args.s, N, ctx)
        mag = residue_sum_check(ledger)
        with mp.workdps(ctx.working_dps):
            print(f"N={N:>8d}  pole_at_zero={mp.nstr(ledger.pole_at_zero, 12)}  "
                  f"pole_at_a={mp.nstr(ledger.pole_at_a, 12)}  "
                  f"|residue sum|={mp.nstr(mag, 6)}")
        prev = mag
    print(f"final |residue sum| at N={ladder[-1]}: {mp.nstr(prev, 6)}")
    return 0


def cmd_table1(args) -> int:
    ctx = make_context(args.digits)
    exp = expand_kernel(args.kind, args.n, args.p, args.K, ctx)
    print(f"kernel {args.kind}, center {exp.center}, powers "
          f"{exp.lowest_order}..{args.K}")
    with mp.workdps(ctx.working_dps):
        for i, c in enumerate(exp.coefficients):
            print(f"  (s-{exp.center})^{exp.lowest_order + i:+d}: "
                  f"{mp.nstr(c, 20)}")
        for r in ("0.05", "0.1", "0.2"):
            err = validate_expansion(exp, args.kind, args.n, args.p,
                                     [mpf(r)], ctx)
            print(f"  validation error at r={r}: {mp.nstr(err, 6)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="eulersums",
        description="verify parametric Euler-sum identities at arbitrary "
                    "precision")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="verify one identity")
    v.add_argument("--id", required=True)
    v.add_argument("--digits", type=int, default=40)
    v.add_argument("--param", default=None,
                   help="k=v[,k=v...]; omit to run the default grid")
    v.add_argument("--format", choices=["json", "csv", "text"], default="text")
    v.add_argument("--out", default=None)
    v.set_defaults(fn=cmd_verify)

    s = sub.add_parser("suite", help="run a verification suite from a config")
    s.add_argument("--config", required=True)
    s.add_argument("--workers", type=int, default=None)
    s.add_argument("--format", choices=["json", "csv", "text"], default=None)
    s.add_argument("--out", default=None)
    s.set_defaults(fn=cmd_suite)

    l = sub.add_parser("list", help="list registered identities")
    l.set_defaults(fn=cmd_list)

    r = sub.add_parser("residues", help="residue-ledger convergence ladder")
    r.add_argument("--a", required=True)
    r.add_argument("--m", type=int, required=True)
    r.add_argument("--s", type=int, default=None)
    r.add_argument("--N", type=int, required=True)
    r.add_argument("--digits", type=int, default=30)
    r.set_defaults(fn=cmd_residues)

    t = sub.add_parser("table1", help="local kernel expansion inspector")
    t.add_argument("--kind", required=True,
                   choices=["cot", "psi_pos", "psi_neg", "polygamma_pos",
                            "polygamma_neg"])
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--K", type=int, required=True)
    t.add_argument("--p", type=int, default=2)
    t.add_argument("--digits", type=int, default=30)
    t.set_defaults(fn=cmd_table1)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except (KeyError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
