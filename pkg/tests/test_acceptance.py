"""Acceptance gate: the seven headline guarantees of the package.

1. Exact combinatorial identities hold in rational arithmetic for n <= 30,
   p <= 6, in under 10 seconds.
2. Classical non-parametric anchors reproduce at 50 digits to 1e-40.
3. The full identity registry passes its default grids at 40 digits within
   certified budgets (floor 1e-30) in under 5 minutes; the two documented
   closed-form misprints are the only failures and their corrected forms
   pass.
4. The five local kernel expansions have truncation error of the expected
   order K+1 (log-log slope over radii 0.05/0.1/0.2 at K = 6).
5. Truncated residue ledgers for the even kernel vanish as the contour
   grows.
6. The moment-integral closed form matches direct quadrature to 1e-30.
7. Parametric identities are continuous at a -> 0 against their a = 0
   specializations.
"""

import json
import math
import time
from fractions import Fraction

import pytest
from mpmath import mp, mpf

from eulersums.cli import SuiteConfig, run_suite
from eulersums.combinatorics import (verify_harmonic_convolutions,
                                     verify_stirling_closed_forms,
                                     verify_stirling_sum_identities)
from eulersums.core import SmoothTerm, make_context, sum_series
from eulersums.identities import get_identity, pt, verify_identity
from eulersums.residues import (expand_kernel, residue_sum_check,
                                residues_even_kernel, validate_expansion)

F = Fraction


def test_1_exact_combinatorics_under_10s():
    t0 = time.monotonic()
    for n in range(1, 31):
        assert verify_stirling_closed_forms(n), n
        assert verify_harmonic_convolutions(n), n
        for p in range(1, 7):
            assert verify_stirling_sum_identities(n, p), (n, p)
    assert time.monotonic() - t0 < 10


def test_2_classical_anchors_50_digits():
    ctx = make_context(50)
    tol = mpf(10) ** -40
    with mp.workdps(ctx.working_dps):
        gamma = +mp.euler
        z2, z3, z4 = mp.zeta(2), mp.zeta(3), mp.zeta(4)
        assert abs(z2 * z2 - mpf(5) / 2 * z4) < tol

        lin = sum_series(
            SmoothTerm(lambda t: (mp.psi(0, t + 1) + gamma) / t ** 3, 3), ctx)
        assert abs(lin.value - (5 * z4 - z2 * z2) / 2) < tol

        shifted = sum_series(
            SmoothTerm(lambda t: (mp.psi(0, t + 1) + gamma) / (t + 1) ** 2,
                       2), ctx)
        assert abs(shifted.value - z3) < tol


def test_3_full_registry_sweep_40_digits(tmp_path):
    out = tmp_path / "sweep.json"
    cfg = SuiteConfig(identities="all", digits=40, workers=4,
                      output_path=str(out), format="json")
    cfg.validate()
    t0 = time.monotonic()
    run_suite(cfg)
    elapsed = time.monotonic() - t0
    assert elapsed < 300, f"sweep took {elapsed:.0f}s"

    report = json.loads(out.read_text())
    floor = mpf(10) ** -30
    fails = []
    for rec in report["results"]:
        assert "error" not in rec, rec
        residual, budget = mpf(rec["residual"]), mpf(rec["budget"])
        if rec["pass"]:
            assert residual <= max(budget, floor), rec
        else:
            fails.append(rec)
            # the only tolerated failures are the two documented closed-form
            # misprints, and the corrected forms must pass in their place
            assert rec["id"] in ("E2.14", "E2.30"), rec
            if rec["id"] == "E2.14":
                assert int(rec["params"]["m"]) >= 1, rec
            assert rec["note"], rec
            corrected = mpf(rec["corrected_residual"])
            assert corrected <= max(budget, floor), rec
    # misprint coverage: every affected grid point is flagged
    assert len([r for r in fails if r["id"] == "E2.14"]) == 24
    assert len([r for r in fails if r["id"] == "E2.30"]) == 4


def _fit_slope(radii, devs):
    xs = [math.log(float(r)) for r in radii]
    ys = [math.log(float(d)) for d in devs]
    n = len(xs)
    mx, my = sum(xs) / n, sum(ys) / n
    return sum((x - mx) * (y - my) for x, y in zip(xs, ys)) \
        / sum((x - mx) ** 2 for x in xs)


def test_4_kernel_expansion_orders():
    ctx = make_context(40)
    K = 6
    radii = [mpf(1) / 20, mpf(1) / 10, mpf(1) / 5]
    cases = []
    for kind in ("cot", "psi_pos", "psi_neg"):
        for n in (0, 1, 2, 5):
            if kind == "psi_neg" and n == 0:
                continue
            cases.append((kind, n, 2))
    for kind in ("polygamma_pos", "polygamma_neg"):
        for n in (0, 1, 2, 5):
            if kind == "polygamma_neg" and n == 0:
                continue
            for p in (2, 3):
                cases.append((kind, n, p))
    with mp.workdps(ctx.working_dps):
        for kind, n, p in cases:
            exp = expand_kernel(kind, n, p, K, ctx)
            devs = [validate_expansion(exp, kind, n, p, [r], ctx)
                    for r in radii]
            slope = _fit_slope(radii, devs)
            if kind == "polygamma_pos" and p == 2 and n >= 1:
                # the order-(K+1) coefficient is the zeta tail
                # zeta(K+2) - zeta_n(K+2) ~ n^-(K+1), so the first omitted
                # term is dominated by the next power and the measured
                # slope exceeds K+1; the expansion error is still
                # O(r^(K+1))
                assert K + 0.8 <= slope <= K + 2.2, (kind, n, p, slope)
            else:
                assert abs(slope - (K + 1)) <= 0.2, (kind, n, p, slope)


def test_5_residue_ledger_vanishing():
    ctx = make_context(30)
    with mp.workdps(ctx.working_dps):
        for a, m in ((mpf(3) / 10, 1), (mpf(1) / 4, 2), (mpf(-2) / 5, 1)):
            t0 = time.monotonic()
            s3 = residue_sum_check(residues_even_kernel(a, m, 10 ** 3, ctx))
            s4 = residue_sum_check(residues_even_kernel(a, m, 10 ** 4, ctx))
            elapsed = time.monotonic() - t0
            assert s4 < mpf(10) ** -6, (float(a), m, float(s4))
            assert s4 < s3, (float(a), m)
            assert elapsed < 60, (float(a), m, elapsed)


def test_6_moment_integral_closed_form():
    ctx = make_context(40)
    entry = get_identity("E4.4")
    tol = mpf(10) ** -30
    for m in (1, 2, 3):
        for n in (1, 2, 3, 4, 5):
            for a in (F(0), F(1, 2)):
                for b in (F(0), F(1, 2)):
                    for x in (F(1, 4), F(3, 4)):
                        res = verify_identity(
                            entry, pt(a=a, b=b, m=m, n_small=n, x=x), ctx)
                        assert res.residual < tol, (m, n, a, b, x,
                                                    str(res.residual))


def test_7_continuity_at_a_zero():
    ctx = make_context(30)
    eps = F(1, 10 ** 6)
    pairs = (("E2.24", "EH.s"), ("E3.1", "E3.12"), ("E3.13", "E3.23"))
    with mp.workdps(ctx.working_dps):
        for ident, ident0 in pairs:
            entry, entry0 = get_identity(ident), get_identity(ident0)
            for s in (2, 3):
                v = entry.lhs(pt(a=eps, s=s), ctx).value
                v0 = entry0.lhs(pt(s=s), ctx).value
                assert abs(v - v0) < mpf(10) ** -4, (ident, s,
                                                     float(abs(v - v0)))
