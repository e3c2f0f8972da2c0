import math

import pytest
from mpmath import mp, mpf

from eulersums.core import make_context
from eulersums.residues import (KERNEL_KINDS, expand_kernel,
                                polygamma_neg_arg, residue_sum_check,
                                residues_even_kernel, residues_odd_kernel,
                                validate_expansion)

CTX = make_context(40)


def test_polygamma_neg_arg_matches_mpmath():
    # mpmath evaluates psi^(k) directly at negative non-integer arguments;
    # the reflection-based route must agree
    with mp.workdps(CTX.working_dps):
        for k in (0, 1, 2, 5):
            for s in (mpf(1) / 3, mpf(5) / 4, mpf(27) / 10):
                got = polygamma_neg_arg(k, s, CTX)
                want = mp.psi(k, -s)
                assert abs(got - want) < abs(want) * mpf(10) ** -35, (k, s)


def test_expansion_matches_direct_kernel():
    with mp.workdps(CTX.working_dps):
        for kind in KERNEL_KINDS:
            n = 0 if kind == "psi_pos" else 2
            exp = expand_kernel(kind, n, 2, 6, CTX)
            dev = validate_expansion(exp, kind, n, 2, [mpf(1) / 10], CTX)
            assert dev < mpf(10) ** -6, (kind, dev)


def test_expansion_order_slope():
    # deviation ~ C r^(K+1): halving r from 0.2 to 0.1 must shrink the
    # deviation by roughly 2^(K+1)
    with mp.workdps(CTX.working_dps):
        K = 4
        exp = expand_kernel("cot", 3, 2, K, CTX)
        d1 = validate_expansion(exp, "cot", 3, 2, [mpf(2) / 10], CTX)
        d2 = validate_expansion(exp, "cot", 3, 2, [mpf(1) / 10], CTX)
        slope = math.log(float(d1 / d2), 2)
        assert abs(slope - (K + 1)) < 0.5, slope


def test_expand_kernel_validation():
    with pytest.raises(ValueError):
        expand_kernel("nonsense", 1, 2, 4, CTX)
    with pytest.raises(ValueError):
        expand_kernel("psi_pos", -1, 2, 4, CTX)
    with pytest.raises(ValueError):
        validate_expansion(expand_kernel("cot", 1, 2, 4, CTX),
                           "cot", 1, 2, [mpf(3) / 4], CTX)


def test_even_kernel_ledger_shrinks():
    with mp.workdps(CTX.working_dps):
        a = mpf(3) / 10
        l1 = residues_even_kernel(a, 1, 200, CTX)
        l2 = residues_even_kernel(a, 1, 2000, CTX)
        s1, s2 = residue_sum_check(l1), residue_sum_check(l2)
        assert s2 < s1
        assert s2 < mpf(10) ** -6


def test_odd_kernel_ledger_shrinks():
    with mp.workdps(CTX.working_dps):
        a = mpf(1) / 4
        l1 = residues_odd_kernel(a, 1, 1, 200, CTX)
        l2 = residues_odd_kernel(a, 1, 1, 2000, CTX)
        assert residue_sum_check(l2) < residue_sum_check(l1)


def test_ledger_sensitivity_to_corruption():
    # flipping the sign of one contribution must destroy the cancellation
    with mp.workdps(CTX.working_dps):
        ledger = residues_even_kernel(mpf(3) / 10, 1, 500, CTX)
        good = residue_sum_check(ledger)
        from dataclasses import replace
        bad = replace(ledger, pole_at_a=-ledger.pole_at_a)
        assert residue_sum_check(bad) > 1000 * good
