"""Show the two contour-side diagnostics:

1. the truncation error of a local kernel expansion shrinks like r^(K+1)
   as the sampling radius r decreases;
2. the sum of all residues inside a growing square contour tends to zero,
   which is the engine behind the closed-form evaluations.
"""

import math

from mpmath import mp, mpf

from eulersums import make_context
from eulersums.residues import (expand_kernel, residue_sum_check,
                                residues_even_kernel, validate_expansion)

ctx = make_context(40)

with mp.workdps(ctx.working_dps):
    print("truncation order of the psi(-s) expansion about s = 2, K = 6")
    K = 6
    exp = expand_kernel("psi_pos", 2, 2, K, ctx)
    prev = None
    for r in (mpf(1) / 5, mpf(1) / 10, mpf(1) / 20):
        dev = validate_expansion(exp, "psi_pos", 2, 2, [r], ctx)
        slope = "" if prev is None else \
            f"   slope {math.log(float(prev / dev), 2):.2f} (expect {K + 1})"
        print(f"  r = {mp.nstr(r, 3):6}  max deviation {mp.nstr(dev, 3)}{slope}")
        prev = dev
    print()

    print("residue-sum vanishing for the even kernel, a = 3/10, m = 1")
    for N in (100, 1000, 10000):
        ledger = residues_even_kernel(mpf(3) / 10, 1, N, ctx)
        print(f"  N = {N:6}  |sum of residues| = "
          f"{mp.nstr(residue_sum_check(ledger), 3)}")
