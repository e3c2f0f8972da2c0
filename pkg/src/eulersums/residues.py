"""Local expansions of the cotangent/polygamma kernels around their poles,
and the residue bookkeeping that generates the rational-kernel Euler-sum
evaluations.

The two kernel families handled here are

* the even kernel  pi*cot(pi*z) * psi^(2m-1)(-z)/(2m-1)!  paired with the
  base function 1/(z(z^2-a^2)), and
* the odd kernel   pi*cot(pi*z) * psi^(2m)(-z)/(2m)!      paired with
  z^(-2s)/(z^2-a^2).

Both are meromorphic with poles only at the integers and at +/-a, and the
total residue sum vanishes; :func:`residue_sum_check` measures how fast the
truncated total decays as the integer cutoff N grows.

Polygamma values at negative non-integer arguments are produced from
positive-argument values through derivatives of the reflection formula
psi(s) - psi(-s) = -1/s - pi*cot(pi*s); the cotangent-derivative
polynomials are precomputed with integer coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Optional

from mpmath import mp, mpf, binomial

from .core import PrecisionContext, SmoothTerm, sum_series
from .functions import pi_cot_pi

__all__ = [
    "LocalExpansion",
    "ResidueLedger",
    "KERNEL_KINDS",
    "expand_kernel",
    "validate_expansion",
    "polygamma_neg_arg",
    "residues_even_kernel",
    "residues_odd_kernel",
    "residue_sum_check",
]

KERNEL_KINDS = ("cot", "psi_pos", "psi_neg", "polygamma_pos", "polygamma_neg")


# ---------------------------------------------------------------------------
# Reflection: polygamma at negative arguments
# ---------------------------------------------------------------------------

_MAX_COT_ORDER = 7


def _cot_derivative_polys(kmax: int) -> List[Dict[int, int]]:
    """Integer coefficient tables: the k-th derivative of pi*cot(pi*s)
    equals pi^(k+1) * sum_j A[k][j] * cot(pi*s)^j."""
    polys = [{1: 1}]
    for _ in range(kmax):
        prev = polys[-1]
        nxt: Dict[int, int] = {}
        for j, coeff in prev.items():
            if j == 0:
                continue
            nxt[j - 1] = nxt.get(j - 1, 0) - j * coeff
            nxt[j + 1] = nxt.get(j + 1, 0) - j * coeff
        polys.append(nxt)
    return polys


_COT_POLYS = _cot_derivative_polys(_MAX_COT_ORDER)


def _cot_derivative(k: int, s, ctx: PrecisionContext):
    """k-th derivative of pi*cot(pi*s) at a non-integer s."""
    if k > _MAX_COT_ORDER:
        raise ValueError(f"cotangent derivatives precomputed only up to "
                         f"order {_MAX_COT_ORDER}, got {k}")
    c = pi_cot_pi(s, ctx) / mp.pi
    total = mpf(0)
    for j, coeff in _COT_POLYS[k].items():
        total += coeff * c ** j
    return total * mp.pi ** (k + 1)


def polygamma_neg_arg(k: int, s, ctx: PrecisionContext):
    """psi^(k)(-s) for non-integer s > 0, via the k-th derivative of the
    reflection formula (positive-argument polygamma plus cotangent)."""
    s = mpf(s)
    if s <= 0:
        raise ValueError("polygamma_neg_arg expects s > 0 (argument -s < 0)")
    base = mp.psi(k, s) + (-1) ** k * math.factorial(k) / s ** (k + 1) \
        + _cot_derivative(k, s, ctx)
    return (-1) ** k * base


# ---------------------------------------------------------------------------
# Table of local expansions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LocalExpansion:
    """Truncated Laurent expansion of a kernel around an integer center:
    kernel(s) ~= sum coefficients[i] * (s - center)^(lowest_order + i)."""

    center: int
    lowest_order: int
    coefficients: List[object]
    truncation_order: int

    def evaluate(self, s):
        u = mpf(s) - self.center
        total = mpf(0)
        for i, c in enumerate(self.coefficients):
            total += c * u ** (self.lowest_order + i)
        return total


def _zn(n: int, q: int):
    return mp.fsum(mpf(j) ** (-q) for j in range(1, n + 1))


def expand_kernel(kind: str, n: int, p: int, K: int,
                  ctx: PrecisionContext) -> LocalExpansion:
    """Local expansion of one of the five basic kernels around the pole at
    s = n (kinds ending in _pos, and cot) or s = -n (kinds ending in _neg),
    truncated at power K.  ``p`` is the polygamma order parameter and is
    ignored for the cot and first-order psi rows."""
    if K < 1:
        raise ValueError("K must be >= 1")
    if kind not in KERNEL_KINDS:
        raise ValueError(f"unknown kernel kind {kind!r}")
    if kind.endswith("_neg") and n < 1:
        raise ValueError("negative-center rows require n >= 1")
    if kind in ("cot", "psi_pos", "polygamma_pos") and n < 0:
        raise ValueError("positive-center rows require n >= 0")
    if kind.startswith("polygamma") and p < 2:
        raise ValueError("polygamma rows require p >= 2")

    with mp.workdps(ctx.working_dps):
        if kind == "cot":
            coeffs = [mpf(0)] * (K + 2)
            coeffs[0] = mpf(1)                       # power -1
            for k in range(1, (K + 1) // 2 + 1):
                if 2 * k - 1 <= K:
                    coeffs[2 * k] = -2 * mp.zeta(2 * k)
            return LocalExpansion(n, -1, coeffs, K)

        if kind == "psi_pos":
            coeffs = [mpf(1), _zn(n, 1)]             # powers -1, 0
            for k in range(1, K + 1):
                coeffs.append((-1) ** k * _zn(n, k + 1) - mp.zeta(k + 1))
            return LocalExpansion(n, -1, coeffs, K)

        if kind == "psi_neg":
            coeffs = [_zn(n - 1, 1)]                 # power 0
            for k in range(1, K + 1):
                coeffs.append(_zn(n - 1, k + 1) - mp.zeta(k + 1))
            return LocalExpansion(-n, 0, coeffs, K)

        if kind == "polygamma_pos":
            coeffs = [mpf(0)] * (K + p + 1)
            coeffs[0] = mpf(1)                       # power -p
            for i in range(p, K + p + 1):
                coeffs[i] = (-1) ** p * binomial(i - 1, p - 1) \
                    * (mp.zeta(i) + (-1) ** i * _zn(n, i))
            return LocalExpansion(n, -p, coeffs, K)

        # polygamma_neg
        coeffs = []
        for i in range(0, K + 1):
            coeffs.append((-1) ** p * binomial(p - 1 + i, p - 1)
                          * (mp.zeta(p + i) - _zn(n - 1, p + i)))
        return LocalExpansion(-n, 0, coeffs, K)


def _kernel_direct(kind: str, p: int, s, ctx: PrecisionContext):
    """Direct evaluation of the kernel the expansion approximates."""
    s = mpf(s)
    if kind == "cot":
        return pi_cot_pi(s, ctx)
    if kind in ("psi_pos", "psi_neg"):
        k, fac = 0, 1
    else:
        k, fac = p - 1, math.factorial(p - 1)
    if s < 0:
        val = mp.psi(k, -s)
    else:
        val = polygamma_neg_arg(k, s, ctx)
    if kind in ("psi_pos", "psi_neg"):
        return val + mp.euler
    return val / fac


def validate_expansion(exp: LocalExpansion, kind: str, n: int, p: int,
                       radii: List, ctx: PrecisionContext):
    """Maximum absolute deviation between the truncated expansion and the
    directly evaluated kernel at sample points center +/- r.  The deviation
    is dominated by the first omitted term, hence O(r^(K+1))."""
    with mp.workdps(ctx.working_dps):
        worst = mpf(0)
        for r in radii:
            r = mpf(r)
            if not 0 < r < mpf(1) / 2:
                raise ValueError("radii must lie in (0, 1/2)")
            for s in (exp.center + r, exp.center - r):
                if abs(s) < r / 2 and exp.center != 0:
                    raise ValueError("sample point too close to another pole")
                err = abs(_kernel_direct(kind, p, s, ctx) - exp.evaluate(s))
                worst = max(worst, err)
        return +worst


# ---------------------------------------------------------------------------
# Residue ledgers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ResidueLedger:
    """Residue contributions of kernel * base at all pole families,
    with the integer poles truncated at |n| = N."""

    positive_residues: List[object]
    negative_residues: List[object]
    pole_at_a: object
    pole_at_zero: object
    N: int


def _symm(nv, av, q: int):
    return (nv + av) ** (-q) + (nv - av) ** (-q) - 2 * nv ** (-q)


def _diff(nv, av, q: int):
    return (nv - av) ** (-q) - (nv + av) ** (-q)


def residues_even_kernel(a, m: int, N: int,
                         ctx: PrecisionContext) -> ResidueLedger:
    """Residue ledger for pi*cot(pi*z) psi^(2m-1)(-z)/(2m-1)! against the
    base 1/(z(z^2-a^2)): simple poles at the negative integers, order-(2m+1)
    poles at the positive integers, simple poles at +/-a, and an
    order-(2m+2) pole at zero."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if N < 1:
        raise ValueError("N must be >= 1")
    with mp.workdps(ctx.working_dps):
        av = mpf(a)
        if av == mp.nint(av):
            raise ValueError("a must be non-integer")
        a2 = av * av
        z2m = mp.zeta(2 * m)
        zeven = [mp.zeta(2 * k) for k in range(1, m + 1)]
        pos, neg = [], []
        zn = mpf(0)
        for n in range(1, N + 1):
            nv = mpf(n)
            zn += nv ** (-2 * m)
            den = nv * (nv * nv - a2)
            p_res = (zn + z2m) / den + _symm(nv, av, 2 * m + 1) / (2 * a2)
            for k in range(1, m + 1):
                p_res -= zeven[k - 1] * _symm(nv, av, 2 * m - 2 * k + 1) / a2
            pos.append(p_res)
            neg.append((zn - z2m) / den - nv ** (-(2 * m + 1)) / (nv * nv - a2))
        diff_series = sum_series(
            SmoothTerm(lambda t: _diff(t, av, 2 * m), 2 * m + 1), ctx)
        pole_a = pi_cot_pi(av, ctx) / (2 * a2) * diff_series.value
        pole_zero = -2 * m * mp.zeta(2 * m + 1) / a2
        return ResidueLedger(pos, neg, pole_a, pole_zero, N)


def residues_odd_kernel(a, m: int, s: int, N: int,
                        ctx: PrecisionContext) -> ResidueLedger:
    """Residue ledger for pi*cot(pi*z) psi^(2m)(-z)/(2m)! against the base
    z^(-2s)/(z^2-a^2).

    Two regularizations are needed for the total to vanish (i.e. for the
    ledger to be consistent with the contour argument): the +/-a
    contribution subtracts 2/n^(2m+1) inside its series and adds
    2*zeta(2m+1) outside, and the double sum in the pole-at-zero value uses
    the binomial C(2m+2k-2, 2k-2) (the corrected form carried by the E2.14
    registry entry).  zeta(1) is read as 0 throughout.
    """
    if m < 0 or s < 0:
        raise ValueError("m and s must be >= 0")
    if N < 1:
        raise ValueError("N must be >= 1")
    with mp.workdps(ctx.working_dps):
        av = mpf(a)
        if av == mp.nint(av):
            raise ValueError("a must be non-integer")
        a2 = av * av
        zodd = mpf(0) if m == 0 else mp.zeta(2 * m + 1)
        zeven = [mp.zeta(2 * k) for k in range(1, m + 1)]
        pos, neg = [], []
        zn = mpf(0)
        for n in range(1, N + 1):
            nv = mpf(n)
            zn += nv ** (-(2 * m + 1))
            den = nv ** (2 * s) * (nv * nv - a2)
            p_res = (zn - zodd) / den \
                - _diff(nv, av, 2 * m + 2) / (2 * av ** (2 * s + 1))
            for k in range(1, m + 1):
                p_res += zeven[k - 1] * _diff(nv, av, 2 * m - 2 * k + 2) \
                    / av ** (2 * s + 1)
                for j in range(1, s + 1):
                    p_res -= 2 * zeven[k - 1] / av ** (2 * s + 2 - 2 * j) \
                        * binomial(2 * m - 2 * k + 2 * j, 2 * j - 1) \
                        * nv ** (-(2 * m + 2 * j - 2 * k + 1))
            for j in range(1, s + 1):
                p_res += binomial(2 * m + 2 * j, 2 * j - 1) \
                    / av ** (2 * s + 2 - 2 * j) * nv ** (-(2 * m + 2 * j + 1))
            pos.append(p_res)
            neg.append((zn - zodd) / den
                       - nv ** (-(2 * s + 2 * m + 1)) / (nv * nv - a2))
        symm_series = sum_series(
            SmoothTerm(lambda t: _symm(t, av, 2 * m + 1), 2 * m + 3), ctx)
        pole_a = -pi_cot_pi(av, ctx) / (2 * av ** (2 * s + 1)) \
            * (symm_series.value + 2 * zodd)
        pole_zero = mpf(0)
        for k in range(1, s + 2):
            zval = mpf(0) if (m == 0 and k == 1) else mp.zeta(2 * m + 2 * k - 1)
            pole_zero += binomial(2 * m + 2 * k - 2, 2 * k - 2) * zval \
                / av ** (2 * s - 2 * k + 4)
        for nn in range(1, s + 1):
            for k in range(1, nn + 1):
                zval = mpf(0) if (m == 0 and k == 1) \
                    else mp.zeta(2 * m + 2 * k - 1)
                pole_zero -= 2 * binomial(2 * m + 2 * k - 2, 2 * k - 2) \
                    * zval * mp.zeta(2 * nn - 2 * k + 2) \
                    / av ** (2 * s - 2 * nn + 2)
        return ResidueLedger(pos, neg, pole_a, pole_zero, N)


def residue_sum_check(ledger: ResidueLedger):
    """|sum of all ledger contributions|; tends to 0 as N grows."""
    total = mp.fsum(ledger.positive_residues) \
        + mp.fsum(ledger.negative_residues) \
        + ledger.pole_at_a + ledger.pole_at_zero
    return abs(total)
