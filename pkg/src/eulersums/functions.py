"""Special functions used by the identity evaluators.

Provides the zeta family (Riemann, alternating, Hurwitz, alternating
Hurwitz), digamma/polygamma, the cotangent kernel pi*cot(pi*a), the
parametric polylogarithm Li_s(a, x) = Sum x^n/(n+a)^s, its power-shifted
companion H_m(x, a) = x^a * Li_m(a, x), and the recurring closed form
Sum 1/(n(n+a)) = (psi(a+1) + gamma)/a.

The transcendental building blocks (zeta, Hurwitz zeta, polygamma) are
backed by mpmath; everything identity-specific is assembled here with the
precision context threaded through.
"""

from __future__ import annotations

from mpmath import mp, mpf

from .core import PrecisionContext, SeriesValue, sum_geometric

__all__ = [
    "euler_gamma",
    "riemann_zeta",
    "alt_zeta",
    "hurwitz_zeta",
    "alt_hurwitz_zeta",
    "digamma",
    "polygamma",
    "pi_cot_pi",
    "param_polylog",
    "h_cap",
    "aux_sum_reciprocal",
    "ZETA_ZERO_NUM",
    "ZETA_ONE_NUM",
]

# Convention values demanded by the order-(2m+2s+2) pole bookkeeping:
# zeta(0) enters as -1/2 and any zeta(1) occurrence is replaced by 0.
ZETA_ZERO_NUM = -0.5
ZETA_ONE_NUM = 0.0


def euler_gamma(ctx: PrecisionContext):
    """The Euler-Mascheroni constant at context precision."""
    with mp.workdps(ctx.working_dps):
        return +mp.euler


def riemann_zeta(s: int, ctx: PrecisionContext, use_convention: bool = False):
    """zeta(s) for integer s >= 2; under the convention flag additionally
    zeta(0) = -1/2 and zeta(1) = 0 (the values the closed forms demand when
    their summation indices reach 0 or 1)."""
    s = int(s)
    if s <= 1:
        if not use_convention or s < 0:
            raise ValueError(f"riemann_zeta requires s >= 2, got s={s}")
        with mp.workdps(ctx.working_dps):
            return mpf(ZETA_ZERO_NUM) if s == 0 else mpf(ZETA_ONE_NUM)
    with mp.workdps(ctx.working_dps):
        return +mp.zeta(s)


def alt_zeta(s: int, ctx: PrecisionContext):
    """Alternating zeta Sum (-1)^(n-1)/n^s: (1 - 2^(1-s)) zeta(s) for
    s >= 2, ln 2 for s = 1."""
    s = int(s)
    if s < 1:
        raise ValueError(f"alt_zeta requires s >= 1, got s={s}")
    with mp.workdps(ctx.working_dps):
        if s == 1:
            return +mp.log(2)
        return +((1 - mpf(2) ** (1 - s)) * mp.zeta(s))


def hurwitz_zeta(s, q, ctx: PrecisionContext):
    """Hurwitz zeta zeta(s, q) = Sum_{n>=1} 1/(n - 1 + q)^s, so that
    zeta(s, a+1) = Sum_{n>=1} 1/(n+a)^s."""
    with mp.workdps(ctx.working_dps):
        s = mpf(s)
        q = mpf(q)
        if s <= 1:
            raise ValueError(f"hurwitz_zeta requires s > 1, got s={s}")
        if q <= 0:
            raise ValueError(f"hurwitz_zeta requires q > 0, got q={q}")
        return +mp.zeta(s, q)


def alt_hurwitz_zeta(s: int, q, ctx: PrecisionContext):
    """Alternating Hurwitz zeta Sum (-1)^(n-1)/(n - 1 + q)^s via the
    even/odd split 2^(-s) [zeta(s, q/2) - zeta(s, (q+1)/2)] for s >= 2
    and (1/2) [psi((q+1)/2) - psi(q/2)] for s = 1."""
    s = int(s)
    if s < 1:
        raise ValueError(f"alt_hurwitz_zeta requires s >= 1, got s={s}")
    with mp.workdps(ctx.working_dps):
        q = mpf(q)
        if q <= 0:
            raise ValueError(f"alt_hurwitz_zeta requires q > 0, got q={q}")
        if s == 1:
            return +((mp.psi(0, (q + 1) / 2) - mp.psi(0, q / 2)) / 2)
        return +(mpf(2) ** (-s)
                 * (mp.zeta(s, q / 2) - mp.zeta(s, (q + 1) / 2)))


def digamma(x, ctx: PrecisionContext):
    """psi(x) for x > 0.  Negative arguments are served only through the
    reflection machinery in the residue module."""
    with mp.workdps(ctx.working_dps):
        x = mpf(x)
        if x <= 0:
            raise ValueError(f"digamma requires x > 0, got x={x}")
        return +mp.psi(0, x)


def polygamma(m: int, x, ctx: PrecisionContext):
    """psi^(m)(x) for m >= 1 and x > 0."""
    m = int(m)
    if m < 1:
        raise ValueError(f"polygamma requires m >= 1, got m={m}")
    with mp.workdps(ctx.working_dps):
        x = mpf(x)
        if x <= 0:
            raise ValueError(f"polygamma requires x > 0, got x={x}")
        return +mp.psi(m, x)


def pi_cot_pi(a, ctx: PrecisionContext):
    """pi * cot(pi * a), with the argument reduced mod 1 to (-1/2, 1/2]
    before evaluation.  Rejects arguments too close to an integer (pole)."""
    with mp.workdps(ctx.working_dps):
        a = mpf(a)
        r = a - mp.nint(a)
        if abs(r) < mpf(10) ** (-(ctx.decimal_digits // 2)):
            raise ValueError(f"pi_cot_pi pole: a={a} is too close to an integer")
        return +(mp.pi * mp.cos(mp.pi * r) / mp.sin(mp.pi * r))


def param_polylog(s: int, a, x, ctx: PrecisionContext):
    """Parametric polylogarithm Li_s(a, x) = Sum_{n>=1} x^n/(n+a)^s for
    s >= 1, a > -1, -1 <= x < 1 (x = 1 allowed for s >= 2, where the value
    is the Hurwitz zeta limit).

    Interior x is summed directly with a geometric tail certificate; the
    endpoints use the closed forms Li_s(a, -1) = -altzeta(s, a+1) and
    Li_s(a, 1) = zeta(s, a+1).
    """
    s = int(s)
    if s < 1:
        raise ValueError(f"param_polylog requires s >= 1, got s={s}")
    with mp.workdps(ctx.working_dps):
        a = mpf(a)
        x = mpf(x)
        if a <= -1:
            raise ValueError(f"param_polylog requires a > -1, got a={a}")
        if not (-1 <= x <= 1):
            raise ValueError(f"param_polylog requires -1 <= x <= 1, got x={x}")
        if x == 1:
            if s == 1:
                raise ValueError("param_polylog diverges at s=1, x=1")
            return +mp.zeta(s, a + 1)
        if x == -1:
            return +(-alt_hurwitz_zeta(s, a + 1, ctx))
        if x == 0:
            return mpf(0)
        if s == 1 and a == 0:
            return +(-mp.log(1 - x))

        state = {"pow": mpf(1)}

        def term(n):
            state["pow"] *= x
            return state["pow"] / (n + a) ** s

        return sum_geometric(term, abs(x), ctx).value


def h_cap(m: int, x, a, ctx: PrecisionContext):
    """H_m(x, a) = Sum_{n>=1} x^(n+a)/(n+a)^m = x^a * Li_m(a, x).

    Requires x > 0 for non-integer a (real power), or integer a for
    x in [-1, 1].  (m = 1, x = 1) diverges and is rejected.
    """
    m = int(m)
    with mp.workdps(ctx.working_dps):
        x = mpf(x)
        a = mpf(a)
        if m == 1 and x == 1:
            raise ValueError("h_cap diverges at m=1, x=1")
        if x <= 0 and a != mp.nint(a):
            raise ValueError(
                f"h_cap requires x > 0 for non-integer a, got x={x}, a={a}")
        xa = x ** int(a) if a == mp.nint(a) else x ** a
        return +(xa * param_polylog(m, a, x, ctx))


def aux_sum_reciprocal(a, ctx: PrecisionContext):
    """Closed form for the recurring series Sum_{n>=1} 1/(n(n+a)):
    (psi(a+1) + gamma)/a for a != 0.  Callers must use zeta(2) at a = 0;
    arguments indistinguishable from 0 at context precision are rejected.
    """
    with mp.workdps(ctx.working_dps):
        a = mpf(a)
        if a <= -1:
            raise ValueError(f"aux_sum_reciprocal requires a > -1, got a={a}")
        if abs(a) < mpf(10) ** (-(ctx.decimal_digits // 2)):
            raise ValueError(
                "aux_sum_reciprocal is indeterminate at a=0; use zeta(2)")
        return +((mp.psi(0, a + 1) + mp.euler) / a)
