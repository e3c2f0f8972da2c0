"""Evaluate a few classical Euler sums at 50 digits with the certified
summation engine and compare them with their known closed forms."""

from mpmath import mp, mpf

from eulersums import SmoothTerm, make_context, sum_series

ctx = make_context(50)

with mp.workdps(ctx.working_dps):
    gamma = +mp.euler
    z2, z3, z4 = mp.zeta(2), mp.zeta(3), mp.zeta(4)

    cases = [
        ("Sum H_n / n^3",
         SmoothTerm(lambda t: (mp.psi(0, t + 1) + gamma) / t ** 3, 3),
         (5 * z4 - z2 * z2) / 2,
         "(1/2)(5 zeta(4) - zeta(2)^2)"),
        ("Sum H_n / (n+1)^2",
         SmoothTerm(lambda t: (mp.psi(0, t + 1) + gamma) / (t + 1) ** 2, 2),
         z3,
         "zeta(3)"),
        ("Sum H_n / n^2",
         SmoothTerm(lambda t: (mp.psi(0, t + 1) + gamma) / t ** 2, 2),
         2 * z3,
         "2 zeta(3)"),
    ]

    for name, term, want, closed in cases:
        got = sum_series(term, ctx)
        print(f"{name}  =  {closed}")
        print(f"  engine      : {mp.nstr(got.value, 50)}")
        print(f"  closed form : {mp.nstr(want, 50)}")
        print(f"  |difference|: {mp.nstr(abs(got.value - want), 3)}"
              f"   (certified tail bound {mp.nstr(got.tail_bound, 3)})")
        print()
