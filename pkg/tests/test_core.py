import pytest
from mpmath import mp, mpf

from eulersums.core import (ConvergenceError, PrecisionContext, SeriesValue,
                            SmoothTerm, integrate_adaptive, make_context,
                            sum_geometric, sum_series)


@pytest.fixture
def ctx():
    return make_context(40)


def test_context_derivation():
    c = make_context(40)
    assert c.working_dps > 40
    assert c.target_eps < mpf(10) ** -40
    assert c.crossover >= 64


def test_context_validation():
    with pytest.raises(ValueError):
        make_context(3)
    with pytest.raises(ValueError):
        PrecisionContext(decimal_digits=40, guard_digits=-1)


def test_series_value_arithmetic():
    a = SeriesValue(mpf(2), mpf("1e-30"), 10)
    b = SeriesValue(mpf(3), mpf("2e-30"), 20)
    s = a + b
    assert s.value == 5
    assert s.tail_bound >= mpf("3e-30")
    d = a - b
    assert d.value == -1
    assert (a.scale(-4)).value == -8
    assert a.scale(-4).tail_bound >= mpf("4e-30")
    p = a.mul(b)
    assert p.value == 6
    # |a·db| + |b·da| dominates the product bound
    assert p.tail_bound >= mpf("7e-30")
    assert (1 - a).value == -1


def test_basel_series(ctx):
    with mp.workdps(ctx.working_dps):
        got = sum_series(SmoothTerm(lambda t: 1 / (t * t), 2), ctx)
        err = abs(got.value - mp.zeta(2))
        assert err < mpf(10) ** -40
        assert err <= got.tail_bound


def test_shifted_cubic_series(ctx):
    with mp.workdps(ctx.working_dps):
        a = mpf(1) / 3
        got = sum_series(SmoothTerm(lambda t: (t + a) ** -3, 3), ctx)
        err = abs(got.value - mp.zeta(3, 1 + a))
        assert err < mpf(10) ** -40
        assert err <= got.tail_bound


def test_alternating_series(ctx):
    with mp.workdps(ctx.working_dps):
        got = sum_series(SmoothTerm(lambda t: 1 / t, 1, alternating=True), ctx)
        assert abs(got.value - mp.log(2)) < mpf(10) ** -40


def test_exact_prefix_route_matches_direct(ctx):
    with mp.workdps(ctx.working_dps):
        direct = sum_series(SmoothTerm(lambda t: t ** -2, 2), ctx)
        viaint = sum_series(
            SmoothTerm(lambda t: t ** -2, 2, eval_int=lambda n: mpf(n) ** -2),
            ctx)
        assert abs(direct.value - viaint.value) < mpf(10) ** -40


def test_geometric_sum(ctx):
    with mp.workdps(ctx.working_dps):
        x = mpf(1) / 2
        state = {"p": mpf(1)}

        def term(n):
            state["p"] *= x
            return state["p"] / n

        got = sum_geometric(term, x, ctx)
        err = abs(got.value - mp.log(2))
        assert err < mpf(10) ** -40
        assert err <= got.tail_bound


def test_divergent_series_rejected(ctx):
    with pytest.raises((ConvergenceError, ValueError)):
        sum_series(SmoothTerm(lambda t: 1 / t, 1), ctx)


def test_quadrature_log_singularity(ctx):
    with mp.workdps(ctx.working_dps):
        got = integrate_adaptive(lambda t: mp.log(t) / (1 - t),
                                 mpf(0), mpf(1), ctx)
        assert abs(got.value + mp.zeta(2)) < mpf(10) ** -38
