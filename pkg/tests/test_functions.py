import pytest
from mpmath import mp, mpf

from eulersums.core import make_context
from eulersums.functions import (alt_hurwitz_zeta, alt_zeta,
                                 aux_sum_reciprocal, digamma, euler_gamma,
                                 h_cap, hurwitz_zeta, param_polylog,
                                 pi_cot_pi, polygamma, riemann_zeta)

CTX = make_context(40)
TOL = mpf(10) ** -38


def near(a, b, tol=TOL):
    return abs(a - b) < tol


def test_zeta_and_conventions():
    with mp.workdps(CTX.working_dps):
        assert near(riemann_zeta(2, CTX), mp.pi ** 2 / 6)
        assert riemann_zeta(0, CTX, use_convention=True) == mpf(-1) / 2
        # the divergent point is mapped to 0 under the analytic convention
        assert riemann_zeta(1, CTX, use_convention=True) == 0
        with pytest.raises(ValueError):
            riemann_zeta(1, CTX)


def test_alt_zeta():
    with mp.workdps(CTX.working_dps):
        assert near(alt_zeta(1, CTX), mp.log(2))
        assert near(alt_zeta(2, CTX), mp.pi ** 2 / 12)
        # eta(s) = (1 - 2^(1-s)) zeta(s)
        assert near(alt_zeta(5, CTX), (1 - mpf(2) ** -4) * mp.zeta(5))


def test_hurwitz_zeta_brute():
    with mp.workdps(CTX.working_dps):
        q = mpf(1) / 3
        brute = mp.nsum(lambda n: (n + q) ** -3, [0, mp.inf])
        assert near(hurwitz_zeta(3, q, CTX), brute)


def test_alt_hurwitz_zeta_brute():
    with mp.workdps(CTX.working_dps):
        for s in (1, 2, 4):
            for q in (mpf(1) / 4, mpf(2) / 3, mpf(3) / 2):
                brute = mp.nsum(lambda n: (-1) ** n * (n + q) ** -s,
                                [0, mp.inf])
                assert near(alt_hurwitz_zeta(s, q, CTX), brute), (s, q)


def test_digamma_polygamma():
    with mp.workdps(CTX.working_dps):
        assert near(digamma(1, CTX), -euler_gamma(CTX))
        assert near(digamma(mpf(1) / 2, CTX), -euler_gamma(CTX) - 2 * mp.log(2))
        # psi'(1) = zeta(2), psi''(1) = -2 zeta(3)
        assert near(polygamma(1, 1, CTX), mp.zeta(2))
        assert near(polygamma(2, 1, CTX), -2 * mp.zeta(3))


def test_pi_cot_pi_partial_fractions():
    with mp.workdps(CTX.working_dps):
        a = mpf(1) / 3
        # pi cot(pi a) = 1/a + sum_{n>=1} 2a/(a^2 - n^2)
        brute = 1 / a + mp.nsum(lambda n: 2 * a / (a * a - n * n),
                                [1, mp.inf])
        assert near(pi_cot_pi(a, CTX), brute)


def test_param_polylog_brute():
    with mp.workdps(CTX.working_dps):
        a, x = mpf(1) / 4, mpf(1) / 2
        for s in (1, 2, 3):
            brute = mp.nsum(lambda n: x ** n / (n + a) ** s, [1, mp.inf])
            assert near(param_polylog(s, a, x, CTX), brute), s


def test_param_polylog_reduces_to_classical():
    with mp.workdps(CTX.working_dps):
        x = mpf(3) / 5
        got = param_polylog(2, mpf(0), x, CTX)
        assert near(got, mp.polylog(2, x))


def test_h_cap_brute():
    with mp.workdps(CTX.working_dps):
        a, x = mpf(1) / 3, mpf(1) / 2
        brute = mp.nsum(lambda n: x ** (n + a) / (n + a) ** 2, [1, mp.inf])
        assert near(h_cap(2, x, a, CTX), brute)


def test_aux_sum_reciprocal_brute():
    with mp.workdps(CTX.working_dps):
        a = mpf(2) / 7
        # sum_{n>=1} 1/(n(n+a)) = (psi(1+a) + gamma)/a
        brute = mp.nsum(lambda n: 1 / (n * (n + a)), [1, mp.inf])
        assert near(aux_sum_reciprocal(a, CTX), brute)
