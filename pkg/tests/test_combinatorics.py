from fractions import Fraction

import pytest
from mpmath import mp, mpf

from eulersums.combinatorics import (StirlingTable, alt_harmonic, harmonic,
                                     partial_hurwitz, stirling1,
                                     stirling_row_from_polynomial,
                                     verify_harmonic_convolutions,
                                     verify_stirling_closed_forms,
                                     verify_stirling_sum_identities)
from eulersums.core import make_context


def test_harmonic_exact():
    assert harmonic(1) == 1
    assert harmonic(4) == Fraction(25, 12)
    assert harmonic(3, 2) == Fraction(49, 36)
    assert harmonic(0) == 0
    assert isinstance(harmonic(10, 3), Fraction)


def test_alt_harmonic_exact():
    assert alt_harmonic(1) == 1
    assert alt_harmonic(2) == Fraction(1, 2)
    assert alt_harmonic(3) == Fraction(5, 6)
    assert alt_harmonic(4, 2) == 1 - Fraction(1, 4) + Fraction(1, 9) - Fraction(1, 16)


def test_stirling_values():
    # unsigned first kind: rows of [n over k]
    assert stirling1(4, 2) == 11
    assert stirling1(5, 1) == 24
    assert stirling1(5, 5) == 1
    assert stirling1(5, 0) == 0
    assert stirling1(3, 7) == 0


def test_stirling_recurrence_matches_polynomial_oracle():
    table = StirlingTable(20)
    for n in range(1, 21):
        # oracle row n holds [s(n, 1), ..., s(n, n)]
        row = stirling_row_from_polynomial(n - 1)
        assert table.value(n, 0) == 0
        for k in range(1, n + 1):
            assert table.value(n, k) == row[k - 1], (n, k)


def test_stirling_sum_identities_exact():
    for n in (1, 5, 12, 30):
        for p in range(1, 7):
            assert verify_stirling_sum_identities(n, p), (n, p)


def test_stirling_closed_forms():
    for n in (1, 2, 7, 25):
        assert verify_stirling_closed_forms(n)


def test_harmonic_convolutions():
    for n in (1, 3, 10, 30):
        assert verify_harmonic_convolutions(n)


def test_partial_hurwitz():
    ctx = make_context(40)
    with mp.workdps(ctx.working_dps):
        a = mpf(1) / 4
        got = partial_hurwitz(5, 2, a, ctx)
        want = sum((k + a) ** -2 for k in range(1, 6))
        assert abs(got - want) < mpf(10) ** -38
