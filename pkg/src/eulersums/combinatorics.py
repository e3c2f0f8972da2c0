"""Exact rational combinatorics: harmonic numbers, alternating harmonic
numbers, unsigned Stirling numbers of the first kind, and the exact
identities connecting them.

Everything here is computed in exact big-integer / Fraction arithmetic;
`partial_hurwitz` is the one floating-point member (partial Hurwitz sums
need a real shift parameter).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from mpmath import mp, mpf

from .core import PrecisionContext

__all__ = [
    "harmonic",
    "alt_harmonic",
    "StirlingTable",
    "stirling1",
    "stirling_row_from_polynomial",
    "verify_stirling_sum_identities",
    "verify_stirling_closed_forms",
    "verify_harmonic_convolutions",
    "partial_hurwitz",
]

_harmonic_cache: dict = {}   # k -> list of prefix values [H_0(k), H_1(k), ...]
_alt_harmonic_cache: dict = {}


def harmonic(n: int, k: int = 1) -> Fraction:
    """Generalized harmonic number Sum_{j=1}^n 1/j^k, exactly.  The empty
    sum (n = 0) is 0."""
    n, k = int(n), int(k)
    if k < 1:
        raise ValueError(f"harmonic requires k >= 1, got k={k}")
    if n < 0:
        raise ValueError(f"harmonic requires n >= 0, got n={n}")
    prefix = _harmonic_cache.setdefault(k, [Fraction(0)])
    while len(prefix) <= n:
        j = len(prefix)
        prefix.append(prefix[-1] + Fraction(1, j ** k))
    return prefix[n]


def alt_harmonic(n: int, k: int = 1) -> Fraction:
    """Alternating harmonic number Sum_{j=1}^n (-1)^(j-1)/j^k, exactly."""
    n, k = int(n), int(k)
    if k < 1:
        raise ValueError(f"alt_harmonic requires k >= 1, got k={k}")
    if n < 0:
        raise ValueError(f"alt_harmonic requires n >= 0, got n={n}")
    prefix = _alt_harmonic_cache.setdefault(k, [Fraction(0)])
    while len(prefix) <= n:
        j = len(prefix)
        prefix.append(prefix[-1] + Fraction((-1) ** (j - 1), j ** k))
    return prefix[n]


class StirlingTable:
    """Triangle of unsigned Stirling numbers of the first kind s(n, k),
    built by the recurrence s(n+1, k) = s(n, k-1) + n*s(n, k) with
    s(0, 0) = 1 and zero outside the triangle."""

    def __init__(self, max_n: int = 0):
        self._rows = [[1]]  # row n holds s(n, 0..n)
        self.extend(max_n)

    @property
    def max_n(self) -> int:
        return len(self._rows) - 1

    def extend(self, max_n: int) -> None:
        while self.max_n < max_n:
            n = self.max_n
            prev = self._rows[n]
            row = [0] * (n + 2)
            for k in range(1, n + 2):
                row[k] = (prev[k - 1] if k - 1 <= n else 0) \
                    + n * (prev[k] if k <= n else 0)
            self._rows.append(row)

    def value(self, n: int, k: int) -> int:
        if n < 0 or k < 0 or k > n:
            return 0
        self.extend(n)
        return self._rows[n][k]


_table = StirlingTable()


def stirling1(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind from the shared memoized
    table (0 outside the triangle)."""
    return _table.value(int(n), int(k))


def stirling_row_from_polynomial(n: int) -> list:
    """Row n+1 of the Stirling triangle obtained independently of the
    recurrence, by expanding the defining polynomial
    n! (1 + x)(1 + x/2)...(1 + x/n) = Sum_k s(n+1, k+1) x^k
    in exact rationals.  Returns [s(n+1, 1), ..., s(n+1, n+1)]."""
    n = int(n)
    coeffs = [Fraction(1)]
    for j in range(1, n + 1):
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        inv = Fraction(1, j)
        for d, c in enumerate(coeffs):
            nxt[d] += c
            nxt[d + 1] += c * inv
        coeffs = nxt
    fact = 1
    for j in range(2, n + 1):
        fact *= j
    out = []
    for c in coeffs:
        v = c * fact
        assert v.denominator == 1
        out.append(v.numerator)
    return out


def verify_stirling_sum_identities(n: int, p: int) -> bool:
    """Exact check of the two Stirling partial-sum identities:

        Sum_{j=1}^n s(j, p)/j!                    = s(n+1, p+1)/n!      (p >= 1)
        Sum_{j=1}^{n-1} H_j s(n-j, p-1)/(n-j)!    = p s(n+1, p+1)/n!    (p >= 2)

    The second is only checked for p >= 2.  Returns True iff all
    applicable identities hold.
    """
    n, p = int(n), int(p)
    if n < 1 or p < 1:
        raise ValueError(f"requires n >= 1 and p >= 1, got n={n}, p={p}")
    fact = [1] * (n + 2)
    for j in range(1, n + 2):
        fact[j] = fact[j - 1] * j
    rhs = Fraction(stirling1(n + 1, p + 1), fact[n])
    lhs1 = sum(Fraction(stirling1(j, p), fact[j]) for j in range(1, n + 1))
    if lhs1 != rhs:
        return False
    if p >= 2:
        lhs2 = sum(harmonic(j) * Fraction(stirling1(n - j, p - 1), fact[n - j])
                   for j in range(1, n))
        if lhs2 != p * rhs:
            return False
    return True


def verify_stirling_closed_forms(n: int) -> bool:
    """Exact check of the closed forms for s(n, 1..5) in terms of
    generalized harmonic numbers of n-1."""
    n = int(n)
    if n < 1:
        raise ValueError(f"requires n >= 1, got n={n}")
    m = n - 1
    fact = 1
    for j in range(2, n):
        fact *= j
    h1 = harmonic(m, 1)
    h2 = harmonic(m, 2)
    h3 = harmonic(m, 3)
    h4 = harmonic(m, 4)
    expected = {
        1: Fraction(fact),
        2: fact * h1,
        3: Fraction(fact, 2) * (h1 ** 2 - h2),
        4: Fraction(fact, 6) * (h1 ** 3 - 3 * h1 * h2 + 2 * h3),
        5: Fraction(fact, 24) * (h1 ** 4 - 6 * h4 - 6 * h1 ** 2 * h2
                                 + 3 * h2 ** 2 + 8 * h1 * h3),
    }
    return all(Fraction(stirling1(n, k)) == v for k, v in expected.items())


def verify_harmonic_convolutions(n: int) -> bool:
    """Exact check of the harmonic convolution pair (the p = 2 case of the
    Stirling partial-sum identities):

        Sum_{j=1}^{n-1} H_j/(n-j) = H_n^2 - zeta_n(2)
        Sum_{k=1}^n H_k/k         = (H_n^2 + zeta_n(2))/2
    """
    n = int(n)
    if n < 1:
        raise ValueError(f"requires n >= 1, got n={n}")
    hn, zn2 = harmonic(n), harmonic(n, 2)
    lhs1 = sum(harmonic(j) / (n - j) for j in range(1, n))
    lhs2 = sum(harmonic(k) / k for k in range(1, n + 1))
    return lhs1 == hn ** 2 - zn2 and 2 * lhs2 == hn ** 2 + zn2


def partial_hurwitz(n: int, p: int, a, ctx: PrecisionContext):
    """Partial Hurwitz sum zeta_n(p, a+1) = Sum_{k=1}^n 1/(k+a)^p at
    working precision; the empty sum is 0."""
    n, p = int(n), int(p)
    if n < 0 or p < 1:
        raise ValueError(f"requires n >= 0 and p >= 1, got n={n}, p={p}")
    with mp.workdps(ctx.working_dps):
        a = mpf(a)
        if a <= -1:
            raise ValueError(f"requires a > -1, got a={a}")
        total = mpf(0)
        for k in range(1, n + 1):
            total += (k + a) ** (-p)
        return +total
