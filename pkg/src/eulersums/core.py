"""Arbitrary-precision summation and quadrature engine.

Everything downstream (special-function evaluation, identity checking)
runs on top of three primitives defined here:

* ``sum_series`` -- certified evaluation of a slowly convergent series
  Sum_{n>=1} f(n) by direct summation up to a crossover index followed by
  an Euler-Maclaurin completion of the tail.  The returned value carries
  a tail bound (first omitted correction term times a safety factor).
* ``sum_geometric`` -- direct summation for geometrically decaying terms
  with a ratio-based tail bound.
* ``integrate_adaptive`` -- double-exponential quadrature with an error
  estimate, tolerating integrable endpoint singularities.

All values are mpmath ``mpf`` reals computed at the context's working
precision (requested digits plus guard digits).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from mpmath import mp, mpf, bernoulli, quad, inf, isnan

__all__ = [
    "PrecisionContext",
    "SeriesValue",
    "SmoothTerm",
    "ConvergenceError",
    "make_context",
    "sum_series",
    "sum_geometric",
    "integrate_adaptive",
]


class ConvergenceError(ArithmeticError):
    """Raised when a certified bound cannot be pushed below the target."""


@dataclass(frozen=True)
class PrecisionContext:
    """Precision budget threaded through every numeric operation.

    ``decimal_digits`` is the number of digits the caller wants to trust;
    ``guard_digits`` extra digits absorb roundoff.  ``em_order`` is the
    number of Euler-Maclaurin correction terms, ``max_terms`` caps the
    directly summed prefix.
    """

    decimal_digits: int
    guard_digits: int
    em_order: int = 8
    max_terms: int = 10**6

    def __post_init__(self):
        if self.decimal_digits < 10:
            raise ValueError("decimal_digits must be >= 10")
        if self.guard_digits < 10:
            raise ValueError("guard_digits must be >= 10")
        if self.em_order < 2:
            raise ValueError("em_order must be >= 2")
        if self.max_terms < 1000:
            raise ValueError("max_terms must be >= 1000")

    @property
    def working_dps(self) -> int:
        return self.decimal_digits + self.guard_digits

    @property
    def working_prec(self) -> int:
        # binary working precision, ceil(dps * log2(10))
        return int(math.ceil(self.working_dps * math.log2(10))) + 4

    @property
    def target_eps(self):
        """Tail-bound target for series summation: 10^-(digits+5)."""
        with mp.workdps(self.working_dps):
            return mpf(10) ** (-(self.decimal_digits + 5))

    @property
    def crossover(self) -> int:
        """Default direct-summation prefix length N0."""
        return max(64, self.decimal_digits ** 2 // 4)


def make_context(decimal_digits: int, *, guard_digits: Optional[int] = None,
                 em_order: int = 8, max_terms: int = 10**6) -> PrecisionContext:
    """Build a context with default guard digits max(10, digits/5)."""
    if decimal_digits < 10:
        raise ValueError("decimal_digits must be >= 10")
    if guard_digits is None:
        guard_digits = max(10, decimal_digits // 5)
    return PrecisionContext(decimal_digits, guard_digits, em_order, max_terms)


@dataclass(frozen=True)
class SeriesValue:
    """A computed value together with a certified error bound."""

    value: object            # mpf
    tail_bound: object       # mpf >= 0
    terms_used: int = 0

    def __post_init__(self):
        if self.tail_bound < 0:
            raise ValueError("tail_bound must be nonnegative")

    def __add__(self, other):
        if isinstance(other, SeriesValue):
            return SeriesValue(self.value + other.value,
                               self.tail_bound + other.tail_bound,
                               self.terms_used + other.terms_used)
        return SeriesValue(self.value + other, self.tail_bound, self.terms_used)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, SeriesValue):
            return SeriesValue(self.value - other.value,
                               self.tail_bound + other.tail_bound,
                               self.terms_used + other.terms_used)
        return SeriesValue(self.value - other, self.tail_bound, self.terms_used)

    def __rsub__(self, other):
        return SeriesValue(other - self.value, self.tail_bound, self.terms_used)

    def scale(self, c):
        """Multiply by an exactly-known constant."""
        return SeriesValue(self.value * c, self.tail_bound * abs(c), self.terms_used)

    def mul(self, other: "SeriesValue") -> "SeriesValue":
        bound = (abs(self.value) * other.tail_bound
                 + abs(other.value) * self.tail_bound
                 + self.tail_bound * other.tail_bound)
        return SeriesValue(self.value * other.value, bound,
                           self.terms_used + other.terms_used)


@dataclass(frozen=True)
class SmoothTerm:
    """Summand of an infinite series, with its smooth extension.

    ``eval`` must accept non-integer arguments t >= 1 (the smooth
    extension of the integer-indexed summand), which Euler-Maclaurin
    needs.  ``eval_int``, when given, is a cheaper evaluator used for the
    directly summed integer prefix (e.g. incremental partial sums).
    ``decay_exponent`` is the asymptotic power q with |f(t)| = O(t^-q).
    When ``alternating`` is set, the series is Sum (-1)^(n-1) eval(n) and
    consecutive terms are paired into a smooth summand before
    acceleration.
    """

    eval: Callable
    decay_exponent: float
    alternating: bool = False
    eval_int: Optional[Callable] = None


# ---------------------------------------------------------------------------
# Finite-difference derivatives (Fornberg weights on a unit-step stencil)
# ---------------------------------------------------------------------------

_weight_cache: dict = {}


def _fornberg_weights(m: int, npoints: int):
    """Exact weights for derivatives 0..m at 0 from samples at
    -h*(npoints-1)/2 .. h*(npoints-1)/2 with unit step (h folded in later).

    Returns a list ``w[k][i]`` of Fractions: k-th derivative, i-th node.
    Fornberg (1988) recursion.
    """
    key = (m, npoints)
    if key in _weight_cache:
        return _weight_cache[key]
    half = (npoints - 1) // 2
    x = [Fraction(i - half) for i in range(npoints)]
    z = Fraction(0)
    # c[k][j] : weight of node j for k-th derivative using nodes 0..n
    c = [[Fraction(0)] * npoints for _ in range(m + 1)]
    c[0][0] = Fraction(1)
    c1 = Fraction(1)
    for n in range(1, npoints):
        c2 = Fraction(1)
        prev = [c[k][n - 1] for k in range(m + 1)]
        for j in range(n):
            c3 = x[n] - x[j]
            c2 *= c3
            for k in range(min(n, m), 0, -1):
                c[k][j] = ((x[n] - z) * c[k][j] - k * c[k - 1][j]) / c3
            c[0][j] = (x[n] - z) * c[0][j] / c3
        for k in range(min(n, m), 0, -1):
            c[k][n] = c1 * (k * prev[k - 1] - (x[n - 1] - z) * prev[k]) / c2
        c[0][n] = -c1 * (x[n - 1] - z) * prev[0] / c2
        c1 = c2
    _weight_cache[key] = c
    return c


def _odd_derivatives(f: Callable, x0, max_order: int, ctx: PrecisionContext):
    """f^(1), f^(3), ..., f^(max_order) at x0 from a unit-step stencil.

    The stencil spans x0 +/- half with integer offsets; function samples
    are taken at elevated precision to absorb the cancellation in the
    high-order differences.
    """
    npoints = max_order + 13 if (max_order + 13) % 2 == 1 else max_order + 14
    half = (npoints - 1) // 2
    weights = _fornberg_weights(max_order, npoints)
    # weight magnitudes grow like 2^npoints: elevate precision accordingly
    extra = int(npoints * 0.35) + 12
    with mp.workdps(mp.dps + extra):
        samples = [f(x0 + (i - half)) for i in range(npoints)]
        derivs = {}
        for order in range(1, max_order + 1, 2):
            acc = mpf(0)
            for i in range(npoints):
                w = weights[order][i]
                if w:
                    acc += mpf(w.numerator) / w.denominator * samples[i]
            derivs[order] = acc
    return {k: +v for k, v in derivs.items()}


# ---------------------------------------------------------------------------
# Series summation
# ---------------------------------------------------------------------------

def _em_tail(f: Callable, n0: int, ctx: PrecisionContext):
    """Euler-Maclaurin completion of Sum_{n >= n0} f(n).

    Returns (tail_value, bound) where bound covers the first omitted
    correction term (safety factor 4) plus the quadrature error.
    """
    order = ctx.em_order
    integral, qerr = quad(f, [n0, inf], error=True)
    derivs = _odd_derivatives(f, mpf(n0), 2 * order + 1, ctx)
    tail = integral + f(mpf(n0)) / 2
    for k in range(1, order + 1):
        b2k = bernoulli(2 * k)
        tail -= b2k / math.factorial(2 * k) * derivs[2 * k - 1]
    omitted = bernoulli(2 * order + 2) / math.factorial(2 * order + 2) \
        * derivs[2 * order + 1]
    bound = 4 * abs(omitted) + 8 * abs(qerr)
    return tail, bound


def sum_series(term: SmoothTerm, ctx: PrecisionContext) -> SeriesValue:
    """Certified evaluation of Sum_{n=1}^inf of the given term.

    Direct summation up to a crossover N0, then Euler-Maclaurin for the
    remainder.  Alternating series are pre-paired into a smooth
    non-alternating summand g(t) = f(2t-1) - f(2t).
    """
    if term.decay_exponent <= 1 and not term.alternating:
        raise ValueError("decay_exponent must exceed 1 for convergence")

    if term.alternating:
        if term.decay_exponent <= 0:
            raise ValueError("decay_exponent must be positive")
        f = term.eval
        paired = SmoothTerm(
            eval=lambda t: f(2 * t - 1) - f(2 * t),
            decay_exponent=term.decay_exponent + 1,
            eval_int=(None if term.eval_int is None
                      else (lambda n, g=term.eval_int: g(2 * n - 1) - g(2 * n))),
        )
        return sum_series(paired, ctx)

    with mp.workdps(ctx.working_dps):
        f = term.eval
        fint = term.eval_int or f
        target = ctx.target_eps
        n0 = ctx.crossover
        partial = mpf(0)
        summed_to = 0
        while True:
            if n0 > ctx.max_terms:
                raise ConvergenceError(
                    f"certified tail bound did not reach {target} "
                    f"within max_terms={ctx.max_terms}")
            if term.eval_int is not None:
                for n in range(summed_to + 1, n0):
                    partial += fint(n)
            else:
                for n in range(summed_to + 1, n0):
                    partial += f(mpf(n))
            summed_to = n0 - 1
            head = f(mpf(n0))
            if head == 0 and f(mpf(n0) + mpf(1) / 3) == 0:
                # identically-zero tail (e.g. terminating summand)
                return SeriesValue(+partial, mpf(0), summed_to)
            tail, bound = _em_tail(f, n0, ctx)
            if bound <= target or isnan(bound):
                break
            n0 *= 2
        value = partial + tail
        # roundoff allowance for the direct prefix
        bound += (summed_to + 1) * abs(value + 1) * mpf(10) ** (-ctx.working_dps + 1)
        return SeriesValue(+value, +bound, summed_to)


def sum_geometric(termfn: Callable, ratio, ctx: PrecisionContext,
                  start: int = 1) -> SeriesValue:
    """Sum a series whose terms eventually decay like ratio^n (|ratio|<1).

    Terms are added until |term| stays below the target for a few
    consecutive indices; the tail is bounded by the geometric envelope
    |last| * r / (1 - r) with a safety factor.
    """
    r = abs(mpf(ratio))
    if r >= 1:
        raise ValueError("ratio must satisfy |ratio| < 1")
    with mp.workdps(ctx.working_dps):
        target = ctx.target_eps / 4
        total = mpf(0)
        last = mpf(0)
        small_run = 0
        n = start
        while True:
            t = termfn(n)
            total += t
            last = abs(t)
            small_run = small_run + 1 if last < target else 0
            if small_run >= 3:
                break
            if n - start > ctx.max_terms:
                raise ConvergenceError("geometric summation exceeded max_terms")
            n += 1
        bound = 4 * max(last, target) * r / (1 - r) + target
        return SeriesValue(+total, +bound, n - start + 1)


def integrate_adaptive(f: Callable, lo, hi, ctx: PrecisionContext) -> SeriesValue:
    """Definite integral with a certified-style error estimate.

    Double-exponential (tanh-sinh) quadrature, which tolerates algebraic
    endpoint singularities; the reported error is the quadrature's own
    estimate times a safety factor.
    """
    if not lo < hi:
        raise ValueError("require lo < hi")
    with mp.workdps(ctx.working_dps):
        value, err = quad(f, [mpf(lo), mpf(hi)], error=True)
        if isnan(value):
            raise ConvergenceError("quadrature did not converge")
        bound = 8 * abs(err) + abs(value + 1) * mpf(10) ** (-ctx.working_dps + 2)
        if bound > mpf(10) ** (-(ctx.decimal_digits - 2)) * (1 + abs(value)):
            raise ConvergenceError(
                f"quadrature error {err} above target at "
                f"{ctx.decimal_digits} digits")
        return SeriesValue(+value, +bound)
