"""Exact integer/rational kernels shared by the symbol evaluators.

Numbers of the form sign * sqrt(radicand), radicand a nonnegative rational,
are closed under multiplication, and sums of them collapse back to that form
whenever the ratio of any two radicands is a perfect square of a rational.
That closure property holds throughout SU(2) recoupling theory (every term of
a recoupling contraction carries the same square-free part), so the helpers
here never need a general algebraic-number type.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

_FACTORIALS = [1, 1]
_FACT_LOCK = threading.Lock()


def factorial(n):
    """Factorial with a shared append-only cache.

    Reads are lock-free; extension happens under a single writer lock and
    grows by amortized doubling so concurrent sweeps never re-extend for
    every call.
    """
    if n < 0:
        raise ValueError("factorial of negative integer")
    table = _FACTORIALS
    if n < len(table):
        return table[n]
    with _FACT_LOCK:
        # Re-check under the lock; another thread may have extended already.
        target = max(n + 1, 2 * len(_FACTORIALS))
        while len(_FACTORIALS) < target:
            _FACTORIALS.append(_FACTORIALS[-1] * len(_FACTORIALS))
    return _FACTORIALS[n]


def _sqrt_exact(q):
    """Exact square root of a perfect-square Fraction, or None."""
    num = math.isqrt(q.numerator)
    if num * num != q.numerator:
        return None
    den = math.isqrt(q.denominator)
    if den * den != q.denominator:
        return None
    return Fraction(num, den)


class SqrtRational:
    """Exact number sign * sqrt(radicand) with rational radicand >= 0.

    Canonical form: coef * sqrt(core) is stored as the pair
    (sign(coef), coef^2 * core), so two equal values always compare equal.
    The zero value is (0, 0).
    """

    __slots__ = ("sign", "radicand")

    def __init__(self, sign, radicand):
        radicand = Fraction(radicand)
        if sign == 0 or radicand == 0:
            sign, radicand = 0, Fraction(0)
        self.sign = 1 if sign > 0 else (-1 if sign < 0 else 0)
        self.radicand = radicand

    @classmethod
    def from_rational(cls, q):
        q = Fraction(q)
        return cls((q > 0) - (q < 0), q * q)

    @classmethod
    def zero(cls):
        return cls(0, 0)

    def __bool__(self):
        return self.sign != 0

    def __mul__(self, other):
        if isinstance(other, SqrtRational):
            return SqrtRational(self.sign * other.sign, self.radicand * other.radicand)
        q = Fraction(other)
        s = (q > 0) - (q < 0)
        return SqrtRational(self.sign * s, self.radicand * q * q)

    __rmul__ = __mul__

    def __neg__(self):
        return SqrtRational(-self.sign, self.radicand)

    def __eq__(self, other):
        if not isinstance(other, SqrtRational):
            return NotImplemented
        return self.sign == other.sign and self.radicand == other.radicand

    def __hash__(self):
        return hash((self.sign, self.radicand))

    def ratio_to(self, other):
        """Exact rational self/other, assuming the radicand ratio is a perfect square.

        Raises ValueError when the two values do not live in the same
        quadratic extension; recoupling sums never trigger that.
        """
        if other.sign == 0:
            raise ZeroDivisionError("ratio to exact zero")
        if self.sign == 0:
            return Fraction(0)
        root = _sqrt_exact(self.radicand / other.radicand)
        if root is None:
            raise ValueError("radicand ratio is not a perfect square")
        return self.sign * other.sign * root

    def __repr__(self):
        return f"SqrtRational({self.sign}, {self.radicand!r})"


def sum_sqrt_rationals(terms):
    """Exact sum of SqrtRational terms sharing one square-free part.

    Factors every term against the first nonzero radicand; the accumulated
    rational coefficient then determines the canonical result.
    """
    base = None
    coef = Fraction(0)
    for t in terms:
        if t.sign == 0:
            continue
        if base is None:
            base = t.radicand
            coef = Fraction(t.sign)
            continue
        root = _sqrt_exact(t.radicand / base)
        if root is None:
            raise ValueError("terms do not share a common square-free part")
        coef += t.sign * root
    if base is None or coef == 0:
        return SqrtRational.zero()
    return SqrtRational((coef > 0) - (coef < 0), coef * coef * base)
