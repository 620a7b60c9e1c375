"""Brute-force 6j oracle built from explicit Clebsch-Gordan coefficients.

The oracle evaluates the same number as `classical.sixj` along a completely
different route: it assembles the two fusion-order bases of the four-fold
invariant space from exact Clebsch-Gordan coefficients (Condon-Shortley
phase convention) and contracts them.  Every intermediate is exact; products
of four coefficients always share one square-free part, so the contraction
collapses back to sign * sqrt(rational).

All arguments are doubled: labels are 2j, magnetic numbers are 2m.
"""

from __future__ import annotations

from fractions import Fraction

from .classical import ExactSixJ, LabelSextet, admissible
from .errors import OracleBoundError
from .exact import SqrtRational, factorial, sum_sqrt_rationals

DEFAULT_LABEL_BOUND = 12

_cg_cache = {}


def clebsch_gordan(tj1, tm1, tj2, tm2, tj3, tm3):
    """Exact <j1 m1 j2 m2 | j3 m3> as a SqrtRational (doubled arguments)."""
    key = (tj1, tm1, tj2, tm2, tj3, tm3)
    hit = _cg_cache.get(key)
    if hit is not None:
        return hit
    value = _clebsch_gordan_uncached(*key)
    _cg_cache[key] = value
    return value


def _clebsch_gordan_uncached(tj1, tm1, tj2, tm2, tj3, tm3):
    if tm1 + tm2 != tm3:
        return SqrtRational.zero()
    if abs(tm1) > tj1 or abs(tm2) > tj2 or abs(tm3) > tj3:
        return SqrtRational.zero()
    if (tj1 + tm1) % 2 or (tj2 + tm2) % 2 or (tj3 + tm3) % 2:
        return SqrtRational.zero()
    if not (
        tj3 <= tj1 + tj2 and tj1 <= tj2 + tj3 and tj2 <= tj3 + tj1 and (tj1 + tj2 + tj3) % 2 == 0
    ):
        return SqrtRational.zero()

    # Summation over k in the standard single-sum formula, in integer steps.
    kmin = max(0, (tj2 - tj3 - tm1) // 2, (tj1 - tj3 + tm2) // 2)
    kmax = min(
        (tj1 + tj2 - tj3) // 2,
        (tj1 - tm1) // 2,
        (tj2 + tm2) // 2,
    )
    total = Fraction(0)
    for k in range(kmin, kmax + 1):
        den = (
            factorial(k)
            * factorial((tj1 + tj2 - tj3) // 2 - k)
            * factorial((tj1 - tm1) // 2 - k)
            * factorial((tj2 + tm2) // 2 - k)
            * factorial((tj3 - tj2 + tm1) // 2 + k)
            * factorial((tj3 - tj1 - tm2) // 2 + k)
        )
        term = Fraction(1, den)
        total += -term if k % 2 else term
    if total == 0:
        return SqrtRational.zero()

    radicand = Fraction(
        (tj3 + 1)
        * factorial((tj1 + tj2 - tj3) // 2)
        * factorial((tj1 - tj2 + tj3) // 2)
        * factorial((-tj1 + tj2 + tj3) // 2),
        factorial((tj1 + tj2 + tj3) // 2 + 1),
    )
    radicand *= (
        factorial((tj3 + tm3) // 2)
        * factorial((tj3 - tm3) // 2)
        * factorial((tj1 - tm1) // 2)
        * factorial((tj1 + tm1) // 2)
        * factorial((tj2 - tm2) // 2)
        * factorial((tj2 + tm2) // 2)
    )
    sign = 1 if total > 0 else -1
    return SqrtRational(sign, radicand * total * total)


def sixj_oracle(s, label_bound=DEFAULT_LABEL_BOUND):
    """6j-symbol via explicit construction of the two recoupling bases.

    The overlap of the channel-e state ((ab)e, d at total c) with the
    channel-f state ((bd)f coupled to a at total c) is contracted over all
    magnetic configurations at the stretched weight, then normalized by the
    dimension factors and phase of the unitary recoupling bracket.

    Raises OracleBoundError above `label_bound`; the contraction cost grows
    quickly with the labels.
    """
    if not isinstance(s, LabelSextet):
        s = LabelSextet(*s)
    if max(s.labels()) > label_bound:
        raise OracleBoundError(
            f"oracle supports labels up to {label_bound}, got {max(s.labels())}"
        )
    if not s.is_admissible():
        return ExactSixJ(0, Fraction(0))

    a, b, c, d, e, f = s.labels()
    # Total of the 3-label recoupling is c, evaluated at top weight tm = c.
    tm_total = c
    terms = []
    for tm1 in range(-a, a + 1, 2):
        for tm2 in range(-b, b + 1, 2):
            tm12 = tm1 + tm2
            if abs(tm12) > e:
                continue
            tm3 = tm_total - tm12
            if abs(tm3) > d:
                continue
            t = (
                clebsch_gordan(a, tm1, b, tm2, e, tm12)
                * clebsch_gordan(e, tm12, d, tm3, c, tm_total)
                * clebsch_gordan(b, tm2, d, tm3, f, tm2 + tm3)
                * clebsch_gordan(a, tm1, f, tm2 + tm3, c, tm_total)
            )
            if t.sign != 0:
                terms.append(t)
    overlap = sum_sqrt_rationals(terms)
    if overlap.sign == 0:
        return ExactSixJ(0, Fraction(0))

    # overlap = phase * sqrt((e+1)(f+1)) * {6j}
    phase = -1 if ((a + b + d + c) // 2) % 2 else 1
    radicand = overlap.radicand / ((e + 1) * (f + 1))
    return ExactSixJ(phase * overlap.sign, radicand)


def clear_cache():
    """Drop the memoized Clebsch-Gordan table (frees memory after big sweeps)."""
    _cg_cache.clear()
