"""Exact classical SU(2) 6j-symbols.

Labels are nonnegative integers equal to twice the physicists' spins, so
every admissible triple has even sum and all internal index arithmetic stays
in the integers.  A sextet (a, b, c, d, e, f) labels the edges of a
tetrahedron whose four faces carry the triples {a,b,e}, {c,d,e}, {a,c,f},
{b,d,f}; opposite edge pairs are (a,d), (b,c), (e,f).

Values follow the standard Racah-Wigner normalization (the symbol for spins
j = label/2), which is exactly invariant under the S4 tetrahedral symmetry
group and real.  Results are exact: sign * sqrt(nonnegative rational).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import SqrtRational, factorial, sum_sqrt_rationals


@dataclass(frozen=True)
class LabelSextet:
    """Six edge labels with the tetrahedral incidence structure."""

    a: int
    b: int
    c: int
    d: int
    e: int
    f: int

    def __post_init__(self):
        for name in ("a", "b", "c", "d", "e", "f"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"label {name}={v!r} must be a nonnegative integer")

    def labels(self):
        return (self.a, self.b, self.c, self.d, self.e, self.f)

    def face_triples(self):
        """The four face triples, in a fixed order."""
        return (
            (self.a, self.b, self.e),
            (self.c, self.d, self.e),
            (self.a, self.c, self.f),
            (self.b, self.d, self.f),
        )

    def is_admissible(self):
        return all(admissible(*t) for t in self.face_triples())

    def scaled(self, k):
        return LabelSextet(*(k * x for x in self.labels()))


@dataclass(frozen=True)
class ExactSixJ:
    """Exact 6j value sign * sqrt(radicand), radicand a nonnegative rational."""

    sign: int
    radicand: Fraction

    @property
    def value(self):
        """Double-precision rendering; exact data stays in sign/radicand."""
        if self.sign == 0:
            return 0.0
        # The radicand's numerator/denominator can exceed float range for
        # large labels, so take the square root in the integers first.
        num, den = self.radicand.numerator, self.radicand.denominator
        shift = max(num.bit_length(), den.bit_length()) + 60
        scaled = math.isqrt((num << (2 * shift)) // den)
        return self.sign * (scaled / (1 << shift))

    def as_sqrt_rational(self):
        return SqrtRational(self.sign, self.radicand)

    def __str__(self):
        if self.sign == 0:
            return "0"
        s = "-" if self.sign < 0 else ""
        return f"{s}sqrt({self.radicand.numerator}/{self.radicand.denominator})"


def admissible(a, b, c):
    """Admissibility of a label triple: triangle inequalities and even sum.

    Equivalent to the trilinear invariant space being one-dimensional.
    Total function; negative inputs simply fail the triangle test.
    """
    return (
        a <= b + c
        and b <= c + a
        and c <= a + b
        and (a + b + c) % 2 == 0
    )


def triangle_weight_sq(a, b, c):
    """Square of the triangle coefficient Delta(a,b,c), as an exact Fraction."""
    return Fraction(
        factorial((-a + b + c) // 2)
        * factorial((a - b + c) // 2)
        * factorial((a + b - c) // 2),
        factorial((a + b + c) // 2 + 1),
    )


def _racah_sum(a, b, c, d, e, f):
    """One-variable Racah sum over t, as an exact Fraction.

    Triangle sums T and quadrilateral sums Q are in spin units (halved
    labels); the bounds are max(T) <= t <= min(Q), an empty range giving 0.
    """
    t1 = (a + b + e) // 2
    t2 = (c + d + e) // 2
    t3 = (a + c + f) // 2
    t4 = (b + d + f) // 2
    q1 = (a + b + c + d) // 2
    q2 = (a + d + e + f) // 2
    q3 = (b + c + e + f) // 2
    total = Fraction(0)
    for t in range(max(t1, t2, t3, t4), min(q1, q2, q3) + 1):
        term = Fraction(
            factorial(t + 1),
            factorial(t - t1)
            * factorial(t - t2)
            * factorial(t - t3)
            * factorial(t - t4)
            * factorial(q1 - t)
            * factorial(q2 - t)
            * factorial(q3 - t),
        )
        total += -term if t % 2 else term
    return total


def sixj(s):
    """Exact classical 6j-symbol of a LabelSextet.

    Returns the zero ExactSixJ whenever any face triple is non-admissible.
    """
    if not isinstance(s, LabelSextet):
        s = LabelSextet(*s)
    if not s.is_admissible():
        return ExactSixJ(0, Fraction(0))
    a, b, c, d, e, f = s.labels()
    total = _racah_sum(a, b, c, d, e, f)
    if total == 0:
        return ExactSixJ(0, Fraction(0))
    radicand = (
        triangle_weight_sq(a, b, e)
        * triangle_weight_sq(c, d, e)
        * triangle_weight_sq(a, c, f)
        * triangle_weight_sq(b, d, f)
        * total
        * total
    )
    return ExactSixJ(1 if total > 0 else -1, radicand)


# S4 acts on the tetrahedron vertices 0..3; edges carry labels via the fixed
# incidence a=(01), b=(02), c=(13), d=(23), e=(12), f=(03).
_EDGE_OF = {"a": (0, 1), "b": (0, 2), "c": (1, 3), "d": (2, 3), "e": (1, 2), "f": (0, 3)}
_LABEL_AT = {frozenset(v): k for k, v in _EDGE_OF.items()}
_FIELDS = ("a", "b", "c", "d", "e", "f")


def symmetry_orbit(s):
    """All label arrangements obtained from vertex permutations.

    The 6j-symbol is exactly constant on the orbit (at most 24 sextets).
    """
    if not isinstance(s, LabelSextet):
        s = LabelSextet(*s)
    values = dict(zip(_FIELDS, s.labels()))
    orbit = set()
    for perm in itertools.permutations(range(4)):
        relabeled = {}
        for name in _FIELDS:
            i, j = _EDGE_OF[name]
            src = _LABEL_AT[frozenset((perm[i], perm[j]))]
            relabeled[name] = values[src]
        orbit.add(LabelSextet(**relabeled))
    return orbit


def recoupling_matrix_element(x, y, e, z, w, f):
    """Unitary recoupling bracket <x,(yz)f; w | (xy)e, z; w> as a SqrtRational.

    This is the change-of-basis coefficient between the two fusion orders of
    three labels x, y, z at total w, expressed through the 6j-symbol with the
    dimension factors sqrt((e+1)(f+1)) and the standard phase.
    """
    symbol = sixj(LabelSextet(x, y, w, z, e, f))
    if symbol.sign == 0:
        return SqrtRational.zero()
    phase = -1 if ((x + y + z + w) // 2) % 2 else 1
    return SqrtRational(phase * symbol.sign, symbol.radicand * (e + 1) * (f + 1))


def pentagon_residual(a, b, c, d, m, e, g, h, i):
    """Exact residual of the Biedenharn-Elliott (pentagon) identity.

    The nine labels fix a recoupling of four representations a, b, c, d at
    total m, with intermediate channels e = (ab), g = ((ab)c), h = (b(cd)),
    i = (cd).  Composing three elementary recouplings must equal composing
    two; the difference of the two routes, divided by their common square-free
    part, is returned as an exact Fraction (0 for every admissible input).
    """
    lhs_terms = []
    fmin, fmax = max(abs(b - c), abs(a - g), abs(d - h)), min(b + c, a + g, d + h)
    for f in range(fmin, fmax + 1):
        t = (
            recoupling_matrix_element(a, b, e, c, g, f)
            * recoupling_matrix_element(a, f, g, d, m, h)
            * recoupling_matrix_element(b, c, f, d, h, i)
        )
        if t.sign != 0:
            lhs_terms.append(t)
    lhs = sum_sqrt_rationals(lhs_terms)
    rhs = recoupling_matrix_element(e, c, g, d, m, i) * recoupling_matrix_element(a, b, e, i, m, h)

    if lhs.sign == 0 and rhs.sign == 0:
        return Fraction(0)
    scale = rhs if rhs.sign != 0 else lhs
    return lhs.ratio_to(scale) - rhs.ratio_to(scale)
