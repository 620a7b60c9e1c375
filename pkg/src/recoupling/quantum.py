"""Quantum integers, quantum dimensions and quantum 6j-symbols at q = e^{2 pi i/r}.

The quantum integer is the positive sine ratio [n] = sin(n pi/r)/sin(pi/r),
which keeps every quantum dimension d(n) = [n+1] positive on the allowed
label range 0..r-2.  The quantum 6j-symbol is the single-sum q-analogue of
the classical Racah formula: ordinary factorials become quantum factorials,
and the summation index is capped at r-2 because [t+1]! vanishes beyond it.

Quantities are computed in arbitrary-precision binary floating point
(mpmath), default 128 bits; exact cyclotomic arithmetic would be
disproportionate for the tolerances involved.  Every result carries its
working precision in a QuantumReal.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

import mpmath

from .classical import LabelSextet, admissible
from .errors import LabelRangeError

DEFAULT_PRECISION = 128


@dataclass(frozen=True)
class RootOfUnityLevel:
    """Order parameter r in q = e^{2 pi i/r}; the level is k = r - 2."""

    r: int

    def __post_init__(self):
        if not isinstance(self.r, int) or self.r < 3:
            raise ValueError(f"root-of-unity order r must be an integer >= 3, got {self.r!r}")

    @property
    def level(self):
        return self.r - 2

    @property
    def max_label(self):
        return self.r - 2


@dataclass(frozen=True)
class QuantumReal:
    """Arbitrary-precision real that remembers the precision it was computed at."""

    value: mpmath.mpf
    precision_bits: int

    def __float__(self):
        return float(self.value)

    def __str__(self):
        return mpmath.nstr(self.value, int(self.precision_bits * 0.301) + 2)


def _as_level(r):
    return r if isinstance(r, RootOfUnityLevel) else RootOfUnityLevel(int(r))


# Quantum integers and factorials per (r, precision), shared read-only after
# construction; single writer under the lock.
_qcache = {}
_QCACHE_LOCK = threading.Lock()


def _qtables(r, prec):
    """Tables ([n] for n in 0..r-1, [n]! for n in 0..r-1) at binary precision prec."""
    key = (r, prec)
    hit = _qcache.get(key)
    if hit is not None:
        return hit
    with _QCACHE_LOCK:
        hit = _qcache.get(key)
        if hit is not None:
            return hit
        with mpmath.workprec(prec):
            step = mpmath.pi / r
            s1 = mpmath.sin(step)
            qints = [mpmath.sin(n * step) / s1 for n in range(r)]
            qfacts = [mpmath.mpf(1)]
            for n in range(1, r):
                qfacts.append(qfacts[-1] * qints[n])
        _qcache[key] = (qints, qfacts)
    return _qcache[key]


def qint(n, r, precision_bits=DEFAULT_PRECISION):
    """Quantum integer [n] = sin(n pi/r)/sin(pi/r) at q = e^{2 pi i/r}."""
    level = _as_level(r)
    with mpmath.workprec(precision_bits):
        if 0 <= n < level.r:
            value = _qtables(level.r, precision_bits)[0][n]
        else:
            value = mpmath.sin(n * mpmath.pi / level.r) / mpmath.sin(mpmath.pi / level.r)
        return QuantumReal(+value, precision_bits)


def quantum_dimension(n, r, precision_bits=DEFAULT_PRECISION):
    """Quantum dimension d(n) = [n+1] of the irrep labeled n."""
    return qint(n + 1, r, precision_bits)


def _check_labels(labels, level):
    for x in labels:
        if not 0 <= x <= level.max_label:
            raise LabelRangeError(
                f"label {x} outside 0..{level.max_label} at r={level.r}"
            )


def q_admissible(a, b, c, r):
    """Quantum admissibility: the classical condition plus a+b+c <= 2(r-2)."""
    level = _as_level(r)
    _check_labels((a, b, c), level)
    return admissible(a, b, c) and a + b + c <= 2 * level.level


def _q_admissible_unchecked(a, b, c, level):
    return admissible(a, b, c) and a + b + c <= 2 * level.level


def qsixj(s, r, precision_bits=DEFAULT_PRECISION):
    """Quantum 6j-symbol of a LabelSextet at q = e^{2 pi i/r}.

    Single-sum evaluation with quantum factorials; returns 0 whenever any
    face triple fails quantum admissibility.  Specializes to the classical
    symbol as r grows.
    """
    if not isinstance(s, LabelSextet):
        s = LabelSextet(*s)
    level = _as_level(r)
    _check_labels(s.labels(), level)
    with mpmath.workprec(precision_bits):
        if not all(_q_admissible_unchecked(*t, level) for t in s.face_triples()):
            return QuantumReal(mpmath.mpf(0), precision_bits)
        qints, qf = _qtables(level.r, precision_bits)

        a, b, c, d, e, f = s.labels()
        t1 = (a + b + e) // 2
        t2 = (c + d + e) // 2
        t3 = (a + c + f) // 2
        t4 = (b + d + f) // 2
        q1 = (a + b + c + d) // 2
        q2 = (a + d + e + f) // 2
        q3 = (b + c + e + f) // 2

        total = mpmath.mpf(0)
        for t in range(max(t1, t2, t3, t4), min(q1, q2, q3, level.r - 2) + 1):
            den = (
                qf[t - t1] * qf[t - t2] * qf[t - t3] * qf[t - t4]
                * qf[q1 - t] * qf[q2 - t] * qf[q3 - t]
            )
            term = qf[t + 1] / den
            total += -term if t % 2 else term

        def delta_sq(x, y, z):
            n = (x + y + z) // 2
            return qf[(-x + y + z) // 2] * qf[(x - y + z) // 2] * qf[(x + y - z) // 2] / qf[n + 1]

        prefactor = mpmath.sqrt(
            delta_sq(a, b, e) * delta_sq(c, d, e) * delta_sq(a, c, f) * delta_sq(b, d, f)
        )
        return QuantumReal(prefactor * total, precision_bits)


def q_recoupling_matrix_element(x, y, e, z, w, f, r, precision_bits=DEFAULT_PRECISION):
    """Quantum analogue of the unitary recoupling bracket, as an mpf."""
    level = _as_level(r)
    symbol = qsixj(LabelSextet(x, y, w, z, e, f), level, precision_bits)
    qints, _ = _qtables(level.r, precision_bits)
    with mpmath.workprec(precision_bits):
        phase = -1 if ((x + y + z + w) // 2) % 2 else 1
        return phase * mpmath.sqrt(qints[e + 1] * qints[f + 1]) * symbol.value


def q_pentagon_residual(a, b, c, d, m, e, g, h, i, r, precision_bits=DEFAULT_PRECISION):
    """Residual of the quantum Biedenharn-Elliott identity at q = e^{2 pi i/r}.

    Same nine-label recoupling as the classical pentagon_residual; the sum
    over the internal channel runs over the quantum-admissible window.
    |residual| stays below 2^(-precision_bits/2) for admissible inputs.
    """
    level = _as_level(r)
    _check_labels((a, b, c, d, m, e, g, h, i), level)
    with mpmath.workprec(precision_bits):
        lhs = mpmath.mpf(0)
        fmin = max(abs(b - c), abs(a - g), abs(d - h))
        fmax = min(b + c, a + g, d + h, level.max_label)
        for f in range(fmin, fmax + 1):
            if (b + c + f) % 2:
                continue
            lhs += (
                q_recoupling_matrix_element(a, b, e, c, g, f, level, precision_bits)
                * q_recoupling_matrix_element(a, f, g, d, m, h, level, precision_bits)
                * q_recoupling_matrix_element(b, c, f, d, h, i, level, precision_bits)
            )
        rhs = q_recoupling_matrix_element(e, c, g, d, m, i, level, precision_bits) * \
            q_recoupling_matrix_element(a, b, e, i, m, h, level, precision_bits)
        return QuantumReal(lhs - rhs, precision_bits)
