"""Semiclassical estimates for 6j-symbols and exact-vs-estimate sweeps.

Three estimates are implemented:

* the oscillatory large-k formula for classical 6j-symbols in the Euclidean
  regime, amplitude sqrt(2/(3 pi V k^3)) and phase
  sum_edges (k*label + 1) * theta/2 + pi/4 with exterior dihedral angles
  theta and volume V of the tetrahedron whose edge lengths are the labels
  themselves (the explicit k^3 carries all growth);
* the root-mean-square envelope sqrt(1/(3 pi V)) that the squared symbol
  averages to locally;
* the conjectured quantum analogue at q = e^{2 pi i/(k+2)} built from the
  spherical tetrahedron with sides pi * fractions: amplitude
  sqrt(4 pi^2 / (k^3 sqrt(G))), phase
  sum (k*fraction + 1) * theta_l/2 - (k/pi) V + pi/4, with G the Gram
  determinant, theta_l the exterior spherical dihedrals and V the spherical
  volume.  This one is a conjecture: the sweep reports, it never asserts.

Sweeps over k are embarrassingly parallel; report rows are keyed by k so any
evaluation order produces identical output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .classical import LabelSextet, sixj
from .errors import AllZeroWindowError, IntegralityError, RegimeError
from .quantum import DEFAULT_PRECISION, qsixj
from .spherical import spherical_dihedrals, spherical_gram, spherical_volume
from .tetrahedron import EUCLIDEAN, MINKOWSKIAN, classify, exterior_dihedrals, volume

DEFAULT_RMS_WINDOW = 21


@dataclass
class AsymptoticsReport:
    """Rows of (k, exact, estimate, ratio) plus summary statistics."""

    regime: str
    rows: list = field(default_factory=list)  # (k, exact, estimate, ratio)
    excluded_k: list = field(default_factory=list)
    envelope_rms_error: float = float("nan")
    phase_correlation: float = float("nan")


@dataclass
class MinkowskiFit:
    """Least-squares fit of log|6j| against k in the decaying regime."""

    slope: float
    intercept: float
    r_squared: float
    rows: list = field(default_factory=list)  # (k, exact)
    excluded_k: list = field(default_factory=list)


def _as_sextet(s):
    return s if isinstance(s, LabelSextet) else LabelSextet(*s)


def _require_regime(edges, wanted):
    kind = classify(edges)
    if kind != wanted:
        raise RegimeError(f"tetrahedron is {kind}, operation requires {wanted}")


def ponzano_regge_estimate(s, k):
    """Oscillatory Euclidean estimate of the 6j-symbol at scaled labels k*s."""
    s = _as_sextet(s)
    edges = s.labels()
    _require_regime(edges, EUCLIDEAN)
    vol = volume(edges)
    thetas = exterior_dihedrals(edges)
    amplitude = math.sqrt(2.0 / (3.0 * math.pi * vol * k**3))
    phase = sum((k * lab + 1) * th / 2.0 for lab, th in zip(edges, thetas)) + math.pi / 4.0
    return amplitude * math.cos(phase)


def wigner_rms(s):
    """RMS envelope sqrt(1/(3 pi V)) of the 6j-symbol at the sextet's own scale."""
    s = _as_sextet(s)
    edges = s.labels()
    _require_regime(edges, EUCLIDEAN)
    return math.sqrt(1.0 / (3.0 * math.pi * volume(edges)))


def _pearson(xs, ys):
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if len(xs) < 2 or np.ptp(xs) == 0 or np.ptp(ys) == 0:
        return float("nan")
    return float(np.corrcoef(xs, ys)[0, 1])


def verify_euclidean(s, k_range, window=DEFAULT_RMS_WINDOW):
    """Exact 6j versus the oscillatory estimate over a range of scales.

    Parity failures of the scaled sextet give exact zeros; those k are
    excluded from the statistics and recorded.  The envelope error compares
    the windowed RMS of the exact values with the predicted envelope
    wigner_rms(s) * k^(-3/2); the phase statistic is the Pearson correlation
    between the exact and estimated sequences.
    """
    s = _as_sextet(s)
    _require_regime(s.labels(), EUCLIDEAN)
    rms0 = wigner_rms(s)
    rows = []
    excluded = []
    for k in sorted(k_range):
        scaled = s.scaled(k)
        if not scaled.is_admissible():
            excluded.append(k)
            continue
        exact = sixj(scaled).value
        estimate = ponzano_regge_estimate(s, k)
        ratio = exact / estimate if estimate != 0 else float("nan")
        rows.append((k, exact, estimate, ratio))
    report = AsymptoticsReport(regime=EUCLIDEAN, rows=rows, excluded_k=excluded)
    if not rows:
        return report

    ks = np.array([row[0] for row in rows], dtype=float)
    exact = np.array([row[1] for row in rows])
    estimates = np.array([row[2] for row in rows])
    report.phase_correlation = _pearson(exact, estimates)

    # Sliding-window RMS against the predicted envelope; a range narrower
    # than the window is treated as a single window.
    w = min(window, len(rows))
    errors = []
    for start in range(0, len(rows) - w + 1):
        sl = slice(start, start + w)
        rms_exact = math.sqrt(float(np.mean(exact[sl] ** 2)))
        rms_pred = math.sqrt(float(np.mean((rms0 * ks[sl] ** -1.5) ** 2)))
        errors.append(abs(rms_exact / rms_pred - 1.0))
    report.envelope_rms_error = max(errors)
    return report


def verify_minkowskian(s, k_range):
    """Fit the exponential decay rate of log|6j(k*s)| over k_range.

    Exact zeros are skipped; if every k in the window gives zero the fit is
    impossible and AllZeroWindowError is raised.  Contract for a certified
    Minkowskian family: slope < 0 with R^2 > 0.99.
    """
    s = _as_sextet(s)
    _require_regime(s.labels(), MINKOWSKIAN)
    rows = []
    excluded = []
    for k in sorted(k_range):
        exact = sixj(s.scaled(k)).value
        if exact == 0.0:
            excluded.append(k)
            continue
        rows.append((k, exact))
    if not rows:
        raise AllZeroWindowError("all 6j values in the window are exactly zero")
    ks = np.array([r[0] for r in rows], dtype=float)
    logs = np.array([math.log(abs(r[1])) for r in rows])
    if len(rows) < 2:
        raise AllZeroWindowError("need at least two nonzero values to fit a slope")
    slope, intercept = np.polyfit(ks, logs, 1)
    fitted = slope * ks + intercept
    ss_res = float(np.sum((logs - fitted) ** 2))
    ss_tot = float(np.sum((logs - logs.mean()) ** 2))
    r_squared = 1.0 - ss_res / ss_tot if ss_tot > 0 else float("nan")
    return MinkowskiFit(
        slope=float(slope),
        intercept=float(intercept),
        r_squared=r_squared,
        rows=rows,
        excluded_k=excluded,
    )


def _as_fractions(fractions):
    fracs = tuple(Fraction(x) for x in fractions)
    if len(fracs) != 6:
        raise ValueError("expected six fractions")
    if any(not (0 < x < 1) for x in fracs):
        raise ValueError("fractions must lie strictly in (0, 1)")
    return fracs


def _scaled_labels(fractions, k):
    labels = []
    for x in fractions:
        v = x * k
        if v.denominator != 1:
            raise IntegralityError(f"k={k} does not make fraction {x} integral")
        labels.append(int(v))
    return labels


def woodward_estimate(fractions, k):
    """Conjectured estimate of the quantum 6j at q = e^{2 pi i/(k+2)}.

    The six fractions (rationals in (0,1)) fix a spherical tetrahedron with
    sides pi * fraction; k must make every k*fraction integral.  The phase
    uses exterior spherical dihedral angles, matching the Euclidean estimate
    in the small-fraction limit.
    """
    fracs = _as_fractions(fractions)
    _scaled_labels(fracs, k)  # integrality check
    lengths = [math.pi * float(x) for x in fracs]
    tet = spherical_gram(lengths)
    interior = spherical_dihedrals(tet)  # raises if not realizable
    vol = spherical_volume(tet)
    amplitude = math.sqrt(4.0 * math.pi**2 / (k**3 * math.sqrt(tet.gram_det)))
    phase = (
        sum((k * float(x) + 1) * (math.pi - th) / 2.0 for x, th in zip(fracs, interior))
        - (k / math.pi) * vol
        + math.pi / 4.0
    )
    return amplitude * math.cos(phase)


def verify_woodward(fractions, k_list, precision_bits=DEFAULT_PRECISION):
    """Sweep of qsixj(k*fractions, r=k+2) against the conjectured estimate.

    Report-only: the formula is a conjecture, so the harness records rows and
    the correlation without asserting anything about them.
    """
    fracs = _as_fractions(fractions)
    report = AsymptoticsReport(regime="Spherical")
    for k in sorted(k_list):
        labels = _scaled_labels(fracs, k)
        estimate = woodward_estimate(fracs, k)
        exact = float(qsixj(LabelSextet(*labels), k + 2, precision_bits).value)
        ratio = exact / estimate if estimate != 0 else float("nan")
        report.rows.append((k, exact, estimate, ratio))
    if report.rows:
        report.phase_correlation = _pearson(
            [r[1] for r in report.rows], [r[2] for r in report.rows]
        )
    return report
