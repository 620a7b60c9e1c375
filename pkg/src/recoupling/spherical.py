"""Spherical tetrahedra on the unit 3-sphere: Gram matrices, dihedral angles,
and volume by Schlaefli integration.

Edge lengths use the same sextet indexation as the Euclidean module; entry
(i, j) of the 4x4 Gram matrix holds cos of the edge joining vertices i and j,
with ones on the diagonal.  The tetrahedron is realizable in S^3 exactly when
the Gram matrix is positive definite (then its determinant G is positive).

Volume integrates the Schlaefli differential dV = 1/2 sum_e l_e d(theta_e)
from the all-pi/2 base configuration, whose volume pi^2/8 is one sixteenth of
the total S^3 measure 2 pi^2 by orthant symmetry.  Integrating by parts first
removes the angle derivatives, so only dihedral angles are evaluated along
the path.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .errors import NotRealizableError, PathRealizabilityError
from .tetrahedron import _VERTEX_PAIRS, safe_arccos

BASE_VOLUME = np.pi**2 / 8.0
_BASE_LENGTHS = np.full(6, np.pi / 2)


def _check_lengths(lengths):
    lengths = np.asarray(lengths, dtype=float)
    if lengths.shape != (6,):
        raise ValueError("expected six spherical edge lengths")
    if np.any(lengths <= 0.0) or np.any(lengths >= np.pi):
        raise NotRealizableError("spherical edge lengths must lie strictly in (0, pi)")
    return lengths


def gram_matrix(lengths):
    """4x4 vertex Gram matrix: ones on the diagonal, cos(l) off the diagonal."""
    lengths = _check_lengths(lengths)
    g = np.eye(4)
    for (i, j), l in zip(_VERTEX_PAIRS, lengths):
        g[i, j] = g[j, i] = np.cos(l)
    return g


def _is_positive_definite(g):
    try:
        np.linalg.cholesky(g)
        return True
    except np.linalg.LinAlgError:
        return False


@dataclass(frozen=True)
class SphericalTet:
    """Six edge lengths with the Gram matrix, its determinant, and realizability."""

    lengths: tuple
    gram: np.ndarray
    gram_det: float
    realizable: bool

    @property
    def dihedrals(self):
        return spherical_dihedrals(self)

    @property
    def volume(self):
        return spherical_volume(self)


def spherical_gram(lengths):
    """Build the SphericalTet record for the given edge lengths."""
    lengths = _check_lengths(lengths)
    g = gram_matrix(lengths)
    return SphericalTet(
        lengths=tuple(float(l) for l in lengths),
        gram=g,
        gram_det=float(np.linalg.det(g)),
        realizable=_is_positive_definite(g),
    )


def _dihedrals_from_gram(g):
    """Interior dihedral angles from the cofactor structure of the Gram matrix.

    The face opposite vertex i has its normal data in row i of the adjugate;
    the dihedral along edge (k, l) is the angle between the two faces NOT
    containing it, i.e. read off from the complementary index pair.
    """
    adj = np.linalg.inv(g) * np.linalg.det(g)
    angles = []
    for (k, l) in _VERTEX_PAIRS:
        i, j = [v for v in range(4) if v not in (k, l)]
        cosang = -adj[i, j] / np.sqrt(adj[i, i] * adj[j, j])
        angles.append(safe_arccos(cosang))
    return tuple(angles)


def spherical_dihedrals(t):
    """Interior dihedral angle along each edge, ordered like the sextet."""
    if isinstance(t, SphericalTet):
        g, realizable = t.gram, t.realizable
    else:
        t = spherical_gram(t)
        g, realizable = t.gram, t.realizable
    if not realizable:
        raise NotRealizableError("Gram matrix is not positive definite")
    return _dihedrals_from_gram(g)


def embed_vertices(t):
    """Four unit vectors in R^4 with the prescribed pairwise angles (Cholesky)."""
    if not isinstance(t, SphericalTet):
        t = spherical_gram(t)
    if not t.realizable:
        raise NotRealizableError("Gram matrix is not positive definite")
    return np.linalg.cholesky(t.gram)  # rows are the vertices


def _dihedrals_on_segment(start, end, s):
    lengths = (1.0 - s) * start + s * end
    g = gram_matrix(lengths)
    if not _is_positive_definite(g):
        raise PathRealizabilityError(
            "integration path left the realizable region of length space"
        )
    return np.array(_dihedrals_from_gram(g))


def _segment_volume_increment(start, end, epsabs):
    """Volume change along the straight segment start -> end in length space.

    Schlaefli gives dV/ds = 1/2 sum_e l_e(s) theta_e'(s); integrating by parts
    turns it into boundary terms minus 1/2 * integral of sum_e dl_e theta_e(s),
    which needs no angle derivatives.
    """
    start = np.asarray(start, dtype=float)
    end = np.asarray(end, dtype=float)
    dl = end - start
    theta0 = _dihedrals_on_segment(start, end, 0.0)
    theta1 = _dihedrals_on_segment(start, end, 1.0)
    boundary = 0.5 * (np.dot(end, theta1) - np.dot(start, theta0))

    def integrand(s):
        return float(np.dot(dl, _dihedrals_on_segment(start, end, s)))

    quad, _err = integrate.quad(integrand, 0.0, 1.0, epsabs=epsabs, limit=200)
    return boundary - 0.5 * quad


def spherical_volume(t, waypoints=None, epsabs=1e-12):
    """Volume of the spherical tetrahedron via Schlaefli integration.

    The integration path runs from the all-pi/2 configuration (volume pi^2/8)
    to the target lengths, straight in length space by default; `waypoints`
    inserts intermediate length sextets (used by the path-independence check).
    Raises PathRealizabilityError if positive definiteness fails en route.
    """
    if not isinstance(t, SphericalTet):
        t = spherical_gram(t)
    if not t.realizable:
        raise NotRealizableError("Gram matrix is not positive definite")
    target = np.asarray(t.lengths, dtype=float)
    path = [_BASE_LENGTHS.copy()]
    if waypoints is not None:
        path.extend(np.asarray(w, dtype=float) for w in waypoints)
    path.append(target)
    vol = BASE_VOLUME
    for seg_start, seg_end in zip(path[:-1], path[1:]):
        vol += _segment_volume_increment(seg_start, seg_end, epsabs)
    return float(vol)


def sample_volume_monte_carlo(t, n_samples=10_000_000, seed=0, chunk=1_000_000):
    """Monte-Carlo estimate (value, sigma) of the volume by S^3 membership.

    Uniform points on S^3; a point p is inside the spherical simplex iff its
    barycentric weights G^{-1} V p are all nonnegative.  Test oracle only.
    """
    if not isinstance(t, SphericalTet):
        t = spherical_gram(t)
    verts = embed_vertices(t)
    ginv = np.linalg.inv(t.gram)
    rng = np.random.default_rng(seed)
    hits = 0
    remaining = n_samples
    while remaining > 0:
        m = min(chunk, remaining)
        pts = rng.standard_normal((m, 4))
        pts /= np.linalg.norm(pts, axis=1, keepdims=True)
        lam = pts @ verts.T @ ginv.T
        hits += int(np.count_nonzero(np.all(lam >= 0.0, axis=1)))
        remaining -= m
    p = hits / n_samples
    total = 2 * np.pi**2
    sigma = total * np.sqrt(max(p * (1.0 - p), 1e-300) / n_samples)
    return total * p, sigma
