"""Euclidean/Minkowskian metric geometry of tetrahedra from six edge lengths.

Edge lengths are indexed like a LabelSextet: with vertices 0..3 the edges are
a=(01), b=(02), c=(13), d=(23), e=(12), f=(03), so the four faces carry the
length triples {a,b,e}, {c,d,e}, {a,c,f}, {b,d,f} and opposite edge pairs are
(a,d), (b,c), (e,f).

The Cayley-Menger determinant (normalized so that 288 V^2 = det) classifies
the tetrahedron: positive means an isometric embedding into Euclidean 3-space
exists, negative means Minkowskian, near zero means degenerate (flat).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, FaceViolationError, RegimeError

EUCLIDEAN = "Euclidean"
MINKOWSKIAN = "Minkowskian"
DEGENERATE = "Degenerate"

# |det| below DEGENERACY_TOL * (max edge)^6 counts as flat; the determinant is
# homogeneous of degree 6 in the edges, so the threshold is scale-invariant.
DEGENERACY_TOL = 1e-12

_VERTEX_PAIRS = ((0, 1), (0, 2), (1, 3), (2, 3), (1, 2), (0, 3))
_FACE_TRIPLES = ((0, 1, 4), (2, 3, 4), (0, 2, 5), (1, 3, 5))

# A cosine may exceed [-1, 1] by roundoff near degenerate configurations;
# clamping silently beyond this budget would hide real errors.
ARCCOS_CLAMP_TOL = 1e-9


def safe_arccos(x, tol=ARCCOS_CLAMP_TOL):
    """arccos with clamping to [-1, 1], erroring if the excursion exceeds tol."""
    if x > 1.0 + tol or x < -1.0 - tol:
        raise DomainError(f"cosine {x} out of range beyond clamping tolerance")
    return float(np.arccos(np.clip(x, -1.0, 1.0)))


def _check_faces(edges):
    edges = tuple(float(x) for x in edges)
    if len(edges) != 6:
        raise ValueError("expected six edge lengths")
    if min(edges) <= 0:
        raise FaceViolationError("edge lengths must be positive")
    for (i, j, k) in _FACE_TRIPLES:
        x, y, z = edges[i], edges[j], edges[k]
        if x + y <= z or y + z <= x or z + x <= y:
            raise FaceViolationError(
                f"face lengths ({x}, {y}, {z}) violate the strict triangle inequality"
            )
    return edges


def _distance_matrix(edges):
    a, b, c, d, e, f = edges
    m = np.zeros((4, 4))
    for (i, j), length in zip(_VERTEX_PAIRS, (a, b, c, d, e, f)):
        m[i, j] = m[j, i] = length
    return m


def cayley_menger(edges):
    """Cayley-Menger determinant of the six edge lengths; 288 V^2 when Euclidean."""
    edges = _check_faces(edges)
    dm = _distance_matrix(edges) ** 2
    cm = np.ones((5, 5))
    cm[0, 0] = 0.0
    cm[1:, 1:] = dm
    return float(np.linalg.det(cm))


def classify(edges, tol=DEGENERACY_TOL):
    """Euclidean / Minkowskian / Degenerate from the Cayley determinant sign."""
    edges = _check_faces(edges)
    det = cayley_menger(edges)
    scale = max(edges) ** 6
    if abs(det) < tol * scale:
        return DEGENERATE
    return EUCLIDEAN if det > 0 else MINKOWSKIAN


def euclid_embed(edges):
    """Vertex coordinates in R^3 realizing the six edge lengths.

    Canonical placement: v0 at the origin, v1 on the +x axis, v2 in the upper
    xy half-plane, v3 in the z > 0 half-space.  Raises RegimeError unless the
    configuration is Euclidean.
    """
    edges = _check_faces(edges)
    if classify(edges) != EUCLIDEAN:
        raise RegimeError("tetrahedron is not Euclidean; no embedding in R^3")
    dm = _distance_matrix(edges)
    d01, d02, d03 = dm[0, 1], dm[0, 2], dm[0, 3]
    d12, d13, d23 = dm[1, 2], dm[1, 3], dm[2, 3]

    v0 = np.zeros(3)
    v1 = np.array([d01, 0.0, 0.0])
    x2 = (d01**2 + d02**2 - d12**2) / (2 * d01)
    y2 = np.sqrt(max(d02**2 - x2**2, 0.0))
    v2 = np.array([x2, y2, 0.0])
    x3 = (d01**2 + d03**2 - d13**2) / (2 * d01)
    y3 = (d02**2 + d03**2 - d23**2 - 2 * x2 * x3) / (2 * y2)
    z3sq = d03**2 - x3**2 - y3**2
    v3 = np.array([x3, y3, np.sqrt(max(z3sq, 0.0))])
    return np.array([v0, v1, v2, v3])


def _interior_dihedrals_from_points(points):
    """Interior dihedral angle at each edge, ordered like the edge sextet."""
    angles = []
    for (i, j) in _VERTEX_PAIRS:
        k, l = [v for v in range(4) if v not in (i, j)]
        axis = points[j] - points[i]
        n1 = np.cross(axis, points[k] - points[i])
        n2 = np.cross(axis, points[l] - points[i])
        cosang = np.dot(n1, n2) / (np.linalg.norm(n1) * np.linalg.norm(n2))
        angles.append(safe_arccos(cosang))
    return tuple(angles)


def exterior_dihedrals(edges):
    """Exterior dihedral angles (pi minus interior), ordered like the sextet."""
    points = euclid_embed(edges)
    return tuple(np.pi - t for t in _interior_dihedrals_from_points(points))


def interior_dihedrals(edges):
    """Interior dihedral angles, ordered like the sextet."""
    return _interior_dihedrals_from_points(euclid_embed(edges))


def volume(edges):
    """Euclidean volume sqrt(det/288); RegimeError outside the Euclidean regime."""
    edges = _check_faces(edges)
    det = cayley_menger(edges)
    if classify(edges) != EUCLIDEAN:
        raise RegimeError("volume is defined only for Euclidean tetrahedra")
    return float(np.sqrt(det / 288.0))


@dataclass(frozen=True)
class TetGeometry:
    """Classification plus metric data of the tetrahedron with given edges."""

    edges: tuple
    cayley_det: float
    kind: str
    volume: float | None
    exterior_dihedrals: tuple | None

    @property
    def interior_dihedrals(self):
        if self.exterior_dihedrals is None:
            return None
        return tuple(np.pi - t for t in self.exterior_dihedrals)


def tet_geometry(edges, tol=DEGENERACY_TOL):
    """Bundle cayley_menger/classify/volume/exterior_dihedrals in one call."""
    edges = _check_faces(edges)
    det = cayley_menger(edges)
    kind = classify(edges, tol)
    if kind == EUCLIDEAN:
        return TetGeometry(edges, det, kind, float(np.sqrt(det / 288.0)), exterior_dihedrals(edges))
    return TetGeometry(edges, det, kind, None, None)
