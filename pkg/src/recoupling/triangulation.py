"""Vertex-labeled simplicial triangulations of closed 3-manifolds.

A triangulation is a list of tetrahedra given as 4-tuples of distinct vertex
ids; edges and faces are identified by their vertex sets (simplicial-only
data model: generalized face-gluings are rejected).  Validation enforces the
closed-manifold face condition (every triangle lies in exactly two
tetrahedra) and the Euler characteristic V - E + F - T = 0.

Text format (line oriented): a header line ``tets N``, then N lines of four
space-separated vertex ids; ``#`` starts a comment.  Ids must be < 2^32 and
duplicate tetrahedra are rejected.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import TriangulationError, TriangulationParseError

MAX_VERTEX_ID = 2**32 - 1


@dataclass(frozen=True)
class Triangulation:
    """Immutable simplicial 3-complex with derived incidence structures."""

    tetrahedra: tuple  # sorted 4-tuples of vertex ids, in input order
    vertices: tuple = field(init=False)
    edges: tuple = field(init=False)
    faces: tuple = field(init=False)

    def __post_init__(self):
        tets = tuple(tuple(sorted(t)) for t in self.tetrahedra)
        object.__setattr__(self, "tetrahedra", tets)
        verts = sorted({v for t in tets for v in t})
        edges = sorted({p for t in tets for p in itertools.combinations(t, 2)})
        faces = sorted({f for t in tets for f in itertools.combinations(t, 3)})
        object.__setattr__(self, "vertices", tuple(verts))
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "faces", tuple(faces))
        self._validate()

    def _validate(self):
        if not self.tetrahedra:
            raise TriangulationError("triangulation has no tetrahedra")
        seen = set()
        for t in self.tetrahedra:
            if len(set(t)) != 4:
                raise TriangulationError(f"tetrahedron {t} has repeated vertices")
            if any(not (0 <= v <= MAX_VERTEX_ID) for v in t):
                raise TriangulationError(f"vertex id out of range in {t}")
            if t in seen:
                raise TriangulationError(f"duplicate tetrahedron {t}")
            seen.add(t)
        counts = self.face_incidence()
        bad = {f: n for f, n in counts.items() if n != 2}
        if bad:
            f, n = next(iter(bad.items()))
            raise TriangulationError(
                f"face {f} lies in {n} tetrahedra (closed complex needs exactly 2)"
            )
        v, e, f_, t = self.counts()
        if v - e + f_ - t != 0:
            raise TriangulationError(
                f"Euler characteristic {v - e + f_ - t} != 0 (V={v} E={e} F={f_} T={t})"
            )

    def face_incidence(self):
        counts = {}
        for t in self.tetrahedra:
            for f in itertools.combinations(t, 3):
                counts[f] = counts.get(f, 0) + 1
        return counts

    def counts(self):
        return (len(self.vertices), len(self.edges), len(self.faces), len(self.tetrahedra))

    @property
    def vertex_count(self):
        return len(self.vertices)

    def edge_degrees(self):
        """Number of tetrahedra containing each edge."""
        deg = {e: 0 for e in self.edges}
        for t in self.tetrahedra:
            for p in itertools.combinations(t, 2):
                deg[p] += 1
        return deg


def loads(text):
    """Parse the documented text format into a Triangulation."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise TriangulationParseError("empty triangulation file")
    header = lines[0].split()
    if len(header) != 2 or header[0] != "tets":
        raise TriangulationParseError(f"bad header {lines[0]!r}, expected 'tets N'")
    try:
        n = int(header[1])
    except ValueError:
        raise TriangulationParseError(f"bad tetrahedron count {header[1]!r}") from None
    body = lines[1:]
    if len(body) != n:
        raise TriangulationParseError(f"header promises {n} tetrahedra, found {len(body)}")
    tets = []
    for line in body:
        parts = line.split()
        if len(parts) != 4:
            raise TriangulationParseError(f"expected four vertex ids, got {line!r}")
        try:
            ids = tuple(int(p) for p in parts)
        except ValueError:
            raise TriangulationParseError(f"non-integer vertex id in {line!r}") from None
        if any(v < 0 or v > MAX_VERTEX_ID for v in ids):
            raise TriangulationParseError(f"vertex id out of range in {line!r}")
        tets.append(ids)
    try:
        return Triangulation(tuple(tets))
    except TriangulationError:
        raise


def load_triangulation(path):
    """Read and parse a triangulation file."""
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


def dumps(t):
    """Serialize a Triangulation to the documented text format."""
    lines = [f"tets {len(t.tetrahedra)}"]
    lines += [" ".join(str(v) for v in tet) for tet in t.tetrahedra]
    return "\n".join(lines) + "\n"


def boundary_of_4_simplex():
    """The five-tetrahedron triangulation of S^3 (all 4-subsets of 5 vertices)."""
    return Triangulation(tuple(itertools.combinations(range(5), 4)))


def pachner_14(t, tet_index):
    """Replace one tetrahedron by four sharing a new cone vertex."""
    if not 0 <= tet_index < len(t.tetrahedra):
        raise IndexError(f"tetrahedron index {tet_index} out of range")
    cone = max(t.vertices) + 1
    old = t.tetrahedra[tet_index]
    new_tets = [tet for i, tet in enumerate(t.tetrahedra) if i != tet_index]
    new_tets += [tuple(sorted(fc + (cone,))) for fc in itertools.combinations(old, 3)]
    return Triangulation(tuple(new_tets))


def pachner_23(t, face):
    """Flip a face shared by two tetrahedra into three around a new edge.

    The two apexes opposite the face become the endpoints of the new edge;
    the move is legal only when that edge is not already present and none of
    the three new tetrahedra exists yet.
    """
    face = tuple(sorted(face))
    holders = [tet for tet in t.tetrahedra if set(face) <= set(tet)]
    if len(holders) != 2:
        raise TriangulationError(f"face {face} is not an interior face of two tetrahedra")
    apexes = sorted((set(holders[0]) | set(holders[1])) - set(face))
    if len(apexes) != 2:
        raise TriangulationError(f"face {face} is not flippable: apexes coincide")
    u, v = apexes
    if tuple(sorted((u, v))) in t.edges:
        raise TriangulationError(
            f"face {face} is not flippable: edge ({u},{v}) already present"
        )
    replacements = [tuple(sorted(pair + (u, v))) for pair in itertools.combinations(face, 2)]
    existing = set(t.tetrahedra)
    if any(nt in existing for nt in replacements):
        raise TriangulationError(f"face {face} is not flippable: resulting tetrahedron exists")
    new_tets = [tet for tet in t.tetrahedra if tet not in holders] + replacements
    return Triangulation(tuple(new_tets))
