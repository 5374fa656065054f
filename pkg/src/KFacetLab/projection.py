# projection.py
"""Stereographic projection at a hull vertex and the per-vertex k-facet count check."""
from __future__ import annotations

from dataclasses import dataclass
from functools import partial
from typing import Dict, List, Tuple

from .errors import DegeneracyError, InputError
from .faces import face_certificate
from .facets import enumerate_k_facets, k_facet_profile, oriented_facets
from .geometry import PointSet, find_affine_dependency, require_general_linear_position
from .linalg import dot
from .pool import parallel_map


def stereographic_project(S: PointSet, v: int) -> PointSet:
    """Project S minus S[v] from S[v] onto a hyperplane parallel to a supporting hyperplane at v.

    The far hyperplane sits at distance (largest value of the support
    functional on S) + 1, so all of S lies between the two. Its points are
    written in p-1 coordinates by dropping the coordinate where the normal
    has the largest absolute entry.
    """
    if S.dim < 2:
        raise InputError("stereographic_project needs dimension >= 2")
    if not 0 <= v < S.n:
        raise InputError(f"Vertex index {v} out of range for {S.n} points")
    require_general_linear_position(S)
    cert = face_certificate(S, (v,), strict=True)
    if cert is None:
        raise InputError(f"Point {v} is not a vertex of the hull")
    h = cert.hyperplane
    apex = S[v]
    others = [i for i in range(S.n) if i != v]
    far = max(h.evaluate(S[i]) for i in others) + 1
    drop = max(range(S.dim), key=lambda j: (abs(h.normal[j]), -j))
    images = []
    for i in others:
        direction = tuple(a - b for a, b in zip(S[i], apex))
        lam = far / dot(h.normal, direction)
        y = tuple(a + lam * c for a, c in zip(apex, direction))
        images.append(tuple(c for j, c in enumerate(y) if j != drop))
    labels = tuple(S.labels[i] for i in others) if S.labels is not None else None
    out = PointSet(S.dim - 1, tuple(images), labels)
    bad = find_affine_dependency(out)
    if bad is not None:
        raise DegeneracyError("Projected set is not in general linear position", [others[i] for i in bad])
    return out


def facets_through_vertex(S: PointSet, v: int, k: int, workers: int = 1, log_file=None) -> int:
    return sum(1 for f in enumerate_k_facets(S, k, workers, log_file) if v in f.indices)


@dataclass(frozen=True)
class VertexCount:
    vertex: int
    k: int
    through: int
    projected: int

    @property
    def ok(self) -> bool:
        return self.through == self.projected


@dataclass(frozen=True)
class ProjectionCheck:
    p: int
    rows: Tuple[VertexCount, ...]
    level_sums: Tuple[Tuple[int, int, int], ...]   # (k, sum over v, p * e_k)

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.rows) and all(s == t for _, s, t in self.level_sums)


def _vertex_row(S: PointSet, v: int, counts: Dict[Tuple[int, int], int]) -> List[VertexCount]:
    projected = k_facet_profile(stereographic_project(S, v))
    levels = S.n - S.dim + 1
    out = []
    for k in range(levels):
        e_proj = projected.e[k] if k < len(projected.e) else 0
        out.append(VertexCount(v, k, counts.get((v, k), 0), e_proj))
    return out


def projection_check(S: PointSet, workers: int = 1, log_file=None) -> ProjectionCheck:
    """facets_through_vertex against e_k of every projection, and sum_v = p * e_k."""
    profile = k_facet_profile(S, workers, log_file)
    counts: Dict[Tuple[int, int], int] = {}
    for f in oriented_facets(S, workers, log_file):
        for v in f.indices:
            counts[(v, f.k)] = counts.get((v, f.k), 0) + 1
    per_vertex = parallel_map(partial(_vertex_row, S, counts=counts), list(range(S.n)), workers, log_file, "projection_check", processes=True)
    rows = tuple(r for chunk in per_vertex for r in chunk)
    sums = tuple(
        (k, sum(r.through for r in rows if r.k == k), S.dim * profile.e[k]) for k in range(len(profile.e))
    )
    return ProjectionCheck(S.dim, rows, sums)
