# geometry.py
"""
Points, point sets, hyperplanes and the exact predicates on them.

A ``Point`` is a plain tuple of ``Fraction``. ``PointSet`` and ``Hyperplane``
are frozen dataclasses, so every value in this module is immutable and all
functions are safe to call from worker threads.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Iterable, NamedTuple, Optional, Sequence, Tuple

from .errors import DegeneracyError, InputError
from .linalg import determinant, determinant_sign, dot, rank, sub
from .utils import format_rational, to_rational

Point = Tuple[Fraction, ...]


def make_point(coords: Iterable) -> Point:
    return tuple(to_rational(c) for c in coords)


@dataclass(frozen=True)
class PointSet:
    dim: int
    points: Tuple[Point, ...]
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 1:
            raise InputError(f"PointSet dim must be a positive integer, got {self.dim!r}")
        if len(self.points) < 1:
            raise InputError("PointSet needs at least one point")
        for i, p in enumerate(self.points):
            if len(p) != self.dim:
                raise InputError(f"Point {i} has {len(p)} coordinates, expected {self.dim}")
        if self.labels is not None and len(self.labels) != len(self.points):
            raise InputError(f"{len(self.labels)} labels for {len(self.points)} points")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], dim: Optional[int] = None, labels=None) -> "PointSet":
        pts = tuple(make_point(r) for r in rows)
        if dim is None:
            if not pts:
                raise InputError("PointSet needs at least one point")
            dim = len(pts[0])
        return cls(dim, pts, tuple(str(x) for x in labels) if labels is not None else None)

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    @property
    def n(self) -> int:
        return len(self.points)

    def subset(self, indices: Sequence[int]) -> "PointSet":
        labels = tuple(self.labels[i] for i in indices) if self.labels is not None else None
        return PointSet(self.dim, tuple(self.points[i] for i in indices), labels)

    def without(self, index: int) -> "PointSet":
        return self.subset([i for i in range(self.n) if i != index])


class SideCounts(NamedTuple):
    positive: int
    negative: int
    on: int


@dataclass(frozen=True)
class Hyperplane:
    """``{x : normal . x == offset}``; the positive side is ``normal . x > offset``."""

    normal: Tuple[Fraction, ...]
    offset: Fraction

    def __post_init__(self):
        object.__setattr__(self, "normal", tuple(Fraction(a) for a in self.normal))
        object.__setattr__(self, "offset", Fraction(self.offset))
        if not any(self.normal):
            raise DegeneracyError("Hyperplane normal is the zero vector")

    @property
    def dim(self) -> int:
        return len(self.normal)

    def evaluate(self, x: Sequence[Fraction]) -> Fraction:
        return dot(self.normal, x) - self.offset

    def side(self, x: Sequence[Fraction]) -> int:
        v = self.evaluate(x)
        return (v > 0) - (v < 0)

    def flipped(self) -> "Hyperplane":
        return Hyperplane(tuple(-a for a in self.normal), -self.offset)

    def normalized(self) -> "Hyperplane":
        """Smallest integer normal with the same orientation (positive rescaling only)."""
        scale = 1
        for x in (*self.normal, self.offset):
            scale = lcm(scale, x.denominator)
        ints = [int(x * scale) for x in self.normal]
        g = 0
        for x in ints:
            g = gcd(g, x)
        return Hyperplane(tuple(Fraction(x, g) for x in ints), self.offset * scale / g)

    def canonical(self) -> Tuple["Hyperplane", int]:
        """Canonical form (first nonzero normal entry positive) and the sign applied to get there."""
        h = self.normalized()
        lead = next(a for a in h.normal if a != 0)
        if lead < 0:
            return h.flipped(), -1
        return h, 1

    def to_dict(self) -> dict:
        return {
            "normal": [format_rational(a) for a in self.normal],
            "offset": format_rational(self.offset),
        }


def _check_same_dim(pts: Sequence[Sequence[Fraction]], p: int) -> None:
    for i, x in enumerate(pts):
        if len(x) != p:
            raise InputError(f"Point {i} has dimension {len(x)}, expected {p}")


def orientation(pts: Sequence[Sequence[Fraction]]) -> int:
    """Sign of det(pts[i] - pts[0]) for p+1 points in dimension p."""
    if not pts:
        raise InputError("orientation needs p+1 points")
    p = len(pts) - 1
    _check_same_dim(pts, p)
    base = pts[0]
    return determinant_sign([sub(x, base) for x in pts[1:]])


def affine_rank(points: Sequence[Sequence[Fraction]]) -> int:
    """Dimension of the affine hull (-1 never occurs: a PointSet is nonempty)."""
    base = points[0]
    diffs = [sub(x, base) for x in points[1:]]
    return rank(diffs) if diffs else 0


def find_affine_dependency(S: PointSet) -> Optional[Tuple[int, ...]]:
    """First (lexicographic) subset violating general linear position, or None."""
    n, p = S.n, S.dim
    if n <= p:
        if affine_rank(S.points) == n - 1:
            return None
        # smallest dependent prefix-free subset, for the error message
        for size in range(2, n + 1):
            for idx in combinations(range(n), size):
                if affine_rank([S[i] for i in idx]) < size - 1:
                    return idx
        return tuple(range(n))
    for idx in combinations(range(n), p + 1):
        if orientation([S[i] for i in idx]) == 0:
            return idx
    return None


def is_general_linear_position(S: PointSet) -> bool:
    return find_affine_dependency(S) is None


def require_general_linear_position(S: PointSet, what: str = "point set") -> None:
    bad = find_affine_dependency(S)
    if bad is not None:
        raise DegeneracyError(f"{what} is not in general linear position", bad)


def hyperplane_through(pts: Sequence[Sequence[Fraction]]) -> Hyperplane:
    """Canonical hyperplane through p affinely independent points in dimension p.

    normal_j is the signed cofactor of column j in the (p-1) x p matrix of
    differences pts[i] - pts[0].
    """
    p = len(pts)
    if p < 1:
        raise InputError("hyperplane_through needs p >= 1 points")
    _check_same_dim(pts, p)
    base = pts[0]
    diffs = [sub(x, base) for x in pts[1:]]
    normal = []
    for j in range(p):
        minor = [[row[c] for c in range(p) if c != j] for row in diffs]
        cof = determinant(minor)
        normal.append(cof if j % 2 == 0 else -cof)
    if not any(normal):
        raise DegeneracyError("Points are affinely dependent", range(p))
    h = Hyperplane(tuple(normal), dot(normal, base))
    return h.canonical()[0]


def side_counts(H: Hyperplane, S: PointSet) -> SideCounts:
    if H.dim != S.dim:
        raise InputError(f"Hyperplane dim {H.dim} != point set dim {S.dim}")
    pos = neg = on = 0
    for x in S.points:
        s = H.side(x)
        if s > 0:
            pos += 1
        elif s < 0:
            neg += 1
        else:
            on += 1
    return SideCounts(pos, neg, on)


def split_sides(H: Hyperplane, points: Sequence[Point]) -> Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]:
    """Index lists (positive, negative, on) for ``points``."""
    pos, neg, on = [], [], []
    for i, x in enumerate(points):
        s = H.side(x)
        (pos if s > 0 else neg if s < 0 else on).append(i)
    return tuple(pos), tuple(neg), tuple(on)
