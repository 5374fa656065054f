# genpos.py
"""
Seeded random point sets with rejection sampling, and the general-position
checks the lifted theorems need.

Every generator draws from one ``random.Random(seed)`` stream, retries
included, so (seed, parameters) fixes the output.
"""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Optional

from .config import DEFAULTS
from .errors import GenerationError, InputError
from .faces import vertex_indices
from .geometry import PointSet, is_general_linear_position
from .lifts import MonomialMap, apply, homogeneous_veronese, moment_curve, veronese

Checker = Callable[[PointSet], bool]


# ----- checks -----

def check_conic_general_position(S: PointSet) -> bool:
    if S.dim != 2:
        raise InputError(f"Conic general position is defined for planar sets, got dim {S.dim}")
    return is_general_linear_position(S) and is_general_linear_position(apply(veronese(2, 2), S))


def _on_common_origin_line(S: PointSet) -> bool:
    pts = S.points
    for i in range(len(pts)):
        if pts[i][0] == 0 and pts[i][1] == 0:
            return True
        for j in range(i + 1, len(pts)):
            if pts[i][0] * pts[j][1] == pts[i][1] * pts[j][0]:
                return True
    return False


def check_homogeneous_general_position(S: PointSet, m: int) -> bool:
    if m < 2 or m % 2:
        raise InputError(f"m must be even and >= 2, got {m}")
    if S.dim != 2:
        raise InputError(f"Homogeneous general position is defined for planar sets, got dim {S.dim}")
    if _on_common_origin_line(S):
        return False
    return is_general_linear_position(apply(homogeneous_veronese(2, m), S))


def check_distinct_first_coordinate(S: PointSet) -> bool:
    firsts = [x[0] for x in S.points]
    return len(set(firsts)) == len(firsts)


def check_lift_general_position(S: PointSet, fmap: MonomialMap) -> bool:
    return is_general_linear_position(S) and is_general_linear_position(apply(fmap, S))


# ----- sampling -----

def _resolve(n: int, d: int, coord_bound: Optional[int], max_retries: Optional[int]):
    if n < 1 or d < 1:
        raise InputError(f"n and d must be >= 1, got n={n}, d={d}")
    if coord_bound is None:
        coord_bound = DEFAULTS["coord_bound_factor"] * n * d
    if coord_bound < n * d:
        raise InputError(f"coord_bound must be >= n*d = {n * d}, got {coord_bound}")
    if max_retries is None:
        max_retries = DEFAULTS["max_retries"]
    return coord_bound, max_retries


def sample_until(
    n: int,
    d: int,
    seed: int,
    accept: Checker,
    coord_bound: Optional[int] = None,
    max_retries: Optional[int] = None,
    what: str = "general linear position",
) -> PointSet:
    """Draw n integer points in [-B, B]^d until ``accept`` holds, at most max_retries times."""
    bound, retries = _resolve(n, d, coord_bound, max_retries)
    rng = random.Random(seed)
    for _ in range(retries):
        rows = [[rng.randint(-bound, bound) for _ in range(d)] for _ in range(n)]
        S = PointSet.from_rows(rows, d)
        if accept(S):
            return S
    raise GenerationError(f"No point set in {what} after {retries} attempts (n={n}, d={d}, seed={seed})")


def random_point_set(n: int, d: int, seed: int, coord_bound: Optional[int] = None, max_retries: Optional[int] = None) -> PointSet:
    return sample_until(n, d, seed, is_general_linear_position, coord_bound, max_retries)


def random_conic_generic_set(n: int, seed: int, coord_bound: Optional[int] = None, max_retries: Optional[int] = None) -> PointSet:
    return sample_until(n, 2, seed, check_conic_general_position, coord_bound, max_retries, "conic general position")


def random_homogeneous_generic_set(n: int, m: int, seed: int, coord_bound: Optional[int] = None, max_retries: Optional[int] = None) -> PointSet:
    return sample_until(
        n, 2, seed, lambda S: check_homogeneous_general_position(S, m), coord_bound, max_retries,
        f"homogeneous general position (m={m})",
    )


def random_lift_generic_set(n: int, fmap: MonomialMap, seed: int, coord_bound: Optional[int] = None, max_retries: Optional[int] = None) -> PointSet:
    return sample_until(
        n, fmap.source_dim, seed, lambda S: check_lift_general_position(S, fmap), coord_bound, max_retries,
        f"general position for {fmap.name}",
    )


def random_distinct_first_coordinate_set(n: int, d: int, seed: int, coord_bound: Optional[int] = None, max_retries: Optional[int] = None) -> PointSet:
    return sample_until(
        n, d, seed, lambda S: is_general_linear_position(S) and check_distinct_first_coordinate(S),
        coord_bound, max_retries, "general position with distinct first coordinates",
    )


# ----- convex position -----

def _sphere_point(rng: random.Random, d: int, bound: int):
    """Inverse stereographic image of a random rational u in Q^(d-1): an exact point on S^(d-1)."""
    q = rng.randint(1, bound)
    u = [Fraction(rng.randint(-bound, bound), q) for _ in range(d - 1)]
    r2 = sum(x * x for x in u)
    return [2 * x / (r2 + 1) for x in u] + [(r2 - 1) / (r2 + 1)]


def convex_position_set(
    n: int,
    d: int,
    seed: int,
    mode: str = "moment",
    coord_bound: Optional[int] = None,
    max_retries: Optional[int] = None,
    workers: int = 1,
) -> PointSet:
    """GLP points in convex position, certified: every point must be a strict vertex.

    ``moment`` uses distinct random parameters on the moment curve, ``sphere``
    exact rational points on the unit sphere.
    """
    if n <= d:
        raise InputError(f"Convex position needs n > d, got n={n}, d={d}")
    if mode not in ("moment", "sphere"):
        raise InputError(f"Unknown convex mode {mode!r}")
    if mode == "sphere" and d < 2:
        raise InputError("Sphere mode needs d >= 2")
    bound = coord_bound if coord_bound is not None else 2 * n
    if bound < n:
        raise InputError(f"coord_bound must be >= n = {n}, got {bound}")
    retries = max_retries if max_retries is not None else DEFAULTS["max_retries"]
    rng = random.Random(seed)
    curve = moment_curve(d)
    for _ in range(retries):
        if mode == "moment":
            params = sorted(rng.sample(range(-bound, bound + 1), n))
            S = apply(curve, PointSet.from_rows([[t] for t in params], 1))
        else:
            S = PointSet.from_rows([_sphere_point(rng, d, bound) for _ in range(n)], d)
            if len(set(S.points)) != n:
                continue
        if not is_general_linear_position(S):
            continue
        if vertex_indices(S, workers) != list(range(n)):
            raise GenerationError(f"Generated set failed the convex-position certificate (seed={seed})")
        return S
    raise GenerationError(f"No convex-position set after {retries} attempts (n={n}, d={d}, seed={seed})")


GEN_MODES = ("glp", "conic", "hom:m", "convex", "convex-sphere", "distinct-x1")


def generate(mode: str, n: int, d: int, seed: int, coord_bound: Optional[int] = None, max_retries: Optional[int] = None) -> PointSet:
    """Dispatcher behind ``kfacetlab gen --mode``."""
    if mode == "glp":
        return random_point_set(n, d, seed, coord_bound, max_retries)
    if mode == "conic":
        return random_conic_generic_set(n, seed, coord_bound, max_retries)
    if mode.startswith("hom:"):
        try:
            m = int(mode.split(":", 1)[1])
        except ValueError as e:
            raise InputError(f"Bad mode {mode!r}, expected hom:<even m>") from e
        return random_homogeneous_generic_set(n, m, seed, coord_bound, max_retries)
    if mode == "convex":
        return convex_position_set(n, d, seed, "moment", coord_bound, max_retries)
    if mode == "convex-sphere":
        return convex_position_set(n, d, seed, "sphere", coord_bound, max_retries)
    if mode == "distinct-x1":
        return random_distinct_first_coordinate_set(n, d, seed, coord_bound, max_retries)
    raise InputError(f"Unknown generation mode {mode!r}; choose from {', '.join(GEN_MODES)}")
