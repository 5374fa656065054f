# verify.py
"""
Theorem pipelines: generate an admissible seeded instance, run the
enumeration or certificate search, compare against the closed form.

Each pipeline returns a ``VerifyReport``; a mismatch is a failed report,
never an exception. Reports contain no timestamps or timings, so the same
(theorem, params, seed) always serializes to the same bytes.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Dict, List, Optional

from .certificates import all_pair_certificates, conic_vertex_certificate, embedding_certificate, veronese_square_certificate
from .config import DEFAULTS, default_coord_bound
from .core import point_set_to_dict
from .errors import DegeneracyError, InputError
from .faces import face_certificate, facet_cover_violations, is_weakly_k_neighborly, neighborliness_degree, radon_partition, weak_separation
from .facets import k_facet_profile
from .formulas import (
    circle_count,
    conic_count,
    halving_circle_count,
    halving_conic_count,
    homogeneous_count,
    neighborly_e_k,
    veronese_neighborliness,
)
from .genpos import (
    convex_position_set,
    random_conic_generic_set,
    random_distinct_first_coordinate_set,
    random_homogeneous_generic_set,
    random_lift_generic_set,
    random_point_set,
)
from .geometry import PointSet
from .lifts import apply, circle_map, homogeneous_veronese, neighborly_embedding, veronese
from .projection import projection_check
from .runlog import log_error, log_info, log_line


@dataclass
class VerifyReport:
    theorem: str
    params: Dict[str, object]
    seed: int
    expected: object
    measured: object
    passed: bool
    instance: Optional[PointSet] = field(default=None, repr=False)
    detail: str = ""

    def to_dict(self) -> dict:
        data = {
            "theorem": self.theorem,
            "params": dict(sorted(self.params.items())),
            "seed": self.seed,
            "expected": self.expected,
            "measured": self.measured,
            "pass": self.passed,
        }
        if self.detail:
            data["detail"] = self.detail
        if not self.passed and self.instance is not None:
            data["instance"] = point_set_to_dict(self.instance)
        return data


@dataclass
class _Ctx:
    seed: int
    workers: int
    log_file: object
    config: dict

    def bound(self, n: int, d: int) -> int:
        return default_coord_bound(self.config, n, d)

    @property
    def retries(self) -> int:
        return self.config["max_retries"]


# ----- pipelines -----

def _circles(ctx: _Ctx, n: int) -> VerifyReport:
    if n < 4:
        raise InputError(f"circles needs n >= 4, got {n}")
    S = random_lift_generic_set(n, circle_map(), ctx.seed, ctx.bound(n, 2), ctx.retries)
    profile = k_facet_profile(apply(circle_map(), S), ctx.workers, ctx.log_file)
    if n % 2:
        expected = {"profile": [circle_count(n, k) for k in range(n - 2)], "halving": halving_circle_count((n - 1) // 2)}
        measured = {"profile": list(profile.e), "halving": profile.e[(n - 3) // 2] // 2}
    else:
        expected = {"profile": [neighborly_e_k(n, 3, k) for k in range(n - 2)]}
        measured = {"profile": list(profile.e)}
    return VerifyReport("circles", {"n": n}, ctx.seed, expected, measured, expected == measured, S)


def _conics(ctx: _Ctx, n: int) -> VerifyReport:
    S = random_conic_generic_set(n, ctx.seed, ctx.bound(n, 2), ctx.retries)
    expected = {"profile": [conic_count(n, k) for k in range(n - 4)]}
    profile = k_facet_profile(apply(veronese(2, 2), S), ctx.workers, ctx.log_file)
    measured = {"profile": list(profile.e)}
    if n % 2:
        half = (n - 5) // 2
        expected["halving"] = halving_conic_count(half)
        measured["halving"] = profile.e[half]
    return VerifyReport("conics", {"n": n}, ctx.seed, expected, measured, expected == measured, S)


def _homogeneous(ctx: _Ctx, n: int, m: int) -> VerifyReport:
    S = random_homogeneous_generic_set(n, m, ctx.seed, ctx.bound(n, 2), ctx.retries)
    expected = {"profile": [homogeneous_count(n, m, k) for k in range(n - m)]}
    profile = k_facet_profile(apply(homogeneous_veronese(2, m), S), ctx.workers, ctx.log_file)
    measured = {"profile": list(profile.e)}
    return VerifyReport("homogeneous", {"n": n, "m": m}, ctx.seed, expected, measured, expected == measured, S)


def _veronese_neighborly(ctx: _Ctx, n: int, m: int) -> VerifyReport:
    target = veronese_neighborliness(2, m)
    # no dim+1 points of the plane on a common curve of degree m/2
    S = random_lift_generic_set(n, veronese(2, m // 2), ctx.seed, ctx.bound(n, 2), ctx.retries)
    lifted = apply(veronese(2, m), S)
    degree = neighborliness_degree(lifted, target, ctx.workers, ctx.log_file)
    certificates_ok = True
    lp_agreement = True
    detail = ""
    try:
        if m == 2:
            for pair, cert in all_pair_certificates(S):
                if face_certificate(lifted, pair) is None:
                    lp_agreement = False
                    detail = f"LP finds no face for pair {list(pair)}"
            for v in range(n):
                conic_vertex_certificate(S, v)
        else:
            for size in range(1, min(target, n) + 1):
                for T in combinations(range(n), size):
                    veronese_square_certificate(S, T, m)
    except DegeneracyError as e:
        certificates_ok = False
        detail = str(e)
    expected = {"degree": min(target, n), "certificates_ok": True, "lp_agreement": True}
    measured = {"degree": degree, "certificates_ok": certificates_ok, "lp_agreement": lp_agreement}
    return VerifyReport("veronese-neighborly", {"n": n, "m": m}, ctx.seed, expected, measured, expected == measured, S, detail)


def _embedding(ctx: _Ctx, n: int, k: int, d: int) -> VerifyReport:
    S = random_distinct_first_coordinate_set(n, d, ctx.seed, ctx.bound(n, d), ctx.retries)
    lifted = apply(neighborly_embedding(k, d), S)
    degree = neighborliness_degree(lifted, k, ctx.workers, ctx.log_file)
    certificates_ok = True
    detail = ""
    for T in combinations(range(n), min(k, n)):
        try:
            embedding_certificate(S, T, k)
        except DegeneracyError as e:
            certificates_ok = False
            detail = str(e)
            break
    expected = {"degree": min(k, n), "certificates_ok": True}
    measured = {"degree": degree, "certificates_ok": certificates_ok}
    return VerifyReport("embedding", {"n": n, "k": k, "d": d}, ctx.seed, expected, measured, expected == measured, S, detail)


def _projection(ctx: _Ctx, n: int, d: int, mode: str) -> VerifyReport:
    S = convex_position_set(n, d, ctx.seed, mode, max_retries=ctx.retries, workers=ctx.workers)
    check = projection_check(S, ctx.workers, ctx.log_file)
    bad = [[r.vertex, r.k, r.through, r.projected] for r in check.rows if not r.ok]
    expected = {"level_sums": [t for _, _, t in check.level_sums], "mismatches": []}
    measured = {"level_sums": [s for _, s, _ in check.level_sums], "mismatches": bad}
    return VerifyReport("projection", {"n": n, "d": d, "mode": mode}, ctx.seed, expected, measured, check.passed, S)


def _radon(ctx: _Ctx, p: int) -> VerifyReport:
    P = random_point_set(p + 2, p, ctx.seed, ctx.bound(p + 2, p), ctx.retries)
    witness = radon_partition(P)
    separated = weak_separation(P.subset(witness.part_q), P.subset(witness.part_r)) is not None
    expected = {"witness_valid": True, "weakly_separable": False}
    measured = {"witness_valid": witness.verify(P), "weakly_separable": separated, "witness": witness.to_dict()}
    passed = measured["witness_valid"] and not separated
    return VerifyReport("radon", {"p": p}, ctx.seed, expected, measured, passed, P)


def _weakly(ctx: _Ctx, k: int) -> VerifyReport:
    n, p = 2 * k + 1, 2 * k - 1
    S = random_point_set(n, p, ctx.seed, ctx.bound(n, p), ctx.retries)
    result = is_weakly_k_neighborly(S, k, ctx.workers, ctx.log_file)
    simplex = S.subset(range(n - 1))
    centroid = [sum((x[c] for x in simplex), Fraction(0)) / simplex.n for c in range(p)]
    # the centroid always violates, a simplex vertex never does
    candidates = PointSet.from_rows([S[n - 1], centroid, simplex[0]], p)
    violations = facet_cover_violations(simplex, candidates)
    expected = {"weakly_k_neighborly": False, "facet_cover_violations": [0, 1]}
    measured = {
        "weakly_k_neighborly": result.holds,
        "facet_cover_violations": violations,
        "failing": list(result.failing) if result.failing else None,
    }
    passed = not result.holds and violations == [0, 1]
    return VerifyReport("weakly", {"k": k}, ctx.seed, expected, measured, passed, S)


@dataclass(frozen=True)
class Pipeline:
    run: Callable[..., VerifyReport]
    defaults: Dict[str, object]


PIPELINES: Dict[str, Pipeline] = {
    "circles": Pipeline(_circles, {"n": 7}),
    "conics": Pipeline(_conics, {"n": 8}),
    "homogeneous": Pipeline(_homogeneous, {"n": 8, "m": 4}),
    "veronese-neighborly": Pipeline(_veronese_neighborly, {"n": 7, "m": 2}),
    "embedding": Pipeline(_embedding, {"n": 7, "k": 2, "d": 2}),
    "projection": Pipeline(_projection, {"n": 7, "d": 3, "mode": "moment"}),
    "radon": Pipeline(_radon, {"p": 3}),
    "weakly": Pipeline(_weakly, {"k": 2}),
}

THEOREMS = tuple(PIPELINES)


def run_verify(theorem: str, params: Optional[dict], seed: int, workers: int = 1, log_file=None, config: Optional[dict] = None) -> VerifyReport:
    if theorem not in PIPELINES:
        raise InputError(f"Unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    pipeline = PIPELINES[theorem]
    kwargs = dict(pipeline.defaults)
    for key, value in (params or {}).items():
        if value is None:
            continue
        if key not in kwargs:
            raise InputError(f"{theorem} takes parameters {sorted(kwargs)}, got {key!r}")
        kwargs[key] = value
    ctx = _Ctx(seed, workers, log_file, config or dict(DEFAULTS))
    log_line(log_file, f"--- verify {theorem}() START: seed={seed} params={dict(sorted(kwargs.items()))} ---")
    report = pipeline.run(ctx, **kwargs)
    if report.passed:
        log_info(log_file, f"verify {theorem} seed={seed}: pass")
    else:
        log_error(log_file, f"verify {theorem} seed={seed}: FAIL expected={report.expected} measured={report.measured}")
    log_line(log_file, f"--- verify {theorem}() END ---")
    return report


def run_verify_batch(theorem: str, params: Optional[dict], seed: int, trials: int = 1, workers: int = 1, log_file=None, config=None) -> List[VerifyReport]:
    """Seeds seed, seed+1, ..., seed+trials-1; ``theorem='all'`` runs every pipeline with its defaults."""
    if trials < 1:
        raise InputError(f"trials must be >= 1, got {trials}")
    names = THEOREMS if theorem == "all" else (theorem,)
    if theorem == "all" and params:
        params = {}
    return [run_verify(name, params, seed + t, workers, log_file, config) for name in names for t in range(trials)]
