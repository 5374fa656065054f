# facets.py
"""k-facet and k-set enumeration, profiles e_k and a_k."""
from __future__ import annotations

from dataclasses import dataclass
from functools import partial
from itertools import combinations
from math import comb
from typing import Dict, Iterable, List, Sequence, Set, Tuple

from .errors import DegeneracyError, InputError
from .faces import is_separable
from .genpos import random_point_set
from .geometry import PointSet, affine_rank, hyperplane_through, require_general_linear_position, split_sides
from .pool import chunk_size, chunked, parallel_map
from .runlog import log_info

Indices = Tuple[int, ...]


@dataclass(frozen=True, order=True)
class OrientedFacet:
    indices: Indices
    sign: int
    k: int

    def to_dict(self) -> dict:
        return {"indices": list(self.indices), "sign": self.sign, "k": self.k}


@dataclass(frozen=True)
class KFacetProfile:
    n: int
    p: int
    e: Tuple[int, ...]

    def total(self) -> int:
        return sum(self.e)

    def is_consistent(self) -> bool:
        """Sum equals 2*C(n,p) and e_k == e_{n-p-k}."""
        return self.total() == 2 * comb(self.n, self.p) and self.e == tuple(reversed(self.e))

    def to_dict(self) -> dict:
        return {"n": self.n, "p": self.p, "profile": list(self.e)}

    def csv_rows(self) -> List[Tuple[int, int]]:
        return list(enumerate(self.e))


@dataclass(frozen=True)
class KSetFamily:
    k: int
    sets: Tuple[Indices, ...]

    def __len__(self) -> int:
        return len(self.sets)

    def to_dict(self) -> dict:
        return {"k": self.k, "ksets": [list(s) for s in self.sets]}


# ----- k-facets -----

def _side_split_chunk(S: PointSet, subsets: Sequence[Indices]) -> List[Tuple[Indices, int, int]]:
    out = []
    for idx in subsets:
        h = hyperplane_through([S[i] for i in idx])
        pos, neg, _ = split_sides(h, S.points)
        out.append((idx, len(pos), len(neg)))
    return out


def _facet_sides(S: PointSet, workers: int, log_file) -> List[Tuple[Indices, int, int]]:
    """(p-subset, #positive, #negative) for every p-subset, in lexicographic order."""
    if S.n < S.dim + 1:
        raise InputError(f"k-facets need n >= p+1 points, got n={S.n}, p={S.dim}")
    require_general_linear_position(S)
    subsets = list(combinations(range(S.n), S.dim))
    chunks = chunked(subsets, chunk_size(len(subsets), workers))
    results = parallel_map(partial(_side_split_chunk, S), chunks, workers, log_file, "k_facets", processes=True)
    return [row for chunk in results for row in chunk]


def oriented_facets(S: PointSet, workers: int = 1, log_file=None) -> List[OrientedFacet]:
    """Both orientations of every p-subset, each with its positive-side count.

    sign +1 keeps the canonical orientation of the hyperplane, -1 flips it.
    """
    facets = []
    for idx, pos, neg in _facet_sides(S, workers, log_file):
        facets.append(OrientedFacet(idx, 1, pos))
        facets.append(OrientedFacet(idx, -1, neg))
    return sorted(facets)


def enumerate_k_facets(S: PointSet, k: int, workers: int = 1, log_file=None) -> List[OrientedFacet]:
    """All oriented p-subsets with exactly k points strictly on the positive side."""
    if k < 0:
        raise InputError(f"k must be nonnegative, got {k}")
    return [f for f in oriented_facets(S, workers, log_file) if f.k == k]


def k_facet_profile(S: PointSet, workers: int = 1, log_file=None) -> KFacetProfile:
    e = [0] * (S.n - S.dim + 1) if S.n > S.dim else []
    for _, pos, neg in _facet_sides(S, workers, log_file):
        e[pos] += 1
        e[neg] += 1
    profile = KFacetProfile(S.n, S.dim, tuple(e))
    log_info(log_file, f"k_facet_profile n={S.n} p={S.dim}: {list(profile.e)}")
    return profile


def count_unoriented_halving(S: PointSet, workers: int = 1, log_file=None) -> int:
    if (S.n - S.dim) % 2 != 0 or S.n < S.dim + 1:
        raise InputError(f"No halving level: n - p = {S.n - S.dim} is not an even nonnegative number")
    k = (S.n - S.dim) // 2
    return k_facet_profile(S, workers, log_file).e[k] // 2


# ----- k-sets -----

def _check_k(S: PointSet, k: int) -> None:
    if k < 1 or k > S.n - 1:
        raise InputError(f"k must be in 1..{S.n - 1}, got {k}")


def _candidates_chunk(S: PointSet, k: int, subsets: Sequence[Indices]) -> Set[Indices]:
    found: Set[Indices] = set()
    for idx in subsets:
        try:
            h = hyperplane_through([S[i] for i in idx])
        except DegeneracyError:
            continue
        pos, neg, on = split_sides(h, S.points)
        for strict_side in (pos, neg):
            need = k - len(strict_side)
            if 0 <= need <= len(on):
                for extra in combinations(on, need):
                    found.add(tuple(sorted(strict_side + extra)))
    return found


def _confirm_chunk(S: PointSet, candidates: Sequence[Indices]) -> List[Indices]:
    return [A for A in candidates if is_separable(S, A)]


def exhaustive_k_sets(S: PointSet, k: int, workers: int = 1, log_file=None) -> KSetFamily:
    """Reference oracle: one separation LP per k-subset."""
    _check_k(S, k)
    subsets = list(combinations(range(S.n), k))
    chunks = chunked(subsets, chunk_size(len(subsets), workers))
    confirmed = parallel_map(partial(_confirm_chunk, S), chunks, workers, log_file, "exhaustive_k_sets", processes=True)
    return KSetFamily(k, tuple(sorted(A for chunk in confirmed for A in chunk)))


def enumerate_k_sets(S: PointSet, k: int, workers: int = 1, log_file=None) -> KSetFamily:
    """k-subsets strictly separable from their complement.

    Candidates come from hyperplanes through p affinely independent points:
    the strict side plus any boundary points completing it to size k. Each
    candidate is confirmed by the separation LP. A set whose affine hull is
    not full-dimensional has no such hyperplanes and goes to the oracle.
    """
    _check_k(S, k)
    if affine_rank(S.points) < S.dim:
        log_info(log_file, "point set is not full-dimensional; using the exhaustive k-set oracle")
        return exhaustive_k_sets(S, k, workers, log_file)
    subsets = list(combinations(range(S.n), S.dim))
    chunks = chunked(subsets, chunk_size(len(subsets), workers))
    candidate_sets = parallel_map(partial(_candidates_chunk, S, k), chunks, workers, log_file, "k_set_candidates", processes=True)
    candidates: Set[Indices] = set()
    for part in candidate_sets:
        candidates |= part
    ordered = sorted(candidates)
    confirm = chunked(ordered, chunk_size(len(ordered), workers))
    confirmed = parallel_map(partial(_confirm_chunk, S), confirm, workers, log_file, "k_set_confirm", processes=True)
    return KSetFamily(k, tuple(sorted(A for chunk in confirmed for A in chunk)))


def k_set_profile(S: PointSet, workers: int = 1, log_file=None) -> List[int]:
    """[a_1, ..., a_{n-1}]."""
    return [len(enumerate_k_sets(S, k, workers, log_file)) for k in range(1, S.n)]


def measured_max_profile(n: int, d: int, seeds: Iterable[int], workers: int = 1, log_file=None, **gen_kw) -> Dict[int, int]:
    """Per-level maximum of e_k over seeded random GLP sets (a sampled stand-in for e_k^{(d)}(n))."""
    best: Dict[int, int] = {}
    for seed in seeds:
        profile = k_facet_profile(random_point_set(n, d, seed, **gen_kw), workers, log_file)
        for k, v in enumerate(profile.e):
            best[k] = max(best.get(k, 0), v)
    return best
