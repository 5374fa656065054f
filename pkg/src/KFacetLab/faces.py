# faces.py
"""
Face certificates via exact LP: faces, weak faces, neighborliness degree,
weak k-neighborliness, strict and weak separation, Radon partitions.

Orientation convention for every certificate: points of the certified subset
lie on the hyperplane, all other points on its positive side
(``normal . x - offset >= 0``, strictly when ``strict`` is set).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import DegeneracyError, InputError
from .geometry import Hyperplane, Point, PointSet, affine_rank, find_affine_dependency
from .linalg import nullspace, solve
from .lp import LinearProgram
from .pool import chunk_size, chunked, parallel_map
from .runlog import log_info
from .utils import format_rational

Indices = Tuple[int, ...]


@dataclass(frozen=True)
class FaceCertificate:
    hyperplane: Hyperplane
    strict: bool
    subset: Indices = ()

    def verify(self, S: PointSet, subset: Optional[Sequence[int]] = None) -> bool:
        """Check by substitution: subset on the hyperplane, the rest on the (strictly) positive side."""
        T = set(self.subset if subset is None else subset)
        if self.hyperplane.dim != S.dim:
            return False
        for i, x in enumerate(S.points):
            v = self.hyperplane.evaluate(x)
            if i in T:
                if v != 0:
                    return False
            elif v < 0 or (self.strict and v == 0):
                return False
        return True

    def to_dict(self) -> dict:
        d = self.hyperplane.to_dict()
        d["strict"] = self.strict
        if self.subset:
            d["subset"] = list(self.subset)
        return d


@dataclass(frozen=True)
class RadonWitness:
    part_q: Indices
    part_r: Indices
    lambdas: Tuple[Fraction, ...]
    common_point: Point

    def verify(self, P: PointSet) -> bool:
        n = P.n
        if not self.part_q or not self.part_r:
            return False
        if set(self.part_q) & set(self.part_r) or set(self.part_q) | set(self.part_r) != set(range(n)):
            return False
        if any(self.lambdas[i] <= 0 for i in range(n)):
            return False
        for part in (self.part_q, self.part_r):
            if sum(self.lambdas[i] for i in part) != 1:
                return False
            combo = tuple(
                sum((self.lambdas[i] * P[i][c] for i in part), Fraction(0)) for c in range(P.dim)
            )
            if combo != self.common_point:
                return False
        return True

    def to_dict(self) -> dict:
        return {
            "Q": list(self.part_q),
            "R": list(self.part_r),
            "lambdas": [format_rational(x) for x in self.lambdas],
            "point": [format_rational(x) for x in self.common_point],
        }


@dataclass(frozen=True)
class WeakNeighborliness:
    """Result of ``is_weakly_k_neighborly``; truthy iff the property holds."""

    holds: bool
    failing: Optional[Indices] = field(default=None)

    def __bool__(self) -> bool:
        return self.holds


def _check_subset(S: PointSet, T: Iterable[int]) -> Indices:
    idx = tuple(sorted(set(int(i) for i in T)))
    if not idx:
        raise InputError("Face subset must be nonempty")
    if idx[0] < 0 or idx[-1] >= S.n:
        raise InputError(f"Face subset {list(idx)} out of range for {S.n} points")
    return idx


# ----- LP builders -----
# variable layout: a_0 .. a_{p-1} | b | t

def _support_lp(S: PointSet, T: Indices, fixed: Optional[Tuple[int, int]] = None) -> LinearProgram:
    p = S.dim
    b, t = p, p + 1
    lp = LinearProgram(p + 2)
    for j in range(p):
        if fixed is not None and fixed[0] == j:
            lp.fix(j, fixed[1])
        else:
            lp.add({j: 1}, "<=", 1)
            lp.add({j: -1}, "<=", 1)
    lp.bound(t, 0, 1)
    in_t = set(T)
    for i, x in enumerate(S.points):
        row = {j: x[j] for j in range(p) if x[j] != 0}
        row[b] = -1
        if i in in_t:
            lp.add(row, "==", 0)
        else:
            row[t] = 1
            lp.add(row, "<=", 0)
    return lp.maximize({t: 1})


def _certificate_from(S: PointSet, T: Indices, x: Sequence[Fraction]) -> FaceCertificate:
    p = S.dim
    h = Hyperplane(tuple(-a for a in x[:p]), -x[p]).normalized()
    in_t = set(T)
    strict = all(h.evaluate(S[i]) > 0 for i in range(S.n) if i not in in_t)
    return FaceCertificate(h, strict, T)


def _nonstrict_certificate(S: PointSet, T: Indices) -> Optional[FaceCertificate]:
    for j in range(S.dim):
        for sign in (1, -1):
            res = _support_lp(S, T, fixed=(j, sign)).solve()
            if res.is_optimal:
                return _certificate_from(S, T, res.x)
    return None


def face_certificate(S: PointSet, T: Iterable[int], strict: bool = True) -> Optional[FaceCertificate]:
    """Supporting hyperplane through the points T, or None.

    Strict mode maximizes the margin t of the off-T points under the box
    -1 <= a_j <= 1; a certificate exists iff the optimum is positive. When T
    is the whole set there is nothing to separate and the weak search decides.
    """
    T = _check_subset(S, T)
    if len(T) == S.n or not strict:
        cert = _nonstrict_certificate(S, T)
        if cert is not None and strict and not cert.strict:
            return None
        return cert
    res = _support_lp(S, T).solve()
    if not res.is_optimal or res.x[S.dim + 1] <= 0:
        return None
    return _certificate_from(S, T, res.x)


def _is_vertex(S: PointSet, i: int) -> bool:
    return face_certificate(S, (i,)) is not None


def vertex_indices(S: PointSet, workers: int = 1, log_file=None) -> List[int]:
    flags = parallel_map(partial(_is_vertex, S), list(range(S.n)), workers, log_file, "vertex_indices", processes=True)
    return [i for i, ok in enumerate(flags) if ok]


def _first_failure(S: PointSet, subsets: Sequence[Indices], strict: bool) -> Optional[Indices]:
    for T in subsets:
        if face_certificate(S, T, strict=strict) is None:
            return T
    return None


def _sweep(S: PointSet, k: int, strict: bool, workers: int, log_file, label: str) -> Optional[Indices]:
    subsets = list(combinations(range(S.n), k))
    chunks = chunked(subsets, chunk_size(len(subsets), workers))
    for bad in parallel_map(partial(_first_failure, S, strict=strict), chunks, workers, log_file, label, processes=True):
        if bad is not None:
            return bad
    return None


def neighborliness_degree(S: PointSet, max_k: int, workers: int = 1, log_file=None) -> int:
    """Largest k <= max_k (and <= n) such that every subset of size <= k is a strict face."""
    cap = min(max_k, S.n)
    for k in range(1, cap + 1):
        bad = _sweep(S, k, True, workers, log_file, f"neighborliness_degree[k={k}]")
        if bad is not None:
            log_info(log_file, f"subset {list(bad)} is not a face; degree {k - 1}")
            return k - 1
    return max(cap, 0)


def is_weakly_k_neighborly(S: PointSet, k: int, workers: int = 1, log_file=None) -> WeakNeighborliness:
    if k < 1 or k > S.n:
        raise InputError(f"k must be in 1..{S.n}, got {k}")
    bad = _sweep(S, k, False, workers, log_file, f"is_weakly_k_neighborly[k={k}]")
    return WeakNeighborliness(bad is None, bad)


# ----- separation -----

def separating_hyperplane(S: PointSet, A: Iterable[int]) -> Optional[Hyperplane]:
    """Hyperplane with A strictly on the negative side and the rest strictly positive."""
    A = set(A)
    p = S.dim
    b, t = p, p + 1
    lp = LinearProgram(p + 2)
    for j in range(p):
        lp.add({j: 1}, "<=", 1)
        lp.add({j: -1}, "<=", 1)
    lp.bound(t, 0, 1)
    for i, x in enumerate(S.points):
        sign = 1 if i in A else -1
        row = {j: sign * x[j] for j in range(p) if x[j] != 0}
        row[b] = -sign
        row[t] = 1
        lp.add(row, "<=", 0)
    res = lp.maximize({t: 1}).solve()
    if not res.is_optimal or res.x[t] <= 0:
        return None
    return Hyperplane(res.x[:p], res.x[b]).normalized()


def is_separable(S: PointSet, A: Iterable[int]) -> bool:
    A = set(A)
    if not A or len(A) == S.n:
        return True
    return separating_hyperplane(S, A) is not None


def weak_separation(Q: PointSet, R: PointSet) -> Optional[Hyperplane]:
    """Hyperplane a.x = c with a.q <= c on Q and a.r >= c on R, or None."""
    if Q.dim != R.dim:
        raise InputError(f"Dimension mismatch: {Q.dim} vs {R.dim}")
    p = Q.dim
    c, u = p, p + 1
    for j in range(p):
        for sign in (1, -1):
            lp = LinearProgram(p + 2)
            for i in range(p):
                if i == j:
                    lp.fix(i, sign)
                else:
                    lp.add({i: 1}, "<=", 1)
                    lp.add({i: -1}, "<=", 1)
            lp.bound(u, 0, 1)
            for q in Q.points:
                row = {i: q[i] for i in range(p) if q[i] != 0}
                row[c] = -1
                row[u] = 1
                lp.add(row, "<=", 0)
            for r in R.points:
                row = {i: -r[i] for i in range(p) if r[i] != 0}
                row[c] = 1
                row[u] = 1
                lp.add(row, "<=", 0)
            res = lp.maximize({u: 1}).solve()
            if res.is_optimal:
                return Hyperplane(res.x[:p], res.x[c]).normalized()
    return None


# ----- Radon -----

def radon_partition(P: PointSet) -> RadonWitness:
    """Split p+2 points in general linear position into parts whose hulls meet in relative interiors.

    The coefficients come from the one-dimensional kernel of the affine
    dependence system; positive entries form one part, negative the other.
    The smaller part is returned as Q (ties: the part containing index 0).
    """
    p = P.dim
    if P.n != p + 2:
        raise InputError(f"radon_partition needs exactly {p + 2} points in dimension {p}, got {P.n}")
    bad = find_affine_dependency(P)
    if bad is not None:
        raise DegeneracyError("Radon input is not in general linear position", bad)
    rows = [[P[i][c] for i in range(P.n)] for c in range(p)]
    rows.append([Fraction(1)] * P.n)
    kernel = nullspace(rows, P.n)
    if len(kernel) != 1:
        raise DegeneracyError("Affine dependence is not one-dimensional", range(P.n))
    lam = kernel[0]
    pos = tuple(i for i in range(P.n) if lam[i] > 0)
    neg = tuple(i for i in range(P.n) if lam[i] < 0)
    if len(pos) + len(neg) != P.n:
        raise DegeneracyError("Zero coefficient in the affine dependence", [i for i in range(P.n) if lam[i] == 0])
    sigma = sum(lam[i] for i in pos)
    coeffs = tuple(abs(x) / sigma for x in lam)
    if len(pos) < len(neg) or (len(pos) == len(neg) and 0 in pos):
        q, r = pos, neg
    else:
        q, r = neg, pos
    point = tuple(sum((coeffs[i] * P[i][c] for i in q), Fraction(0)) for c in range(p))
    return RadonWitness(q, r, coeffs, point)


def facet_cover_violations(simplex: PointSet, candidates: PointSet) -> List[int]:
    """Candidates inside aff(simplex) that lie on no facet hull of the simplex.

    For a simplex of 2k points, any such candidate x makes simplex + {x} a
    set that is not weakly k-neighborly.
    """
    if simplex.dim != candidates.dim:
        raise InputError(f"Dimension mismatch: {simplex.dim} vs {candidates.dim}")
    m = simplex.n
    if affine_rank(simplex.points) != m - 1:
        raise DegeneracyError("Simplex vertices are affinely dependent", range(m))
    rows = [[simplex[i][c] for i in range(m)] for c in range(simplex.dim)]
    rows.append([Fraction(1)] * m)
    out = []
    for idx, x in enumerate(candidates.points):
        mu = solve(rows, list(x) + [Fraction(1)], m)
        if mu is None:
            continue
        if all(v != 0 for v in mu):
            out.append(idx)
    return out
