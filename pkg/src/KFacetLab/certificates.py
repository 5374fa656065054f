# certificates.py
"""
Constructive face certificates: a polynomial P >= 0 on the plane (or R^d)
that vanishes exactly on the chosen points becomes a hyperplane in the lift's
target space, because normal . map(x) - offset == P(x).
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import prod
from typing import Dict, Iterable, List, Sequence, Tuple

from .errors import DegeneracyError, InputError
from .faces import FaceCertificate
from .geometry import Hyperplane, Point, PointSet
from .lifts import Exponents, MonomialMap, apply, circle_map, exponents_of_degree, homogeneous_veronese, neighborly_embedding, veronese
from .linalg import nullspace, solve
from .utils import to_rational

Polynomial = Dict[Exponents, Fraction]


# ----- polynomials -----

def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    out = dict(f)
    for e, c in g.items():
        out[e] = out.get(e, Fraction(0)) + c
    return {e: c for e, c in out.items() if c != 0}


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    out: Polynomial = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, Fraction(0)) + c1 * c2
    return {e: c for e, c in out.items() if c != 0}


def poly_square(f: Polynomial) -> Polynomial:
    return poly_mul(f, f)


def poly_eval(f: Polynomial, x: Sequence[Fraction]) -> Fraction:
    total = Fraction(0)
    for e, c in f.items():
        term = c
        for xi, k in zip(x, e):
            if k:
                term *= xi ** k
        total += term
    return total


def affine_poly(coeffs: Sequence, const, d: int) -> Polynomial:
    """sum(coeffs[i] * x_i) + const as a polynomial in d variables."""
    out: Polynomial = {}
    for i, a in enumerate(coeffs):
        a = Fraction(a)
        if a:
            out[tuple(int(j == i) for j in range(d))] = a
    if const:
        out[(0,) * d] = Fraction(const)
    return out


def polynomial_to_hyperplane(fmap: MonomialMap, poly: Polynomial) -> Hyperplane:
    """Solve sum_j normal_j * coord_j(x) - offset == poly(x) coefficient by coefficient."""
    d = fmap.source_dim
    zero = (0,) * d
    if any(len(e) != d for e in poly):
        raise InputError(f"Polynomial variables do not match the map's source dimension {d}")
    monomials = sorted({e for coord in fmap.coords for e, _ in coord} | {e for e in poly if e != zero}, reverse=True)
    rows = []
    rhs = []
    for mono in monomials:
        rows.append([Fraction(dict(coord).get(mono, 0)) for coord in fmap.coords])
        rhs.append(poly.get(mono, Fraction(0)))
    normal = solve(rows, rhs, fmap.target_dim)
    if normal is None:
        raise InputError(f"Polynomial is not in the span of the coordinates of {fmap.name}")
    return Hyperplane(normal, -poly.get(zero, Fraction(0)))


def _certify(fmap: MonomialMap, poly: Polynomial, S: PointSet, T: Sequence[int], what: str) -> FaceCertificate:
    cert = FaceCertificate(polynomial_to_hyperplane(fmap, poly).normalized(), True, tuple(sorted(T)))
    if not cert.verify(apply(fmap, S)):
        raise DegeneracyError(f"{what} does not separate the lifted points strictly", T)
    return cert


# ----- conics and circles -----

def _as_point(v) -> Point:
    return tuple(to_rational(c) for c in v)


def conic_edge_certificate(v1: Sequence, v2: Sequence) -> FaceCertificate:
    """(a x + b y - c)^2 for the line through v1, v2, in veronese(2, 2) coordinates."""
    v1, v2 = _as_point(v1), _as_point(v2)
    if len(v1) != 2 or len(v2) != 2:
        raise InputError("conic_edge_certificate takes two planar points")
    if v1 == v2:
        raise InputError(f"conic_edge_certificate needs two distinct points, got {v1} twice")
    a = v1[1] - v2[1]
    b = v2[0] - v1[0]
    c = a * v1[0] + b * v1[1]
    line = affine_poly((a, b), -c, 2)
    h = polynomial_to_hyperplane(veronese(2, 2), poly_square(line))
    return FaceCertificate(h.normalized(), True)


def conic_vertex_certificate(S: PointSet, v: int) -> FaceCertificate:
    """Small circle through S[v] with every other point strictly outside."""
    if S.dim != 2:
        raise InputError(f"conic_vertex_certificate needs planar points, got dim {S.dim}")
    x0 = S[v]
    others = [S[i] for i in range(S.n) if i != v]
    if any(s == x0 for s in others):
        raise DegeneracyError("Repeated point", [v])
    dist2 = min((sum((a - b) ** 2 for a, b in zip(s, x0)) for s in others), default=Fraction(1))
    # radius r with 4 r^2 < dist2, center x0 + (r, 0)
    r = Fraction(1, 4) if dist2 >= 1 else dist2 / 4
    cx, cy = x0[0] + r, x0[1]
    poly = poly_add(poly_square(affine_poly((1, 0), -cx, 2)), poly_square(affine_poly((0, 1), -cy, 2)))
    poly = poly_add(poly, {(0, 0): -r * r})
    return _certify(veronese(2, 2), poly, S, (v,), "Vertex circle")


def circle_vertex_certificate(v: Sequence) -> FaceCertificate:
    """|x - v|^2 in circle_map coordinates: the tangent plane of the paraboloid at C(v)."""
    a, b = _as_point(v)
    poly = poly_add(poly_square(affine_poly((1, 0), -a, 2)), poly_square(affine_poly((0, 1), -b, 2)))
    return FaceCertificate(polynomial_to_hyperplane(circle_map(), poly).normalized(), True)


# ----- products of squares -----

def embedding_certificate(S: PointSet, T: Iterable[int], k: int) -> FaceCertificate:
    """prod_{i in T} (x_1 - v_i1)^2 in neighborly_embedding(k, d) coordinates."""
    T = tuple(sorted(set(T)))
    if not T or len(T) > k:
        raise InputError(f"Subset size must be in 1..{k}, got {len(T)}")
    d = S.dim
    poly: Polynomial = {(0,) * d: Fraction(1)}
    for i in T:
        poly = poly_mul(poly, poly_square(affine_poly((1,) + (0,) * (d - 1), -S[i][0], d)))
    return _certify(neighborly_embedding(k, d), poly, S, T, "Product of squared x1-factors")


def _origin_line(a, b) -> Polynomial:
    return affine_poly((a, b), 0, 2)


def homogeneous_certificate(S: PointSet, T: Iterable[int], m: int) -> FaceCertificate:
    """Product of squared origin lines through T, padded with lines missing S, in HV_m^2 coordinates."""
    if m < 2 or m % 2:
        raise InputError(f"m must be even and >= 2, got {m}")
    if S.dim != 2:
        raise InputError(f"homogeneous_certificate needs planar points, got dim {S.dim}")
    T = tuple(sorted(set(T)))
    half = m // 2
    if not T or len(T) > half:
        raise InputError(f"Subset size must be in 1..{half}, got {len(T)}")
    if any(all(c == 0 for c in s) for s in S.points):
        raise DegeneracyError("The origin lies on every origin line", [i for i, s in enumerate(S.points) if not any(s)])
    factors: List[Polynomial] = [_origin_line(S[i][1], -S[i][0]) for i in T]
    slope = 0
    while len(factors) < half:
        # line y = slope * x
        if all(s[1] != slope * s[0] for s in S.points):
            factors.append(_origin_line(slope, -1))
        slope += 1
    poly: Polynomial = {(0, 0): Fraction(1)}
    for f in factors:
        poly = poly_mul(poly, poly_square(f))
    return _certify(homogeneous_veronese(2, m), poly, S, T, "Product of squared origin lines")


def _power_row(x: Sequence[Fraction], basis: Sequence[Exponents]) -> List[Fraction]:
    return [prod((xi ** e for xi, e in zip(x, exps)), start=Fraction(1)) for exps in basis]


def veronese_square_certificate(S: PointSet, T: Iterable[int], m: int, homogeneous: bool = False) -> FaceCertificate:
    """q^2 for a degree-m/2 polynomial q vanishing on T and nowhere else on S.

    q ranges over the kernel of the evaluation matrix at T; the combination
    sum_r lam^r K_r is tried for lam = 0, 1, 2, ... until q(s) != 0 on every
    other point. Each point rules out at most dim(K) - 1 values of lam unless
    every kernel vector vanishes there, in which case no q exists.
    """
    if m < 2 or m % 2:
        raise InputError(f"m must be even and >= 2, got {m}")
    T = tuple(sorted(set(T)))
    if not T:
        raise InputError("Subset must be nonempty")
    d, half = S.dim, m // 2
    if homogeneous:
        basis = list(exponents_of_degree(d, half))
        fmap = homogeneous_veronese(d, m)
    else:
        basis = [(0,) * d] + [e for deg in range(1, half + 1) for e in exponents_of_degree(d, deg)]
        fmap = veronese(d, m)
    kernel = nullspace([_power_row(S[i], basis) for i in T], len(basis))
    if not kernel:
        raise DegeneracyError(f"No degree-{half} polynomial vanishes on the subset", T)
    others = [i for i in range(S.n) if i not in set(T)]
    evals = {i: [sum((c * v for c, v in zip(K, _power_row(S[i], basis))), Fraction(0)) for K in kernel] for i in others}
    for i, vals in evals.items():
        if not any(vals):
            raise DegeneracyError(f"Every degree-{half} polynomial vanishing on the subset also vanishes at point {i}", T)
    limit = len(others) * (len(kernel) - 1) + 1
    for lam in range(limit + 1):
        weights = [Fraction(lam) ** r for r in range(len(kernel))]
        if all(sum((w * v for w, v in zip(weights, vals)), Fraction(0)) != 0 for vals in evals.values()):
            break
    else:
        raise DegeneracyError("No kernel combination avoids the remaining points", T)
    q = {exps: sum((w * K[j] for w, K in zip(weights, kernel)), Fraction(0)) for j, exps in enumerate(basis)}
    q = {e: c for e, c in q.items() if c != 0}
    return _certify(fmap, poly_square(q), S, T, "Squared kernel polynomial")


def all_pair_certificates(S: PointSet) -> List[Tuple[Tuple[int, int], FaceCertificate]]:
    """conic_edge_certificate for every pair of a planar set, each checked against V_2^2(S)."""
    lifted = apply(veronese(2, 2), S)
    out = []
    for i, j in combinations(range(S.n), 2):
        cert = conic_edge_certificate(S[i], S[j])
        if not cert.verify(lifted, (i, j)):
            raise DegeneracyError("Squared line is not a strict certificate", (i, j))
        out.append(((i, j), FaceCertificate(cert.hyperplane, True, (i, j))))
    return out
