# formulas.py
"""Closed-form k-facet counts and bounds, exact integers throughout."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, comb
from typing import Callable, Dict, Tuple

from .errors import InputError

CountFn = Callable[[int, int], int]


def binom(n: int, k: int) -> int:
    """C(n, k), 0 for negative or undersized tops and for k < 0."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InputError(msg)


def neighborly_e_k(n: int, d: int, k: int) -> int:
    _require(d >= 1 and n > d, f"need n > d >= 1, got n={n}, d={d}")
    _require(0 <= k <= n - d, f"k must be in 0..{n - d}, got {k}")
    if d % 2:
        h = (d + 1) // 2
        return 2 * binom(k + h - 1, h - 1) * binom(n - k - h, h - 1)
    h = d // 2
    return binom(k + h - 1, h - 1) * binom(n - k - h, h) + binom(k + h, h) * binom(n - k - h - 1, h - 1)


def circle_count(n_points: int, k: int) -> int:
    _require(n_points % 2 == 1 and n_points >= 5, f"n_points must be odd and >= 5, got {n_points}")
    m = (n_points - 1) // 2
    _require(0 <= k <= 2 * m - 2, f"k must be in 0..{2 * m - 2}, got {k}")
    return 2 * (k + 1) * (2 * m - k - 1)


def conic_count(n: int, k: int) -> int:
    _require(n >= 6, f"n must be >= 6, got {n}")
    _require(0 <= k <= n - 5, f"k must be in 0..{n - 5}, got {k}")
    return 2 * binom(k + 2, 2) * binom(n - k - 3, 2)


def homogeneous_count(n: int, m: int, k: int) -> int:
    _require(m >= 2 and m % 2 == 0, f"m must be even and >= 2, got {m}")
    h = m // 2
    _require(n > m + 1 and 0 <= k <= n - m - 1, f"need n > m+1 and 0 <= k <= n-m-1, got n={n}, k={k}")
    return 2 * binom(k + h, h) * binom(n - k - h - 1, h)


def convex_3d_count(n: int, k: int) -> int:
    _require(n >= 4, f"n must be >= 4, got {n}")
    _require(0 <= k <= n - 3, f"k must be in 0..{n - 3}, got {k}")
    return 2 * (k + 1) * n - 4 * binom(k + 2, 2)


def _ceil(x: Fraction) -> int:
    return ceil(x)


def convex_bound(n: int, d: int, k: int, e_prev: CountFn) -> int:
    """ceil((n / d) * e_prev(n - 1, k))."""
    _require(d >= 2, f"d must be >= 2, got {d}")
    return _ceil(Fraction(n, d) * e_prev(n - 1, k))


def m_neighborly_bound(n: int, d: int, m: int, k: int, e_prev: CountFn) -> int:
    """ceil(C(n, m) * e_prev(n - m, k) / C(d, m))."""
    _require(1 <= m < d, f"need 1 <= m < d, got m={m}, d={d}")
    return _ceil(Fraction(binom(n, m) * e_prev(n - m, k), binom(d, m)))


def perles_bounds(k: int, d: int) -> Tuple[int, int]:
    _require(k >= 2 and d >= 1, f"need k >= 2, d >= 1, got k={k}, d={d}")
    return k * (d + 1), 2 * k * (k - 1) * d


def generally_neighborly_dim(k: int, d: int) -> int:
    _require(k >= 1 and d >= 1, f"need k, d >= 1, got k={k}, d={d}")
    return 2 * k + d - 1


# ----- dimensions and neighborliness of the lifts -----

def veronese_dim(d: int, m: int) -> int:
    return comb(d + m, m) - 1


def homogeneous_dim(d: int, m: int) -> int:
    return comb(d + m - 1, m)


def veronese_neighborliness(d: int, m: int) -> int:
    _require(m >= 2 and m % 2 == 0, f"m must be even and >= 2, got {m}")
    return comb(m // 2 + d, m // 2) - 1


def homogeneous_neighborliness(d: int, m: int) -> int:
    _require(m >= 2 and m % 2 == 0, f"m must be even and >= 2, got {m}")
    return comb(m // 2 + d - 1, m // 2) - 1


def halving_conic_count(n_half: int) -> int:
    """Oriented halving conics of 2*n_half + 5 points."""
    _require(n_half >= 0, f"n must be >= 0, got {n_half}")
    return 2 * binom(n_half + 2, 2) ** 2


def halving_circle_count(m: int) -> int:
    """Unoriented halving circles of 2m + 1 points."""
    _require(m >= 2, f"m must be >= 2, got {m}")
    return m * m


def weak_neighborliness_dim_bound(k: int) -> int:
    """A weakly k-neighborly curve needs ambient dimension at least 2k."""
    _require(k >= 1, f"k must be >= 1, got {k}")
    return 2 * k


# ----- registry -----

@dataclass(frozen=True)
class CountFormula:
    name: str
    arity: Tuple[str, ...]
    evaluator: Callable[..., object]

    def __call__(self, *args: int):
        if len(args) != len(self.arity):
            raise InputError(f"{self.name} takes {len(self.arity)} arguments ({', '.join(self.arity)}), got {len(args)}")
        return self.evaluator(*args)


FORMULAS: Dict[str, CountFormula] = {
    f.name: f
    for f in (
        CountFormula("neighborly_e_k", ("n", "d", "k"), neighborly_e_k),
        CountFormula("circle_count", ("n_points", "k"), circle_count),
        CountFormula("conic_count", ("n", "k"), conic_count),
        CountFormula("homogeneous_count", ("n", "m", "k"), homogeneous_count),
        CountFormula("convex_3d_count", ("n", "k"), convex_3d_count),
        CountFormula("perles_bounds", ("k", "d"), perles_bounds),
        CountFormula("generally_neighborly_dim", ("k", "d"), generally_neighborly_dim),
        CountFormula("veronese_dim", ("d", "m"), veronese_dim),
        CountFormula("homogeneous_dim", ("d", "m"), homogeneous_dim),
        CountFormula("veronese_neighborliness", ("d", "m"), veronese_neighborliness),
        CountFormula("homogeneous_neighborliness", ("d", "m"), homogeneous_neighborliness),
        CountFormula("halving_conic_count", ("n",), halving_conic_count),
        CountFormula("halving_circle_count", ("m",), halving_circle_count),
        CountFormula("weak_neighborliness_dim_bound", ("k",), weak_neighborliness_dim_bound),
    )
}


def get_formula(name: str) -> CountFormula:
    try:
        return FORMULAS[name]
    except KeyError:
        raise InputError(f"Unknown formula {name!r}; known: {', '.join(sorted(FORMULAS))}") from None


def formula_table(name: str, args) -> list:
    """Rows (k, value) over every k where the last argument of ``name`` is k.

    ``args`` fixes all other parameters; k runs from 0 until the formula rejects it.
    """
    f = get_formula(name)
    if f.arity[-1] != "k":
        raise InputError(f"{name} has no k parameter to tabulate")
    rows = []
    k = 0
    while True:
        try:
            rows.append((k, f(*args, k)))
        except InputError:
            if k == 0:
                raise
            break
        k += 1
    return rows
