# lifts.py
"""Polynomial lifting maps.

A ``MonomialMap`` coordinate is an integer linear combination of monomials,
stored as a tuple of ``(exponents, coefficient)`` terms. The named
constructors only ever produce single-monomial coordinates except
``circle_map``, whose last coordinate is x^2 + y^2.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Dict, Iterator, List, Sequence, Tuple

from .errors import InputError
from .geometry import Point, PointSet
from .utils import load_json, to_rational

Exponents = Tuple[int, ...]
Term = Tuple[Exponents, int]
Coordinate = Tuple[Term, ...]


def _normalize_coordinate(terms: Sequence[Tuple[Sequence[int], int]], d: int) -> Coordinate:
    merged: Dict[Exponents, int] = {}
    for exps, coef in terms:
        exps = tuple(int(e) for e in exps)
        if len(exps) != d:
            raise InputError(f"Exponent vector {list(exps)} has length {len(exps)}, expected {d}")
        if any(e < 0 for e in exps):
            raise InputError(f"Negative exponent in {list(exps)}")
        merged[exps] = merged.get(exps, 0) + int(coef)
    return tuple((e, c) for e, c in sorted(merged.items(), reverse=True) if c != 0)


@dataclass(frozen=True)
class MonomialMap:
    source_dim: int
    coords: Tuple[Coordinate, ...]
    name: str = "custom"

    def __post_init__(self):
        if self.source_dim < 1:
            raise InputError(f"source_dim must be >= 1, got {self.source_dim}")
        if not self.coords:
            raise InputError("A map needs at least one coordinate")
        seen = set()
        for i, coord in enumerate(self.coords):
            if not coord:
                raise InputError(f"Coordinate {i} is the zero polynomial")
            if any(not any(exps) for exps, _ in coord):
                raise InputError(f"Coordinate {i} has a constant term")
            if coord in seen:
                raise InputError(f"Coordinate {i} repeats an earlier coordinate")
            seen.add(coord)

    @classmethod
    def from_exponents(cls, d: int, exponents: Sequence[Sequence[int]], name: str = "custom") -> "MonomialMap":
        return cls(d, tuple(_normalize_coordinate([(e, 1)], d) for e in exponents), name)

    @property
    def target_dim(self) -> int:
        return len(self.coords)

    @property
    def is_monomial(self) -> bool:
        return all(len(c) == 1 and c[0][1] == 1 for c in self.coords)

    @property
    def exponents(self) -> Tuple[Exponents, ...]:
        if not self.is_monomial:
            raise InputError(f"Map {self.name} has coordinates that are not single monomials")
        return tuple(c[0][0] for c in self.coords)

    def evaluate(self, x: Sequence[Fraction]) -> Point:
        if len(x) != self.source_dim:
            raise InputError(f"Point of dimension {len(x)} for a map from dimension {self.source_dim}")
        return tuple(sum((coef * _monomial(x, exps) for exps, coef in coord), Fraction(0)) for coord in self.coords)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "source_dim": self.source_dim,
            "coords": [[{"exps": list(e), "coef": str(c)} for e, c in coord] for coord in self.coords],
        }


def _monomial(x: Sequence[Fraction], exps: Exponents) -> Fraction:
    v = Fraction(1)
    for xi, e in zip(x, exps):
        if e:
            v *= xi ** e
    return v


def exponents_of_degree(d: int, degree: int) -> Iterator[Exponents]:
    """All length-d exponent vectors of total ``degree``, lexicographically descending."""
    if d == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in exponents_of_degree(d - 1, degree - first):
            yield (first,) + rest


def _check_positive(**kw) -> None:
    for k, v in kw.items():
        if not isinstance(v, int) or v < 1:
            raise InputError(f"{k} must be a positive integer, got {v!r}")


def veronese(d: int, m: int) -> MonomialMap:
    """All non-constant monomials of degree <= m, degree ascending, lex-descending within a degree."""
    _check_positive(d=d, m=m)
    exps = [e for deg in range(1, m + 1) for e in exponents_of_degree(d, deg)]
    return MonomialMap.from_exponents(d, exps, f"veronese:{d}:{m}")


def homogeneous_veronese(d: int, m: int) -> MonomialMap:
    _check_positive(d=d, m=m)
    return MonomialMap.from_exponents(d, list(exponents_of_degree(d, m)), f"hveronese:{d}:{m}")


def circle_map() -> MonomialMap:
    coords = (
        _normalize_coordinate([((1, 0), 1)], 2),
        _normalize_coordinate([((0, 1), 1)], 2),
        _normalize_coordinate([((2, 0), 1), ((0, 2), 1)], 2),
    )
    return MonomialMap(2, coords, "circle")


def moment_curve(d: int) -> MonomialMap:
    _check_positive(d=d)
    return MonomialMap.from_exponents(1, [(j,) for j in range(1, d + 1)], f"moment:{d}")


def neighborly_embedding(k: int, d: int) -> MonomialMap:
    """(x1, x1^2, ..., x1^(2k), x2, ..., xd)."""
    _check_positive(k=k, d=d)
    exps: List[Exponents] = [(j,) + (0,) * (d - 1) for j in range(1, 2 * k + 1)]
    for i in range(1, d):
        exps.append(tuple(int(c == i) for c in range(d)))
    return MonomialMap.from_exponents(d, exps, f"embed:{k}:{d}")


def apply(fmap: MonomialMap, S: PointSet) -> PointSet:
    """Image of S, same order and labels; repeated images are kept."""
    if S.dim != fmap.source_dim:
        raise InputError(f"Map {fmap.name} expects dimension {fmap.source_dim}, point set has {S.dim}")
    return PointSet(fmap.target_dim, tuple(fmap.evaluate(x) for x in S.points), S.labels)


# ----- JSON / CLI keys -----

def map_from_dict(data: dict) -> MonomialMap:
    try:
        d = int(data["source_dim"])
        coords = []
        for coord in data["coords"]:
            terms = []
            for term in coord:
                coef = to_rational(term.get("coef", "1"))
                if coef.denominator != 1:
                    raise InputError(f"Map coefficients must be integers, got {term.get('coef')!r}")
                terms.append((term["exps"], int(coef)))
            coords.append(_normalize_coordinate(terms, d))
    except (KeyError, TypeError, AttributeError) as e:
        raise InputError(f"Malformed map description: {e}") from e
    return MonomialMap(d, tuple(coords), str(data.get("name", "custom")))


def _int_args(key: str, parts: Sequence[str], count: int) -> List[int]:
    if len(parts) != count:
        raise InputError(f"Map key {key!r} expects {count} integer parameters")
    try:
        return [int(x) for x in parts]
    except ValueError as e:
        raise InputError(f"Map key {key!r} has a non-integer parameter") from e


def map_from_key(key: str) -> MonomialMap:
    """Resolve "veronese:d:m", "hveronese:d:m", "circle", "moment:d", "embed:k:d", "identity:d" or "custom:<file>"."""
    kind, _, rest = key.partition(":")
    if kind == "custom":
        if not rest:
            raise InputError("custom map key needs a file: custom:<file>")
        fmap = map_from_dict(load_json(Path(rest)))
        return fmap
    parts = rest.split(":") if rest else []
    if kind == "veronese":
        return veronese(*_int_args(key, parts, 2))
    if kind == "hveronese":
        return homogeneous_veronese(*_int_args(key, parts, 2))
    if kind == "circle":
        _int_args(key, parts, 0)
        return circle_map()
    if kind == "moment":
        return moment_curve(*_int_args(key, parts, 1))
    if kind == "embed":
        return neighborly_embedding(*_int_args(key, parts, 2))
    if kind == "identity":
        return veronese(*_int_args(key, parts, 1), 1)
    raise InputError(f"Unknown map key {key!r}")
