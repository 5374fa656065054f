import json
from fractions import Fraction
from math import comb

import pytest

from KFacetLab.errors import InputError
from KFacetLab.geometry import PointSet
from KFacetLab.lifts import (
    MonomialMap,
    apply,
    circle_map,
    homogeneous_veronese,
    map_from_dict,
    map_from_key,
    moment_curve,
    neighborly_embedding,
    veronese,
)

from conftest import pts

F = Fraction


def test_veronese_2_2_order():
    V = veronese(2, 2)
    assert V.exponents == ((1, 0), (0, 1), (2, 0), (1, 1), (0, 2))
    assert V.target_dim == 5


def test_veronese_1_is_moment_curve():
    assert veronese(1, 4).exponents == ((1,), (2,), (3,), (4,))
    assert moment_curve(4).exponents == veronese(1, 4).exponents


def test_veronese_degree_one_is_identity():
    S = pts((1, 2, 3), (-1, 0, 5))
    assert veronese(3, 1).target_dim == 3
    assert apply(veronese(3, 1), S) == S


@pytest.mark.parametrize("d", range(1, 7))
@pytest.mark.parametrize("m", range(1, 7))
def test_target_dims(d, m):
    assert veronese(d, m).target_dim == comb(d + m, m) - 1
    assert homogeneous_veronese(d, m).target_dim == comb(d + m - 1, m)


def test_homogeneous_veronese():
    assert homogeneous_veronese(2, 2).exponents == ((2, 0), (1, 1), (0, 2))
    assert homogeneous_veronese(2, 4).target_dim == 5
    assert homogeneous_veronese(1, 3).exponents == ((3,),)


@pytest.mark.parametrize("point, image", [
    ((1, 0), (1, 0, 1)),
    ((0, 0), (0, 0, 0)),
    ((1, 2), (1, 2, 5)),
])
def test_circle_map(point, image):
    assert circle_map().evaluate(tuple(map(F, point))) == tuple(map(F, image))


def test_circle_map_has_no_exponent_list():
    assert not circle_map().is_monomial
    with pytest.raises(InputError):
        circle_map().exponents


def test_circle_map_unit_circle_lands_on_plane():
    S = pts((1, 0), (0, 1), ("3/5", "4/5"))
    lifted = apply(circle_map(), S)
    assert lifted.dim == 3
    assert all(x[2] == 1 for x in lifted)


def test_neighborly_embedding():
    assert neighborly_embedding(2, 3).target_dim == 6
    assert neighborly_embedding(1, 1).exponents == ((1,), (2,))
    assert neighborly_embedding(2, 2).evaluate((F(2), F(3))) == (2, 4, 8, 16, 3)


def test_apply_keeps_order_labels_and_duplicates():
    S = PointSet.from_rows([(-1, -1), (1, 1), (2, 0)], labels=["a", "b", "c"])
    lifted = apply(homogeneous_veronese(2, 2), S)
    assert lifted[0] == lifted[1] == (1, 1, 1)
    assert lifted[2] == (4, 0, 0)
    assert lifted.labels == ("a", "b", "c")
    assert apply(veronese(2, 2), pts((1, 1)))[0] == (1, 1, 1, 1, 1)


def test_apply_dimension_mismatch():
    with pytest.raises(InputError):
        apply(veronese(3, 2), pts((1, 2)))


@pytest.mark.parametrize("exponents", [
    [(0, 0), (1, 0)],
    [(1, 0), (1, 0)],
    [(1, -1)],
    [(1, 0, 0)],
])
def test_invalid_maps(exponents):
    with pytest.raises(InputError):
        MonomialMap.from_exponents(2, exponents)


@pytest.mark.parametrize("key, target_dim", [
    ("veronese:2:2", 5),
    ("hveronese:2:4", 5),
    ("circle", 3),
    ("moment:4", 4),
    ("embed:2:3", 6),
])
def test_map_from_key(key, target_dim):
    assert map_from_key(key).target_dim == target_dim


@pytest.mark.parametrize("key", ["veronese:2", "nope", "moment:x", "custom:"])
def test_map_from_key_errors(key):
    with pytest.raises(InputError):
        map_from_key(key)


def test_custom_map_file(tmp_path):
    # (x, y, xy)
    desc = {"source_dim": 2, "coords": [
        [{"exps": [1, 0], "coef": "1"}],
        [{"exps": [0, 1], "coef": "1"}],
        [{"exps": [1, 1], "coef": "1"}],
    ]}
    path = tmp_path / "xy.json"
    path.write_text(json.dumps(desc), encoding="utf-8")
    fmap = map_from_key(f"custom:{path}")
    assert fmap.evaluate((F(2), F(3))) == (2, 3, 6)
    assert map_from_dict(circle_map().to_dict()).coords == circle_map().coords
