from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from KFacetLab.errors import DegeneracyError, InputError
from KFacetLab.geometry import (
    Hyperplane,
    PointSet,
    find_affine_dependency,
    hyperplane_through,
    is_general_linear_position,
    orientation,
    side_counts,
)
from KFacetLab.utils import to_rational

from conftest import moment_points, pts

F = Fraction


@pytest.mark.parametrize("points, expected", [
    ([(0, 0), (1, 0), (0, 1)], 1),
    ([(0, 0), (0, 1), (1, 0)], -1),
    ([(0, 0), (1, 1), (2, 2)], 0),
    ([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)], 1),
])
def test_orientation(points, expected):
    assert orientation([tuple(map(F, p)) for p in points]) == expected


def test_orientation_dimension_mismatch():
    with pytest.raises(InputError):
        orientation([(F(0), F(0)), (F(1),), (F(0), F(1))])


ints = st.integers(min_value=-30, max_value=30)
planar_triples = st.lists(st.tuples(ints, ints), min_size=3, max_size=3)


@given(planar_triples, st.integers(0, 2), st.integers(0, 2))
def test_orientation_swap_negates(triple, i, j):
    P = [tuple(map(F, p)) for p in triple]
    s = orientation(P)
    if i != j:
        P[i], P[j] = P[j], P[i]
        assert orientation(P) == -s
    else:
        assert orientation(P) == s


@given(planar_triples, st.integers(1, 50), st.integers(1, 50))
def test_orientation_positive_scaling(triple, num, den):
    c = F(num, den)
    P = [tuple(map(F, p)) for p in triple]
    assert orientation([tuple(c * x for x in p) for p in P]) == orientation(P)


@pytest.mark.parametrize("S, expected", [
    (pts((0, 0), (1, 0), (0, 1)), True),
    (pts((0, 0), (1, 1), (2, 2)), False),
    (moment_points([0, 1, 2, 3], 3), True),
    (pts((0, 0, 0), (1, 1, 1)), True),
    (pts((0, 0, 0), (1, 1, 1), (2, 2, 2)), False),
    (pts((5, 5)), True),
])
def test_general_linear_position(S, expected):
    assert is_general_linear_position(S) is expected


def test_general_linear_position_is_permutation_invariant(triangle_center):
    S = triangle_center
    for order in ([3, 2, 1, 0], [1, 3, 0, 2]):
        assert is_general_linear_position(S.subset(order)) == is_general_linear_position(S)


def test_affine_dependency_names_subset():
    S = pts((0, 0), (5, 1), (1, 1), (2, 2))
    assert find_affine_dependency(S) == (0, 2, 3)


@pytest.mark.parametrize("points, normal, offset", [
    ([(0, 0), (1, 0)], (0, 1), 0),
    ([(1, 0), (0, 1)], (1, 1), 1),
    ([(0, 0, 0), (1, 0, 0), (0, 1, 0)], (0, 0, 1), 0),
    ([(0, 2), (4, 0)], (1, 2), 4),
    ([(3,)], (1,), 3),
])
def test_hyperplane_through(points, normal, offset):
    h = hyperplane_through([tuple(map(F, p)) for p in points])
    assert h == Hyperplane(tuple(map(F, normal)), F(offset))


def test_hyperplane_through_dependent_points():
    with pytest.raises(DegeneracyError):
        hyperplane_through([(F(0), F(0), F(0)), (F(1), F(1), F(1)), (F(2), F(2), F(2))])


def test_hyperplane_canonical_is_sign_independent():
    a = hyperplane_through([(F(1), F(0)), (F(0), F(1))])
    b = hyperplane_through([(F(0), F(1)), (F(1), F(0))])
    assert a == b


@given(st.lists(st.tuples(ints, ints, ints), min_size=3, max_size=3))
def test_hyperplane_contains_its_points(triple):
    P = [tuple(map(F, p)) for p in triple]
    try:
        h = hyperplane_through(P)
    except DegeneracyError:
        return
    S = PointSet(3, tuple(P))
    assert side_counts(h, S).on == 3
    lead = next(a for a in h.normal if a != 0)
    assert lead > 0


@pytest.mark.parametrize("h, S, expected", [
    (Hyperplane((F(0), F(1)), F(0)), pts((0, 1), (0, -1), (1, 0)), (1, 1, 1)),
    (Hyperplane((F(0), F(1)), F(0)), pts((0, 0), (1, 0), (-3, 0)), (0, 0, 3)),
])
def test_side_counts(h, S, expected):
    assert tuple(side_counts(h, S)) == expected


def test_side_counts_center_line(triangle_center):
    h = hyperplane_through([triangle_center[3], triangle_center[0]])
    assert side_counts(h, triangle_center) == (1, 1, 2)


def test_normalized_keeps_orientation():
    h = Hyperplane((F(-2), F(4)), F(6)).normalized()
    assert h == Hyperplane((F(-1), F(2)), F(3))
    assert Hyperplane((F(-2), F(4)), F(6)).canonical() == (Hyperplane((F(1), F(-2)), F(-3)), -1)


def test_zero_normal_rejected():
    with pytest.raises(DegeneracyError):
        Hyperplane((F(0), F(0)), F(1))


@pytest.mark.parametrize("text, value", [
    ("3", F(3)),
    ("-3/6", F(-1, 2)),
    ("0.25", F(1, 4)),
    ("1e-3", F(1, 1000)),
    (" 7 / 2 ", F(7, 2)),
    (5, F(5)),
])
def test_to_rational(text, value):
    assert to_rational(text) == value


@pytest.mark.parametrize("bad", [0.1, "1/0", "abc", True, None])
def test_to_rational_rejects(bad):
    with pytest.raises(InputError):
        to_rational(bad)


def test_point_set_invariants():
    with pytest.raises(InputError):
        PointSet(2, ())
    with pytest.raises(InputError):
        PointSet.from_rows([(0, 0), (1, 2, 3)], 2)
    with pytest.raises(InputError):
        PointSet.from_rows([(0, 0)], labels=["a", "b"])
    S = PointSet.from_rows([(0, 0), (1, 2)], labels=["a", "b"])
    assert S.subset([1]).labels == ("b",)
    assert len(S.without(0)) == 1
