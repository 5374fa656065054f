import pytest
from hypothesis import given, settings, strategies as st

from KFacetLab.errors import DegeneracyError, InputError
from KFacetLab.facets import (
    KFacetProfile,
    count_unoriented_halving,
    enumerate_k_facets,
    enumerate_k_sets,
    exhaustive_k_sets,
    k_facet_profile,
    k_set_profile,
    measured_max_profile,
    oriented_facets,
)
from KFacetLab.formulas import convex_3d_count, neighborly_e_k
from KFacetLab.genpos import random_lift_generic_set, random_point_set
from KFacetLab.lifts import apply, circle_map

from conftest import moment_points, pts


def test_pentagon_profile(pentagon):
    profile = k_facet_profile(pentagon)
    assert profile.e == (5, 5, 5, 5)
    assert profile.is_consistent()
    assert profile.total() == 20


def test_triangle_with_center_profile(triangle_center):
    assert k_facet_profile(triangle_center).e == (3, 6, 3)
    assert count_unoriented_halving(triangle_center) == 3


def test_pentagon_edges_are_zero_facets(pentagon):
    facets = enumerate_k_facets(pentagon, 0)
    assert {f.indices for f in facets} == {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}
    assert all(f.k == 0 for f in facets)
    assert enumerate_k_facets(pentagon, 7) == []


def test_oriented_facets_cover_both_sides(triangle_center):
    facets = oriented_facets(triangle_center)
    assert len(facets) == 12
    assert facets == sorted(facets)
    by_pair = {}
    for f in facets:
        by_pair.setdefault(f.indices, []).append(f)
    assert all(sorted(f.sign for f in fs) == [-1, 1] for fs in by_pair.values())
    assert all(sum(f.k for f in fs) == 2 for fs in by_pair.values())


def test_convex_3d_profile():
    S = moment_points(range(6), 3)
    assert list(k_facet_profile(S, workers=2).e) == [convex_3d_count(6, k) for k in range(4)]


def test_cyclic_4d_profile():
    S = moment_points(range(7), 4)
    profile = k_facet_profile(S)
    assert list(profile.e) == [neighborly_e_k(7, 4, k) for k in range(4)]
    assert profile.is_consistent()


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10_000))
def test_profiles_are_symmetric(seed):
    S = random_point_set(7, 2, seed)
    assert k_facet_profile(S).is_consistent()


def test_k_facet_errors(tetrahedron, pentagon):
    with pytest.raises(InputError):
        k_facet_profile(tetrahedron.subset([0, 1, 2]))
    with pytest.raises(DegeneracyError):
        k_facet_profile(pts((0, 0), (1, 1), (2, 2), (0, 1)))
    with pytest.raises(InputError):
        enumerate_k_facets(pentagon, -1)
    with pytest.raises(InputError):
        count_unoriented_halving(pentagon)


def test_profile_serialization():
    profile = KFacetProfile(4, 2, (3, 6, 3))
    assert profile.to_dict() == {"n": 4, "p": 2, "profile": [3, 6, 3]}
    assert profile.csv_rows() == [(0, 3), (1, 6), (2, 3)]
    assert not KFacetProfile(4, 2, (3, 5, 4)).is_consistent()


def test_pentagon_k_sets(pentagon):
    assert enumerate_k_sets(pentagon, 2).sets == ((0, 1), (0, 4), (1, 2), (2, 3), (3, 4))
    assert k_set_profile(pentagon) == [5, 5, 5, 5]


def test_triangle_with_center_k_sets(triangle_center):
    assert k_set_profile(triangle_center) == [3, 6, 3]
    assert (3,) not in enumerate_k_sets(triangle_center, 1).sets


@pytest.mark.parametrize("seed", range(4))
def test_candidate_enumeration_matches_oracle(seed):
    S = random_point_set(7, 2, seed)
    for k in range(1, 7):
        assert enumerate_k_sets(S, k).sets == exhaustive_k_sets(S, k).sets


def test_k_sets_of_degenerate_sets(log_file):
    line = pts((0, 0), (1, 1), (2, 2), (3, 3))
    assert enumerate_k_sets(line, 2, log_file=log_file).sets == ((0, 1), (2, 3))
    assert "exhaustive k-set oracle" in log_file.getvalue()
    flat = pts((0, 0), (1, 0), (2, 0), (0, 1))
    for k in range(1, 4):
        assert enumerate_k_sets(flat, k).sets == exhaustive_k_sets(flat, k).sets


def test_k_set_range(pentagon):
    with pytest.raises(InputError):
        enumerate_k_sets(pentagon, 0)
    with pytest.raises(InputError):
        exhaustive_k_sets(pentagon, 5)


def test_measured_max_profile():
    best = measured_max_profile(6, 2, range(3))
    profiles = [k_facet_profile(random_point_set(6, 2, s)).e for s in range(3)]
    assert best == {k: max(p[k] for p in profiles) for k in range(5)}


def test_small_reference_profiles(tetrahedron):
    assert k_facet_profile(tetrahedron).e == (4, 4)
    assert len(enumerate_k_facets(moment_points(range(5), 3), 1)) == 8
    assert len(enumerate_k_facets(pts((0, 0), (1, 0), (1, 1), (0, 1)), 0)) == 4


@pytest.mark.parametrize("n, halving", [(5, 4), (7, 9)])
def test_halving_circles(n, halving):
    C = circle_map()
    S = random_lift_generic_set(n, C, seed=n)
    assert count_unoriented_halving(apply(C, S)) == halving
