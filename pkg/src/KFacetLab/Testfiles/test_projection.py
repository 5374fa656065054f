import pytest

from KFacetLab.errors import InputError
from KFacetLab.facets import k_facet_profile
from KFacetLab.genpos import convex_position_set
from KFacetLab.geometry import is_general_linear_position
from KFacetLab.projection import facets_through_vertex, projection_check, stereographic_project

from conftest import moment_points, pts


def test_tetrahedron_projects_to_a_triangle(tetrahedron):
    for v in range(4):
        P = stereographic_project(tetrahedron, v)
        assert P.dim == 2 and P.n == 3
        assert is_general_linear_position(P)
        assert facets_through_vertex(tetrahedron, v, 0) == 3


def test_moment_curve_projection():
    S = moment_points(range(5), 3)
    P = stereographic_project(S, 0)
    assert P.dim == 2 and P.n == 4
    assert is_general_linear_position(P)


def test_projection_keeps_labels(tetrahedron):
    S = type(tetrahedron).from_rows(tetrahedron.points, labels="abcd")
    assert stereographic_project(S, 1).labels == ("a", "c", "d")


def test_projection_check_moment_curve(log_file):
    S = moment_points(range(6), 3)
    check = projection_check(S, workers=2, log_file=log_file)
    assert check.passed
    assert len(check.rows) == 6 * 4
    profile = k_facet_profile(S)
    assert [s for _, s, _ in check.level_sums] == [3 * e for e in profile.e]
    assert "projection_check() START" in log_file.getvalue()


def test_projection_check_sphere():
    assert projection_check(convex_position_set(6, 3, seed=1, mode="sphere")).passed


def test_projection_errors(triangle_center):
    with pytest.raises(InputError):
        stereographic_project(triangle_center, 3)
    with pytest.raises(InputError):
        stereographic_project(triangle_center, 4)
    with pytest.raises(InputError):
        stereographic_project(pts((0,), (1,)), 0)
