import pytest

from KFacetLab.errors import InputError
from KFacetLab.formulas import (
    FORMULAS,
    binom,
    circle_count,
    conic_count,
    convex_3d_count,
    convex_bound,
    formula_table,
    generally_neighborly_dim,
    get_formula,
    halving_circle_count,
    halving_conic_count,
    homogeneous_count,
    homogeneous_dim,
    homogeneous_neighborliness,
    m_neighborly_bound,
    neighborly_e_k,
    perles_bounds,
    veronese_dim,
    veronese_neighborliness,
    weak_neighborliness_dim_bound,
)


def test_binom_edges():
    assert binom(5, 2) == 10
    assert binom(2, 5) == 0
    assert binom(3, -1) == 0
    assert binom(-1, 0) == 0


@pytest.mark.parametrize("n", range(3, 12))
def test_planar_neighborly_is_n(n):
    assert all(neighborly_e_k(n, 2, k) == n for k in range(n - 1))


@pytest.mark.parametrize("n, d, k, expected", [(5, 3, 1, 8), (9, 5, 0, 30), (6, 4, 0, 9)])
def test_neighborly_values(n, d, k, expected):
    assert neighborly_e_k(n, d, k) == expected


def test_neighborly_sum_and_symmetry():
    for d in range(2, 7):
        for n in range(d + 1, 17):
            row = [neighborly_e_k(n, d, k) for k in range(n - d + 1)]
            assert sum(row) == 2 * binom(n, d)
            assert row == row[::-1]


def test_neighborly_range():
    with pytest.raises(InputError):
        neighborly_e_k(5, 3, 3)
    with pytest.raises(InputError):
        neighborly_e_k(3, 3, 0)


def test_circle_count():
    assert circle_count(5, 1) == 8
    assert circle_count(7, 0) == 10
    with pytest.raises(InputError):
        circle_count(6, 0)


def test_conic_count():
    assert conic_count(7, 0) == 12
    assert conic_count(9, 2) == 72
    assert halving_conic_count(2) == 72


def test_homogeneous_count():
    assert homogeneous_count(9, 4, 0) == 30
    assert homogeneous_count(9, 4, 2) == 72
    for n in range(4, 10):
        assert [homogeneous_count(n, 2, k) for k in range(n - 2)] == [2 * (k + 1) * (n - k - 2) for k in range(n - 2)]
    with pytest.raises(InputError):
        homogeneous_count(9, 3, 0)


def test_convex_3d_count():
    assert convex_3d_count(4, 0) == 4
    assert convex_3d_count(6, 1) == 12


def test_counts_are_neighborly_counts():
    for n in range(6, 17):
        for k in range(n - 4):
            assert conic_count(n, k) == neighborly_e_k(n, 5, k)
        for k in range(n - 2):
            assert convex_3d_count(n, k) == neighborly_e_k(n, 3, k)
        for m in (2, 4):
            if n > m + 1:
                for k in range(n - m):
                    assert homogeneous_count(n, m, k) == neighborly_e_k(n, m + 1, k)
    for n_points in range(5, 17, 2):
        for k in range(n_points - 2):
            assert circle_count(n_points, k) == neighborly_e_k(n_points, 3, k)


def test_halving_circles():
    assert [halving_circle_count(m) for m in (2, 3, 4)] == [4, 9, 16]
    assert circle_count(5, 1) == 2 * halving_circle_count(2)


def test_convex_bounds():
    planar = lambda n, k: n
    assert convex_bound(4, 3, 0, planar) == 4
    assert convex_bound(6, 3, 1, planar) == 10
    assert m_neighborly_bound(4, 3, 1, 0, planar) == 4
    assert m_neighborly_bound(7, 4, 2, 0, planar) == 18
    with pytest.raises(InputError):
        m_neighborly_bound(5, 3, 3, 0, planar)
    with pytest.raises(InputError):
        convex_bound(5, 1, 0, planar)


@pytest.mark.parametrize("k, d, expected", [(2, 2, (6, 8)), (3, 1, (6, 12)), (2, 3, (8, 12))])
def test_perles_bounds(k, d, expected):
    assert perles_bounds(k, d) == expected


def test_dimensions():
    assert [generally_neighborly_dim(*a) for a in [(2, 2), (1, 1), (3, 4)]] == [5, 2, 9]
    assert veronese_dim(2, 2) == 5
    assert homogeneous_dim(2, 4) == 5
    assert veronese_neighborliness(2, 2) == 2
    assert veronese_neighborliness(2, 4) == 5
    assert homogeneous_neighborliness(2, 4) == 2
    assert weak_neighborliness_dim_bound(3) == 6


def test_registry():
    assert set(FORMULAS) >= {"neighborly_e_k", "conic_count", "perles_bounds"}
    assert get_formula("conic_count")(9, 2) == 72
    with pytest.raises(InputError):
        get_formula("nope")
    with pytest.raises(InputError):
        get_formula("conic_count")(9)


def test_formula_table():
    assert formula_table("circle_count", (5,)) == [(0, 6), (1, 8), (2, 6)]
    assert formula_table("neighborly_e_k", (6, 3)) == [(0, 8), (1, 12), (2, 12), (3, 8)]
    with pytest.raises(InputError):
        formula_table("perles_bounds", (2,))
    with pytest.raises(InputError):
        formula_table("conic_count", (4,))
