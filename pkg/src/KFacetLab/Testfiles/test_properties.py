"""Seeded property suites over the verify pipelines and the k-set oracle.

The ``slow`` cases run the full instance sizes; ``pytest -m "not slow"``
keeps the quick ones.
"""
import pytest

from KFacetLab.faces import is_weakly_k_neighborly
from KFacetLab.facets import enumerate_k_sets, exhaustive_k_sets, k_facet_profile
from KFacetLab.formulas import binom
from KFacetLab.genpos import random_point_set
from KFacetLab.verify import run_verify

# five seeds per size, 25 instances per odd-n suite
SEEDS = range(5)


@pytest.mark.parametrize("n", [5, 7, 9, 11, 13])
@pytest.mark.parametrize("seed", SEEDS)
def test_circle_counts(n, seed):
    report = run_verify("circles", {"n": n}, seed)
    assert report.passed, report.to_dict()
    assert report.measured["halving"] == ((n - 1) // 2) ** 2


@pytest.mark.slow
@pytest.mark.parametrize("n", [7, 8, 9, 10, 11])
@pytest.mark.parametrize("seed", SEEDS)
def test_conic_counts(n, seed):
    report = run_verify("conics", {"n": n}, seed)
    assert report.passed, report.to_dict()
    if n == 9:
        assert report.measured["halving"] == 72


@pytest.mark.parametrize("n, m", [(6, 2), (8, 2), (10, 2), (7, 4), (9, 4), (10, 4)])
def test_homogeneous_counts(n, m):
    for seed in range(3):
        report = run_verify("homogeneous", {"n": n, "m": m}, seed)
        assert report.passed, report.to_dict()


@pytest.mark.parametrize("n", [5, 7, 9])
@pytest.mark.parametrize("seed", range(3))
def test_conic_neighborliness_certificates(n, seed):
    report = run_verify("veronese-neighborly", {"n": n, "m": 2}, seed)
    assert report.passed, report.to_dict()
    assert report.measured["degree"] == 2


@pytest.mark.slow
def test_quartic_veronese_is_5_neighborly():
    report = run_verify("veronese-neighborly", {"n": 8, "m": 4}, seed=1)
    assert report.passed, report.to_dict()
    assert report.measured["degree"] == 5


@pytest.mark.slow
@pytest.mark.parametrize("n", [6, 9])
@pytest.mark.parametrize("k, d", [(1, 2), (2, 2), (2, 3)])
def test_embedding_neighborliness(n, k, d):
    for seed in range(2):
        report = run_verify("embedding", {"n": n, "k": k, "d": d}, seed=seed + k + d)
        assert report.passed, report.to_dict()


@pytest.mark.parametrize("mode", ["moment", "sphere"])
@pytest.mark.parametrize("n, d", [(6, 3), (8, 3), (7, 4)])
def test_projection_bijection(n, d, mode):
    for seed in range(2):
        report = run_verify("projection", {"n": n, "d": d, "mode": mode}, seed)
        assert report.passed, report.to_dict()


@pytest.mark.slow
@pytest.mark.parametrize("mode", ["moment", "sphere"])
@pytest.mark.parametrize("d", [3, 4])
def test_projection_bijection_at_ten_points(d, mode):
    report = run_verify("projection", {"n": 10, "d": d, "mode": mode}, seed=d)
    assert report.passed, report.to_dict()


@pytest.mark.parametrize("p", [2, 3, 4])
def test_radon_parts_are_never_weakly_separable(p):
    for seed in range(50):
        report = run_verify("radon", {"p": p}, seed)
        assert report.passed, report.to_dict()


@pytest.mark.parametrize("k", [1, 2, 3])
def test_odd_sets_in_low_dimension(k):
    for seed in range(5):
        S = random_point_set(2 * k + 1, 2 * k - 1, seed)
        assert not is_weakly_k_neighborly(S, k)


# (n, p) cycles through 6..9 points in dims 2 and 3
ORACLE_CASES = [(6 + seed % 4, 2 + seed % 2, seed) for seed in range(20)]


@pytest.mark.slow
@pytest.mark.parametrize("n, p, seed", ORACLE_CASES)
def test_oracle_equivalence(n, p, seed):
    S = random_point_set(n, p, seed)
    profile = k_facet_profile(S)
    assert profile.is_consistent()
    assert sum(profile.e) == 2 * binom(n, p)
    assert list(profile.e) == list(profile.e)[::-1]
    for k in range(1, S.n):
        assert enumerate_k_sets(S, k).sets == exhaustive_k_sets(S, k).sets
