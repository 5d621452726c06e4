import itertools

import pytest

from quivers.quiver import build_affine_a
from series.verification import (
    check_count_equality,
    check_euler_identity,
    compare_series,
    per_dim_table,
    phi_series,
    tube_census,
    vectors_up_to,
)
from tests.utils import a2, kronecker


def test_vectors_up_to():
    assert vectors_up_to(kronecker(), 1) == [(0, 0), (0, 1), (1, 0)]
    assert len(vectors_up_to(a2(), 2)) == 10


def test_phi_series():
    series = phi_series(a2(), 3)
    assert series.coefficients == (1, 3, 9, 21)
    assert series.refinement[(1, 1, 1)] == 6
    assert series.collapse() == series


@pytest.mark.parametrize(
    "q, degree",
    [
        (kronecker(), 3),
        (a2(), 3),
        (build_affine_a(3, "++--"), 2),
    ],
)
def test_compare_series(q, degree):
    report = compare_series(q, degree)
    assert report.passed
    assert list(report.table.columns) == ["degree", "phi", "product", "pbw", "match"]
    assert report.mismatches().empty


@pytest.mark.parametrize("word", ["++-", "++--", "+++-", "+-"])
def test_series_agree_to_degree_eight(word):
    q = build_affine_a(len(word) - 1, word)
    report = compare_series(q, 8)
    assert report.passed
    assert report.table["phi"].tolist() == report.table["product"].tolist()
    assert check_count_equality(q, 8).passed


def test_compare_series_coefficients_a2():
    report = compare_series(a2(), 8)
    assert report.table["product"].tolist() == [1, 3, 9, 21, 48, 99, 198, 375, 693]


def test_check_count_equality():
    report = check_count_equality(a2(), 2)
    assert report.passed
    assert len(report.table) == 10
    assert report.table.set_index("nu").loc["1,0,1", "phi"] == 2


def test_per_dim_table():
    frame = per_dim_table(kronecker(), 2)
    assert frame["nu"].tolist() == ["0,0", "0,1", "1,0", "0,2", "1,1", "2,0"]
    assert frame["match"].all()
    assert frame.set_index("nu").loc["1,1", "phi"] == 2


@pytest.mark.parametrize(
    "q, bound", [(a2(), (2, 2, 2)), (kronecker(), (2, 2)), (build_affine_a(3, "++--"), (1, 1, 1, 1))]
)
def test_check_euler_identity(q, bound):
    report = check_euler_identity(q, bound, samples=100, seed=3)
    assert report.passed
    assert len(report.table) == 100
    assert list(report.table.columns) == ["a", "b", "hom", "ext", "euler", "match"]


def test_check_euler_identity_is_seeded():
    first = check_euler_identity(kronecker(), (2, 2), samples=5, seed=7)
    second = check_euler_identity(kronecker(), (2, 2), samples=5, seed=7)
    assert first.table.equals(second.table)


def test_tube_census():
    report = tube_census(["++-", "+++-", "++--", "+-+-", "+-"])
    assert report.passed
    assert report.table["periods"].tolist() == ["2", "3", "2,2", "2,2", ""]
    assert report.table["excess"].tolist() == [1, 2, 2, 2, 0]


def _acyclic_words(n, limit):
    words = ["".join(signs) for signs in itertools.product("+-", repeat=n + 1) if len(set(signs)) > 1]
    return words[:limit]


def test_tube_census_across_ranks():
    words = [word for n in range(1, 7) for word in _acyclic_words(n, 4)]
    assert len(set(words)) == 22
    report = tube_census(words)
    assert report.passed
    assert (report.table["excess"] == report.table["expected"]).all()
    assert report.table["expected"].tolist()[-1] == 5
