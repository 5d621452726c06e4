import pytest

from core.constants import LabelKind
from parametrization.labels import IndecLabel
from parametrization.phi import enumerate_phi, is_tube_aperiodic, lambda_partitions
from quivers.quiver import build_affine_a
from series.pbw import pbw_dim
from tests.utils import a2, a3, kronecker


def test_lambda_partitions():
    assert lambda_partitions(0) == [()]
    assert lambda_partitions(3) == [(3,), (2, 1), (1, 1, 1)]
    assert len(lambda_partitions(5)) == 7


def test_is_tube_aperiodic():
    q = a2()
    r0 = IndecLabel(LabelKind.Tube, 0, (1, 0, 1), tube_id=0, m=1)
    r1 = IndecLabel(LabelKind.Tube, 1, (0, 1, 0), tube_id=0, m=1)
    assert is_tube_aperiodic(q, {r0: 2})
    assert not is_tube_aperiodic(q, {r0: 1, r1: 1})
    assert is_tube_aperiodic(q, {r0: 1, r1: 0})
    assert is_tube_aperiodic(kronecker(), {})


@pytest.mark.parametrize(
    "q, nu, expected",
    [
        (a2(), (0, 0, 0), 1),
        (a2(), (0, 1, 0), 1),
        (a2(), (1, 0, 1), 2),
        (a2(), (1, 1, 1), 6),
        (kronecker(), (1, 1), 2),
        (kronecker(), (1, 0), 1),
    ],
)
def test_enumerate_phi_counts(q, nu, expected):
    found = enumerate_phi(q, nu)
    assert len(found) == expected
    assert len(set(found)) == expected
    for sl in found:
        assert sl.dims(q) == nu


def test_enumerate_phi_delta_contains_homogeneous_stratum():
    q = a2()
    found = enumerate_phi(q, q.delta)
    assert [sl.lam for sl in found].count((1,)) == 1
    assert not any(
        {label.r for label in sl.labels if label.kind == LabelKind.Tube and label.m == 1} == {0, 1} for sl in found
    )


@pytest.mark.parametrize(
    "q, nu",
    [
        (a2(), (1, 1, 1)),
        (a2(), (2, 1, 1)),
        (a2(), (1, 2, 1)),
        (a2(), (1, 1, 2)),
        (kronecker(), (2, 1)),
        (kronecker(), (2, 2)),
        (a3(), (1, 1, 1, 1)),
        (build_affine_a(3, "++--"), (1, 1, 1, 1)),
    ],
)
def test_phi_matches_pbw(q, nu):
    assert len(enumerate_phi(q, nu)) == pbw_dim(q, nu)
