from fractions import Fraction

import pytest

from core.constants import Direction
from core.exceptions import BadLength, CyclicOrientation, ZeroParameter
from core.linalg import Field, Matrix
from quivers.quiver import build_affine_a, build_cyclic
from representations.homological import endomorphism_dim, hom_dim, is_isomorphic
from roots.reflection import coxeter_functor
from tests.utils import a2, a3, kronecker
from tubes.homogeneous import homogeneous_indec, jordan_block, reference_arrow


@pytest.mark.parametrize(
    "q, expected",
    [
        (a2(), 5),
        (kronecker(), 3),
        (a3(), 7),
        (build_affine_a(3, "-+++"), 1),
    ],
)
def test_reference_arrow(q, expected):
    assert reference_arrow(q).id == expected


def test_reference_arrow_needs_acyclic_quiver():
    with pytest.raises(CyclicOrientation):
        reference_arrow(build_cyclic(2))


def test_jordan_block():
    assert jordan_block(2, 3) == Matrix.from_rows([[3, 1], [0, 3]])
    assert jordan_block(1, Fraction(1, 2)) == Matrix.from_rows([["1/2"]])
    assert jordan_block(0, 1).shape == (0, 0)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_homogeneous_indec(m):
    q = a2()
    M = homogeneous_indec(q, 2, m)
    assert M.dims == (m, m, m)
    assert M.maps[5] == jordan_block(m, 2)
    assert endomorphism_dim(M) == m


def test_homogeneous_parameters_separate_tubes():
    q = kronecker()
    assert hom_dim(homogeneous_indec(q, 2, 1), homogeneous_indec(q, 3, 1)) == 0
    assert is_isomorphic(homogeneous_indec(q, "1/2", 1), homogeneous_indec(q, Fraction(1, 2), 1))


@pytest.mark.parametrize("q", [a2(), a3(), kronecker()])
def test_homogeneous_indec_is_coxeter_fixed(q):
    for t, m in [(1, 1), (-2, 2)]:
        M = homogeneous_indec(q, t, m)
        assert is_isomorphic(coxeter_functor(M, Direction.Plus), M)


def test_homogeneous_indec_over_finite_field():
    M = homogeneous_indec(a2(), 4, 1, Field(3))
    assert M.maps[5] == Matrix.identity(1, Field(3))


def test_homogeneous_indec_errors():
    with pytest.raises(ZeroParameter):
        homogeneous_indec(a2(), 0, 1)
    with pytest.raises(ZeroParameter):
        homogeneous_indec(a2(), 3, 1, Field(3))
    with pytest.raises(BadLength):
        homogeneous_indec(a2(), 1, 0)
