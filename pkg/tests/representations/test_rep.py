import numpy as np
import pytest

from core.exceptions import QuiverMismatch, ShapeMismatch
from core.linalg import Field, Matrix
from representations.rep import (
    FullRep,
    GradedMap,
    Rep,
    act,
    direct_sum,
    extend_by_zero,
    full_rep_from_parts,
    identity_rep,
    rep_from_maps,
    simple_rep,
    zero_rep,
)
from tests.utils import a2, kronecker, random_graded_automorphism, random_rep


def test_rep_from_maps_fills_zeros():
    q = a2()
    rep = rep_from_maps(q, (1, 1, 0), {0: Matrix.identity(1)})
    assert sorted(rep.maps) == [0, 2, 5]
    assert rep.maps[2].shape == (0, 1)
    assert rep.maps[5].shape == (0, 1)
    assert rep.total_dim == 2


def test_rep_validation():
    q = a2()
    with pytest.raises(ShapeMismatch):
        rep_from_maps(q, (1, 1, 1), {0: Matrix.identity(2)})
    with pytest.raises(ShapeMismatch):
        rep_from_maps(q, (1, 1, 1), {1: Matrix.identity(1)})
    with pytest.raises(ShapeMismatch):
        Rep(q, (1, 1, 1), {0: Matrix.identity(1)})
    with pytest.raises(ShapeMismatch):
        rep_from_maps(q, (1, 1, 1), {0: Matrix.identity(1, Field(3))})


def test_direct_sum():
    q = a2()
    total = direct_sum([simple_rep(q, 0), simple_rep(q, 1)])
    assert total.dims == (1, 1, 0)
    assert total.is_zero_map()
    M = identity_rep(q, q.delta)
    assert direct_sum([M]) == M
    assert direct_sum([M, total]).dims == (2, 2, 1)
    assert direct_sum([], quiver=q) == zero_rep(q)
    with pytest.raises(QuiverMismatch):
        direct_sum([])
    with pytest.raises(QuiverMismatch):
        direct_sum([M, simple_rep(kronecker(), 0)])


def test_identity_rep():
    rep = identity_rep(a2(), (1, 1, 0))
    assert rep.maps[0] == Matrix.identity(1)
    assert rep.maps[2].shape == (0, 1)


def test_GradedMap():
    rng = np.random.default_rng(0)
    g = random_graded_automorphism(rng, (2, 1, 3))
    assert g.source_dims == (2, 1, 3)
    assert g @ g.inverse() == GradedMap.identity((2, 1, 3))
    assert g + GradedMap.zero((2, 1, 3), (2, 1, 3)) == g
    assert g.as_block_diagonal().shape == (6, 6)


def test_act():
    rng = np.random.default_rng(1)
    q = a2()
    M = random_rep(rng, q, (2, 1, 2))
    g = random_graded_automorphism(rng, M.dims)
    assert act(GradedMap.identity(M.dims), M) == M
    assert act(g.inverse(), act(g, M)) == M
    with pytest.raises(ShapeMismatch):
        act(GradedMap.identity((1, 1, 1)), M)


def test_extend_by_zero():
    q = a2()
    M = identity_rep(q, q.delta)
    full = extend_by_zero(M)
    assert isinstance(full, FullRep)
    assert sorted(full.maps) == list(range(6))
    assert full.maps[1].is_zero()
    assert full.restrict() == M


def test_full_rep_from_parts():
    q = a2()
    M = identity_rep(q, q.delta)
    full = full_rep_from_parts(M, {1: Matrix.identity(1)})
    assert full.maps[1] == Matrix.identity(1)
    assert full.maps[3].is_zero()
    assert full.restrict() == M
