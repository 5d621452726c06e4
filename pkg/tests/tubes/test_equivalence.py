import numpy as np
import pytest

from core.exceptions import NotInRepT, PeriodMismatch, QuiverMismatch
from core.linalg import Matrix
from representations.homological import endomorphism_dim, is_isomorphic, is_morphism
from representations.rep import GradedMap, act, simple_rep, zero_rep
from tests.utils import a2, a3, kronecker, random_graded_automorphism, random_nilpotent_cyclic, random_support_constant
from tubes.cyclic import cyclic_indec
from tubes.equivalence import (
    F_map,
    G_map,
    is_in_H_V,
    is_in_rep_T,
    natural_iso_alpha,
    orbit_map_differential,
    restrict_automorphism,
    tube_indec,
)
from tubes.homogeneous import homogeneous_indec
from tubes.tube import find_tubes, regular_simple, tube_dims


@pytest.mark.parametrize("seed", range(25))
@pytest.mark.parametrize("q", [a2(), a3()])
def test_F_inverts_G(q, seed):
    rng = np.random.default_rng(seed)
    for T in find_tubes(q):
        W = random_nilpotent_cyclic(rng, T.period, count=2)
        assert max(W.dims) <= 4
        M = G_map(T, W)
        assert is_in_rep_T(T, M)
        assert F_map(T, M) == W


@pytest.mark.parametrize("seed", range(25))
@pytest.mark.parametrize("q", [a2(), a3()])
def test_natural_iso_alpha(q, seed):
    rng = np.random.default_rng(seed)
    (T,) = find_tubes(q)
    W = random_nilpotent_cyclic(rng, T.period, count=2)
    M = act(random_graded_automorphism(rng, G_map(T, W).dims), G_map(T, W))
    alpha = natural_iso_alpha(T, M)
    assert alpha.is_invertible()
    assert is_morphism(alpha, G_map(T, F_map(T, M)), M)
    assert is_isomorphic(G_map(T, F_map(T, M)), M)


def test_G_of_cyclic_simples_are_regular_simples():
    for q in (a2(), a3()):
        for T in find_tubes(q):
            for r in range(T.period):
                assert G_map(T, cyclic_indec(T.period, r, 1)) == regular_simple(T, r)


@pytest.mark.parametrize("r, m", [(0, 1), (0, 2), (1, 2), (1, 3), (0, 4)])
def test_tube_indec(r, m):
    (T,) = find_tubes(a2())
    M = tube_indec(T, r, m)
    assert M.dims == tube_dims(T, r, m)
    assert endomorphism_dim(M) == (m - 1) // T.period + 1
    assert F_map(T, M) == cyclic_indec(T.period, r, m)


def test_F_rejects_reps_outside_the_tube():
    q = a2()
    (T,) = find_tubes(q)
    with pytest.raises(NotInRepT):
        F_map(T, zero_rep(q, q.delta))
    with pytest.raises(NotInRepT):
        F_map(T, homogeneous_indec(q, 1, 1))
    with pytest.raises(NotInRepT):
        natural_iso_alpha(T, zero_rep(q, q.delta))
    with pytest.raises(QuiverMismatch):
        F_map(T, simple_rep(kronecker(), 0))
    assert not is_in_rep_T(T, simple_rep(kronecker(), 0))


def test_G_period_mismatch():
    (T,) = find_tubes(a2())
    with pytest.raises(PeriodMismatch):
        G_map(T, cyclic_indec(3, 0, 1))


def test_H_V():
    rng = np.random.default_rng(0)
    (T,) = find_tubes(a2())
    W = random_nilpotent_cyclic(rng, T.period)
    M = G_map(T, W)
    g = random_support_constant(rng, T, M.dims)
    assert is_in_H_V(T, g)
    moved = F_map(T, act(g, M))
    expected = act(restrict_automorphism(T, g), W)
    assert moved.dims == expected.dims
    assert moved.maps == expected.maps


def test_restrict_automorphism_outside_H_V():
    (T,) = find_tubes(a2())
    one = Matrix.identity(1)
    g = GradedMap((one, one, one.scale(2)))
    assert not is_in_H_V(T, g)
    with pytest.raises(NotInRepT):
        restrict_automorphism(T, g)


@pytest.mark.parametrize("seed", range(3))
@pytest.mark.parametrize("q", [a2(), a3()])
def test_orbit_map_differential_is_surjective(q, seed):
    rng = np.random.default_rng(seed)
    for T in find_tubes(q):
        W = random_nilpotent_cyclic(rng, T.period)
        dims = G_map(T, W).dims
        differential = orbit_map_differential(T, W)
        assert differential.rows == sum(dims[arrow.start] * dims[arrow.end] for arrow in q.arrows)
        assert differential.rank() == differential.rows
