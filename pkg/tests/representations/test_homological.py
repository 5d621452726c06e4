import numpy as np
import pytest

from core.constants import StandardKind
from core.exceptions import IndexMismatch, QuiverMismatch
from quivers.quiver import build_affine_a
from representations.homological import (
    endomorphism_dim,
    euler_form,
    ext_dim,
    hom_basis,
    hom_dim,
    is_isomorphic,
    is_morphism,
    orbit_tangent_map,
)
from representations.rep import act, direct_sum, identity_rep, rep_from_maps, simple_rep
from roots.reflection import standard_rep
from tests.utils import a2, kronecker, random_graded_automorphism, random_rep
from tubes.homogeneous import homogeneous_indec


def test_hom_between_simples():
    q = a2()
    for i in q.vertices:
        assert hom_dim(simple_rep(q, i), simple_rep(q, i)) == 1
        assert ext_dim(simple_rep(q, i), simple_rep(q, i)) == 0
        for j in q.vertices:
            if i != j:
                assert hom_dim(simple_rep(q, i), simple_rep(q, j)) == 0
    assert ext_dim(simple_rep(q, 0), simple_rep(q, 1)) == 1
    assert ext_dim(simple_rep(q, 1), simple_rep(q, 0)) == 0


def test_hom_from_simple_projective():
    q = a2()
    M = identity_rep(q, (0, 1, 1))
    assert hom_dim(standard_rep(q, StandardKind.Projective, 2), M) == 1


def test_ext_of_preinjective_vanishes():
    q = a2()
    M = standard_rep(q, StandardKind.Injective, 1)
    assert M.dims == (1, 1, 0)
    assert ext_dim(M, M) == 0


@pytest.mark.parametrize("M", [identity_rep(a2(), (1, 1, 1)), homogeneous_indec(a2(), 2, 2)])
def test_standard_reps_represent_vertices(M):
    q = M.quiver
    for i in q.vertices:
        P, I = standard_rep(q, StandardKind.Projective, i), standard_rep(q, StandardKind.Injective, i)
        assert hom_dim(P, M) == M.dims[i]
        assert ext_dim(P, M) == 0
        assert hom_dim(M, I) == M.dims[i]
        assert ext_dim(M, I) == 0


def test_hom_basis_elements_are_morphisms():
    rng = np.random.default_rng(0)
    q = a2()
    M, N = random_rep(rng, q, (1, 2, 1)), random_rep(rng, q, (2, 1, 2))
    basis = hom_basis(M, N)
    assert len(basis) == hom_dim(M, N)
    for f in basis:
        assert is_morphism(f, M, N)


def test_euler_form():
    q = a2()
    assert euler_form(q, q.delta, q.delta) == 0
    assert euler_form(q, (1, 0, 0), (0, 1, 0)) == -1
    for i in q.vertices:
        e = tuple(1 if j == i else 0 for j in q.vertices)
        assert euler_form(q, e, e) == 1
    with pytest.raises(IndexMismatch):
        euler_form(q, (1, 0), (0, 1, 0))


@pytest.mark.parametrize("q", [a2(), kronecker(), build_affine_a(3, "++--")])
def test_euler_identity_on_random_pairs(q):
    rng = np.random.default_rng(2)
    for _ in range(100):
        a = tuple(int(v) for v in rng.integers(0, 3, size=q.size))
        b = tuple(int(v) for v in rng.integers(0, 3, size=q.size))
        M, N = random_rep(rng, q, a), random_rep(rng, q, b)
        assert hom_dim(M, N) - ext_dim(M, N) == euler_form(q, a, b)


def test_orbit_tangent_corank_is_self_extension():
    rng = np.random.default_rng(3)
    q = a2()
    for _ in range(10):
        dims = tuple(int(v) for v in rng.integers(0, 3, size=q.size))
        M = random_rep(rng, q, dims)
        tangent = orbit_tangent_map(M)
        assert tangent.rank() == sum(d * d for d in dims) - endomorphism_dim(M)
        assert tangent.rows - tangent.rank() == ext_dim(M, M)


def test_is_isomorphic():
    rng = np.random.default_rng(4)
    q = a2()
    M = random_rep(rng, q, (2, 1, 2))
    assert is_isomorphic(M, M)
    assert is_isomorphic(M, act(random_graded_automorphism(rng, M.dims), M))
    assert not is_isomorphic(simple_rep(q, 0), simple_rep(q, 1))
    assert not is_isomorphic(homogeneous_indec(q, 2, 1), homogeneous_indec(q, 3, 1))
    assert is_isomorphic(direct_sum([simple_rep(q, 0), simple_rep(q, 1)]), rep_from_maps(q, (1, 1, 0)))


def test_is_isomorphic_is_an_equivalence_on_a_sample():
    rng = np.random.default_rng(5)
    q = a2()
    base = [homogeneous_indec(q, 2, 1), homogeneous_indec(q, 3, 1), identity_rep(q, q.delta)]
    sample = base + [act(random_graded_automorphism(rng, M.dims), M) for M in base]
    for M in sample:
        for N in sample:
            assert is_isomorphic(M, N) == is_isomorphic(N, M)
            for L in sample:
                if is_isomorphic(M, N) and is_isomorphic(N, L):
                    assert is_isomorphic(M, L)


def test_quiver_mismatch():
    with pytest.raises(QuiverMismatch):
        hom_dim(simple_rep(a2(), 0), simple_rep(kronecker(), 0))
