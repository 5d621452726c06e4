import pytest

from core.constants import Direction, RootClass, StandardKind
from core.exceptions import NotSink, NotSource
from representations.homological import is_isomorphic
from representations.rep import identity_rep, simple_rep
from roots.catalog import build_catalog
from roots.reflection import (
    coxeter_functor,
    coxeter_power,
    preinjective,
    preprojective,
    reflect,
    standard_rep,
)
from roots.root_system import coxeter_transform, preprojective_orbit, standard_dims
from tests.utils import a2, a3, kronecker
from tubes.tube import find_tubes, regular_simple


def test_reflect_simple_at_sink_vanishes():
    q = a2()
    result = reflect(simple_rep(q, 2), 2, Direction.Plus)
    assert result.dims == (0, 0, 0)
    assert result.quiver.is_source(2)


def test_reflect_plus():
    q = a2()
    result = reflect(identity_rep(q, (0, 1, 1)), 2, "plus")
    assert result.dims == (0, 1, 0)
    assert result.quiver.is_source(2)


def test_reflect_minus_undoes_plus():
    q = a2()
    M = identity_rep(q, (1, 1, 1))
    back = reflect(reflect(M, 2, Direction.Plus), 2, Direction.Minus)
    assert back.quiver == q
    assert is_isomorphic(back, M)


def test_reflect_errors():
    M = identity_rep(a2(), (1, 1, 1))
    with pytest.raises(NotSink):
        reflect(M, 0, Direction.Plus)
    with pytest.raises(NotSource):
        reflect(M, 2, Direction.Minus)
    with pytest.raises(ValueError):
        reflect(M, 2, "sideways")


@pytest.mark.parametrize("q", [a2(), a3(), kronecker()])
def test_standard_reps(q):
    for i in q.vertices:
        for kind in StandardKind:
            assert standard_rep(q, kind, i).dims == standard_dims(q, kind, i)
        assert coxeter_functor(standard_rep(q, StandardKind.Projective, i), Direction.Plus).dims == (0,) * q.size
        assert coxeter_functor(standard_rep(q, StandardKind.Injective, i), Direction.Minus).dims == (0,) * q.size


def test_preprojective_and_preinjective():
    q = a2()
    assert preprojective(q, 1, 2).dims == (1, 2, 2)
    assert preprojective(q, 2, 1).dims == preprojective_orbit(q, 1, 2)[2]
    assert preinjective(kronecker(), 1, 0).dims == (3, 2)
    assert is_isomorphic(coxeter_power(preprojective(q, 2, 0), 2), standard_rep(q, StandardKind.Projective, 0))


@pytest.mark.parametrize("q", [a2(), kronecker()])
def test_coxeter_functor_on_catalog(q):
    for entry in build_catalog(q, q.delta):
        M = entry.rep
        if entry.record.root_class == RootClass.Preprojective:
            continue
        image = coxeter_functor(M, Direction.Plus)
        assert image.dims == coxeter_transform(q, M.dims)
        assert is_isomorphic(coxeter_functor(image, Direction.Minus), M)


@pytest.mark.parametrize("q", [a2(), a3()])
def test_coxeter_functor_rotates_regular_simples(q):
    for T in find_tubes(q):
        for r in range(T.period):
            image = coxeter_functor(regular_simple(T, r), Direction.Plus)
            assert is_isomorphic(image, regular_simple(T, r - 1))
