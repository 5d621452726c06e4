import pytest

from core.exceptions import CyclicOrientation, UnknownVertex
from quivers.quiver import build_affine_a, build_cyclic
from roots.root_system import coxeter_transform, defect
from tests.utils import a2, a3, kronecker
from tubes.tube import find_tubes, regular_simple, tube_dims


def test_find_tubes_a2():
    (T,) = find_tubes(a2())
    assert T.period == 2
    assert T.supports == ((0, 2), (1,))
    assert T.paths == ((5,), ())
    assert T.connecting == (0, 2)
    assert T.internal_arrows == [5]
    assert T.source(0) == 0 and T.sink(0) == 2
    assert T.index_of(2) == 0
    assert T.path_to(2) == (5,)
    assert T.indicator(3) == (0, 1, 0)
    assert T.describe() == "tube 0 (period 2): R0={0,2} s=0 t=2 h=0->1; R1={1} s=1 t=1 h=1->2"


def test_index_of_unknown_vertex():
    (T,) = find_tubes(a2())
    with pytest.raises(UnknownVertex):
        T.index_of(7)


def test_find_tubes_kronecker_has_none():
    assert find_tubes(kronecker()) == ()


@pytest.mark.parametrize(
    "word, periods",
    [
        ("+++-", [3]),
        ("++--", [2, 2]),
        ("+-+-", [2, 2]),
    ],
)
def test_find_tubes_periods(word, periods):
    q = build_affine_a(3, word)
    tubes = find_tubes(q)
    assert [T.period for T in tubes] == periods
    assert sum(T.period - 1 for T in tubes) == q.size - 2


def test_find_tubes_a3():
    (T,) = find_tubes(a3())
    assert T.supports == ((0, 3), (2,), (1,))


@pytest.mark.parametrize("q", [a2(), a3(), build_affine_a(3, "++--"), build_affine_a(3, "+-+-")])
def test_tube_invariants(q):
    for T in find_tubes(q):
        total = [0] * q.size
        for r in range(T.period):
            indicator = T.indicator(r)
            assert defect(q, indicator) == 0
            assert coxeter_transform(q, indicator) == T.indicator(r - 1)
            total = [a + b for a, b in zip(total, indicator)]
            h = q.half_edge(T.connecting[r])
            assert h.start == T.source(r)
            assert h.end == T.sink(r - 1)
        assert tuple(total) == q.delta
        assert 0 in T.supports[0]


def test_find_tubes_needs_acyclic_quiver():
    with pytest.raises(CyclicOrientation):
        find_tubes(build_cyclic(3))


def test_regular_simple():
    (T,) = find_tubes(a2())
    R0 = regular_simple(T, 0)
    assert R0.dims == (1, 0, 1)
    assert R0.maps[5].flatten() == [1]
    assert regular_simple(T, 3) == regular_simple(T, 1)


def test_tube_dims():
    (T,) = find_tubes(a2())
    assert tube_dims(T, 0, 1) == (1, 0, 1)
    assert tube_dims(T, 0, 2) == (1, 1, 1)
    assert tube_dims(T, 1, 3) == (1, 2, 1)
    assert tube_dims(T, 0, 0) == (0, 0, 0)
