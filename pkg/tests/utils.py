from typing import Sequence

import numpy as np

from core.linalg import RATIONALS, Field, random_invertible, random_matrix
from quivers.quiver import Quiver, build_affine_a
from representations.rep import GradedMap, Rep, act, rep_from_maps
from tubes.cyclic import CyclicRep, SegmentMultiset
from tubes.tube import Tube


def a2() -> Quiver:
    """A~_2 with arrows 0->1, 1->2, 0->2; one tube of period 2."""
    return build_affine_a(2, "++-")


def a3() -> Quiver:
    """A~_3 with arrows 0->1, 1->2, 2->3, 0->3; one tube of period 3."""
    return build_affine_a(3, "+++-")


def kronecker() -> Quiver:
    return build_affine_a(1, "+-")


def random_rep(rng: np.random.Generator, q: Quiver, dims: Sequence[int], field: Field = RATIONALS) -> Rep:
    maps = {arrow.id: random_matrix(rng, dims[arrow.end], dims[arrow.start], field) for arrow in q.arrows}
    return rep_from_maps(q, dims, maps, field)


def random_graded_automorphism(rng: np.random.Generator, dims: Sequence[int], field: Field = RATIONALS) -> GradedMap:
    return GradedMap(tuple(random_invertible(rng, d, field) for d in dims))


def random_segments(rng: np.random.Generator, p: int, count: int = 3, max_length: int = 3) -> SegmentMultiset:
    pairs = [(int(rng.integers(0, p)), int(rng.integers(1, max_length + 1))) for _ in range(count)]
    return SegmentMultiset.from_pairs(pairs)


def random_nilpotent_cyclic(rng: np.random.Generator, p: int, count: int = 3) -> CyclicRep:
    """A direct sum of uniserials conjugated by a random graded automorphism."""
    W = random_segments(rng, p, count).to_rep(p)
    return CyclicRep.from_rep(act(random_graded_automorphism(rng, W.dims), W))


def random_support_constant(rng: np.random.Generator, T: Tube, dims: Sequence[int]) -> GradedMap:
    """A random element of H_V: one invertible block per support of T."""
    blocks = [random_invertible(rng, dims[T.source(r)]) for r in range(T.period)]
    return GradedMap(tuple(blocks[T.index_of(i)] for i in T.quiver.vertices))
