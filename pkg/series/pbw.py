"""Graded dimensions of U^- by counting root multisets.

This path never touches the indecomposable classification, so its counts can
be compared against the parametrization.
"""
import itertools
import logging
from typing import Dict, List, Sequence, Tuple

from core.config import ensure_within_cap
from quivers.quiver import DimVector, Quiver, dims_leq, total_dim, validate_dims

logger = logging.getLogger(__name__)


def _weighted_roots(q: Quiver, bound: DimVector) -> List[Tuple[DimVector, int]]:
    """Positive roots <= bound with their multiplicity: 1 for k delta + arc, N - 1 for k delta."""
    size = q.size
    arcs = set()
    for start, length in itertools.product(range(size), range(1, size)):
        arcs.add(tuple(int((i - start) % size < length) for i in range(size)))
    roots: List[Tuple[DimVector, int]] = []
    for k in range(min(bound) + 1):
        for arc in sorted(arcs):
            vector = tuple(k + a for a in arc)
            if dims_leq(vector, bound):
                roots.append((vector, 1))
        if k > 0:
            roots.append(((k,) * size, size - 1))
    return roots


def pbw_table(q: Quiver, bound: Sequence[int]) -> Dict[DimVector, int]:
    """pbw_dim(nu) for every nu <= bound, from one unbounded-knapsack pass over the roots."""
    bound = validate_dims(q, bound)
    vectors = list(itertools.product(*[range(b + 1) for b in bound]))
    table: Dict[DimVector, int] = {vector: 0 for vector in vectors}
    table[(0,) * q.size] = 1
    for root, flavours in _weighted_roots(q, bound):
        for _ in range(flavours):
            # lexicographic order visits nu - root before nu
            for vector in vectors:
                previous = tuple(a - b for a, b in zip(vector, root, strict=True))
                if min(previous) >= 0:
                    table[vector] += table[previous]
    return table


def pbw_dim(q: Quiver, nu: Sequence[int]) -> int:
    """The number of root multisets summing to nu, imaginary roots counted with N - 1 flavours.

    Raises:
        TooLarge: nu exceeds the series cap.
    """
    nu = validate_dims(q, nu)
    ensure_within_cap(total_dim(nu), "series_max_total")
    return pbw_table(q, nu)[nu]
