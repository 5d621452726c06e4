import logging
from typing import Dict, List, Sequence, Tuple

from sympy.utilities.iterables import partitions

from core.constants import LabelKind
from parametrization.labels import IndecLabel, SigmaLambda, indecomposable_labels
from quivers.quiver import DimVector, Quiver, dims_leq, scale_dims, sub_dims, validate_dims
from tubes.tube import find_tubes

logger = logging.getLogger(__name__)


def lambda_partitions(k: int) -> List[Tuple[int, ...]]:
    """Partitions of k as weakly decreasing tuples; k = 0 gives the empty partition."""
    if k == 0:
        return [()]
    result = []
    # partitions() reuses one dict between yields
    for parts in partitions(k):
        result.append(tuple(sorted((size for size, count in parts.items() for _ in range(count)), reverse=True)))
    return sorted(result, reverse=True)


def is_tube_aperiodic(q: Quiver, counts: Dict[IndecLabel, int]) -> bool:
    """For every tube and every length m, some V_{T,r,m} is missing."""
    for tube in find_tubes(q):
        present: Dict[int, set] = {}
        for label, count in counts.items():
            if label.kind == LabelKind.Tube and label.tube_id == tube.tube_id and count > 0:
                present.setdefault(label.m, set()).add(label.r)
        if any(len(starts) == tube.period for starts in present.values()):
            return False
    return True


def _decompositions(q: Quiver, labels: Sequence[IndecLabel], target: DimVector) -> List[Dict[IndecLabel, int]]:
    found: List[Dict[IndecLabel, int]] = []

    def extend(index: int, remaining: DimVector, chosen: Dict[IndecLabel, int]) -> None:
        if not any(remaining):
            if is_tube_aperiodic(q, chosen):
                found.append(dict(chosen))
            return
        if index == len(labels):
            return
        label = labels[index]
        extend(index + 1, remaining, chosen)
        count = 0
        while dims_leq(label.dims, remaining):
            remaining = sub_dims(remaining, label.dims)
            count += 1
            extend(index + 1, remaining, {**chosen, label: count})

    extend(0, target, {})
    return found


def enumerate_phi(q: Quiver, nu: Sequence[int]) -> List[SigmaLambda]:
    """All pairs (sigma, lambda) with sum sigma(P) dim P + |lambda| delta = nu and aperiodic tube parts.

    Raises:
        CyclicOrientation: q has an oriented cycle.
    """
    nu = validate_dims(q, nu)
    labels = indecomposable_labels(q, nu)
    results: List[SigmaLambda] = []
    k = 0
    while dims_leq(scale_dims(q.delta, k), nu):
        remainder = sub_dims(nu, scale_dims(q.delta, k))
        fitting = [label for label in labels if dims_leq(label.dims, remainder)]
        for counts in _decompositions(q, fitting, remainder):
            for lam in lambda_partitions(k):
                results.append(SigmaLambda.from_counts(counts, lam))
        k += 1
    logger.debug(f"|phi| = {len(results)} for nu = {nu} on {q}")
    return sorted(results, key=lambda sl: (sl.sigma_key(), sl.lam))
