import itertools
import logging
from collections import Counter

import numpy as np

from core.config import ensure_within_cap
from quivers.quiver import Quiver
from series.graded_series import GradedSeries

logger = logging.getLogger(__name__)


def _geometric(step: int, degree: int) -> np.ndarray:
    """(1 - X^step)^{-1} truncated at ``degree``."""
    series = np.zeros(degree + 1, dtype=object)
    series[::step] = 1
    return series


def _multiply(a: np.ndarray, b: np.ndarray, degree: int) -> np.ndarray:
    return np.convolve(a, b)[: degree + 1]


def real_root_degrees(q: Quiver, degree: int) -> Counter:
    """How many positive real roots k delta + arc have each total dimension <= degree."""
    size = q.size
    arcs = {
        tuple(int((i - start) % size < length) for i in range(size))
        for start, length in itertools.product(range(size), range(1, size))
    }
    counts: Counter = Counter()
    for arc in arcs:
        total = sum(arc)
        while total <= degree:
            counts[total] += 1
            total += size
    return counts


def product_series(q: Quiver, degree: int) -> GradedSeries:
    """prod over real roots (1 - X^|alpha|)^{-1} times prod_s (1 - X^{sN})^{-(N-1)}, truncated at ``degree``.

    Raises:
        TooLarge: degree exceeds the series cap.
    """
    ensure_within_cap(degree, "series_max_total")
    size = q.size
    result = np.zeros(degree + 1, dtype=object)
    result[0] = 1
    for total, count in sorted(real_root_degrees(q, degree).items()):
        for _ in range(count):
            result = _multiply(result, _geometric(total, degree), degree)
    for s in range(1, degree // size + 1):
        for _ in range(size - 1):
            result = _multiply(result, _geometric(s * size, degree), degree)
    return GradedSeries.from_values(result.tolist())
