import itertools
import logging
from typing import Iterator, List

from core.config import ensure_within_cap
from core.exceptions import DimensionMismatch
from core.linalg import Field, Matrix
from parametrization.labels import FlagType
from quivers.quiver import total_dim
from representations.rep import Rep

logger = logging.getLogger(__name__)


def subspace_coefficients(ambient: int, size: int, field: Field) -> Iterator[Matrix]:
    """Every ``size``-dimensional subspace of F_p^ambient once, as an ambient x size matrix in column echelon form."""
    values = list(field.elements())
    for pivots in itertools.combinations(range(ambient), size):
        free = [(a, j) for a, pivot in enumerate(pivots) for j in range(pivot + 1, ambient) if j not in pivots]
        for choice in itertools.product(values, repeat=len(free)):
            grid = [[field.zero] * size for _ in range(ambient)]
            for a, pivot in enumerate(pivots):
                grid[pivot][a] = field.one
            for (a, j), value in zip(free, choice, strict=True):
                grid[j][a] = value
            yield Matrix(ambient, size, tuple(tuple(row) for row in grid), field)


def _is_stable(x: Rep, basis: List[Matrix]) -> bool:
    for arrow in x.quiver.arrows:
        target = basis[arrow.end]
        image = x.maps[arrow.id] @ basis[arrow.start]
        if image.cols == 0 or image.is_zero():
            continue
        if Matrix.hstack([target, image], rows=target.rows, field=x.field).rank() != target.cols:
            return False
    return True


def count_stable_flags(x: Rep, ft: FlagType, p: int) -> int:
    """The number of x-stable flags V = V^0 > V^1 > ... > V^m = 0 with dim V^{r-1}/V^r = nu^r over F_p.

    Args:
        x (Rep): A representation; rational entries are reduced modulo p.
        ft (FlagType): The flag type (nu^1, ..., nu^m).
        p (int): The prime.

    Raises:
        DimensionMismatch: sum of the steps differs from dim x.
        TooLarge: dim x exceeds the flag cap.
    """
    field = Field(p)
    x = x.convert(field)
    if len(ft.total) != x.quiver.size or ft.total != x.dims:
        raise DimensionMismatch(f"flag type {ft} does not add up to {x.dims}")
    ensure_within_cap(total_dim(x.dims), "flags_max_total")

    def count_from(step: int, basis: List[Matrix]) -> int:
        if step == len(ft.steps):
            return 1
        sizes = [block.cols - drop for block, drop in zip(basis, ft.steps[step], strict=True)]
        total = 0
        choices = [subspace_coefficients(block.cols, size, field) for block, size in zip(basis, sizes, strict=True)]
        for coefficients in itertools.product(*[list(choice) for choice in choices]):
            child = [block @ c for block, c in zip(basis, coefficients, strict=True)]
            if _is_stable(x, child):
                total += count_from(step + 1, child)
        return total

    result = count_from(0, [Matrix.identity(d, field) for d in x.dims])
    logger.debug(f"{result} stable flags of type {ft} over F_{p}")
    return result
