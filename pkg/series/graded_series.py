from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Tuple

from quivers.quiver import DimVector, total_dim


@dataclass(frozen=True)
class GradedSeries:
    """A power series in X truncated at degree ``len(coefficients) - 1``.

    ``refinement`` optionally keeps the coefficient of every dimension vector;
    collapsing it by total dimension must reproduce ``coefficients``.
    """

    coefficients: Tuple[int, ...]
    refinement: Optional[Dict[DimVector, int]] = field(default=None, compare=False)

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a graded series needs at least the constant term")

    @classmethod
    def from_refinement(cls, refinement: Dict[DimVector, int], degree: int) -> "GradedSeries":
        coefficients = [0] * (degree + 1)
        for vector, value in refinement.items():
            if total_dim(vector) <= degree:
                coefficients[total_dim(vector)] += value
        return cls(tuple(coefficients), dict(refinement))

    @classmethod
    def from_values(cls, values: Sequence[int]) -> "GradedSeries":
        return cls(tuple(int(value) for value in values))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, d: int) -> int:
        if d < 0 or d > self.degree:
            raise IndexError(f"degree {d} outside 0..{self.degree}")
        return self.coefficients[d]

    def truncate(self, degree: int) -> "GradedSeries":
        refinement = None
        if self.refinement is not None:
            refinement = {v: c for v, c in self.refinement.items() if total_dim(v) <= degree}
        return GradedSeries(self.coefficients[: degree + 1], refinement)

    def collapse(self) -> "GradedSeries":
        """Recompute the coefficients from the refinement."""
        if self.refinement is None:
            return self
        return GradedSeries.from_refinement(self.refinement, self.degree)

    def __str__(self) -> str:
        terms = [f"{c}*X^{d}" if d else str(c) for d, c in enumerate(self.coefficients) if c]
        return " + ".join(terms) or "0"
