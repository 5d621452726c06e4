from abc import ABC, abstractmethod
from typing import Dict, List

from core.exceptions import QuiverMismatch, ShapeMismatch
from core.linalg import Field, Matrix
from quivers.quiver import DimVector, HalfEdge, Quiver, validate_dims


class BaseRepresentation(ABC):
    """Shared behaviour of representations carrying one matrix per half-edge in some subset of H."""

    quiver: Quiver
    dims: DimVector
    maps: Dict[int, Matrix]
    field: Field

    @abstractmethod
    def carried_ids(self) -> List[int]:
        """Ids of the half-edges that carry a map."""
        pass

    def _validate(self) -> None:
        validate_dims(self.quiver, self.dims)
        expected = sorted(self.carried_ids())
        if sorted(self.maps) != expected:
            raise ShapeMismatch(f"maps are given on {sorted(self.maps)}, expected {expected}")
        for h in expected:
            half_edge, matrix = self.quiver.half_edge(h), self.maps[h]
            shape = (self.dims[half_edge.end], self.dims[half_edge.start])
            if matrix.shape != shape:
                raise ShapeMismatch(f"map on {half_edge.label} has shape {matrix.shape}, expected {shape}")
            if matrix.field != self.field:
                raise ShapeMismatch(f"map on {half_edge.label} lives over {matrix.field}, not {self.field}")

    @property
    def carried(self) -> List[HalfEdge]:
        return [self.quiver.half_edge(h) for h in sorted(self.carried_ids())]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def map(self, h: int) -> Matrix:
        return self.maps[h]

    def is_zero_map(self) -> bool:
        return all(matrix.is_zero() for matrix in self.maps.values())


def check_same_quiver(first: BaseRepresentation, second: BaseRepresentation) -> None:
    if first.quiver != second.quiver:
        raise QuiverMismatch(f"representations live over {first.quiver} and {second.quiver}")
    if first.field != second.field:
        raise QuiverMismatch(f"representations live over {first.field} and {second.field}")
