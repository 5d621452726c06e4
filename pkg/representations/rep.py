from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from core.exceptions import QuiverMismatch, ShapeMismatch
from core.linalg import RATIONALS, Field, Matrix
from quivers.quiver import DimVector, Quiver, add_dims, unit_vector, validate_dims
from representations.base import BaseRepresentation


@dataclass(frozen=True)
class Rep(BaseRepresentation):
    """A representation (V, x) of (Gamma, Omega): one matrix x_h of shape dims(h'') x dims(h') per arrow."""

    quiver: Quiver
    dims: DimVector
    maps: Dict[int, Matrix]
    field: Field = RATIONALS

    def __post_init__(self):
        self._validate()

    def carried_ids(self) -> List[int]:
        return sorted(self.quiver.orientation)

    def convert(self, field: Field) -> "Rep":
        return Rep(self.quiver, self.dims, {h: m.convert(field) for h, m in self.maps.items()}, field)


@dataclass(frozen=True)
class FullRep(BaseRepresentation):
    """A point of E_V: one matrix per half-edge of H."""

    quiver: Quiver
    dims: DimVector
    maps: Dict[int, Matrix]
    field: Field = RATIONALS

    def __post_init__(self):
        self._validate()

    def carried_ids(self) -> List[int]:
        return [half_edge.id for half_edge in self.quiver.half_edges]

    def restrict(self) -> Rep:
        """The Omega-component x' of x = x' + x''."""
        return Rep(self.quiver, self.dims, {h: self.maps[h] for h in self.quiver.orientation}, self.field)


@dataclass(frozen=True)
class GradedMap:
    """An I-graded linear map; block i has shape target_dims[i] x source_dims[i]."""

    blocks: Tuple[Matrix, ...]

    @classmethod
    def identity(cls, dims: Sequence[int], field: Field = RATIONALS) -> "GradedMap":
        return cls(tuple(Matrix.identity(d, field) for d in dims))

    @classmethod
    def zero(cls, source: Sequence[int], target: Sequence[int], field: Field = RATIONALS) -> "GradedMap":
        return cls(tuple(Matrix.zeros(t, s, field) for s, t in zip(source, target, strict=True)))

    @property
    def source_dims(self) -> DimVector:
        return tuple(block.cols for block in self.blocks)

    @property
    def target_dims(self) -> DimVector:
        return tuple(block.rows for block in self.blocks)

    def __getitem__(self, i: int) -> Matrix:
        return self.blocks[i]

    def __matmul__(self, other: "GradedMap") -> "GradedMap":
        return GradedMap(tuple(a @ b for a, b in zip(self.blocks, other.blocks, strict=True)))

    def __add__(self, other: "GradedMap") -> "GradedMap":
        return GradedMap(tuple(a + b for a, b in zip(self.blocks, other.blocks, strict=True)))

    def scale(self, value) -> "GradedMap":
        return GradedMap(tuple(block.scale(value) for block in self.blocks))

    def is_invertible(self) -> bool:
        return all(block.is_invertible() for block in self.blocks)

    def inverse(self) -> "GradedMap":
        return GradedMap(tuple(block.inverse() for block in self.blocks))

    def as_block_diagonal(self) -> Matrix:
        field = self.blocks[0].field if self.blocks else RATIONALS
        return Matrix.block_diagonal(self.blocks, field)


def rep_from_maps(
    q: Quiver,
    dims: Sequence[int],
    maps: Optional[Mapping[int, Matrix]] = None,
    field: Field = RATIONALS,
) -> Rep:
    """Build a Rep, filling arrows missing from ``maps`` with zero matrices."""
    dims = validate_dims(q, dims)
    given = dict(maps or {})
    unknown = set(given) - set(q.orientation)
    if unknown:
        raise ShapeMismatch(f"half-edges {sorted(unknown)} are not arrows of {q}")
    full = {}
    for arrow in q.arrows:
        full[arrow.id] = given.get(arrow.id, Matrix.zeros(dims[arrow.end], dims[arrow.start], field))
    return Rep(q, dims, full, field)


def zero_rep(q: Quiver, dims: Optional[Sequence[int]] = None, field: Field = RATIONALS) -> Rep:
    return rep_from_maps(q, dims if dims is not None else (0,) * q.size, field=field)


def simple_rep(q: Quiver, i: int, field: Field = RATIONALS) -> Rep:
    return zero_rep(q, unit_vector(q, i), field)


def identity_rep(q: Quiver, dims: Sequence[int], field: Field = RATIONALS) -> Rep:
    """Identity on every arrow between two one-dimensional vertices, zero elsewhere."""
    dims = validate_dims(q, dims)
    maps = {
        arrow.id: Matrix.identity(1, field)
        for arrow in q.arrows
        if dims[arrow.start] == dims[arrow.end] == 1
    }
    return rep_from_maps(q, dims, maps, field)


def direct_sum(parts: Sequence[Rep], quiver: Optional[Quiver] = None) -> Rep:
    """Block-diagonal direct sum; an empty list gives the zero representation of ``quiver``."""
    if not parts:
        if quiver is None:
            raise QuiverMismatch("the direct sum of no representations needs an explicit quiver")
        return zero_rep(quiver)
    q, field = parts[0].quiver, parts[0].field
    if quiver is not None and quiver != q:
        raise QuiverMismatch(f"summands live over {q}, not {quiver}")
    for part in parts[1:]:
        if part.quiver != q or part.field != field:
            raise QuiverMismatch(f"cannot add a representation over {part.quiver} to one over {q}")
    if len(parts) == 1:
        return parts[0]

    dims = (0,) * q.size
    for part in parts:
        dims = add_dims(dims, part.dims)
    maps = {arrow.id: Matrix.block_diagonal([part.maps[arrow.id] for part in parts], field) for arrow in q.arrows}
    return Rep(q, dims, maps, field)


def act(g: GradedMap, M: Rep) -> Rep:
    """The G_V action: (g.x)_h = g_{h''} x_h g_{h'}^{-1}."""
    if g.source_dims != M.dims or g.target_dims != M.dims:
        raise ShapeMismatch(f"graded map of shape {g.source_dims} cannot act on dims {M.dims}")
    inverse = g.inverse()
    maps = {h: g[M.quiver.half_edge(h).end] @ x @ inverse[M.quiver.half_edge(h).start] for h, x in M.maps.items()}
    return Rep(M.quiver, M.dims, maps, M.field)


def extend_by_zero(M: Rep) -> FullRep:
    maps = dict(M.maps)
    for arrow in M.quiver.opposite_arrows:
        maps[arrow.id] = Matrix.zeros(M.dims[arrow.end], M.dims[arrow.start], M.field)
    return FullRep(M.quiver, M.dims, maps, M.field)


def full_rep_from_parts(M: Rep, opposite: Mapping[int, Matrix]) -> FullRep:
    """x = x' + x'' with x' = M and x'' given on bar(Omega); missing bar maps are zero."""
    maps = dict(M.maps)
    for arrow in M.quiver.opposite_arrows:
        maps[arrow.id] = opposite.get(arrow.id, Matrix.zeros(M.dims[arrow.end], M.dims[arrow.start], M.field))
    return FullRep(M.quiver, M.dims, maps, M.field)
