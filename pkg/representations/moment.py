import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple, TypedDict

from core.constants import QuiverKind
from core.exceptions import QuiverLabError, ShapeMismatch
from core.linalg import Element, Matrix, image_basis, kernel_matrix
from representations.base import BaseRepresentation
from representations.homological import orbit_tangent_map
from representations.rep import FullRep, Rep

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MomentValue:
    """An element of gl_V: one square block per vertex."""

    blocks: Tuple[Matrix, ...]

    def __getitem__(self, i: int) -> Matrix:
        return self.blocks[i]

    def is_zero(self) -> bool:
        return all(block.is_zero() for block in self.blocks)


class LambdaMembership(TypedDict):
    nilpotent: bool
    moment_zero: bool
    in_lambda: bool


def moment_map(x: FullRep) -> MomentValue:
    """Psi_i(x) = sum_{h in Omega, h''=i} x_h x_hbar - sum_{h in bar(Omega), h''=i} x_h x_hbar."""
    q, field = x.quiver, x.field
    blocks = []
    for i in q.vertices:
        block = Matrix.zeros(x.dims[i], x.dims[i], field)
        for half_edge in q.half_edges_into(i):
            term = x.maps[half_edge.id] @ x.maps[half_edge.bar_id]
            block = block + term if q.is_arrow(half_edge.id) else block - term
        blocks.append(block)
    return MomentValue(tuple(blocks))


def is_nilpotent(x: BaseRepresentation) -> bool:
    """True iff every long enough composable product of the carried maps vanishes.

    S_0(i) = V_i and S_l(i) is the sum of x_h(S_{l-1}(h')) over carried h ending at i;
    the spans decrease, so x is nilpotent iff they reach zero within sum(dims) + 1 steps.
    """
    q, field = x.quiver, x.field
    spans: List[Matrix] = [Matrix.identity(d, field) for d in x.dims]
    for step in range(x.total_dim + 1):
        if all(span.cols == 0 for span in spans):
            return True
        updated = []
        for i in q.vertices:
            images = [
                x.maps[half_edge.id] @ spans[half_edge.start]
                for half_edge in x.carried
                if half_edge.end == i
            ]
            stacked = Matrix.hstack(images, rows=x.dims[i], field=field)
            updated.append(image_basis(stacked))
        if [span.cols for span in updated] == [span.cols for span in spans]:
            logger.debug(f"path spans stabilised at step {step} with dims {[s.cols for s in spans]}")
            return False
        spans = updated
    return all(span.cols == 0 for span in spans)


def lambda_membership(x: FullRep) -> LambdaMembership:
    nilpotent = is_nilpotent(x)
    moment_zero = moment_map(x).is_zero()
    return {"nilpotent": nilpotent, "moment_zero": moment_zero, "in_lambda": nilpotent and moment_zero}


def monodromy_lift(M: Rep) -> FullRep:
    """Add x_hbar = x_h^{-1} on every arrow pointing against the cyclic direction 0 -> 1 -> ... -> n -> 0.

    The composite around the cycle is then the monodromy of M.
    """
    q = M.quiver
    if q.kind != QuiverKind.AffineA:
        raise QuiverLabError("the monodromy lift is defined on affine-a quivers")
    maps: Dict[int, Matrix] = dict(M.maps)
    for arrow in q.arrows:
        x = M.maps[arrow.id]
        if not x.is_square:
            raise ShapeMismatch(f"the map on {arrow.label} is not square")
        counter_cyclic = arrow.id % 2 == 1
        if counter_cyclic:
            if not x.is_invertible():
                raise QuiverLabError(f"the map on {arrow.label} is singular")
            maps[arrow.bar_id] = x.inverse()
        else:
            maps[arrow.bar_id] = Matrix.zeros(x.cols, x.rows, M.field)
    return FullRep(q, M.dims, maps, M.field)


def symplectic_pairing(x: FullRep, y: FullRep) -> Element:
    """<x, y> = sum_{h in Omega} tr(x_h y_hbar) - sum_{h in bar(Omega)} tr(x_h y_hbar)."""
    q, field = x.quiver, x.field
    total = field.zero
    for half_edge in q.half_edges:
        product = x.maps[half_edge.id] @ y.maps[half_edge.bar_id]
        trace = sum((product.entries[k][k] for k in range(product.rows)), field.zero)
        total = total + trace if q.is_arrow(half_edge.id) else total - trace
    return total


def conormal_fiber(M: Rep) -> List[FullRep]:
    """A basis of the x'' in E_{V, bar(Omega)} orthogonal to the orbit tangent space at x' = M.

    Every x' + x'' built from it has vanishing moment map; the basis size is
    dim Ext^1(M, M).
    """
    q, field = M.quiver, M.field
    tangent = orbit_tangent_map(M)
    annihilator = kernel_matrix(tangent.transpose())
    fiber = []
    for j in range(annihilator.cols):
        values = annihilator.column_at(j).flatten()
        maps: Dict[int, Matrix] = dict(M.maps)
        offset = 0
        for arrow in q.arrows:
            rows, cols = M.dims[arrow.end], M.dims[arrow.start]
            # coordinate (a, b) of x_h pairs with entry (b, a) of x_hbar
            grid = [[field.zero] * rows for _ in range(cols)]
            for a in range(rows):
                for b in range(cols):
                    grid[b][a] = values[offset + a * cols + b]
            maps[arrow.bar_id] = Matrix(cols, rows, tuple(tuple(row) for row in grid), field)
            offset += rows * cols
        fiber.append(FullRep(q, M.dims, maps, field))
    return fiber
