"""The equivalence between Rep(T) and nilpotent representations of the cyclic quiver Q_T."""

import logging
from typing import Dict, Sequence

from core.exceptions import NotInRepT, PeriodMismatch, QuiverMismatch
from core.linalg import Matrix
from quivers.quiver import build_cyclic
from representations.homological import orbit_tangent_map
from representations.moment import is_nilpotent
from representations.rep import GradedMap, Rep
from tubes.cyclic import CyclicRep, cyclic_indec, cyclic_rep
from tubes.tube import Tube

logger = logging.getLogger(__name__)


def path_map(M: Rep, arrows: Sequence[int], start: int) -> Matrix:
    """x_{h_k} ... x_{h_1} along ``arrows`` (in path order), the identity on V_start for an empty path."""
    result = Matrix.identity(M.dims[start], M.field)
    for h in arrows:
        result = M.maps[h] @ result
    return result


def is_in_rep_T(T: Tube, M: Rep) -> bool:
    """True iff every internal arrow of T carries an isomorphism."""
    if M.quiver != T.quiver:
        return False
    return all(M.maps[h].is_invertible() for h in T.internal_arrows)


def _require_rep_T(T: Tube, M: Rep) -> None:
    if M.quiver != T.quiver:
        raise QuiverMismatch(f"tube {T.tube_id} lives on {T.quiver}, not {M.quiver}")
    for h in T.internal_arrows:
        if not M.maps[h].is_invertible():
            raise NotInRepT(f"internal arrow {T.quiver.half_edge(h).label} carries a singular map")


def G_map(T: Tube, W: CyclicRep) -> Rep:
    """G(W)_i = W_{r(i)}; identity on internal arrows and G(y)_{h(r)} = y_{r -> r-1}.

    Raises:
        PeriodMismatch: W is not a representation of the cyclic quiver of period p(T).
    """
    if W.quiver.size != T.period:
        raise PeriodMismatch(f"tube {T.tube_id} has period {T.period}, got a representation of Z/{W.quiver.size}")
    q = T.quiver
    dims = tuple(W.dims[T.index_of(i)] for i in q.vertices)
    maps: Dict[int, Matrix] = {}
    for r in range(T.period):
        for h in T.paths[r]:
            maps[h] = Matrix.identity(W.dims[r], W.field)
        maps[T.connecting[r]] = W.arrow_map(r)
    return Rep(q, dims, maps, W.field)


def F_map(T: Tube, M: Rep) -> CyclicRep:
    """F(V)_r = V_{s(r)} and F(x)_{r -> r-1} = x_{rho(r-1)}^{-1} x_{h(r)}.

    Raises:
        NotInRepT: M has a singular internal map or its image is not nilpotent.
    """
    _require_rep_T(T, M)
    dims = tuple(M.dims[T.source(r)] for r in range(T.period))
    maps = {}
    for r in range(T.period):
        previous = (r - 1) % T.period
        rho = path_map(M, T.paths[previous], T.source(previous))
        maps[r] = rho.inverse() @ M.maps[T.connecting[r]]

    candidate = Rep(build_cyclic(T.period), dims, {2 * r: x for r, x in maps.items()}, M.field)
    if not is_nilpotent(candidate):
        raise NotInRepT(f"the image of M under F has an invertible monodromy on tube {T.tube_id}")
    return cyclic_rep(T.period, dims, maps, M.field)


def natural_iso_alpha(T: Tube, M: Rep) -> GradedMap:
    """alpha(M)_i = x_{s(r) -> i}, an isomorphism G(F(M)) -> M.

    Raises:
        NotInRepT: M is not in Rep(T).
    """
    _require_rep_T(T, M)
    blocks = []
    for i in T.quiver.vertices:
        r = T.index_of(i)
        blocks.append(path_map(M, T.path_to(i), T.source(r)))
    alpha = GradedMap(tuple(blocks))
    if not alpha.is_invertible():
        raise RuntimeError(f"alpha is singular on tube {T.tube_id}")
    return alpha


def tube_indec(T: Tube, r: int, m: int) -> Rep:
    """V_{T,r,m} = G(V_{r,m}); regular top R_r and regular length m."""
    return G_map(T, cyclic_indec(T.period, r % T.period, m))


def is_in_H_V(T: Tube, g: GradedMap) -> bool:
    """g is constant along every support of T."""
    return all(g[i] == g[members[0]] for members in T.supports for i in members)


def restrict_automorphism(T: Tube, g: GradedMap) -> GradedMap:
    """F on H_V: F(g)_r = g_{s(r)}."""
    if not is_in_H_V(T, g):
        raise NotInRepT(f"graded map is not constant on the supports of tube {T.tube_id}")
    return GradedMap(tuple(g[T.source(r)] for r in range(T.period)))


def orbit_map_differential(T: Tube, W: CyclicRep) -> Matrix:
    """Differential at (1, W) of (g, y) -> g.G(y), from gl_V x E_{F(V), Omega_T} to E_{V, Omega}.

    Rows follow the arrow blocks of the orbit tangent map; the last columns embed
    the cyclic arrows into the connecting arrows h(r).
    """
    x = G_map(T, W)
    tangent = orbit_tangent_map(x)
    q, dims, field = T.quiver, x.dims, x.field

    row_offsets: Dict[int, int] = {}
    running = 0
    for arrow in q.arrows:
        row_offsets[arrow.id] = running
        running += dims[arrow.end] * dims[arrow.start]

    columns = []
    for r in range(T.period):
        h = q.half_edge(T.connecting[r])
        rows, cols = dims[h.end], dims[h.start]
        for a in range(rows):
            for b in range(cols):
                column = [0] * tangent.rows
                column[row_offsets[h.id] + a * cols + b] = 1
                columns.append(column)
    if not columns:
        return tangent
    embedding = Matrix.from_rows(columns, field, cols=tangent.rows).transpose()
    return Matrix.hstack([tangent, embedding])
