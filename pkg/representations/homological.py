import logging
from typing import List, Sequence, Tuple

from core.exceptions import IndexMismatch
from core.linalg import Matrix, generic_invertibility, kernel_matrix
from quivers.quiver import Quiver
from representations.base import check_same_quiver
from representations.rep import GradedMap, Rep

logger = logging.getLogger(__name__)


def _offsets(sizes: Sequence[int]) -> Tuple[List[int], int]:
    offsets, running = [], 0
    for size in sizes:
        offsets.append(running)
        running += size
    return offsets, running


def intertwining_matrix(M: Rep, N: Rep) -> Matrix:
    """The map a(theta)_h = y_h theta_{h'} - theta_{h''} x_h from (+)_i Hom(V_i, W_i) to (+)_h Hom(V_{h'}, W_{h''}).

    Coordinates are row-major blocks: theta_i occupies dims_N(i) * dims_M(i)
    consecutive columns, a(theta)_h occupies dims_N(h'') * dims_M(h') rows.
    """
    check_same_quiver(M, N)
    q, field = M.quiver, M.field
    dm, dn = M.dims, N.dims
    col_offsets, col_count = _offsets([dn[i] * dm[i] for i in q.vertices])
    arrows = q.arrows
    row_offsets, row_count = _offsets([dn[arrow.end] * dm[arrow.start] for arrow in arrows])

    grid = [[field.zero] * col_count for _ in range(row_count)]
    for arrow, row_offset in zip(arrows, row_offsets, strict=True):
        s, t = arrow.start, arrow.end
        x, y = M.maps[arrow.id].entries, N.maps[arrow.id].entries
        for a in range(dn[t]):
            for b in range(dm[s]):
                row = grid[row_offset + a * dm[s] + b]
                # (y_h theta_s)[a, b]
                for c in range(dn[s]):
                    row[col_offsets[s] + c * dm[s] + b] += y[a][c]
                # (theta_t x_h)[a, b]
                for c in range(dm[t]):
                    row[col_offsets[t] + a * dm[t] + c] -= x[c][b]
    return Matrix(row_count, col_count, tuple(tuple(row) for row in grid), field)


def orbit_tangent_map(M: Rep) -> Matrix:
    """The map a of the four-term sequence for (V, x) against itself; its image is the orbit tangent space."""
    return intertwining_matrix(M, M)


def _graded_map_from_vector(M: Rep, N: Rep, vector: Matrix) -> GradedMap:
    values = vector.flatten()
    blocks, offset = [], 0
    for i in M.quiver.vertices:
        rows, cols = N.dims[i], M.dims[i]
        chunk = values[offset : offset + rows * cols]
        entries = tuple(tuple(chunk[a * cols : (a + 1) * cols]) for a in range(rows))
        blocks.append(Matrix(rows, cols, entries, M.field))
        offset += rows * cols
    return GradedMap(tuple(blocks))


def hom_basis(M: Rep, N: Rep) -> List[GradedMap]:
    """Exact basis of Hom((V, x), (W, y)), the kernel of the intertwining map.

    Raises:
        QuiverMismatch: M and N live over different quivers or fields.
    """
    kernel = kernel_matrix(intertwining_matrix(M, N))
    return [_graded_map_from_vector(M, N, kernel.column_at(j)) for j in range(kernel.cols)]


def hom_dim(M: Rep, N: Rep) -> int:
    a = intertwining_matrix(M, N)
    return a.cols - a.rank()


def endomorphism_dim(M: Rep) -> int:
    return hom_dim(M, M)


def ext_dim(M: Rep, N: Rep) -> int:
    """dim Ext^1(M, N) read off the four-term exact sequence."""
    q = M.quiver
    check_same_quiver(M, N)
    arrow_term = sum(M.dims[arrow.start] * N.dims[arrow.end] for arrow in q.arrows)
    vertex_term = sum(M.dims[i] * N.dims[i] for i in q.vertices)
    value = arrow_term - vertex_term + hom_dim(M, N)
    if value < 0:
        raise RuntimeError(f"negative Ext dimension {value} for dims {M.dims} and {N.dims}")
    return value


def euler_form(q: Quiver, a: Sequence[int], b: Sequence[int]) -> int:
    """<a, b> = sum_i a_i b_i - sum_{h in Omega} a_{h'} b_{h''}."""
    if len(a) != q.size or len(b) != q.size:
        raise IndexMismatch(f"vectors of length {len(a)} and {len(b)} on a quiver with {q.size} vertices")
    return sum(a[i] * b[i] for i in q.vertices) - sum(a[arrow.start] * b[arrow.end] for arrow in q.arrows)


def is_morphism(f: GradedMap, M: Rep, N: Rep) -> bool:
    check_same_quiver(M, N)
    if f.source_dims != M.dims or f.target_dims != N.dims:
        return False
    return all(
        N.maps[arrow.id] @ f[arrow.start] == f[arrow.end] @ M.maps[arrow.id] for arrow in M.quiver.arrows
    )


def is_isomorphic(M: Rep, N: Rep) -> bool:
    """Decide M ~= N through generic invertibility of Hom(M, N)."""
    check_same_quiver(M, N)
    if M.dims != N.dims:
        return False
    if M.total_dim == 0:
        return True
    dimension = hom_dim(M, N)
    if dimension == 0 or dimension != endomorphism_dim(M) or dimension != endomorphism_dim(N):
        return False
    basis = [f.as_block_diagonal() for f in hom_basis(M, N)]
    return generic_invertibility(basis)
