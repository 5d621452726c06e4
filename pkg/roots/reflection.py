import logging
from typing import Dict, Union

from core.constants import Direction, StandardKind
from core.exceptions import NotSink, NotSource
from core.linalg import RATIONALS, Field, Matrix, cokernel_projection, kernel_matrix
from quivers.quiver import Quiver, admissible_sink_sequence, admissible_source_sequence, sigma_reverse
from representations.rep import Rep, simple_rep

logger = logging.getLogger(__name__)


def _reflect_plus(M: Rep, i: int) -> Rep:
    q = M.quiver
    if not q.is_sink(i):
        raise NotSink(f"vertex {i} is not a sink of {q.describe_arrows()}")
    incoming = q.arrows_into(i)
    phi = Matrix.hstack([M.maps[arrow.id] for arrow in incoming], rows=M.dims[i], field=M.field)
    kernel = kernel_matrix(phi)

    target = sigma_reverse(q, i)
    dims = list(M.dims)
    dims[i] = kernel.cols
    maps: Dict[int, Matrix] = {h: x for h, x in M.maps.items() if h in target.orientation}
    offset = 0
    for arrow in incoming:
        size = M.dims[arrow.start]
        maps[arrow.bar_id] = kernel.block(offset, offset + size, 0, kernel.cols)
        offset += size
    return Rep(target, tuple(dims), maps, M.field)


def _reflect_minus(M: Rep, i: int) -> Rep:
    q = M.quiver
    if not q.is_source(i):
        raise NotSource(f"vertex {i} is not a source of {q.describe_arrows()}")
    outgoing = q.arrows_out_of(i)
    psi = Matrix.vstack([M.maps[arrow.id] for arrow in outgoing], cols=M.dims[i], field=M.field)
    projection = cokernel_projection(psi)

    target = sigma_reverse(q, i)
    dims = list(M.dims)
    dims[i] = projection.rows
    maps: Dict[int, Matrix] = {h: x for h, x in M.maps.items() if h in target.orientation}
    offset = 0
    for arrow in outgoing:
        size = M.dims[arrow.end]
        maps[arrow.bar_id] = projection.block(0, projection.rows, offset, offset + size)
        offset += size
    return Rep(target, tuple(dims), maps, M.field)


def reflect(M: Rep, i: int, direction: Union[Direction, str]) -> Rep:
    """The reflection functor Phi_i^+ (i a sink) or Phi_i^- (i a source).

    Args:
        M (Rep): Representation of (Gamma, Omega).
        i (int): The vertex to reflect at.
        direction (Direction): plus builds W_i as the kernel of (+) V_{rho'} -> V_i,
            minus as the cokernel of V_i -> (+) V_{rho''}.

    Returns:
        Rep: A representation of (Gamma, sigma_i Omega).

    Raises:
        NotSink: direction is plus and i is not a sink.
        NotSource: direction is minus and i is not a source.
    """
    M.quiver.check_vertex(i)
    if Direction(direction) == Direction.Plus:
        return _reflect_plus(M, i)
    return _reflect_minus(M, i)


def coxeter_functor(M: Rep, direction: Union[Direction, str]) -> Rep:
    """Phi^+ = Phi^+_{i_n} ... Phi^+_{i_1}, or Phi^- = Phi^-_{i_1} ... Phi^-_{i_n}, over the original orientation."""
    direction = Direction(direction)
    if direction == Direction.Plus:
        order = admissible_sink_sequence(M.quiver)
    else:
        order = admissible_source_sequence(M.quiver)
    result = M
    for i in order:
        result = reflect(result, i, direction)
    if result.quiver != M.quiver:
        raise RuntimeError(f"Coxeter functor did not return to {M.quiver}")
    return result


def coxeter_power(M: Rep, power: int) -> Rep:
    direction = Direction.Plus if power >= 0 else Direction.Minus
    result = M
    for _ in range(abs(power)):
        result = coxeter_functor(result, direction)
    return result


def standard_rep(q: Quiver, kind: Union[StandardKind, str], i: int, field: Field = RATIONALS) -> Rep:
    """P(i_r) = Phi^-_{i_1} ... Phi^-_{i_{r-1}}(S_{i_r}) or I(i_r) = Phi^+_{i_n} ... Phi^+_{i_{r+1}}(S_{i_r}).

    Raises:
        CyclicOrientation: q has an oriented cycle.
    """
    q.check_vertex(i)
    sequence = admissible_sink_sequence(q)
    position = sequence.index(i)
    quivers = [q]
    for vertex in sequence:
        quivers.append(sigma_reverse(quivers[-1], vertex))

    if StandardKind(kind) == StandardKind.Projective:
        result = simple_rep(quivers[position], i, field)
        for j in reversed(range(position)):
            result = reflect(result, sequence[j], Direction.Minus)
    else:
        result = simple_rep(quivers[position + 1], i, field)
        for j in range(position + 1, len(sequence)):
            result = reflect(result, sequence[j], Direction.Plus)
    return result


def preprojective(q: Quiver, r: int, i: int) -> Rep:
    """(Phi^-)^r P(i)."""
    return coxeter_power(standard_rep(q, StandardKind.Projective, i), -r)


def preinjective(q: Quiver, r: int, i: int) -> Rep:
    """(Phi^+)^r I(i)."""
    return coxeter_power(standard_rep(q, StandardKind.Injective, i), r)
