from fractions import Fraction
from typing import Union

from core.exceptions import BadLength, ZeroParameter
from core.linalg import RATIONALS, Field, Matrix
from quivers.quiver import HalfEdge, Quiver, scale_dims
from representations.rep import Rep

Scalar = Union[int, Fraction, str]


def reference_arrow(q: Quiver) -> HalfEdge:
    """The smallest counter-cyclic arrow h_0; it exists on every acyclic orientation."""
    q.require_acyclic()
    return next(arrow for arrow in q.arrows if arrow.id % 2 == 1)


def jordan_block(size: int, eigenvalue: Scalar, field: Field = RATIONALS) -> Matrix:
    value = field.convert(eigenvalue)
    rows = [[value if a == b else (field.one if b == a + 1 else field.zero) for b in range(size)] for a in range(size)]
    return Matrix.from_rows(rows, field, cols=size)


def homogeneous_indec(q: Quiver, t: Scalar, m: int, field: Field = RATIONALS) -> Rep:
    """The regular indecomposable of dimension m * delta in the homogeneous tube of parameter t.

    Every arrow carries the identity except the reference arrow, which carries J_m(t).

    Raises:
        ZeroParameter: t is zero.
        CyclicOrientation: q has an oriented cycle.
    """
    if m < 1:
        raise BadLength(f"regular length must be positive, got {m}")
    if field.convert(t) == field.zero:
        raise ZeroParameter("the homogeneous parameter must be nonzero")
    h0 = reference_arrow(q)
    maps = {arrow.id: Matrix.identity(m, field) for arrow in q.arrows}
    maps[h0.id] = jordan_block(m, t, field)
    return Rep(q, scale_dims(q.delta, m), maps, field)
