from functools import lru_cache
from typing import List, Sequence, Tuple

from core.constants import StandardKind
from quivers.quiver import (
    DimVector,
    Quiver,
    admissible_sink_sequence,
    total_dim,
    unit_vector,
    validate_dims,
)
from representations.homological import euler_form


def delta(q: Quiver) -> DimVector:
    return q.delta


def tits_form(q: Quiver, d: Sequence[int]) -> int:
    return euler_form(q, d, d)


def defect(q: Quiver, d: Sequence[int]) -> int:
    """The defect <delta, d>; negative on preprojectives, zero on regulars, positive on preinjectives."""
    return euler_form(q, q.delta, validate_dims(q, d))


def imaginary_multiple(q: Quiver, d: Sequence[int]) -> int:
    """k when d = k * delta with k >= 1, else 0."""
    if d and all(value == d[0] for value in d) and d[0] > 0:
        return d[0]
    return 0


def is_root(q: Quiver, d: Sequence[int]) -> bool:
    """Positive roots of A~_n: positive vectors with Tits form 1, or positive multiples of delta."""
    d = validate_dims(q, d)
    if total_dim(d) == 0:
        return False
    form = tits_form(q, d)
    return form == 1 or (form == 0 and imaginary_multiple(q, d) > 0)


def reflect_vector(q: Quiver, d: Sequence[int], i: int) -> DimVector:
    """The simple reflection s_i: d_i -> -d_i + sum of neighbouring entries, counted per edge."""
    q.check_vertex(i)
    values = list(d)
    values[i] = -values[i] + sum(d[j] for j in q.neighbours(i))
    return tuple(values)


def _apply_reflections(q: Quiver, d: Sequence[int], order: Sequence[int]) -> DimVector:
    vector = tuple(d)
    for i in order:
        vector = reflect_vector(q, vector, i)
    return vector


def coxeter_transform(q: Quiver, d: Sequence[int], power: int = 1) -> DimVector:
    """c^power(d) with c = s_{i_n} ... s_{i_1} over the admissible sink sequence.

    Raises:
        CyclicOrientation: q has an oriented cycle.
    """
    sequence = admissible_sink_sequence(q)
    order = sequence if power >= 0 else tuple(reversed(sequence))
    vector = tuple(d)
    for _ in range(abs(power)):
        vector = _apply_reflections(q, vector, order)
    return vector


@lru_cache(maxsize=None)
def standard_dims(q: Quiver, kind: StandardKind, i: int) -> DimVector:
    """dim P(i_r) = s_{i_1}...s_{i_{r-1}}(e_{i_r}) and dim I(i_r) = s_{i_n}...s_{i_{r+1}}(e_{i_r})."""
    sequence = admissible_sink_sequence(q)
    position = sequence.index(i)
    if StandardKind(kind) == StandardKind.Projective:
        order: Tuple[int, ...] = tuple(reversed(sequence[:position]))
    else:
        order = sequence[position + 1 :]
    return _apply_reflections(q, unit_vector(q, i), order)


def search_cap(q: Quiver, d: Sequence[int]) -> int:
    return total_dim(d) + q.n


def preprojective_orbit(q: Quiver, i: int, depth: int) -> List[DimVector]:
    """dim (Phi^-)^r P(i) for r = 0..depth."""
    vectors = [standard_dims(q, StandardKind.Projective, i)]
    for _ in range(depth):
        vectors.append(coxeter_transform(q, vectors[-1], -1))
    return vectors


def preinjective_orbit(q: Quiver, i: int, depth: int) -> List[DimVector]:
    """dim (Phi^+)^r I(i) for r = 0..depth."""
    vectors = [standard_dims(q, StandardKind.Injective, i)]
    for _ in range(depth):
        vectors.append(coxeter_transform(q, vectors[-1], 1))
    return vectors
