import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Union

from core.constants import RootClass, RootKind, StandardKind
from quivers.quiver import DimVector, Quiver, add_dims, dims_leq, scale_dims, total_dim, validate_dims
from roots.root_system import (
    coxeter_transform,
    defect,
    imaginary_multiple,
    is_root,
    search_cap,
    standard_dims,
    tits_form,
)
from tubes.tube import find_tubes, tube_dims

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RootRecord:
    """A positive root with its defect and the class of the indecomposable(s) of that dimension.

    Preprojectives and preinjectives carry (r, vertex), tube members carry
    (tube_id, r, m) and imaginary roots carry the multiple of delta.
    """

    vector: DimVector
    kind: RootKind
    defect: int
    root_class: RootClass
    r: Optional[int] = None
    vertex: Optional[int] = None
    tube_id: Optional[int] = None
    m: Optional[int] = None
    multiple: Optional[int] = None

    def describe(self) -> str:
        if self.root_class in (RootClass.Preprojective, RootClass.Preinjective):
            return f"{self.root_class.value}(r={self.r}, i={self.vertex})"
        if self.root_class == RootClass.Regular:
            return f"regular(tube={self.tube_id}, r={self.r}, m={self.m})"
        return f"homogeneous({self.multiple} delta)"


@dataclass(frozen=True)
class NotARoot:
    vector: DimVector
    reason: str


def _find_standard_orbit(q: Quiver, d: DimVector, kind: StandardKind) -> Optional[RootRecord]:
    power = -1 if kind == StandardKind.Projective else 1
    root_class = RootClass.Preprojective if kind == StandardKind.Projective else RootClass.Preinjective
    for i in q.vertices:
        vector = standard_dims(q, kind, i)
        for r in range(search_cap(q, d) + 1):
            if vector == d:
                return RootRecord(d, RootKind.Real, defect(q, d), root_class, r=r, vertex=i)
            vector = coxeter_transform(q, vector, power)
    return None


def _find_tube_member(q: Quiver, d: DimVector) -> Optional[RootRecord]:
    for tube in find_tubes(q):
        for r in range(tube.period):
            for m in range(1, total_dim(d) + 1):
                if tube_dims(tube, r, m) == d:
                    return RootRecord(d, RootKind.Real, 0, RootClass.Regular, r=r, tube_id=tube.tube_id, m=m)
    return None


def classify_root(q: Quiver, d: Sequence[int]) -> Union[RootRecord, NotARoot]:
    """Decide whether d is a positive root and which indecomposables realise it.

    Raises:
        CyclicOrientation: q has an oriented cycle.
        RuntimeError: d is a real root that matches no class within the search cap.
    """
    q.require_acyclic()
    d = validate_dims(q, d)
    if total_dim(d) == 0:
        return NotARoot(d, "zero vector")
    if any(value < 0 for value in d):
        return NotARoot(d, "negative entry")
    if not is_root(q, d):
        return NotARoot(d, f"Tits form {tits_form(q, d)} is neither 1 nor 0 on a multiple of delta")

    multiple = imaginary_multiple(q, d)
    if multiple:
        return RootRecord(d, RootKind.Imaginary, 0, RootClass.Homogeneous, multiple=multiple)

    value = defect(q, d)
    record: Optional[RootRecord]
    if value < 0:
        record = _find_standard_orbit(q, d, StandardKind.Projective)
    elif value > 0:
        record = _find_standard_orbit(q, d, StandardKind.Injective)
    else:
        record = _find_tube_member(q, d)
    if record is None:
        raise RuntimeError(f"real root {d} of defect {value} matches no indecomposable of {q}")
    return record


def _arc_indicators(q: Quiver) -> List[DimVector]:
    size = q.size
    arcs = set()
    for start in range(size):
        for length in range(1, size):
            members = {(start + k) % size for k in range(length)}
            arcs.add(tuple(1 if i in members else 0 for i in q.vertices))
    return sorted(arcs)


def positive_roots_up_to(q: Quiver, bound: Sequence[int]) -> List[RootRecord]:
    """Every positive root alpha <= bound: the real roots k delta + arc and the imaginary k delta."""
    bound = validate_dims(q, bound)
    records: List[RootRecord] = []
    k = 0
    while True:
        base = scale_dims(q.delta, k)
        candidates = [add_dims(base, arc) for arc in _arc_indicators(q)]
        if k > 0:
            candidates.append(base)
        fitting = [vector for vector in candidates if dims_leq(vector, bound)]
        if not fitting:
            break
        for vector in fitting:
            record = classify_root(q, vector)
            if isinstance(record, NotARoot):
                raise RuntimeError(f"{vector} should be a root of {q}: {record.reason}")
            records.append(record)
        k += 1
    logger.debug(f"{len(records)} positive roots of {q} below {bound}")
    return sorted(records, key=lambda record: (total_dim(record.vector), record.vector))
