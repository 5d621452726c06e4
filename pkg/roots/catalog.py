import logging
from dataclasses import dataclass
from typing import List, Sequence

from core.constants import Direction, RootClass, RootKind, StandardKind
from core.linalg import RATIONALS, Field
from quivers.quiver import Quiver, dims_leq, scale_dims, validate_dims
from representations.rep import Rep
from roots.classification import RootRecord
from roots.reflection import coxeter_functor, standard_rep
from roots.root_system import coxeter_transform, defect, imaginary_multiple, search_cap, standard_dims
from tubes.equivalence import tube_indec
from tubes.homogeneous import homogeneous_indec
from tubes.tube import find_tubes, tube_dims

logger = logging.getLogger(__name__)

HOMOGENEOUS_CATALOG_PARAMETER = 1


@dataclass(frozen=True)
class CatalogEntry:
    record: RootRecord
    rep: Rep

    @property
    def label(self) -> str:
        return self.record.describe()


def _standard_family(q: Quiver, bound, kind: StandardKind, field: Field) -> List[CatalogEntry]:
    power, direction, root_class = (
        (-1, Direction.Minus, RootClass.Preprojective)
        if kind == StandardKind.Projective
        else (1, Direction.Plus, RootClass.Preinjective)
    )
    entries = []
    for i in q.vertices:
        vectors = [standard_dims(q, kind, i)]
        for _ in range(search_cap(q, bound)):
            vectors.append(coxeter_transform(q, vectors[-1], power))
        fitting = [r for r, vector in enumerate(vectors) if dims_leq(vector, bound)]
        if not fitting:
            continue
        rep = standard_rep(q, kind, i, field)
        for r in range(fitting[-1] + 1):
            if r > 0:
                rep = coxeter_functor(rep, direction)
            if r in fitting:
                record = RootRecord(rep.dims, RootKind.Real, defect(q, rep.dims), root_class, r=r, vertex=i)
                entries.append(CatalogEntry(record, rep))
    return entries


def build_catalog(q: Quiver, bound: Sequence[int], field: Field = RATIONALS) -> List[CatalogEntry]:
    """One representation per indecomposable label of dimension <= bound.

    Preprojectives and preinjectives come from Coxeter functors applied to
    P(i) and I(i), tube members from G, and every multiple of delta gets one
    homogeneous representative.

    Raises:
        CyclicOrientation: q has an oriented cycle.
    """
    q.require_acyclic()
    bound = validate_dims(q, bound)
    entries = _standard_family(q, bound, StandardKind.Projective, field)
    entries += _standard_family(q, bound, StandardKind.Injective, field)

    for tube in find_tubes(q):
        for r in range(tube.period):
            m = 1
            while dims_leq(tube_dims(tube, r, m), bound):
                vector = tube_dims(tube, r, m)
                kind = RootKind.Imaginary if imaginary_multiple(q, vector) else RootKind.Real
                record = RootRecord(vector, kind, 0, RootClass.Regular, r=r, tube_id=tube.tube_id, m=m)
                entries.append(CatalogEntry(record, tube_indec(tube, r, m).convert(field)))
                m += 1

    k = 1
    while dims_leq(scale_dims(q.delta, k), bound):
        rep = homogeneous_indec(q, HOMOGENEOUS_CATALOG_PARAMETER, k, field)
        record = RootRecord(rep.dims, RootKind.Imaginary, 0, RootClass.Homogeneous, multiple=k)
        entries.append(CatalogEntry(record, rep))
        k += 1

    logger.debug(f"catalog of {q} below {bound}: {len(entries)} indecomposables")
    return entries
